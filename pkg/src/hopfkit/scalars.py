"""Exact arithmetic in the coefficient field Q(i)(w, m, u).

A Scalar is a reduced fraction of polynomials in the three real symbols
w, m, u, with Gaussian-rational coefficients.  Everything is exact: no
floats anywhere.  The canonical form (gcd cleared, denominator monic
under graded-lex with w > m > u) makes equality a plain structural check.

Conjugation sends i to -i and fixes w, m, u.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import DivisionByZero

NVARS = 3
VAR_NAMES = ("w", "m", "u")
_ZERO_EXP = (0, 0, 0)


class GaussRat:
    """Gaussian rational re + im*i, both parts exact Fractions."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = re if type(re) is Fraction else Fraction(re)
        self.im = im if type(im) is Fraction else Fraction(im)

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __eq__(self, other):
        if not isinstance(other, GaussRat):
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __add__(self, other):
        return GaussRat(self.re + other.re, self.im + other.im)

    def __sub__(self, other):
        return GaussRat(self.re - other.re, self.im - other.im)

    def __neg__(self):
        return GaussRat(-self.re, -self.im)

    def __mul__(self, other):
        a, b = self.re, self.im
        c, d = other.re, other.im
        if not b:
            return GaussRat(a * c, a * d if d else b)
        if not d:
            return GaussRat(a * c, b * c)
        return GaussRat(a * c - b * d, a * d + b * c)

    def __truediv__(self, other):
        if not other:
            raise DivisionByZero("division by zero Gaussian rational")
        n = other.re * other.re + other.im * other.im
        a, b, c, d = self.re, self.im, other.re, -other.im
        return GaussRat((a * c - b * d) / n, (a * d + b * c) / n)

    def conjugate(self):
        return GaussRat(self.re, -self.im)

    def __repr__(self):
        return f"GaussRat({self.re!r}, {self.im!r})"

    def __str__(self):
        return _format_gauss(self, bare=True)


GR_ZERO = GaussRat(0)
GR_ONE = GaussRat(1)
GR_I = GaussRat(0, 1)


def _grlex_key(exp):
    # graded lex, w most significant
    return (exp[0] + exp[1] + exp[2], exp)


class Poly:
    """Sparse polynomial in (w, m, u) over the Gaussian rationals.

    terms maps exponent triples to nonzero GaussRat coefficients.  The
    dict is never mutated after construction.
    """

    __slots__ = ("terms",)

    def __init__(self, terms):
        self.terms = terms

    @staticmethod
    def zero():
        return Poly({})

    @staticmethod
    def const(c):
        return Poly({_ZERO_EXP: c}) if c else Poly({})

    @staticmethod
    def var(idx):
        exp = [0, 0, 0]
        exp[idx] = 1
        return Poly({tuple(exp): GR_ONE})

    def is_zero(self):
        return not self.terms

    def is_const(self):
        return not self.terms or (len(self.terms) == 1 and _ZERO_EXP in self.terms)

    def const_value(self):
        return self.terms.get(_ZERO_EXP, GR_ZERO)

    def __eq__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other):
        if not self.terms:
            return other
        if not other.terms:
            return self
        terms = dict(self.terms)
        for e, c in other.terms.items():
            s = terms.get(e)
            if s is None:
                terms[e] = c
            else:
                s = s + c
                if s:
                    terms[e] = s
                else:
                    del terms[e]
        return Poly(terms)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return Poly({e: -c for e, c in self.terms.items()})

    def __mul__(self, other):
        if not self.terms or not other.terms:
            return Poly({})
        terms = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = (e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2])
                c = c1 * c2
                s = terms.get(e)
                if s is None:
                    terms[e] = c
                else:
                    s = s + c
                    if s:
                        terms[e] = s
                    else:
                        del terms[e]
        return Poly(terms)

    def scale(self, c):
        if not c:
            return Poly({})
        return Poly({e: k * c for e, k in self.terms.items()})

    def conjugate(self):
        return Poly({e: c.conjugate() for e, c in self.terms.items()})

    def leading(self):
        """(exponent, coefficient) of the graded-lex leading term."""
        e = max(self.terms, key=_grlex_key)
        return e, self.terms[e]

    def monic(self):
        _, lc = self.leading()
        if lc == GR_ONE:
            return self, GR_ONE
        inv = GR_ONE / lc
        return Poly({e: c * inv for e, c in self.terms.items()}), lc

    def degree(self, var):
        return max((e[var] for e in self.terms), default=0)

    def total_degree(self):
        return max((e[0] + e[1] + e[2] for e in self.terms), default=0)

    def __str__(self):
        return _format_poly(self)

    def __repr__(self):
        return f"Poly({_format_poly(self)!r})"


P_ZERO = Poly.zero()
P_ONE = Poly.const(GR_ONE)


def _mono_content(p):
    """Largest monomial dividing every term of p (exponent triple)."""
    it = iter(p.terms)
    e = next(it)
    lo = list(e)
    for e in it:
        if e[0] < lo[0]:
            lo[0] = e[0]
        if e[1] < lo[1]:
            lo[1] = e[1]
        if e[2] < lo[2]:
            lo[2] = e[2]
        if lo == [0, 0, 0]:
            break
    return tuple(lo)


def _mono_shift(p, shift):
    """Divide p by the monomial with exponents `shift` (must divide)."""
    if shift == _ZERO_EXP:
        return p
    return Poly({(e[0] - shift[0], e[1] - shift[1], e[2] - shift[2]): c
                 for e, c in p.terms.items()})


def _exact_div(p, q):
    """Exact polynomial division p / q; q must divide p."""
    if q.is_const():
        return p.scale(GR_ONE / q.const_value())
    rem = p
    out = {}
    qe, qc = q.leading()
    while rem.terms:
        re, rc = rem.leading()
        e = (re[0] - qe[0], re[1] - qe[1], re[2] - qe[2])
        if min(e) < 0:
            raise ArithmeticError("non-exact polynomial division")
        c = rc / qc
        out[e] = c
        rem = rem - q * Poly({e: c})
    return Poly(out)


def _univar(p, var):
    """View p as a polynomial in one variable with Poly coefficients."""
    coeffs = {}
    for e, c in p.terms.items():
        d = e[var]
        rest = list(e)
        rest[var] = 0
        key = tuple(rest)
        bucket = coeffs.setdefault(d, {})
        bucket[key] = bucket.get(key, GR_ZERO) + c
    return {d: Poly({e: c for e, c in t.items() if c}) for d, t in coeffs.items()}


def _from_univar(coeffs, var):
    terms = {}
    for d, poly in coeffs.items():
        for e, c in poly.terms.items():
            ee = list(e)
            ee[var] = d
            terms[tuple(ee)] = c
    return Poly(terms)


def _prem(a, b, var):
    """Pseudo-remainder of a by b with respect to `var`."""
    ua, ub = _univar(a, var), _univar(b, var)
    da, db = max(ua), max(ub)
    lcb = ub[db]
    xvar = Poly.var(var)
    while da >= db and ua:
        lca = ua[da]
        # lcb * a  -  lca * x^(da-db) * b
        shift = {d + da - db: p for d, p in ub.items()}
        newa = {}
        for d in set(ua) | set(shift):
            p = ua.get(d, P_ZERO) * lcb - shift.get(d, P_ZERO) * lca
            if not p.is_zero():
                newa[d] = p
        ua = newa
        if not ua:
            return P_ZERO
        da = max(ua)
    return _from_univar(ua, var)


def _content_and_primitive(p, var):
    u = _univar(p, var)
    coeffs = list(u.values())
    cont = coeffs[0]
    for c in coeffs[1:]:
        cont = poly_gcd(cont, c)
        if cont.is_const():
            break
    if cont.is_const():
        prim, _ = p.monic()
        return P_ONE, prim
    return cont, _exact_div(p, cont)


def poly_gcd(a, b):
    """Monic gcd of two polynomials over Q(i), by primitive PRS.

    Monomial content is split off first, which covers the common case of
    pure-monomial denominators without recursion.
    """
    if a.is_zero():
        return b.monic()[0] if not b.is_zero() else P_ZERO
    if b.is_zero():
        return a.monic()[0]
    ca, cb = _mono_content(a), _mono_content(b)
    common = (min(ca[0], cb[0]), min(ca[1], cb[1]), min(ca[2], cb[2]))
    a = _mono_shift(a, ca)
    b = _mono_shift(b, cb)
    if a.is_const() or b.is_const():
        g = Poly({common: GR_ONE})
    else:
        var = next(v for v in range(NVARS)
                   if a.degree(v) > 0 or b.degree(v) > 0)
        if a.degree(var) == 0 or b.degree(var) == 0:
            # var appears in only one argument: recurse into coefficients
            flat = a if a.degree(var) == 0 else b
            other = b if flat is a else a
            g = flat
            for coeff in _univar(other, var).values():
                g = poly_gcd(g, coeff)
                if g.is_const():
                    break
            g = g * Poly({common: GR_ONE})
            return g.monic()[0]
        conta, prima = _content_and_primitive(a, var)
        contb, primb = _content_and_primitive(b, var)
        contg = poly_gcd(conta, contb)
        x, y = prima, primb
        if x.degree(var) < y.degree(var):
            x, y = y, x
        while not y.is_zero():
            r = _prem(x, y, var)
            if r.is_zero():
                x, y = y, r
            else:
                _, rprim = _content_and_primitive(r, var)
                x, y = y, rprim
        g = (contg * x.monic()[0]) * Poly({common: GR_ONE})
    return g.monic()[0]


class Scalar:
    """Element of Q(i)(w, m, u) in canonical reduced form."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=P_ONE, _reduced=False):
        if _reduced:
            self.num = num
            self.den = den
            return
        if den.is_zero():
            raise DivisionByZero("zero polynomial denominator")
        if num.is_zero():
            self.num, self.den = P_ZERO, P_ONE
            return
        if den.is_const():
            c = den.const_value()
            self.num = num if c == GR_ONE else num.scale(GR_ONE / c)
            self.den = P_ONE
            return
        g = poly_gcd(num, den)
        if not (g.is_const() and g.const_value() == GR_ONE):
            num = _exact_div(num, g)
            den = _exact_div(den, g)
        den, lc = den.monic()
        if lc != GR_ONE:
            num = num.scale(GR_ONE / lc)
        self.num, self.den = num, den

    # -- constructors -------------------------------------------------

    @staticmethod
    def from_int(n):
        return Scalar(Poly.const(GaussRat(n)))

    @staticmethod
    def from_fraction(f):
        return Scalar(Poly.const(GaussRat(f)))

    @staticmethod
    def from_gauss(g):
        return Scalar(Poly.const(g))

    # -- predicates ---------------------------------------------------

    def is_zero(self):
        return self.num.is_zero()

    def __bool__(self):
        return not self.num.is_zero()

    def is_rational(self):
        """True when the value is a plain Gaussian rational."""
        return self.den == P_ONE and self.num.is_const()

    # -- field operations ---------------------------------------------

    def __eq__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((frozenset(self.num.terms.items()),
                     frozenset(self.den.terms.items())))

    def __add__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        if self.den == P_ONE and other.den == P_ONE:
            return Scalar(self.num + other.num, P_ONE, _reduced=True)
        return Scalar(self.num * other.den + other.num * self.den,
                      self.den * other.den)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __neg__(self):
        return Scalar(-self.num, self.den, _reduced=True)

    def __mul__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        if self.den == P_ONE and other.den == P_ONE:
            return Scalar(self.num * other.num, P_ONE, _reduced=True)
        return Scalar(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        if other.is_zero():
            raise DivisionByZero("division by zero scalar")
        return Scalar(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other / self

    def __pow__(self, n):
        if n < 0:
            return (ONE / self) ** (-n)
        out = ONE
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def inverse(self):
        return ONE / self

    def conjugate(self):
        num = self.num.conjugate()
        den = self.den.conjugate()
        # den stays monic: its leading coefficient 1 is real
        return Scalar(num, den, _reduced=True)

    def __str__(self):
        if self.den == P_ONE:
            return _format_poly(self.num)
        return f"({_format_poly(self.num)})/({_format_poly(self.den)})"

    def __repr__(self):
        return f"Scalar({self!s})"


def _coerce(x):
    if isinstance(x, Scalar):
        return x
    if isinstance(x, int):
        return Scalar.from_int(x)
    if isinstance(x, Fraction):
        return Scalar.from_fraction(x)
    if isinstance(x, GaussRat):
        return Scalar.from_gauss(x)
    return None


def scalar(x) -> Scalar:
    """Coerce an int, Fraction or GaussRat into a Scalar."""
    s = _coerce(x)
    if s is None:
        raise TypeError(f"cannot coerce {x!r} to Scalar")
    return s


ZERO = Scalar(P_ZERO, P_ONE, _reduced=True)
ONE = Scalar(P_ONE, P_ONE, _reduced=True)
I = Scalar(Poly.const(GR_I))
W = Scalar(Poly.var(0))
M = Scalar(Poly.var(1))
U = Scalar(Poly.var(2))


def arith(a: Scalar, b: Scalar, kind: str) -> Scalar:
    """Field operation dispatch: kind in {add, sub, mul, div}."""
    a, b = scalar(a), scalar(b)
    if kind == "add":
        return a + b
    if kind == "sub":
        return a - b
    if kind == "mul":
        return a * b
    if kind == "div":
        return a / b
    raise ValueError(f"unknown arithmetic kind {kind!r}")


def conjugate(a: Scalar) -> Scalar:
    """Complex conjugation: i -> -i, the real symbols w, m, u fixed."""
    return scalar(a).conjugate()


# -- printing ----------------------------------------------------------


def _format_fraction(f):
    return str(f)


def _format_gauss(c, bare=False):
    """Render a Gaussian rational in the expression grammar.

    bare=True allows an unparenthesized mixed value (used by str()).
    """
    if not c.im:
        return _format_fraction(c.re)
    if not c.re:
        if c.im == 1:
            return "i"
        if c.im == -1:
            return "-i"
        return f"{_format_fraction(c.im)}*i"
    s = f"{_format_fraction(c.re)} + {_format_fraction(c.im)}*i" if c.im > 0 \
        else f"{_format_fraction(c.re)} - {_format_fraction(-c.im)}*i"
    return s if bare else f"({s})"


def _format_mono(exp):
    parts = []
    for v, e in zip(VAR_NAMES, exp):
        if e == 1:
            parts.append(v)
        elif e:
            parts.append(f"{v}^{e}")
    return "*".join(parts)


def _format_poly(p):
    if p.is_zero():
        return "0"
    out = []
    for exp in sorted(p.terms, key=_grlex_key, reverse=True):
        c = p.terms[exp]
        mono = _format_mono(exp)
        if not mono:
            piece = _format_gauss(c)
        elif c == GR_ONE:
            piece = mono
        elif c == -GR_ONE:
            piece = f"-{mono}"
        else:
            piece = f"{_format_gauss(c)}*{mono}"
        if out and not piece.startswith("-"):
            out.append(f"+ {piece}")
        elif out:
            out.append(f"- {piece[1:]}")
        else:
            out.append(piece)
    return " ".join(out)
