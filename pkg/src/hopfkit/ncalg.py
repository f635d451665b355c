"""Normal-form engine for finitely presented noncommutative algebras.

A presentation fixes an ordered generator set and one rewrite rule per
adjacent letter pair that is out of order (plus optional extra rules on
ordered pairs, used by algebras whose defining relation already involves
an ordered product).  Rewriting moves every word onto the PBW-type basis
of normal-ordered monomials; invertible generators carry a single integer
exponent, so no g*g^-1 rule is ever needed.

Termination is enforced at build time: every right-hand side must be
strictly smaller than its left-hand side under the word order
(non-invertible degree, then inversion count, then a lexicographic tail).
Local confluence is checked by reducing every overlap word l1*l2*l3 in
two orders and comparing the results.
"""

from __future__ import annotations

import itertools

from .errors import (
    IncompleteRewriteSystem,
    NegativePowerOfNonInvertible,
    NonConfluentRules,
    NotInvertible,
    PresentationMismatch,
    RelationNotPreserved,
    UnknownGenerator,
)
from .scalars import ONE, Scalar, ZERO, scalar

_MAX_REWRITE_STEPS = 2_000_000


def _word_key(pres, word):
    deg = 0
    inv = 0
    letters = []
    for idx, (g, e) in enumerate(word):
        a = abs(e)
        if not pres.invertible[g]:
            deg += a
        for g2, e2 in word[idx + 1:]:
            if g2 < g:
                inv += a * abs(e2)
        letters.append((g, a, 0 if e >= 0 else 1))
    return (deg, inv, tuple(letters))


class Presentation:
    """Ordered generators, invertibility flags and a rewrite rule table.

    rules maps (gen_left, sign_left, gen_right, sign_right) to the
    replacement for the single-letter product g_l^sign_l * g_r^sign_r,
    given as a list of (Scalar, word) with word = tuple of (gen, exp).
    """

    def __init__(self, name, generators, invertible, rules, check=True):
        self.name = name
        self.generators = tuple(generators)
        self.invertible = tuple(invertible)
        self.index = {g: k for k, g in enumerate(self.generators)}
        self.rules = {k: tuple((scalar(c), tuple(w)) for c, w in rhs)
                      for k, rhs in rules.items()}
        self.one_mon = (0,) * len(self.generators)
        self._prod_cache = {}
        if check:
            self._check_complete()
            self._check_termination()
            self._check_confluence()

    # -- build-time validation ----------------------------------------

    def _signs(self, g):
        return (1, -1) if self.invertible[g] else (1,)

    def _letters(self):
        return [(g, s) for g in range(len(self.generators))
                for s in self._signs(g)]

    def _check_complete(self):
        n = len(self.generators)
        for i in range(n):
            for j in range(i + 1, n):
                for sj in self._signs(j):
                    for si in self._signs(i):
                        if (j, sj, i, si) not in self.rules:
                            raise IncompleteRewriteSystem(
                                f"{self.name}: no rule for "
                                f"{self.generators[j]}^{sj} "
                                f"{self.generators[i]}^{si}")

    def _check_termination(self):
        for (gl, sl, gr, sr), rhs in self.rules.items():
            lhs_key = _word_key(self, ((gl, sl), (gr, sr)))
            for _, wrd in rhs:
                if not _word_key(self, wrd) < lhs_key:
                    raise NonConfluentRules(
                        f"{self.name}: rule for pair "
                        f"({self.generators[gl]},{self.generators[gr]}) does "
                        f"not decrease the word order")

    def _reducible(self, l1, l2):
        g1, e1 = l1
        g2, e2 = l2
        if g1 == g2:
            return True
        key = (g1, 1 if e1 > 0 else -1, g2, 1 if e2 > 0 else -1)
        return key in self.rules or g1 > g2

    def _check_confluence(self):
        letters = self._letters()
        for l1, l2, l3 in itertools.product(letters, repeat=3):
            if not (self._reducible(l1, l2) and self._reducible(l2, l3)):
                continue
            word = (l1, l2, l3)
            left = self._normalize_terms([(ONE, word)])
            right = self._normalize_terms(self._step_at(ONE, word, 1))
            if left != right:
                names = " ".join(f"{self.generators[g]}^{e}" for g, e in word)
                raise NonConfluentRules(
                    f"{self.name}: ambiguity {names} resolves two ways")

    # -- rewriting ------------------------------------------------------

    def _step_at(self, coeff, word, p):
        """One reduction step at position p; returns list of (coeff, word)."""
        g1, e1 = word[p]
        g2, e2 = word[p + 1]
        if g1 == g2:
            e = e1 + e2
            merged = word[:p] + (((g1, e),) if e else ()) + word[p + 2:]
            return [(coeff, merged)]
        s1 = 1 if e1 > 0 else -1
        s2 = 1 if e2 > 0 else -1
        rhs = self.rules.get((g1, s1, g2, s2))
        if rhs is None:
            raise IncompleteRewriteSystem(
                f"{self.name}: stuck on pair "
                f"{self.generators[g1]}^{s1} {self.generators[g2]}^{s2}")
        left = word[:p] + (((g1, e1 - s1),) if e1 != s1 else ())
        right = (((g2, e2 - s2),) if e2 != s2 else ()) + word[p + 2:]
        return [(coeff * c, left + w + right) for c, w in rhs]

    def _find_redex(self, word):
        for p in range(len(word) - 1):
            if word[p][1] == 0:
                return p, "drop"
            l1, l2 = word[p], word[p + 1]
            if l1[0] == l2[0]:
                return p, "merge"
            key = (l1[0], 1 if l1[1] > 0 else -1, l2[0], 1 if l2[1] > 0 else -1)
            if key in self.rules or l1[0] > l2[0]:
                return p, "rule"
        if word and word[-1][1] == 0:
            return len(word) - 1, "drop"
        return None, None

    def _normalize_terms(self, items):
        out = {}
        stack = list(items)
        steps = 0
        while stack:
            steps += 1
            if steps > _MAX_REWRITE_STEPS:
                raise RuntimeError(f"{self.name}: rewriting did not terminate")
            coeff, word = stack.pop()
            if coeff.is_zero():
                continue
            p, what = self._find_redex(word)
            if what is None:
                mon = self._word_to_mon(word)
                s = out.get(mon)
                s = coeff if s is None else s + coeff
                if s.is_zero():
                    out.pop(mon, None)
                else:
                    out[mon] = s
            elif what == "drop":
                stack.append((coeff, word[:p] + word[p + 1:]))
            else:
                stack.extend(self._step_at(coeff, word, p))
        return out

    def _word_to_mon(self, word):
        exps = [0] * len(self.generators)
        for g, e in word:
            exps[g] = e
        return tuple(exps)

    def mon_to_word(self, mon):
        return tuple((g, e) for g, e in enumerate(mon) if e)

    def _validate_word(self, word):
        out = []
        for g, e in word:
            if isinstance(g, str):
                if g not in self.index:
                    raise UnknownGenerator(f"{g!r} is not a generator of {self.name}")
                g = self.index[g]
            elif not 0 <= g < len(self.generators):
                raise UnknownGenerator(f"generator index {g} out of range")
            if e < 0 and not self.invertible[g]:
                raise NegativePowerOfNonInvertible(
                    f"{self.generators[g]}^{e} in {self.name}")
            out.append((g, e))
        return tuple(out)

    # -- public element factory ----------------------------------------

    def zero(self):
        return AlgebraElement(self, {})

    def one(self):
        return AlgebraElement(self, {self.one_mon: ONE})

    def gen(self, name, exp=1):
        return self.element([(ONE, [(name, exp)])])

    def element(self, terms):
        """Build from raw (coefficient, word) pairs; words may be disordered."""
        items = [(scalar(c), self._validate_word(w)) for c, w in terms]
        return AlgebraElement(self, self._normalize_terms(items))

    def monomial(self, mon):
        if len(mon) != len(self.generators):
            raise UnknownGenerator(f"bad exponent vector for {self.name}")
        return AlgebraElement(self, {tuple(mon): ONE})

    def mono_product(self, m1, m2):
        key = (m1, m2)
        hit = self._prod_cache.get(key)
        if hit is None:
            word = self.mon_to_word(m1) + self.mon_to_word(m2)
            hit = AlgebraElement(self, self._normalize_terms([(ONE, word)]))
            self._prod_cache[key] = hit
        return hit

    def mono_inverse(self, mon):
        for g, e in enumerate(mon):
            if e and not self.invertible[g]:
                raise NotInvertible(
                    f"{self.generators[g]}^{e} has no inverse in {self.name}")
        return tuple(-e for e in mon)

    def monomials_up_to(self, degree, zrange=None):
        """All normal monomials with non-invertible total degree <= degree
        and each invertible exponent in [-zrange, zrange] (default degree).
        Deterministic order: by grlex key."""
        if zrange is None:
            zrange = degree
        ranges = []
        for g in range(len(self.generators)):
            if self.invertible[g]:
                ranges.append(range(-zrange, zrange + 1))
            else:
                ranges.append(range(0, degree + 1))
        out = []
        for exps in itertools.product(*ranges):
            if sum(e for g, e in enumerate(exps)
                   if not self.invertible[g]) <= degree:
                if self._find_redex(self.mon_to_word(exps))[0] is None:
                    out.append(exps)
        out.sort(key=lambda mon: (sum(abs(e) for e in mon), mon))
        return out

    def __repr__(self):
        return f"Presentation({self.name})"


class AlgebraElement:
    """Finite Scalar-linear combination of normal monomials."""

    __slots__ = ("pres", "terms")

    def __init__(self, pres, terms):
        self.pres = pres
        self.terms = terms

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self.pres is other.pres and self.terms == other.terms

    def __hash__(self):
        return hash((id(self.pres), frozenset(self.terms.items())))

    def _check_same(self, other):
        if self.pres is not other.pres:
            raise PresentationMismatch(
                f"{self.pres.name} element combined with {other.pres.name}")

    def __add__(self, other):
        if isinstance(other, (int, Scalar)):
            other = self.pres.one() * other
        self._check_same(other)
        terms = dict(self.terms)
        for mon, c in other.terms.items():
            s = terms.get(mon)
            s = c if s is None else s + c
            if s.is_zero():
                terms.pop(mon, None)
            else:
                terms[mon] = s
        return AlgebraElement(self.pres, terms)

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-other if isinstance(other, AlgebraElement) else -scalar(other))

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return AlgebraElement(self.pres, {m: -c for m, c in self.terms.items()})

    def scale(self, c):
        c = scalar(c)
        if c.is_zero():
            return AlgebraElement(self.pres, {})
        return AlgebraElement(self.pres, {m: k * c for m, k in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, AlgebraElement):
            self._check_same(other)
            out = {}
            for m1, c1 in self.terms.items():
                for m2, c2 in other.terms.items():
                    c = c1 * c2
                    for mon, k in self.pres.mono_product(m1, m2).terms.items():
                        s = out.get(mon)
                        s = k * c if s is None else s + k * c
                        if s.is_zero():
                            out.pop(mon, None)
                        else:
                            out[mon] = s
            return AlgebraElement(self.pres, out)
        return self.scale(other)

    def __rmul__(self, other):
        # scalars commute with everything; true elements use __mul__
        return self.scale(other)

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        out = self.pres.one()
        for _ in range(n):
            out = out * self
        return out

    def inverse(self):
        if len(self.terms) != 1:
            raise NotInvertible(
                f"only monomial elements are invertible in {self.pres.name}")
        (mon, c), = self.terms.items()
        if c.is_zero():
            raise NotInvertible("zero element")
        return AlgebraElement(self.pres, {self.pres.mono_inverse(mon): ONE / c})

    def coefficient(self, mon):
        return self.terms.get(tuple(mon), ZERO)

    def degree(self):
        """Total degree counting non-invertible generators only."""
        inv = self.pres.invertible
        return max((sum(e for g, e in enumerate(m) if not inv[g])
                    for m in self.terms), default=0)

    def tensor(self, other):
        return as_tensor(self).tensor(as_tensor(other))

    def __str__(self):
        return format_element(self)

    def __repr__(self):
        return f"<{self.pres.name}: {format_element(self)}>"


def as_tensor(e):
    if isinstance(e, TensorElement):
        return e
    return TensorElement((e.pres,), {(m,): c for m, c in e.terms.items()})


class TensorElement:
    """Finite linear combination of k-tuples of normal monomials."""

    __slots__ = ("spaces", "terms")

    def __init__(self, spaces, terms):
        self.spaces = tuple(spaces)
        self.terms = terms

    @staticmethod
    def one(spaces):
        key = tuple(p.one_mon for p in spaces)
        return TensorElement(spaces, {key: ONE})

    @property
    def rank(self):
        return len(self.spaces)

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        if not isinstance(other, TensorElement):
            return NotImplemented
        return self.spaces == other.spaces and self.terms == other.terms

    def _check_same(self, other):
        if self.spaces != other.spaces:
            raise PresentationMismatch("tensor slot presentations differ")

    def __add__(self, other):
        self._check_same(other)
        terms = dict(self.terms)
        for key, c in other.terms.items():
            s = terms.get(key)
            s = c if s is None else s + c
            if s.is_zero():
                terms.pop(key, None)
            else:
                terms[key] = s
        return TensorElement(self.spaces, terms)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return TensorElement(self.spaces, {k: -c for k, c in self.terms.items()})

    def scale(self, c):
        c = scalar(c)
        if c.is_zero():
            return TensorElement(self.spaces, {})
        return TensorElement(self.spaces, {k: v * c for k, v in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, TensorElement):
            return self.scale(other)
        self._check_same(other)
        out = {}
        for k1, c1 in self.terms.items():
            for k2, c2 in other.terms.items():
                base = c1 * c2
                slots = [self.spaces[s].mono_product(k1[s], k2[s])
                         for s in range(len(self.spaces))]
                _expand_slots(out, base, slots)
        return TensorElement(self.spaces, _strip_zeros(out))

    def __rmul__(self, other):
        return self.scale(other)

    def inverse(self):
        if len(self.terms) != 1:
            raise NotInvertible("only monomial tensors are invertible")
        (key, c), = self.terms.items()
        inv = tuple(p.mono_inverse(m) for p, m in zip(self.spaces, key))
        return TensorElement(self.spaces, {inv: ONE / c})

    def tensor(self, other):
        out = {}
        for k1, c1 in self.terms.items():
            for k2, c2 in other.terms.items():
                out[k1 + k2] = out.get(k1 + k2, ZERO) + c1 * c2
        return TensorElement(self.spaces + other.spaces, _strip_zeros(out))

    def to_element(self):
        if len(self.spaces) != 1:
            raise ValueError("rank must be 1")
        return AlgebraElement(self.spaces[0], {k[0]: c for k, c in self.terms.items()})

    def __str__(self):
        if not self.terms:
            return "0"
        bits = []
        for key in sorted(self.terms, key=lambda k: tuple((sum(abs(e) for e in m), m) for m in k)):
            mono = " (x) ".join(format_monomial(p, m) for p, m in zip(self.spaces, key))
            bits.append(f"({self.terms[key]}) {mono}")
        return "  +  ".join(bits)

    def __repr__(self):
        return f"<tensor rank {self.rank}: {self}>"


def _expand_slots(out, base, slots):
    """Accumulate base * (slot_0 (x) ... (x) slot_k) into out."""
    keys = [()]
    coeffs = [base]
    for slot in slots:
        nkeys, ncoeffs = [], []
        for key, c in zip(keys, coeffs):
            for mon, k in slot.terms.items():
                nkeys.append(key + (mon,))
                ncoeffs.append(c * k)
        keys, coeffs = nkeys, ncoeffs
    for key, c in zip(keys, coeffs):
        s = out.get(key)
        out[key] = c if s is None else s + c


def _strip_zeros(d):
    return {k: c for k, c in d.items() if not c.is_zero()}


# -- morphisms ---------------------------------------------------------


class Morphism:
    """Linear extension of a generator table.

    kind is one of:
      "hom"      algebra homomorphism
      "antihom"  anti-homomorphism (reverses words)
    and conjugate=True makes it conjugate-linear.  Images may live in an
    algebra, a tensor square, or the scalars; invertible generators need
    invertible images.  Construction verifies that the images of all
    defining relations vanish.
    """

    def __init__(self, source, images, kind="hom", conjugate=False,
                 name="morphism", check=True):
        if kind not in ("hom", "antihom"):
            raise ValueError(f"bad morphism kind {kind!r}")
        self.source = source
        self.kind = kind
        self.conjugate = conjugate
        self.name = name
        if isinstance(images, dict):
            images = [images[g] for g in source.generators]
        self.images = list(images)
        self._target_one = self._one_like(self.images[0]) if self.images else ONE
        self._mono_cache = {source.one_mon: self._target_one}
        self._inv_images = {}
        if check:
            self._check_relations()

    @staticmethod
    def _one_like(img):
        if isinstance(img, AlgebraElement):
            return img.pres.one()
        if isinstance(img, TensorElement):
            return TensorElement.one(img.spaces)
        return ONE

    def _gen_power(self, g, e):
        if e >= 0:
            img, n = self.images[g], e
        else:
            img = self._inv_images.get(g)
            if img is None:
                img = self.images[g].inverse() if not isinstance(self.images[g], Scalar) \
                    else ONE / self.images[g]
                self._inv_images[g] = img
            n = -e
        out = self._target_one
        for _ in range(n):
            out = out * img
        return out

    def _mono_image(self, mon):
        hit = self._mono_cache.get(mon)
        if hit is not None:
            return hit
        letters = self.source.mon_to_word(mon)
        if self.kind == "antihom":
            letters = letters[::-1]
        out = self._target_one
        for g, e in letters:
            out = out * self._gen_power(g, e)
        self._mono_cache[mon] = out
        return out

    def apply(self, e):
        if isinstance(e, TensorElement):
            return self._apply_tensor(e)
        if isinstance(e, Scalar):
            return e.conjugate() if self.conjugate else e
        if e.pres is not self.source:
            raise PresentationMismatch(
                f"{self.name} defined on {self.source.name}, got {e.pres.name}")
        out = None
        for mon, c in e.terms.items():
            if self.conjugate:
                c = c.conjugate()
            img = self._mono_image(mon) * c
            out = img if out is None else out + img
        if out is None:
            z = self._target_one
            return z.scale(ZERO) if not isinstance(z, Scalar) else ZERO
        return out

    def _apply_tensor(self, te):
        return tensor_map([self] * te.rank, te)

    def __call__(self, e):
        return self.apply(e)

    def _check_relations(self):
        for (gl, sl, gr, sr), rhs in self.source.rules.items():
            lhs = self._gen_power(gl, sl) * self._gen_power(gr, sr) \
                if self.kind == "hom" else \
                self._gen_power(gr, sr) * self._gen_power(gl, sl)
            acc = lhs
            for c, word in rhs:
                if self.conjugate:
                    c = c.conjugate()
                letters = word if self.kind == "hom" else word[::-1]
                img = self._target_one
                for g, e in letters:
                    img = img * self._gen_power(g, e)
                acc = acc - img * c
            if not acc.is_zero():
                gl_n, gr_n = self.source.generators[gl], self.source.generators[gr]
                raise RelationNotPreserved(
                    f"{self.name} breaks the {self.source.name} relation on "
                    f"{gl_n}^{sl} {gr_n}^{sr}: residue {acc}")


def morphism_apply(phi, e):
    """Functional entry point: apply a validated generator-table morphism."""
    return phi.apply(e)


def tensor_map(maps, te):
    """Apply one map per slot of a tensor element.

    Each map is a Morphism (scalar-, algebra- or tensor-valued) or None
    for the identity.  A scalar-valued slot is contracted away.  All
    conjugate-linear slots must agree, and the term coefficient is
    conjugated once iff the maps are conjugate-linear.
    """
    conj_flags = {m.conjugate for m in maps if m is not None}
    if len(conj_flags) > 1:
        raise ValueError("mixed linear / conjugate-linear tensor map")
    conj = conj_flags.pop() if conj_flags else False
    out = {}
    out_spaces = None
    for key, c in te.terms.items():
        if conj:
            c = c.conjugate()
        pieces = []
        for s, mp in enumerate(maps):
            if mp is None:
                pieces.append(AlgebraElement(te.spaces[s], {key[s]: ONE}))
            else:
                img = mp._mono_image(key[s])
                pieces.append(img)
        spaces = []
        slots = []
        for piece in pieces:
            if isinstance(piece, Scalar):
                c = c * piece
                continue
            if isinstance(piece, TensorElement):
                spaces.extend(piece.spaces)
                slots.append(piece)
            else:
                spaces.append(piece.pres)
                slots.append(as_tensor(piece))
        if out_spaces is None:
            out_spaces = tuple(spaces)
        if c.is_zero():
            continue
        flat = [(key_part, coeff) for key_part, coeff in _iter_outer(slots)]
        for key_part, coeff in flat:
            k = key_part
            v = c * coeff
            s = out.get(k)
            out[k] = v if s is None else s + v
    if out_spaces is None:
        # zero input or fully scalar output shape: recompute the shape
        spaces = []
        scalar_only = True
        for s, mp in enumerate(maps):
            if mp is None:
                spaces.append(te.spaces[s])
                scalar_only = False
            else:
                one_img = mp._target_one
                if isinstance(one_img, TensorElement):
                    spaces.extend(one_img.spaces)
                    scalar_only = False
                elif isinstance(one_img, AlgebraElement):
                    spaces.append(one_img.pres)
                    scalar_only = False
        if scalar_only:
            return ZERO
        return TensorElement(tuple(spaces), {})
    if not out_spaces:
        total = ZERO
        for _, v in out.items():
            total = total + v
        return total
    result = TensorElement(out_spaces, _strip_zeros(out))
    if result.rank == 1:
        return result.to_element()
    return result


def _iter_outer(slots):
    keys = [()]
    coeffs = [ONE]
    for slot in slots:
        nk, nc = [], []
        for key, c in zip(keys, coeffs):
            for tkey, k in slot.terms.items():
                nk.append(key + tkey)
                nc.append(c * k)
        keys, coeffs = nk, nc
    return zip(keys, coeffs)


# -- exact linear algebra over the scalar field ------------------------


def linear_solve(constraints, unknowns):
    """Basis of the solution space of homogeneous linear constraints.

    constraints: iterable of dicts unknown -> Scalar, each meaning
    "sum coeff * value(unknown) = 0".  unknowns: ordered list naming the
    solution coordinates.  Returns a list of dicts unknown -> Scalar in
    reduced row echelon shape (each basis vector has a unit coordinate at
    its own free unknown).  Empty list means only the zero solution.

    A constraint touching a name outside `unknowns` means an element
    escaped the declared window: WindowOverflow, enlarge and retry.
    """
    from .errors import WindowOverflow
    order = {u: k for k, u in enumerate(unknowns)}
    pivots = {}  # column -> reduced row (dict col -> Scalar)
    for raw in constraints:
        try:
            row = {order[u]: c for u, c in raw.items()
                   if not scalar(c).is_zero()}
        except KeyError as exc:
            raise WindowOverflow(
                f"constraint involves {exc.args[0]!r}, outside the declared "
                f"window; enlarge the window") from exc
        for col in sorted(row):
            if col in row and col in pivots:
                factor = row.pop(col)
                for c2, v2 in pivots[col].items():
                    if c2 == col:
                        continue
                    s = row.get(c2, ZERO) - factor * v2
                    if s.is_zero():
                        row.pop(c2, None)
                    else:
                        row[c2] = s
        if not row:
            continue
        lead = min(row)
        inv = ONE / row[lead]
        row = {c: v * inv for c, v in row.items()}
        for prow in pivots.values():
            if lead in prow:
                factor = prow.pop(lead)
                for c2, v2 in row.items():
                    if c2 == lead:
                        continue
                    s = prow.get(c2, ZERO) - factor * v2
                    if s.is_zero():
                        prow.pop(c2, None)
                    else:
                        prow[c2] = s
        pivots[lead] = row
    basis = []
    for col, u in enumerate(unknowns):
        if col in pivots:
            continue
        vec = {u: ONE}
        for pcol, prow in pivots.items():
            if col in prow:
                vec[unknowns[pcol]] = -prow[col]
        basis.append(vec)
    return basis


# -- printing ----------------------------------------------------------


def format_monomial(pres, mon):
    parts = []
    for g, e in enumerate(mon):
        if e == 1:
            parts.append(pres.generators[g])
        elif e:
            parts.append(f"{pres.generators[g]}^{e}")
    return "*".join(parts) if parts else "1"


def format_element(e):
    if not e.terms:
        return "0"
    inv = e.pres.invertible
    def key(mon):
        return (sum(abs(x) for g, x in enumerate(mon) if not inv[g]),
                tuple(abs(x) for x in mon), mon)
    bits = []
    for mon in sorted(e.terms, key=key):
        c = e.terms[mon]
        mono = format_monomial(e.pres, mon)
        cs = str(c)
        plain = c.den.is_const() if hasattr(c, "den") else True
        multi = (" + " in cs) or (" - " in cs)
        if mono == "1":
            piece = f"({cs})" if multi else cs
        elif cs == "1":
            piece = mono
        elif cs == "-1":
            piece = f"-{mono}"
        elif multi:
            piece = f"({cs})*{mono}"
        else:
            piece = f"{cs}*{mono}"
        if bits and not piece.startswith("-"):
            bits.append(f"+ {piece}")
        elif bits:
            bits.append(f"- {piece[1:]}")
        else:
            bits.append(piece)
    return " ".join(bits)
