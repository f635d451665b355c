import random

import pytest

from hopfkit.errors import (
    NegativePowerOfNonInvertible,
    NotInvertible,
    PresentationMismatch,
    RelationNotPreserved,
    UnknownGenerator,
)
from hopfkit.hopf import algebra_presentation, builtin
from hopfkit.ncalg import Morphism, linear_solve
from hopfkit.scalars import I, M, ONE, W, ZERO, scalar

UQ = algebra_presentation("uq-g1")
FQ = algebra_presentation("fq-g1")
FJ = algebra_presentation("fq-j")
H0 = algebra_presentation("h0-irr")
IW = I * W


def test_defining_relation_fq():
    # x mu = mu x - 2iw mu
    lhs = FQ.element([(ONE, [("x", 1), ("mu", 1)])])
    rhs = FQ.gen("mu") * FQ.gen("x") - FQ.gen("mu") * (2 * IW)
    assert lhs == rhs


def test_defining_relation_uq():
    # oracle: multiply K B K^-1 = B - iw M by K on the right and reorder
    lhs = UQ.element([(ONE, [("B", 1), ("K", 1)])])
    rhs = UQ.gen("K") * UQ.gen("B") + UQ.gen("M") * UQ.gen("K") * IW
    assert lhs == rhs


def test_normal_form_of_unit():
    for pres in (UQ, FQ, FJ, H0):
        assert pres.element([(ONE, [])]) == pres.one()


def test_normal_form_idempotent():
    e = FQ.element([(ONE, [("v", 2), ("mu", 1), ("x", 1)])])
    again = FQ.element([(c, FQ.mon_to_word(m)) for m, c in e.terms.items()])
    assert again == e


def test_chi_times_chi_inverse_is_one():
    wm = W * M
    chi = H0.one() + H0.gen("v1") * wm
    chi_inv = H0.one() - H0.gen("v0") * wm
    assert chi * chi_inv == H0.one()
    assert chi_inv * chi == H0.one()


def test_v_times_x():
    # from [x, v] = -2iw v: expand the commutator
    lhs = FQ.gen("v") * FQ.gen("x")
    rhs = FQ.gen("x") * FQ.gen("v") + FQ.gen("v") * (2 * IW)
    assert lhs == rhs


def test_unit_is_neutral():
    a = UQ.gen("B") * UQ.gen("T") + UQ.gen("K", -2)
    assert a * UQ.one() == a
    assert UQ.one() * a == a


def test_unknown_generator():
    with pytest.raises(UnknownGenerator):
        FQ.element([(ONE, [("K", 1)])])


def test_negative_power_of_non_invertible():
    with pytest.raises(NegativePowerOfNonInvertible):
        FQ.element([(ONE, [("v", -1)])])


def test_presentation_mismatch():
    with pytest.raises(PresentationMismatch):
        FQ.gen("v") * UQ.gen("B")


def test_inverse_of_monomials():
    k = UQ.gen("K", 3) * (2 * I)
    assert k * k.inverse() == UQ.one()
    with pytest.raises(NotInvertible):
        UQ.gen("B").inverse()
    with pytest.raises(NotInvertible):
        (UQ.gen("K") + UQ.one()).inverse()


def test_termination_on_short_words():
    rng = random.Random(7)
    for pres in (UQ, FQ, FJ, H0):
        letters = [(g, e) for g in range(len(pres.generators))
                   for e in ((1, -1) if pres.invertible[g] else (1,))]
        for _ in range(25):
            word = tuple(rng.choice(letters) for _ in range(rng.randint(0, 8)))
            e = pres.element([(ONE, word)])
            renorm = pres.zero()
            for mon, c in e.terms.items():
                renorm = renorm + pres.element([(c, pres.mon_to_word(mon))])
            assert renorm == e  # already a fixed point


def test_non_confluent_rules_rejected():
    from hopfkit.errors import NonConfluentRules
    from hopfkit.ncalg import Presentation
    # c b -> 1 and b a -> 1 overlap on c b a: the two reductions give c and a
    rules = {
        (2, 1, 1, 1): [(ONE, ())],
        (1, 1, 0, 1): [(ONE, ())],
        (2, 1, 0, 1): [(ONE, ((0, 1), (2, 1)))],
    }
    with pytest.raises(NonConfluentRules):
        Presentation("bad", ("a", "b", "c"), (False, False, False), rules)


def test_associativity_on_monomials():
    rng = random.Random(11)
    for pres in (UQ, FQ, H0):
        window = pres.monomials_up_to(3, zrange=2)
        for _ in range(40):
            a, b, c = (pres.monomial(rng.choice(window)) for _ in range(3))
            assert (a * b) * c == a * (b * c)


def test_projection_morphism_to_subgroup():
    images = {"mu": FJ.gen("muh"), "x": FJ.gen("xh"),
              "t": FJ.gen("th"), "v": FJ.zero()}
    pi = Morphism(FQ, images, kind="hom", name="pi")
    assert pi.apply(FQ.gen("mu") * FQ.gen("v")).is_zero()
    assert pi.apply(FQ.gen("mu") * FQ.gen("x")) == FJ.gen("muh") * FJ.gen("xh")


def test_identity_morphism():
    ident = Morphism(FQ, {g: FQ.gen(g) for g in FQ.generators}, kind="hom")
    e = FQ.gen("mu") * FQ.gen("v") + FQ.gen("x") * (3 * I)
    assert ident.apply(e) == e


def test_relation_not_preserved():
    # sending x to 0 as well would force xh = 0; the t-mu relation survives
    # but mu x - x mu - 2iw mu maps to -2iw muh != 0
    images = {"mu": FJ.gen("muh"), "x": FJ.zero(),
              "t": FJ.gen("th"), "v": FJ.zero()}
    with pytest.raises(RelationNotPreserved):
        Morphism(FQ, images, kind="hom", name="bad-pi")


def test_antipode_table_on_x():
    S = builtin("fq-g1").antipode
    assert S.apply(FQ.gen("x")) == -FQ.gen("x") + FQ.gen("t") * FQ.gen("v")


def test_linear_solve_forced_zero():
    # each factor (ell - 1/2) is a nonzero rational
    from fractions import Fraction
    unknowns = list(range(-3, 4))
    constraints = [{ell: scalar(Fraction(ell) - Fraction(1, 2))} for ell in unknowns]
    assert linear_solve(constraints, unknowns) == []


def test_linear_solve_empty_system():
    basis = linear_solve([], ["a", "b"])
    assert len(basis) == 2


def test_linear_solve_plane():
    # x + y = 0 over three unknowns: two-dimensional solution space
    basis = linear_solve([{"x": ONE, "y": ONE}], ["x", "y", "z"])
    assert len(basis) == 2
    for vec in basis:
        total = vec.get("x", ZERO) + vec.get("y", ZERO)
        assert total.is_zero()


def test_linear_solve_window_overflow():
    from hopfkit.errors import WindowOverflow
    with pytest.raises(WindowOverflow):
        linear_solve([{"x": ONE, "q": ONE}], ["x", "y"])
