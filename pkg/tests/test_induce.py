from fractions import Fraction

import pytest

from hopfkit.coiso import galilei_subgroup, homogeneous_space
from hopfkit.errors import NotInvertible, SideMismatch
from hopfkit.hopf import builtin
from hopfkit.induce import (
    GalileiVector,
    IndElement,
    eq_sesq_defect,
    equivalence_intertwiner,
    galilei_module_action,
    galilei_rep,
    galilei_rep_element,
    ind_generic_report,
    ind_space,
    intertwiner_report,
    j_structure,
    jform_report,
    minkowski_form,
    mirror_right_report,
    relations_report,
    rho_from_weight,
    scalar_product,
    sesq_form,
    star_pairing,
    trivial_corep,
    unitarity_report,
)
from hopfkit.quasiinv import ChiElement, galilei_weight
from hopfkit.scalars import I, M, ONE, U, W, ZERO, scalar

SUB = galilei_subgroup()
UQ = builtin("uq-g1")
IWM = I * W * M


def gv(l, c=ONE):
    return GalileiVector.basis(l, c)


def test_rep_of_b_at_zero():
    assert galilei_rep("B", gv(0)) == gv(0, IWM * scalar(Fraction(1, 2)))


def test_rep_of_t_at_zero():
    got = galilei_rep("T", gv(0))
    coeff = ONE / (2 * W * W * M)
    expected = (gv(0, U) - gv(0, 2 * coeff) + gv(1, coeff) + gv(-1, coeff))
    assert got == expected


def test_bt_commutator_closed_form():
    for l in range(-3, 4):
        lhs = galilei_rep("B", galilei_rep("T", gv(l))) \
            - galilei_rep("T", galilei_rep("B", gv(l)))
        rhs = (gv(l + 1) - gv(l - 1)).scale(I / (2 * W))
        assert lhs == rhs


def test_module_action_differs_from_rep_by_half():
    # B acts as iwm*l on the module, iwm*(l+1/2) in the representation
    for l in range(-2, 3):
        assert galilei_module_action(UQ.pres.gen("B"), gv(l)) == gv(l, IWM * l)


def test_weight_reconstructs_closed_table():
    phi = galilei_weight()
    for g in ("M", "K", "T", "B"):
        X = UQ.pres.gen(g)
        for l in range(-3, 4):
            assert rho_from_weight(X, gv(l), phi) == galilei_rep_element(X, gv(l))


def test_minkowski_values():
    assert minkowski_form(gv(-1), gv(0)) == ONE
    assert minkowski_form(gv(0), gv(0)) == ZERO
    assert minkowski_form(gv(2), gv(-3)) == ONE


def test_minkowski_b_selfadjoint():
    for l in range(-3, 3):
        A, B = gv(l), gv(-l - 1)
        assert minkowski_form(A, galilei_rep("B", B)) \
            == minkowski_form(galilei_rep("B", A), B)


def test_j_structure():
    assert j_structure(gv(0)) == gv(-1)
    assert j_structure(j_structure(gv(0))) == gv(0)
    assert scalar_product(gv(2), gv(2)) == ONE
    assert minkowski_form(gv(2), gv(-3)) == scalar_product(j_structure(gv(2)), gv(-3))


def test_star_pairing_contraction():
    assert star_pairing(gv(2), gv(0)) == ChiElement.chi(3)
    assert star_pairing(gv(0, I), gv(0)) == ChiElement.chi(1, -I)


def test_intertwiner_shifts():
    xi = ChiElement.chi(1)
    assert equivalence_intertwiner(xi, gv(3)) == gv(4)
    with pytest.raises(NotInvertible):
        equivalence_intertwiner(ChiElement.one() + xi, gv(0))


def test_trivial_corep_and_ind_space():
    rho = trivial_corep(SUB, side="right")
    assert rho.is_unitary()
    for degree in (0, 1, 2):
        basis = ind_space(SUB, rho, degree)
        hom = homogeneous_space(SUB, degree)
        assert sorted(str(a.components[0]) for a in basis) \
            == sorted(str(b) for b in hom)


def test_sesq_form_and_membership():
    v = SUB.ambient.pres.gen("v")
    A = IndElement([v], "left")
    B = IndElement([v * v], "left")
    form = sesq_form(A, B, side="left")
    assert form == v * v * v  # v is real
    with pytest.raises(SideMismatch):
        sesq_form(A, IndElement([v], "right"), side="left")


def test_eq_sesq_identity_on_v():
    rho = trivial_corep(SUB, side="right")
    A = IndElement([SUB.ambient.pres.gen("v")], "left")
    assert eq_sesq_defect(A, rho, 0).is_zero()
    rho_l = trivial_corep(SUB, side="left")
    A_r = IndElement([SUB.ambient.pres.gen("v")], "right")
    assert eq_sesq_defect(A_r, rho_l, 0).is_zero()


def test_relations_report():
    rep = relations_report(3)
    assert rep.passed, [c.id for c in rep.failures()]


def test_unitarity_report():
    rep = unitarity_report(3)
    assert rep.passed, [c.id for c in rep.failures()]


def test_jform_report():
    rep = jform_report(3)
    assert rep.passed, [c.id for c in rep.failures()]


def test_intertwiner_report():
    rep = intertwiner_report(3)
    assert rep.passed, [c.id for c in rep.failures()]


def test_ind_generic_report():
    rep = ind_generic_report(SUB, 2)
    assert rep.passed, [c.id for c in rep.failures()]


def test_mirror_right_report():
    rep = mirror_right_report(SUB, 2)
    assert rep.passed, [c.id for c in rep.failures()]
