import pytest

from starclean.elements import is_clean_elem
from starclean.errors import UnknownProperty
from starclean.involutions import (
    StarRing,
    identity_involution,
    swap_involution,
    transpose_involution,
)
from starclean.properties import (
    PROPERTIES,
    check_stable_range_pair,
    check_witness,
    lifting_checks,
    psr_onesided_equiv,
    ring_property,
    stable_range_checks,
)
from starclean.rings import MatrixSpec, ProductSpec, Zmod, build_ring


def ident(spec):
    R = build_ring(spec)
    return StarRing(R, identity_involution(R))


def m2(n):
    R = build_ring(MatrixSpec(2, Zmod(n)))
    return StarRing(R, transpose_involution(R, identity_involution(R.base)))


def swap_ring():
    R = build_ring(ProductSpec(Zmod(2), Zmod(2)))
    return StarRing(R, swap_involution(R))


def test_swap_ring_clean_but_not_star_clean():
    S = swap_ring()
    assert ring_property(S, "clean").value is True
    verdict = ring_property(S, "star-clean")
    assert verdict.value is False
    assert verdict.witness is not None
    assert check_witness(S, "star-clean", verdict.witness)


def test_m2z3_not_strongly_star_clean():
    S = m2(3)
    verdict = ring_property(S, "strongly-star-clean")
    assert verdict.value is False
    assert check_witness(S, "strongly-star-clean", verdict.witness)


def test_m2z2_unit_regular_and_regular():
    S = m2(2)
    assert ring_property(S, "unit-regular").value is True
    assert ring_property(S, "regular").value is True
    assert ring_property(S, "pi-regular").value is True
    assert ring_property(S, "strongly-regular").value is False


def test_star_regular_matrix_rings():
    # every principal right ideal of the 2x2 ring over Z3 is generated by a
    # symmetric idempotent; over Z2 the column space spanned by (1,1) is not
    assert ring_property(m2(3), "star-regular").value is True
    verdict = ring_property(m2(2), "star-regular")
    assert verdict.value is False
    assert check_witness(m2(2), "star-regular", verdict.witness)


def test_star_regular_rings_have_star_clean_idempotents():
    S = m2(3)
    assert ring_property(S, "star-regular").value
    for e in S.ring.idempotents():
        assert is_clean_elem(S, e, "star-clean")


def test_boolean_and_local_verdicts():
    assert ring_property(swap_ring(), "boolean").value is True
    assert ring_property(ident(Zmod(4)), "boolean").value is False
    assert ring_property(ident(Zmod(4)), "local").value is True
    assert ring_property(ident(Zmod(6)), "local").value is False
    assert ring_property(m2(2), "local").value is False


def test_j_nil_and_directly_finite_hold():
    for S in (ident(Zmod(8)), m2(2), m2(3), swap_ring()):
        assert ring_property(S, "J-nil").value is True
        assert ring_property(S, "directly-finite").value is True


def test_spsr_ring_level():
    assert ring_property(ident(Zmod(4)), "strongly-pi-star-regular").value is True
    verdict = ring_property(m2(2), "strongly-pi-star-regular")
    assert verdict.value is False
    assert check_witness(m2(2), "strongly-pi-star-regular", verdict.witness)


def test_stable_range_m2z2():
    S = m2(2)
    checks = stable_range_checks(S)
    assert checks["sr1"].value is True
    assert checks["isr1"].value is True
    assert checks["psr1"].value is False
    a, b = checks["psr1"].witness.ids
    assert check_stable_range_pair(S, "psr1", a, b)
    # the canonical counterexample pair is accepted among valid witnesses
    R = S.ring
    e11 = R.from_value([[1, 0], [0, 0]])
    e21 = R.from_value([[0, 0], [1, 0]])
    assert check_stable_range_pair(S, "psr1", e11, e21)


def test_stable_range_m2z3_and_local():
    assert stable_range_checks(m2(3))["psr1"].value is True
    assert stable_range_checks(ident(Zmod(4)))["psr1"].value is True


def test_stable_range_swap_ring():
    checks = stable_range_checks(swap_ring())
    assert checks["isr1"].value is True
    assert checks["psr1"].value is False


def test_implication_chain_psr_isr_sr():
    for S in (m2(2), m2(3), ident(Zmod(6)), swap_ring(), ident(Zmod(16))):
        checks = stable_range_checks(S)
        if checks["psr1"].value:
            assert checks["isr1"].value
        if checks["isr1"].value:
            assert checks["sr1"].value


def test_psr_onesided():
    res = psr_onesided_equiv(m2(2))
    assert res.consistent
    assert not res.two_sided.value and not res.right.value and not res.left.value
    res = psr_onesided_equiv(m2(3))
    assert res.consistent and res.two_sided.value
    res = psr_onesided_equiv(ident(Zmod(4)))
    assert res.consistent and res.two_sided.value


def test_lifting_z4():
    res = lifting_checks(ident(Zmod(4)))
    assert res.idempotents_lift_to_central_projections.value
    assert res.projections_lift.value
    assert res.projections_central.value


def test_lifting_m2z2_projections_not_central():
    res = lifting_checks(m2(2))
    assert res.projections_central.value is False


def test_lifting_swap_ring():
    res = lifting_checks(swap_ring())
    assert res.idempotents_lift_to_central_projections.value is False
    assert res.projections_lift.value is True
    assert res.projections_central.value is True


def test_all_false_verdicts_revalidate():
    for S in (m2(2), m2(3), swap_ring(), ident(Zmod(6))):
        for prop in PROPERTIES:
            verdict = ring_property(S, prop)
            if not verdict.value:
                assert verdict.witness is not None, (S.label, prop)
                assert check_witness(S, prop, verdict.witness), (S.label, prop)


def test_unknown_property():
    with pytest.raises(UnknownProperty):
        ring_property(ident(Zmod(4)), "frobnicated")
