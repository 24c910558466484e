"""Witness construction, validation, and exact expansion."""

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from signmoduli import (
    BudgetExhausted,
    ChangePreservationPattern,
    Couple,
    ModuliOrder,
    ModulusTie,
    NotAchievable,
    RootConfiguration,
    SignPattern,
    ZeroCoefficient,
    canonical_order_of,
    construct_canonical_witness,
    couple_of,
    expand_from_roots,
    iter_orders,
    perturb_multiple_roots,
    satisfies_interlacing,
    sp_to_cpp,
)

nonzero_rationals = st.fractions(
    min_value=Fraction(-50), max_value=Fraction(50), max_denominator=16
).filter(lambda q: q != 0)


def test_root_configuration_validation():
    with pytest.raises(ValueError):
        RootConfiguration([])
    with pytest.raises(ValueError):
        RootConfiguration([1, 0, 2])
    rc = RootConfiguration([Fraction(1, 3), -2])
    assert rc.degree == 2


def test_serialization_roundtrip():
    rc = RootConfiguration([Fraction(-13, 10), Fraction(6, 5), 1])
    strings = rc.to_strings()
    assert strings == ["-13/10", "6/5", "1"]
    assert RootConfiguration.from_strings(strings) == rc


@given(st.lists(nonzero_rationals, min_size=1, max_size=8))
def test_serialization_roundtrip_random(roots):
    rc = RootConfiguration(roots)
    assert RootConfiguration.from_strings(rc.to_strings()) == rc


def test_expansion_fixture():
    # (x+1)^3 (x-1)^2 = x^5 + x^4 - 2x^3 - 2x^2 + x + 1
    poly = expand_from_roots([-1, -1, -1, 1, 1])
    assert poly.coefficients == (
        Fraction(1), Fraction(1), Fraction(-2),
        Fraction(-2), Fraction(1), Fraction(1),
    )


def test_couple_of_rejects_degenerate_inputs():
    with pytest.raises(ModulusTie):
        couple_of(RootConfiguration([2, -2]))
    # (x-1)(x-2)(x+3) = x^3 - 7x + 6 has no x^2 term
    with pytest.raises(ZeroCoefficient):
        couple_of(RootConfiguration([1, 2, -3]))


def test_couple_of_simple():
    couple = couple_of(RootConfiguration([2, 4, -8]))
    assert couple == Couple(ChangePreservationPattern("pcc"), ModuliOrder("PPN"))


@given(st.lists(nonzero_rationals, min_size=1, max_size=8))
def test_descartes_exactness(roots):
    try:
        couple = couple_of(RootConfiguration(roots))
    except (ModulusTie, ZeroCoefficient):
        return
    assert couple.is_compatible
    positives = sum(1 for r in roots if r > 0)
    assert couple.pattern.change_count == positives


@given(st.lists(nonzero_rationals, min_size=1, max_size=8))
def test_interlacing_forces_positive_subleading_coefficient(roots):
    # the leading-sum obstruction read forwards: an interlacing order
    # comes from roots whose signed sum is positive
    try:
        couple = couple_of(RootConfiguration(roots))
    except (ModulusTie, ZeroCoefficient):
        return
    if satisfies_interlacing(couple.order):
        poly = expand_from_roots(RootConfiguration(roots))
        assert poly.coefficient(poly.degree - 1) > 0


def test_canonical_witness_fixture():
    w = construct_canonical_witness(ChangePreservationPattern("pcpc"), Fraction(2))
    assert w.roots == (Fraction(2), Fraction(-4), Fraction(8), Fraction(-16))
    assert couple_of(w) == Couple(
        ChangePreservationPattern("pcpc"), ModuliOrder("PNPN")
    )


def test_canonical_witness_signs():
    for word, sign in (("ccc", 1), ("ppp", -1)):
        w = construct_canonical_witness(ChangePreservationPattern(word))
        assert all((r > 0) == (sign > 0) for r in w.roots)


@given(st.integers(1, 8), st.integers(0, 255))
def test_canonical_witness_validates(d, bits):
    cpp = ChangePreservationPattern(
        "".join("c" if bits >> i & 1 else "p" for i in range(d))
    )
    w = construct_canonical_witness(cpp)
    assert couple_of(w) == Couple(cpp, canonical_order_of(cpp))


def test_canonical_witness_rejects_bad_base():
    with pytest.raises(ValueError):
        construct_canonical_witness(ChangePreservationPattern("cc"), Fraction(1))


def test_perturbation_covers_all_two_change_orders_at_degree_five():
    base = [Fraction(-1)] * 3 + [Fraction(1)] * 2
    sp = SignPattern("++--++")
    cpp = sp_to_cpp(sp)
    for order in iter_orders(5, positive_count=2):
        w = perturb_multiple_roots(base, Couple(cpp, order), Fraction(1, 4))
        assert couple_of(w) == Couple(cpp, order)


def test_perturbation_rejects_mismatched_block():
    # the modulus-1 block holds two negative roots, so the order's
    # first two letters cannot include a P
    target = Couple(sp_to_cpp(SignPattern("++--")), ModuliOrder("NPN"))
    with pytest.raises(NotAchievable):
        perturb_multiple_roots(
            [Fraction(-1), Fraction(-1), Fraction(4)], target, Fraction(1, 8)
        )


def test_perturbation_size_mismatch():
    with pytest.raises(NotAchievable):
        perturb_multiple_roots(
            [Fraction(-1), Fraction(1)],
            Couple(sp_to_cpp(SignPattern("++--")), ModuliOrder("NNP")),
        )


def test_published_degree_four_witnesses():
    # four exact root sets realizing ++--+ with four different orders
    cases = {
        "PNPN": ["-13/10", "6/5", "-11/10", "1"],
        "NPPN": ["-2", "1", "9/10", "-4/5"],
        "PPNN": ["-2", "-11/10", "1", "1/10"],
        "PNNP": ["2", "-19/10", "-1", "4/5"],
    }
    cpp = sp_to_cpp(SignPattern("++--+"))
    for order, roots in cases.items():
        rc = RootConfiguration.from_strings(roots)
        assert couple_of(rc) == Couple(cpp, ModuliOrder(order))
