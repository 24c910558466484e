"""Counting identities and their independent oracles."""

from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, strategies as st

from signmoduli import (
    ModuliOrder,
    binomial_second_difference,
    catalan,
    chi,
    expand_from_roots,
    interlacing_couples,
    iter_compatible_couples,
    iter_orders,
    satisfies_interlacing,
    second_difference_zero_positions,
    t_dc_bruteforce,
    t_dc_catalan_sum,
    t_dc_closed,
)


def _ballot_oracle(order):
    """Reading from the largest modulus down, the N letters must always
    be at least as many as the P letters."""
    p = n = 0
    for letter in reversed(str(order)):
        if letter == "P":
            p += 1
        else:
            n += 1
        if p > n:
            return False
    return True


@given(st.integers(1, 12), st.integers(0, 2 ** 12 - 1))
def test_interlacing_matches_ballot_oracle(d, bits):
    word = "".join("P" if bits >> i & 1 else "N" for i in range(d))
    order = ModuliOrder(word)
    assert satisfies_interlacing(order) == _ballot_oracle(order)


@given(st.integers(1, 12), st.integers(0, 2 ** 11 - 1))
def test_order_ending_in_p_never_interlaces(d, bits):
    word = "".join("P" if bits >> i & 1 else "N" for i in range(d - 1)) + "P"
    assert not satisfies_interlacing(ModuliOrder(word))


def test_tdc_three_routes_agree():
    for d in range(1, 13):
        for c in range((d + 1) // 2 + 1):
            closed = t_dc_closed(d, c)
            assert closed == t_dc_catalan_sum(d, c)
            assert closed == t_dc_bruteforce(d, c)


def test_tdc_domain_is_enforced():
    with pytest.raises(ValueError):
        t_dc_closed(4, 3)
    with pytest.raises(ValueError):
        t_dc_catalan_sum(5, 4)
    with pytest.raises(ValueError):
        t_dc_closed(0, 0)


def test_tdc_known_values():
    # ballot numbers: the c=1 count is d-1, the maximal c gives Catalan
    assert t_dc_closed(4, 1) == 3
    assert t_dc_closed(4, 2) == 2
    assert [t_dc_closed(2 * k, k) for k in range(1, 6)] == [
        catalan(k) for k in range(1, 6)
    ]


def test_chi_equals_enumeration():
    for d in range(1, 8):
        assert chi(d) == comb(2 * d, d)
        assert chi(d) == sum(comb(d, c) ** 2 for c in range(d + 1))
        assert chi(d) == len(list(iter_compatible_couples(d)))


def test_catalan_values():
    assert [catalan(k) for k in range(9)] == [
        1, 1, 2, 5, 14, 42, 132, 429, 1430,
    ]
    with pytest.raises(ValueError):
        catalan(-1)


def test_interlacing_couples_against_enumeration():
    for d in range(1, 9):
        brute = sum(
            comb(d, order.positive_count)
            for order in iter_orders(d)
            if satisfies_interlacing(order)
        )
        assert interlacing_couples(d) == brute
        assert interlacing_couples(d) <= chi(d)


def test_interlacing_ratio_tabulates_down():
    # illustrative only: the first values, frozen
    ratios = [
        Fraction(interlacing_couples(d), chi(d)) for d in range(1, 6)
    ]
    assert ratios == [
        Fraction(1, 2),
        Fraction(1, 2),
        Fraction(7, 20),
        Fraction(5, 14),
        Fraction(71, 252),
    ]


def test_second_difference_matches_expansion():
    for d in range(2, 21):
        roots = [Fraction(-1)] * (d - 2) + [Fraction(1)] * 2
        poly = expand_from_roots(roots)
        for k in range(d + 1):
            assert poly.coefficient(d - k) == binomial_second_difference(d, k)


def test_second_difference_zeros_only_at_squares():
    zero_degrees = {
        d for d in range(2, 21)
        if any(
            binomial_second_difference(d, k) == 0 for k in range(d + 1)
        )
    }
    assert zero_degrees == {4, 9, 16}
    assert second_difference_zero_positions(9) == (3, 6)
    assert second_difference_zero_positions(16) == (6, 10)
    assert second_difference_zero_positions(12) == ()
    for d in (4, 9, 16):
        lo, hi = second_difference_zero_positions(d)
        assert binomial_second_difference(d, lo) == 0
        assert binomial_second_difference(d, hi) == 0
