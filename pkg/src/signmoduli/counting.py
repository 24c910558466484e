"""Counting: compatible couples, interlacing orders, three routes to T_d^c.

Everything returns exact Python ints.  T_d^c counts the orders with c
letters P whose P-ranks interlace below the N-ranks; it has a closed
form, an alternating Catalan-weighted sum, and a brute-force count, and
the three must agree wherever all are defined.
"""

from __future__ import annotations

from math import comb, isqrt

from .patterns import ModuliOrder, iter_orders

BRUTE_FORCE_BOUND = 16


def chi(d: int) -> int:
    """Number of compatible couples of degree d: C(2d, d)."""
    if d < 1:
        raise ValueError("degree must be at least 1")
    return comb(2 * d, d)


def catalan(k: int) -> int:
    """The k-th Catalan number C(2k,k)/(k+1)."""
    if k < 0:
        raise ValueError("catalan index must be nonnegative")
    return comb(2 * k, k) // (k + 1)


def satisfies_interlacing(order: ModuliOrder) -> bool:
    """c <= p and the j-th largest P-rank is below the j-th largest N-rank.

    Writing alpha_1 < ... < alpha_c for the ranks of the P letters and
    gamma_1 < ... < gamma_p for the ranks of the N letters, the
    condition is alpha_c < gamma_p, alpha_{c-1} < gamma_{p-1}, ...,
    alpha_1 < gamma_{p-c+1}.
    """
    order = ModuliOrder(order)
    alphas = [i for i, letter in enumerate(order) if letter == "P"]
    gammas = [i for i, letter in enumerate(order) if letter == "N"]
    c, p = len(alphas), len(gammas)
    if c > p:
        return False
    return all(alphas[c - 1 - j] < gammas[p - 1 - j] for j in range(c))


def _check_tdc_domain(d: int, c: int) -> None:
    if d < 1:
        raise ValueError("degree must be at least 1")
    if c < 0:
        raise ValueError("c must be nonnegative")
    if 2 * c > d + 1:
        raise ValueError(f"T undefined for c={c}, d={d}: needs 2c <= d+1")


def t_dc_closed(d: int, c: int) -> int:
    """C(d,c) * (d - 2c + 1) / (d - c + 1), always an integer."""
    _check_tdc_domain(d, c)
    numerator = comb(d, c) * (d - 2 * c + 1)
    quotient, remainder = divmod(numerator, d - c + 1)
    assert remainder == 0, "ballot-number quotient must be exact"
    return quotient


def t_dc_catalan_sum(d: int, c: int) -> int:
    """C(d,c) minus the Catalan-weighted correction terms.

    Term k subtracts catalan(k) * C(d-2k-1, c-k-1); the sum stops when
    either binomial index would go negative.
    """
    _check_tdc_domain(d, c)
    total = comb(d, c)
    k = 0
    while c - k - 1 >= 0 and d - 2 * k - 1 >= 0:
        lower = c - k - 1
        upper = d - 2 * k - 1
        if lower <= upper:
            total -= catalan(k) * comb(upper, lower)
        k += 1
    return total


def t_dc_bruteforce(d: int, c: int, bound: int = BRUTE_FORCE_BOUND) -> int:
    """Count interlacing orders with c letters P by full enumeration."""
    _check_tdc_domain(d, c)
    if d > bound:
        raise ValueError(f"brute force capped at degree {bound}")
    if c > d:
        return 0
    return sum(1 for order in iter_orders(d, c) if satisfies_interlacing(order))


def interlacing_couples(d: int) -> int:
    """Compatible couples whose order satisfies the interlacing condition.

    Sums C(d,c) * T_d^c over admissible change counts: each of the
    C(d,c) patterns with c changes pairs with the T_d^c interlacing
    orders (orders with c > p never interlace).  The ratio against
    chi(d) is tabulated for comparison only, never asserted.
    """
    if d < 1:
        raise ValueError("degree must be at least 1")
    return sum(comb(d, c) * t_dc_closed(d, c) for c in range((d + 1) // 2 + 1))


def binomial_second_difference(d: int, k: int) -> int:
    """C(d-2,k) - 2 C(d-2,k-1) + C(d-2,k-2).

    The coefficient of x^(d-k) in (x+1)^(d-2) (x-1)^2; it vanishes
    exactly at k = (d +- sqrt(d))/2, which are integers only when d is
    a perfect square.
    """
    if d < 2:
        raise ValueError("degree must be at least 2")
    if not 0 <= k <= d:
        raise ValueError("k out of range")

    def safe_comb(n, r):
        return comb(n, r) if 0 <= r <= n else 0

    return (
        safe_comb(d - 2, k)
        - 2 * safe_comb(d - 2, k - 1)
        + safe_comb(d - 2, k - 2)
    )


def second_difference_zero_positions(d: int) -> tuple[int, ...]:
    """The k with binomial_second_difference(d,k) = 0: empty unless d is a square."""
    root = isqrt(d)
    if root * root != d:
        return ()
    return ((d - root) // 2, (d + root) // 2)
