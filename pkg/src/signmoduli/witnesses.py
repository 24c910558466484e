"""Exact rational witnesses: root configurations and their couples.

A witness for a couple is a tuple of nonzero rationals (the roots of a
monic hyperbolic polynomial) whose expansion has the couple's sign
pattern and whose signed moduli produce the couple's order.  All
arithmetic is exact; a root configuration whose coefficients land on
zero is rejected rather than rounded.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from .patterns import (
    ChangePreservationPattern,
    Couple,
    ModuliOrder,
    SignPattern,
    canonical_order_of,
    sp_to_cpp,
)


class ModulusTie(ValueError):
    """Two roots share an absolute value; the order of moduli is undefined."""


class ZeroCoefficient(ValueError):
    """The expansion has a vanishing coefficient; the sign pattern is undefined."""


class NotAchievable(Exception):
    """The request is provably out of reach for this construction."""


class BudgetExhausted(Exception):
    """The construction ran out of retries; indicates a bug or a bad budget."""


@dataclass(frozen=True)
class RootConfiguration:
    """Nonzero rational roots; repeats are allowed until couple extraction."""

    roots: tuple[Fraction, ...]

    def __init__(self, roots):
        converted = tuple(Fraction(r) for r in roots)
        if not converted:
            raise ValueError("empty root configuration")
        if any(r == 0 for r in converted):
            raise ValueError("roots must be nonzero")
        object.__setattr__(self, "roots", converted)

    @property
    def degree(self):
        return len(self.roots)

    def to_strings(self):
        """Exact decimal-free serialization: 'num' or 'num/den' per root."""
        return [
            str(r.numerator) if r.denominator == 1 else f"{r.numerator}/{r.denominator}"
            for r in self.roots
        ]

    @classmethod
    def from_strings(cls, items):
        return cls(tuple(Fraction(s) for s in items))


@dataclass(frozen=True)
class RationalPolynomial:
    """Monic polynomial with exact rational coefficients, stored ascending."""

    coefficients: tuple[Fraction, ...]

    def __init__(self, coefficients):
        converted = tuple(Fraction(a) for a in coefficients)
        if len(converted) < 2:
            raise ValueError("need degree at least 1")
        if converted[-1] != 1:
            raise ValueError("polynomial must be monic")
        object.__setattr__(self, "coefficients", converted)

    @property
    def degree(self):
        return len(self.coefficients) - 1

    def coefficient(self, power: int) -> Fraction:
        return self.coefficients[power]

    def evaluate(self, x) -> Fraction:
        total = Fraction(0)
        for a in reversed(self.coefficients):
            total = total * x + a
        return total

    def sign_pattern(self) -> SignPattern:
        """Signs from the leading coefficient down; zeros are an error."""
        if any(a == 0 for a in self.coefficients):
            raise ZeroCoefficient(f"zero coefficient in {self.coefficients}")
        return SignPattern(
            "".join("+" if a > 0 else "-" for a in reversed(self.coefficients))
        )


def _expand_ints(roots) -> list[int]:
    coeffs = [1]
    for r in roots:
        new = [0] * (len(coeffs) + 1)
        for i, a in enumerate(coeffs):
            new[i + 1] += a
            new[i] -= r * a
        coeffs = new
    return coeffs


def _as_scaled_ints(roots) -> list[int]:
    # scaling all roots by a positive integer preserves signs, moduli
    # order, and coefficient signs, so couples can be read off integers
    scale = lcm(*(r.denominator for r in roots)) if roots else 1
    return [int(r * scale) for r in roots]


def expand_from_roots(rc: RootConfiguration) -> RationalPolynomial:
    """Exact monic expansion of prod (x - r_i)."""
    if not isinstance(rc, RootConfiguration):
        rc = RootConfiguration(tuple(rc))
    coeffs = [Fraction(1)]
    for r in rc.roots:
        new = [Fraction(0)] * (len(coeffs) + 1)
        for i, a in enumerate(coeffs):
            new[i + 1] += a
            new[i] -= r * a
        coeffs = new
    return RationalPolynomial(tuple(coeffs))


def _couple_of_signed(roots) -> Couple:
    """Couple of a sequence of nonzero Fractions; raises on ties and zeros."""
    ordered = sorted(roots, key=abs)
    for a, b in zip(ordered, ordered[1:]):
        if abs(a) == abs(b):
            raise ModulusTie(f"equal moduli {abs(a)} in root configuration")
    order = ModuliOrder("".join("P" if r > 0 else "N" for r in ordered))
    ints = _as_scaled_ints(ordered)
    coeffs = _expand_ints(ints)
    if any(a == 0 for a in coeffs):
        raise ZeroCoefficient("expansion has a zero coefficient")
    sp = SignPattern("".join("+" if a > 0 else "-" for a in reversed(coeffs)))
    return Couple(sp_to_cpp(sp), order)


def couple_of(rc: RootConfiguration) -> Couple:
    """Order of moduli plus change-preservation pattern of the expansion.

    The result is always compatible: for a polynomial with all roots
    real and nonzero, the number of coefficient sign changes equals the
    number of positive roots.
    """
    if not isinstance(rc, RootConfiguration):
        rc = RootConfiguration(tuple(rc))
    return _couple_of_signed(rc.roots)


CANONICAL_RETRY_CAP = 12


def construct_canonical_witness(
    cpp: ChangePreservationPattern, base: Fraction = Fraction(2)
) -> RootConfiguration:
    """Witness for (cpp, canonical order) with geometric moduli.

    Roots get moduli base^1 .. base^d and signs read off the canonical
    order.  Widely separated moduli force every coefficient's sign, so
    if the expansion disagrees with the pattern the base is squared and
    the construction retried.
    """
    cpp = ChangePreservationPattern(cpp)
    base = Fraction(base)
    if base <= 1:
        raise ValueError("base must exceed 1")
    order = canonical_order_of(cpp)
    target = Couple(cpp, order)
    for _ in range(CANONICAL_RETRY_CAP):
        modulus = Fraction(1)
        roots = []
        for letter in order:
            modulus = modulus * base
            roots.append(modulus if letter == "P" else -modulus)
        rc = RootConfiguration(tuple(roots))
        try:
            if couple_of(rc) == target:
                return rc
        except (ModulusTie, ZeroCoefficient):
            pass
        base = base * base
    raise BudgetExhausted(
        f"canonical construction failed for {cpp} after {CANONICAL_RETRY_CAP} retries"
    )


PERTURB_HALVING_CAP = 64


def _modulus_blocks(base_roots):
    """Group a root multiset by modulus, ascending; items are (modulus, signs)."""
    blocks: dict[Fraction, list[int]] = {}
    for r in base_roots:
        blocks.setdefault(abs(r), []).append(1 if r > 0 else -1)
    return sorted(blocks.items())


def perturb_multiple_roots(
    base_roots, target: Couple, radius: Fraction = Fraction(1, 4)
) -> RootConfiguration:
    """Split multiple roots into distinct nearby rationals matching an order.

    base_roots is a root multiset (repeat a value to give it
    multiplicity).  Each modulus block is spread into distinct moduli
    m, m(1+eps), m(1+2 eps), ... with signs assigned from the target
    order's letters over that block's ranks; eps shrinks geometrically
    until the expansion reproduces the target couple.

    Raises NotAchievable when the target order's letters per block do
    not match the block's sign counts, or when a nonzero coefficient of
    the unperturbed expansion already contradicts the target pattern
    (perturbation cannot flip a sign that converges to a nonzero
    limit).  Raises BudgetExhausted when shrinking eps never helps.
    """
    base = [Fraction(r) for r in base_roots]
    if any(r == 0 for r in base):
        raise ValueError("base roots must be nonzero")
    if not target.is_compatible:
        raise ValueError("target couple is not compatible")
    if len(base) != target.degree:
        raise NotAchievable("base multiset size differs from target degree")

    blocks = _modulus_blocks(base)
    target_sp = target.sign_pattern

    # block consistency: the order's letters over each block's ranks
    # must use exactly the block's positive and negative counts
    start = 0
    segments = []
    for modulus, signs in blocks:
        size = len(signs)
        letters = target.order[start : start + size]
        if letters.count("P") != sum(1 for s in signs if s > 0):
            raise NotAchievable(
                f"order segment {letters!r} conflicts with block at modulus {modulus}"
            )
        segments.append((modulus, size, letters))
        start += size

    # a nonzero limit coefficient with the wrong sign can never be fixed
    base_coeffs = expand_from_roots(RootConfiguration(tuple(base))).coefficients
    d = len(base)
    for power, a in enumerate(base_coeffs):
        want = target_sp[d - power]
        if a > 0 and want == "-" or a < 0 and want == "+":
            raise NotAchievable(
                f"unperturbed coefficient of x^{power} has sign {'+' if a > 0 else '-'}"
            )

    # eps must keep the spread blocks from overlapping their neighbours
    eps = Fraction(radius)
    for (m1, size1, _), (m2, _, _) in zip(segments, segments[1:]):
        gap = Fraction(m2, m1)
        while 1 + size1 * eps >= gap:
            eps /= 2

    for _ in range(PERTURB_HALVING_CAP):
        roots = []
        for modulus, size, letters in segments:
            for t, letter in enumerate(letters):
                m = modulus * (1 + t * eps)
                roots.append(m if letter == "P" else -m)
        rc = RootConfiguration(tuple(roots))
        try:
            if couple_of(rc) == target:
                return rc
        except (ModulusTie, ZeroCoefficient):
            pass
        eps /= 2
    raise BudgetExhausted(
        f"perturbation failed to reach {target} from {len(blocks)} blocks"
    )
