"""Sign patterns, change-preservation patterns, orders of moduli, couples.

A monic degree-d hyperbolic polynomial with nonzero coefficients carries
two pieces of sign combinatorics:

* its sign pattern: the d+1 coefficient signs read from the leading
  coefficient down (always starting with + by the monic convention);
* its order of moduli: the word over {P, N} listing, by increasing
  absolute value, whether each root is positive or negative.

The sign pattern is equivalent to a d-letter word over {c, p} marking
sign changes and sign preservations between consecutive coefficients.
A (pattern, order) couple is compatible when the number of c letters
equals the number of P letters, which is what the rule of signs demands
for a polynomial with all roots real.

All types here are immutable; everything is a pure function.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product
from typing import Iterator, NamedTuple


class SignPattern(str):
    """Word over {+,-} of length d+1, starting with +."""

    def __new__(cls, s):
        s = str(s)
        if len(s) < 2:
            raise ValueError("sign pattern needs at least two signs")
        if any(ch not in "+-" for ch in s):
            raise ValueError(f"invalid sign pattern {s!r}")
        if s[0] != "+":
            raise ValueError("sign pattern must start with + (monic convention)")
        return super().__new__(cls, s)

    @property
    def degree(self):
        return len(self) - 1


class ChangePreservationPattern(str):
    """Word over {c,p} of length d."""

    def __new__(cls, s):
        s = str(s)
        if not s:
            raise ValueError("empty change-preservation pattern")
        if any(ch not in "cp" for ch in s):
            raise ValueError(f"invalid change-preservation pattern {s!r}")
        return super().__new__(cls, s)

    @property
    def degree(self):
        return len(self)

    @property
    def change_count(self):
        return self.count("c")


class ModuliOrder(str):
    """Word over {P,N} of length d, ascending root moduli."""

    def __new__(cls, s):
        s = str(s)
        if not s:
            raise ValueError("empty order of moduli")
        if any(ch not in "PN" for ch in s):
            raise ValueError(f"invalid order of moduli {s!r}")
        return super().__new__(cls, s)

    @property
    def degree(self):
        return len(self)

    @property
    def positive_count(self):
        return self.count("P")


@dataclass(frozen=True)
class Couple:
    """A (change-preservation pattern, order of moduli) pair."""

    pattern: ChangePreservationPattern
    order: ModuliOrder

    def __post_init__(self):
        object.__setattr__(self, "pattern", ChangePreservationPattern(self.pattern))
        object.__setattr__(self, "order", ModuliOrder(self.order))
        if len(self.pattern) != len(self.order):
            raise ValueError("pattern and order must have equal length")

    @property
    def degree(self):
        return len(self.pattern)

    @property
    def is_compatible(self):
        return self.pattern.change_count == self.order.positive_count

    @property
    def sign_pattern(self):
        return cpp_to_sp(self.pattern)


def sp_to_cpp(sp: SignPattern) -> ChangePreservationPattern:
    """Letter j is c iff signs j-1 and j differ."""
    sp = SignPattern(sp)
    letters = [
        "c" if sp[j - 1] != sp[j] else "p" for j in range(1, len(sp))
    ]
    return ChangePreservationPattern("".join(letters))


def cpp_to_sp(cpp: ChangePreservationPattern) -> SignPattern:
    """Inverse of sp_to_cpp under the leading-+ convention."""
    cpp = ChangePreservationPattern(cpp)
    signs = ["+"]
    for letter in cpp:
        if letter == "c":
            signs.append("-" if signs[-1] == "+" else "+")
        else:
            signs.append(signs[-1])
    return SignPattern("".join(signs))


def canonical_order_of(cpp: ChangePreservationPattern) -> ModuliOrder:
    """Read the pattern right to left, c becomes P and p becomes N."""
    cpp = ChangePreservationPattern(cpp)
    return ModuliOrder(
        "".join("P" if letter == "c" else "N" for letter in reversed(cpp))
    )


_FORBIDDEN_WINDOWS = ("++--", "--++", "+--+", "-++-")


def is_canonical_pattern(sp: SignPattern) -> bool:
    """No window of four consecutive signs equal to ++--, --++, +--+ or -++-.

    Equivalently, the change-preservation pattern contains neither cpc
    nor pcp as a factor.
    """
    sp = SignPattern(sp)
    return not any(
        sp[i : i + 4] in _FORBIDDEN_WINDOWS for i in range(len(sp) - 3)
    )


def is_rigid_order(order: ModuliOrder) -> bool:
    """Constant or strictly alternating orders.

    These are exactly the orders all of whose realizing polynomials
    share a single sign pattern.
    """
    order = ModuliOrder(order)
    if len(set(order)) == 1:
        return True
    return all(order[i] != order[i + 1] for i in range(len(order) - 1))


def forced_pattern_of_rigid(order: ModuliOrder, d: int | None = None) -> SignPattern:
    """The unique sign pattern realizable with a rigid order.

    All-P forces the alternating pattern, all-N the all-plus pattern,
    and the two strictly alternating orders force the period-four
    patterns ++--++-- / +--++--+ (truncated to d+1 signs).  All four
    cases are the inverse of canonical_order_of: reverse the order and
    map P to c, N to p.
    """
    order = ModuliOrder(order)
    if d is not None and d != len(order):
        raise ValueError("declared degree does not match order length")
    if not is_rigid_order(order):
        raise ValueError(f"order {order!r} is not rigid")
    cpp = ChangePreservationPattern(
        "".join("c" if letter == "P" else "p" for letter in reversed(order))
    )
    return cpp_to_sp(cpp)


def _mirror_couple(couple: Couple) -> Couple:
    pattern = "".join("c" if x == "p" else "p" for x in couple.pattern)
    order = "".join("P" if x == "N" else "N" for x in couple.order)
    return Couple(ChangePreservationPattern(pattern), ModuliOrder(order))


def _reverse_couple(couple: Couple) -> Couple:
    return Couple(
        ChangePreservationPattern(couple.pattern[::-1]),
        ModuliOrder(couple.order[::-1]),
    )


def apply_involution(couple: Couple, kind: str) -> Couple:
    """kind 'mirror' swaps c/p and P/N; kind 'reverse' reverses both words.

    On polynomials, mirror is Q(x) -> (-1)^d Q(-x) (roots negated) and
    reverse is Q(x) -> x^d Q(1/x)/Q(0) (roots inverted).  Both preserve
    compatibility and realizability.
    """
    if kind == "mirror":
        return _mirror_couple(couple)
    if kind == "reverse":
        return _reverse_couple(couple)
    raise ValueError(f"unknown involution kind {kind!r}")


def mirror_sign_pattern(sp: SignPattern) -> SignPattern:
    """Sign-pattern view of the mirror involution: a_j -> (-1)^(d-j) a_j."""
    sp = SignPattern(sp)
    flipped = [
        ch if t % 2 == 0 else ("+" if ch == "-" else "-")
        for t, ch in enumerate(sp)
    ]
    return SignPattern("".join(flipped))


def orbit_of(couple: Couple) -> frozenset[Couple]:
    """Closure of a couple under the mirror and reverse involutions.

    Always has two or four elements: mirror is fixed-point-free on
    couples (it flips every letter of both words).
    """
    a = couple
    b = _mirror_couple(a)
    c = _reverse_couple(a)
    d = _mirror_couple(c)
    return frozenset((a, b, c, d))


class Decomposition(NamedTuple):
    """A split of an order's positions into two interleaved alternating words.

    first always contains position 0.  Reassembling letters by position
    reproduces the order.
    """

    first: tuple[int, ...]
    second: tuple[int, ...]


def _is_alternating(word: str) -> bool:
    return all(word[i] != word[i + 1] for i in range(len(word) - 1))


def superposition_decompose(order: ModuliOrder) -> list[Decomposition]:
    """All ways to 2-color the letters into two nonempty alternating words.

    A strictly alternating word over {P,N} is a standard order; an
    order is a superposition when such a split exists.  Splits are
    returned with the part holding position 0 first, in a fixed
    deterministic sequence; the list is empty iff the order is not a
    superposition.  Single letters count as standard orders.
    """
    order = ModuliOrder(order)
    d = len(order)
    if d < 2:
        return []
    out = []
    rest = range(1, d)
    # position 0 always goes to the first part, killing the part swap symmetry
    for mask in range(2 ** (d - 1)):
        first = [0] + [i for i in rest if mask >> (i - 1) & 1]
        second = [i for i in rest if not mask >> (i - 1) & 1]
        if not second:
            continue
        if _is_alternating("".join(order[i] for i in first)) and _is_alternating(
            "".join(order[i] for i in second)
        ):
            out.append(Decomposition(tuple(first), tuple(second)))
    return out


def iter_sign_patterns(d: int) -> Iterator[SignPattern]:
    """All 2^d sign patterns of degree d, lexicographic with + < -."""
    if d < 1:
        raise ValueError("degree must be at least 1")
    for tail in product("+-", repeat=d):
        yield SignPattern("+" + "".join(tail))


def iter_cpps(d: int) -> Iterator[ChangePreservationPattern]:
    """All 2^d change-preservation patterns, lexicographic with c < p."""
    if d < 1:
        raise ValueError("degree must be at least 1")
    for word in product("cp", repeat=d):
        yield ChangePreservationPattern("".join(word))


def iter_orders(d: int, positive_count: int | None = None) -> Iterator[ModuliOrder]:
    """Orders of degree d, optionally restricted to a given number of P."""
    if d < 1:
        raise ValueError("degree must be at least 1")
    if positive_count is None:
        for word in product("PN", repeat=d):
            yield ModuliOrder("".join(word))
        return
    if not 0 <= positive_count <= d:
        raise ValueError("positive_count out of range")
    for spots in combinations(range(d), positive_count):
        word = ["N"] * d
        for i in spots:
            word[i] = "P"
        yield ModuliOrder("".join(word))


def iter_compatible_couples(d: int) -> Iterator[Couple]:
    """Every compatible couple of degree d, in a fixed canonical sequence.

    Sorted by change count, then pattern, then order; the sequence is
    the contract that makes classification output deterministic.
    """
    by_changes: dict[int, list[ChangePreservationPattern]] = {}
    for cpp in iter_cpps(d):
        by_changes.setdefault(cpp.change_count, []).append(cpp)
    for c in range(d + 1):
        for cpp in sorted(by_changes.get(c, [])):
            for order in sorted(iter_orders(d, c)):
                yield Couple(cpp, order)
