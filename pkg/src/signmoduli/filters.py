"""Non-realizability filters for compatible couples.

Each filter is a sound sufficient condition: when it fires, no
hyperbolic polynomial realizes the couple.  apply_filters runs the
battery in a fixed order and returns the first hit.  Soundness is the
load-bearing property (it is fuzz-tested against random witnesses);
completeness is not expected, couples surviving every filter may still
be non-realizable.

Filter ids, in battery order:

  leading-sum     a_{d-1} < 0 forces the largest modulus to be a
                  positive root unless the rank interlacing fails
  even-degree     even d, positive constant term, all odd coefficients
                  negative: each gap (0,alpha_1), (alpha_2,alpha_3),...
                  must hold a negative-root modulus
  canonical       a canonical pattern is realizable only with its
                  canonical order
  rigid           a constant or alternating order forces the pattern
  superposition   orders that decompose into two alternating subwords
                  inherit sign constraints from every decomposition
  two-change      cited bound for d = 8k+2, c = 2, order N^{4k}PPN^{4k}
  reference-table cited exhaustive classification for d <= 5

The last two rest on results taken from the literature rather than on
constructions replayed here; they carry cited=True so downstream
reports can tag their rejections distinctly.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .counting import satisfies_interlacing
from .patterns import (
    Couple,
    ModuliOrder,
    SignPattern,
    canonical_order_of,
    forced_pattern_of_rigid,
    is_canonical_pattern,
    is_rigid_order,
    superposition_decompose,
)
from .reference_tables import TABLE_BOUND, is_table_realizable
from .witnesses import RootConfiguration


@dataclass(frozen=True)
class FilterInfo:
    id: str
    cited: bool
    description: str


FILTERS: tuple[FilterInfo, ...] = (
    FilterInfo("leading-sum", False,
               "negative a_{d-1} with interlacing ranks"),
    FilterInfo("even-degree", False,
               "even degree, a_0 > 0, all odd coefficients negative"),
    FilterInfo("canonical", False,
               "canonical pattern paired with a non-canonical order"),
    FilterInfo("rigid", False,
               "constant or alternating order with the wrong pattern"),
    FilterInfo("superposition", False,
               "sign constraints forced by alternating decompositions"),
    FilterInfo("two-change", True,
               "run-length bound for c=2 at degrees 8k+2"),
    FilterInfo("reference-table", True,
               "exhaustive classification for d <= 5"),
)

FILTER_IDS = tuple(f.id for f in FILTERS)
_CITED = {f.id for f in FILTERS if f.cited}


def filter_is_cited(filter_id: str) -> bool:
    if filter_id not in FILTER_IDS:
        raise KeyError(filter_id)
    return filter_id in _CITED


@dataclass(frozen=True)
class RealizationStatus:
    """Verdict for one couple: realized, impossible, or unresolved."""

    kind: str  # "realized" | "impossible" | "unresolved"
    witness: RootConfiguration | None = None
    filter: str | None = None

    def __post_init__(self):
        if self.kind not in ("realized", "impossible", "unresolved"):
            raise ValueError(f"bad status kind {self.kind!r}")
        if self.kind == "realized" and self.witness is None:
            raise ValueError("realized status needs a witness")
        if self.kind == "impossible" and self.filter not in FILTER_IDS:
            raise ValueError(f"unknown filter id {self.filter!r}")

    @classmethod
    def realized(cls, witness: RootConfiguration) -> "RealizationStatus":
        return cls("realized", witness=witness)

    @classmethod
    def impossible(cls, filter_id: str) -> "RealizationStatus":
        return cls("impossible", filter=filter_id)

    @classmethod
    def unresolved(cls) -> "RealizationStatus":
        return cls("unresolved")


# --- individual filters -------------------------------------------------

def _leading_sum(couple: Couple) -> bool:
    # a_{d-1} = -(sum of roots); a_{d-1} < 0 means the positive roots
    # outweigh the negative ones, which pins the top of the moduli
    # order unless the rank interlacing condition fails first
    return couple.pattern[0] == "c" and satisfies_interlacing(couple.order)


def _even_degree(couple: Couple) -> bool:
    sp = couple.sign_pattern
    d = couple.degree
    if d % 2 or couple.pattern.change_count >= d:
        return False
    if sp[d] != "+":
        return False
    if any(sp[d - j] != "-" for j in range(1, d, 2)):
        return False
    # Q(0) > 0 and Q < 0 at every positive root's neighborhood force a
    # negative root inside (0, alpha_1) and inside each gap
    # (alpha_2i, alpha_2i+1); equivalently no N may sit after an even
    # number of P's in the moduli order
    seen_p = 0
    for letter in couple.order:
        if letter == "P":
            seen_p += 1
        elif seen_p % 2 == 0:
            return True
    return False


def _canonical(couple: Couple) -> bool:
    return (
        is_canonical_pattern(couple.sign_pattern)
        and couple.order != canonical_order_of(couple.pattern)
    )


def _rigid(couple: Couple) -> bool:
    return (
        is_rigid_order(couple.order)
        and couple.sign_pattern != forced_pattern_of_rigid(couple.order)
    )


def _sigma(part_type: str, t: int) -> int:
    # sign of the coefficient t positions below the leading one, for a
    # polynomial whose roots alternate in sign; part_type is the sign
    # of the smallest-modulus root's letter ("N" ends with a negative
    # root contribution, "P" with a positive one)
    if part_type == "N":
        return -1 if (t // 2) % 2 else 1
    return -1 if ((t + 1) // 2) % 2 else 1


@lru_cache(maxsize=None)
def _decomposition_profiles(order: str) -> tuple[tuple, ...] | None:
    """Unique (type, size) profiles over all alternating 2-splits.

    None when the order is not a superposition.  The forced-sign
    analysis below depends only on each part's last letter and length,
    so profiles are deduplicated as unordered pairs.
    """
    word = ModuliOrder(order)
    decomps = superposition_decompose(word)
    if not decomps:
        return None
    profiles = set()
    for dec in decomps:
        a = tuple(word[i] for i in dec.first)
        b = tuple(word[i] for i in dec.second)
        pa = (a[-1], len(a))
        pb = (b[-1], len(b))
        profiles.add(tuple(sorted((pa, pb))))
    return tuple(sorted(profiles))


def _profile_conflicts(sp: SignPattern, profile) -> bool:
    (type_a, da), (type_b, db) = profile
    d = da + db
    for s in range(d + 1):
        lo = max(0, s - db)
        hi = min(da, s)
        if lo < hi:
            # several products contribute; their common sign is pinned
            # only when the parity works out
            same_type = type_a == type_b
            determined = same_type == ((d - s) % 2 == 1)
            if not determined:
                continue
        sign = _sigma(type_a, da - lo) * _sigma(type_b, db - (s - lo))
        want = 1 if sp[d - s] == "+" else -1
        if sign != want:
            return True
    return False


def _superposition(couple: Couple) -> bool:
    # if the order splits as a shuffle of two alternating orders, any
    # realizing polynomial factors accordingly, so EVERY decomposition
    # constrains the pattern; one conflicting decomposition kills it
    profiles = _decomposition_profiles(str(couple.order))
    if profiles is None:
        return False
    sp = couple.sign_pattern
    return any(_profile_conflicts(sp, p) for p in profiles)


def _two_change(couple: Couple) -> bool:
    d = couple.degree
    if d < 10 or (d - 2) % 8:
        return False
    k = (d - 2) // 8
    if str(couple.order) != "N" * (4 * k) + "PP" + "N" * (4 * k):
        return False
    sp = couple.sign_pattern
    runs = []
    count = 1
    for prev, cur in zip(sp, sp[1:]):
        if cur == prev:
            count += 1
        else:
            runs.append(count)
            count = 1
    runs.append(count)
    if len(runs) != 3:
        return False
    return runs[0] <= k or runs[2] <= k


def _reference_table(couple: Couple) -> bool:
    verdict = is_table_realizable(couple)
    return verdict is False


_BATTERY = (
    ("leading-sum", _leading_sum),
    ("even-degree", _even_degree),
    ("canonical", _canonical),
    ("rigid", _rigid),
    ("superposition", _superposition),
    ("two-change", _two_change),
    ("reference-table", _reference_table),
)


def apply_filters(couple: Couple) -> RealizationStatus:
    """Run the battery; Impossible on the first hit, else Unresolved.

    The couple must be compatible (change count equals positive count);
    the filters assume it.
    """
    if not couple.is_compatible:
        raise ValueError(f"filters need a compatible couple, got {couple}")
    for filter_id, fires in _BATTERY:
        if fires(couple):
            return RealizationStatus.impossible(filter_id)
    return RealizationStatus.unresolved()


FUZZ_MODULUS_RANGE = 1_000_000
FUZZ_RETRY_CAP = 40


def soundness_fuzz(samples: int, seed: int, max_degree: int = 10):
    """Fire the battery at couples realized by construction.

    Draws random root configurations (distinct integer moduli, random
    signs), reads off their couples, and applies every filter.  A
    couple with a witness that any filter declares impossible is a
    soundness violation; the returned list must be empty.
    """
    import random

    from .witnesses import ZeroCoefficient, couple_of

    rng = random.Random(seed)
    violations = []
    for _ in range(samples):
        couple = None
        for _ in range(FUZZ_RETRY_CAP):
            d = rng.randrange(1, max_degree + 1)
            moduli = rng.sample(range(1, FUZZ_MODULUS_RANGE), d)
            roots = [m if rng.randrange(2) else -m for m in moduli]
            try:
                couple = couple_of(RootConfiguration(sorted(roots, key=abs)))
                break
            except ZeroCoefficient:
                continue
        assert couple is not None, "zero-coefficient retries exhausted"
        status = apply_filters(couple)
        if status.kind == "impossible":
            violations.append((couple, status.filter))
    return violations
