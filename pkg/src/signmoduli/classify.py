"""Witness search, star counts, and per-degree classification.

search_witness resolves one compatible couple: impossibility filters
first (they are sound, so running them before the search changes no
verdict, only the cost), then three witness strategies in a fixed
order, each candidate validated by exact expansion:

  (a) the canonical construction, when the order is the pattern's
      canonical order;
  (b) perturbation of bases with multiple roots, which covers the
      patterns whose couples cluster around (x+1)^{d-2}(x-1)^2 and
      (x-1)(x+1)^{d-2}(x-b);
  (c) seeded sampling of moduli on an exponent-jittered geometric
      grid, deterministic probes first, then random draws.

All three run over the couple's involution orbit: a witness found for
a mirrored or reversed member transforms back by negating or
inverting roots.  The budget counts candidate constructions across
all strategies, so budget 0 means no search at all.

Everything here is pure given (couple, config); classification runs
are reproducible byte for byte for a fixed seed, independent of the
worker count.
"""

from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from hashlib import blake2b
from itertools import product
from math import comb

from .counting import chi
from .filters import RealizationStatus, apply_filters
from .patterns import (
    ChangePreservationPattern,
    Couple,
    ModuliOrder,
    SignPattern,
    apply_involution,
    canonical_order_of,
    cpp_to_sp,
    iter_compatible_couples,
    iter_cpps,
    iter_orders,
    sp_to_cpp,
)
from .reference_tables import TABLE_BOUND, is_table_realizable
from .witnesses import (
    BudgetExhausted,
    ModulusTie,
    NotAchievable,
    RootConfiguration,
    ZeroCoefficient,
    construct_canonical_witness,
    couple_of,
    perturb_multiple_roots,
)

CLASSIFY_BOUND = 7

PROBE_STRETCHES = (
    Fraction(1, 16), Fraction(1, 8), Fraction(1, 4),
    Fraction(1, 2), Fraction(1), Fraction(2),
)


@dataclass(frozen=True)
class SearchConfig:
    """Knobs for the witness search.

    budget: total number of candidate constructions the search may
    attempt (0 disables search; filters still run).  base: geometric
    grid base for moduli, > 1.  spread: largest exponent step between
    consecutive moduli on the grid.
    """

    seed: int = 0
    budget: int = 4000
    base: Fraction = Fraction(2)
    spread: int = 2

    def __post_init__(self):
        object.__setattr__(self, "base", Fraction(self.base))
        if self.budget < 0:
            raise ValueError("budget must be >= 0")
        if self.base <= 1:
            raise ValueError("grid base must be > 1")
        if self.spread < 0:
            raise ValueError("spread must be >= 0")


DEFAULT_CONFIG = SearchConfig()


class _Budget:
    __slots__ = ("left",)

    def __init__(self, amount: int):
        self.left = amount

    def take(self) -> bool:
        if self.left <= 0:
            return False
        self.left -= 1
        return True


def _orbit_members(couple: Couple):
    """Orbit members with the transform that maps a member witness
    back to a witness for the original couple, original first."""
    seen = set()
    for kinds in ((), ("mirror",), ("reverse",), ("mirror", "reverse")):
        member = couple
        for k in kinds:
            member = apply_involution(member, k)
        if member in seen:
            continue
        seen.add(member)
        yield member, kinds


def _transform_back(roots, kinds) -> RootConfiguration:
    out = list(roots)
    if "reverse" in kinds:
        out = [1 / r for r in out]
    if "mirror" in kinds:
        out = [-r for r in out]
    return RootConfiguration(out)


def _validated(couple: Couple, member_witness, kinds) -> RootConfiguration | None:
    rc = _transform_back(member_witness.roots, kinds)
    return rc if couple_of(rc) == couple else None


def _perturbation_bases(d: int):
    if d >= 2:
        yield [Fraction(-1)] * (d - 2) + [Fraction(1)] * 2
    if d >= 3:
        yield [Fraction(1, 10)] + [Fraction(-1)] * (d - 2) + [Fraction(1)]


def _derived_rng(cfg: SearchConfig, member: Couple) -> random.Random:
    key = f"{cfg.seed}:{member.pattern}:{member.order}"
    digest = blake2b(key.encode(), digest_size=8).digest()
    return random.Random(int.from_bytes(digest, "big"))


def _roots_for_moduli(moduli, order: ModuliOrder):
    return [m if letter == "P" else -m for m, letter in zip(moduli, order)]


def _probe_moduli(d: int, base: Fraction, spread: int):
    """Deterministic grid walk: exponent increments in {0..spread},
    rank-proportional stretch factors 1 + j*s."""
    for inc in product(range(spread + 1), repeat=d - 1):
        exps = [0]
        for step in inc:
            exps.append(exps[-1] + step)
        for s in PROBE_STRETCHES:
            yield [base ** e * (1 + j * s) for j, e in enumerate(exps)]


def _random_moduli(rng: random.Random, d: int, base: Fraction, spread: int):
    steps = list(range(spread + 1)) or [0]
    weights = [11, 7, 2][: len(steps)] or [1]
    e = 0
    t = rng.randrange(0, 32)
    moduli = [base ** 0 * (1 + Fraction(t, 64))]
    for _ in range(d - 1):
        step = rng.choices(steps, weights=weights)[0]
        if step == 0:
            t += rng.randrange(1, 17)
            if t > 63:
                e += 1
                t = rng.randrange(0, 16)
        else:
            e += step
            t = rng.randrange(0, 32)
        moduli.append(base ** e * (1 + Fraction(t, 64)))
    return moduli


def _try_candidate(member: Couple, roots) -> RootConfiguration | None:
    try:
        rc = RootConfiguration(roots)
        if couple_of(rc) == member:
            return rc
    except (ModulusTie, ZeroCoefficient, ValueError):
        pass
    return None


def search_witness(couple: Couple, cfg: SearchConfig = DEFAULT_CONFIG) -> RealizationStatus:
    """Resolve one couple: Realized, Impossible(filter), or Unresolved."""
    if not couple.is_compatible:
        raise ValueError(f"couple is not compatible: {couple}")
    filtered = apply_filters(couple)
    if filtered.kind == "impossible":
        return filtered

    members = list(_orbit_members(couple))
    budget = _Budget(cfg.budget)

    # (a) canonical construction
    for member, kinds in members:
        if member.order != canonical_order_of(member.pattern):
            continue
        if not budget.take():
            return RealizationStatus.unresolved()
        try:
            w = construct_canonical_witness(member.pattern, cfg.base)
        except BudgetExhausted:
            continue
        rc = _validated(couple, w, kinds)
        if rc is not None:
            return RealizationStatus.realized(rc)

    # (b) perturbation of multiple-root bases
    for member, kinds in members:
        for base_roots in _perturbation_bases(couple.degree):
            if not budget.take():
                return RealizationStatus.unresolved()
            try:
                w = perturb_multiple_roots(base_roots, member, Fraction(1, 4))
            except (NotAchievable, BudgetExhausted):
                continue
            rc = _validated(couple, w, kinds)
            if rc is not None:
                return RealizationStatus.realized(rc)

    # (c) grid sampling: deterministic probes, then random draws
    d = couple.degree
    for member, kinds in members:
        for moduli in _probe_moduli(d, cfg.base, cfg.spread):
            if not budget.take():
                return RealizationStatus.unresolved()
            rc = _try_candidate(member, _roots_for_moduli(moduli, member.order))
            if rc is not None:
                final = _validated(couple, rc, kinds)
                if final is not None:
                    return RealizationStatus.realized(final)
    for member, kinds in members:
        rng = _derived_rng(cfg, member)
        while budget.take():
            moduli = _random_moduli(rng, d, cfg.base, cfg.spread)
            rc = _try_candidate(member, _roots_for_moduli(moduli, member.order))
            if rc is not None:
                final = _validated(couple, rc, kinds)
                if final is not None:
                    return RealizationStatus.realized(final)

    return RealizationStatus.unresolved()


# --- star counts ---------------------------------------------------------

def _partner_couples(target, d_hint=None):
    if isinstance(target, Couple):
        raise TypeError("star counts take a pattern or an order, not a couple")
    word = str(target)
    if set(word) <= {"P", "N"} and word:
        order = ModuliOrder(word)
        c = order.positive_count
        return [
            Couple(cpp, order)
            for cpp in iter_cpps(order.degree)
            if cpp.change_count == c
        ]
    if set(word) <= {"+", "-"} and word:
        sp = SignPattern(word)
        cpp = sp_to_cpp(sp)
    else:
        cpp = ChangePreservationPattern(word)
    return [
        Couple(cpp, order)
        for order in iter_orders(cpp.degree, positive_count=cpp.change_count)
    ]


def star_details(target, cfg: SearchConfig = DEFAULT_CONFIG):
    """Status of every partner couple of a pattern or order target."""
    return [(c, search_witness(c, cfg)) for c in _partner_couples(target)]


def star_counts(target, cfg: SearchConfig = DEFAULT_CONFIG) -> tuple[int, int]:
    """(lower, upper) bounds for k* of a pattern or l* of an order.

    lower counts partners with validated witnesses; upper counts
    partners not proven impossible.  The true star value sits between
    the two, inclusively.
    """
    details = star_details(target, cfg)
    lower = sum(1 for _, st in details if st.kind == "realized")
    upper = sum(1 for _, st in details if st.kind != "impossible")
    return lower, upper


# --- per-degree classification -------------------------------------------

@dataclass(frozen=True)
class ClassificationTable:
    degree: int
    records: tuple[tuple[Couple, RealizationStatus], ...]
    realized_count: int
    impossible_count: int
    unresolved_count: int
    ratio_lower: Fraction
    ratio_upper: Fraction
    matches_reference: bool | None

    @property
    def total(self) -> int:
        return len(self.records)

    def status_of(self, couple: Couple) -> RealizationStatus:
        for c, st in self.records:
            if c == couple:
                return st
        raise KeyError(couple)


def _search_job(args):
    couple, cfg = args
    return search_witness(couple, cfg)


def classify_degree(
    d: int,
    cfg: SearchConfig = DEFAULT_CONFIG,
    workers: int = 1,
) -> ClassificationTable:
    """Resolve every compatible couple of degree d.

    Couples are enumerated in canonical order (by change count, then
    pattern, then order) and results are merged in that order, so the
    table is identical for any worker count.
    """
    if not 1 <= d <= CLASSIFY_BOUND:
        raise ValueError(f"classification covers 1 <= d <= {CLASSIFY_BOUND}")
    couples = list(iter_compatible_couples(d))
    assert len(couples) == chi(d)
    if workers > 1:
        jobs = [(c, cfg) for c in couples]
        chunk = max(1, len(jobs) // (workers * 8))
        with ProcessPoolExecutor(max_workers=workers) as pool:
            statuses = list(pool.map(_search_job, jobs, chunksize=chunk))
    else:
        statuses = [search_witness(c, cfg) for c in couples]

    records = tuple(zip(couples, statuses))
    realized = sum(1 for _, st in records if st.kind == "realized")
    impossible = sum(1 for _, st in records if st.kind == "impossible")
    unresolved = len(records) - realized - impossible
    total = chi(d)

    matches: bool | None = None
    if d <= TABLE_BOUND:
        matches = unresolved == 0 and all(
            (st.kind == "realized") == bool(is_table_realizable(c))
            for c, st in records
        )

    return ClassificationTable(
        degree=d,
        records=records,
        realized_count=realized,
        impossible_count=impossible,
        unresolved_count=unresolved,
        ratio_lower=Fraction(realized, total),
        ratio_upper=Fraction(total - impossible, total),
        matches_reference=matches,
    )


# --- structured survey of the realization landscape ----------------------

SURVEY_ORDER_BOUND = 16


def _constant_orders_universal(d: int, cfg: SearchConfig) -> dict:
    """Check that P^d and N^d are the only universal orders.

    A constant order has a single compatible pattern, which the
    canonical construction realizes.  For every other order two
    one-block patterns are compatible, and their canonical orders
    differ from each other, so at least one canonical filter verdict
    proves the order is not universal.
    """
    if d > SURVEY_ORDER_BOUND:
        return {"status": "unverifiable",
                "reason": f"order enumeration capped at d <= {SURVEY_ORDER_BOUND}"}
    universal = []
    refuted = 0
    failures = []
    for order in iter_orders(d):
        c = order.positive_count
        if c in (0, d):
            cpp = ChangePreservationPattern(("c" if c else "p") * d)
            st = search_witness(Couple(cpp, order), cfg)
            if st.kind == "realized":
                universal.append(str(order))
            else:
                failures.append(str(order))
            continue
        blocks = (
            ChangePreservationPattern("c" * c + "p" * (d - c)),
            ChangePreservationPattern("p" * (d - c) + "c" * c),
        )
        hit = next(
            (
                cpp for cpp in blocks
                if apply_filters(Couple(cpp, order)).kind == "impossible"
            ),
            None,
        )
        if hit is None:
            failures.append(str(order))
        else:
            refuted += 1
    verified = not failures and sorted(universal) == sorted(
        ["P" * d, "N" * d] if d else []
    )
    return {
        "status": "verified" if verified else "failed",
        "universal_orders": sorted(universal),
        "non_universal_refuted": refuted,
        "failures": failures,
    }


def _full_order_patterns(d: int, cfg: SearchConfig) -> dict:
    """Patterns realizable with every compatible order.

    The all-plus pattern works at any degree (one compatible order,
    realized canonically).  For d >= 5 the second difference of the
    binomial row gives a c=2 pattern realizable with all C(d,2)
    orders; every order is hit by perturbing (x+1)^(d-2) (x-1)^2.
    """
    from .counting import binomial_second_difference

    allplus = ChangePreservationPattern("p" * d)
    st = search_witness(Couple(allplus, ModuliOrder("N" * d)), cfg)
    trivial_ok = st.kind == "realized"

    result: dict = {
        "trivial_pattern": str(cpp_to_sp(allplus)),
        "trivial_realized": trivial_ok,
    }
    if d < 5:
        result["status"] = "verified" if trivial_ok else "failed"
        return result

    coeffs = [binomial_second_difference(d, k) for k in range(d + 1)]
    if any(h == 0 for h in coeffs):
        result["status"] = "unverifiable"
        result["reason"] = "base pattern has vanishing coefficients"
        return result
    sp = SignPattern("".join("+" if h > 0 else "-" for h in coeffs))
    cpp = sp_to_cpp(sp)
    base = [Fraction(-1)] * (d - 2) + [Fraction(1)] * 2
    realized = 0
    missed = []
    for order in iter_orders(d, positive_count=2):
        try:
            perturb_multiple_roots(base, Couple(cpp, order), Fraction(1, 4))
            realized += 1
        except (NotAchievable, BudgetExhausted):
            missed.append(str(order))
    result.update(
        pattern=str(sp),
        orders_total=comb(d, 2),
        orders_realized=realized,
        missed=missed,
        status="verified" if trivial_ok and not missed else "failed",
    )
    return result


def _kstar_values(table: ClassificationTable) -> dict[SignPattern, int]:
    values: dict[SignPattern, int] = {}
    for couple, st in table.records:
        sp = couple.sign_pattern
        values.setdefault(sp, 0)
        if st.kind == "realized":
            values[sp] += 1
    return values


def _no_kstar_two(d: int, table: ClassificationTable | None) -> dict:
    if table is None or table.matches_reference is not True:
        return {"status": "unverifiable",
                "reason": "needs the exhaustive tables, d <= 5"}
    twos = [str(sp) for sp, k in _kstar_values(table).items() if k == 2]
    return {"status": "verified" if not twos else "failed",
            "patterns_with_kstar_two": twos}


def _sigma_two_orbit(d: int) -> set[str]:
    """Orbit of the two-run pattern ++--...- under mirror and reversal."""
    from .patterns import mirror_sign_pattern

    sp = SignPattern("+" * 2 + "-" * (d - 1))

    def reverse_sp(s: SignPattern) -> SignPattern:
        rev = s[::-1]
        if rev[0] == "-":
            rev = "".join("+" if ch == "-" else "-" for ch in rev)
        return SignPattern(rev)

    frontier = {str(sp)}
    while True:
        grown = set(frontier)
        for s in list(frontier):
            grown.add(str(mirror_sign_pattern(SignPattern(s))))
            grown.add(str(reverse_sp(SignPattern(s))))
        if grown == frontier:
            return frontier
        frontier = grown


def _kstar_three_set(d: int, table: ClassificationTable | None) -> dict:
    if d < 3:
        return {"status": "vacuous",
                "reason": "k*=3 needs at least three compatible orders"}
    if table is None or table.matches_reference is not True:
        return {"status": "unverifiable",
                "reason": "needs the exhaustive tables, d <= 5"}
    threes = {str(sp) for sp, k in _kstar_values(table).items() if k == 3}
    expected = _sigma_two_orbit(d)
    return {
        "status": "verified" if threes == expected else "failed",
        "patterns_with_kstar_three": sorted(threes),
        "expected_orbit": sorted(expected),
    }


def _lstar_top_order(d: int, cfg: SearchConfig) -> dict:
    if d % 2:
        return {"status": "not-applicable",
                "reason": "the P N^(d-1) family is pinned at even degrees"}
    order = ModuliOrder("P" + "N" * (d - 1))
    lower, upper = star_counts(order, cfg)
    expected = d // 2
    if lower == upper == expected:
        status = "verified"
    elif lower == expected <= upper:
        status = "bounded"
    else:
        status = "failed"
    return {
        "status": status,
        "order": str(order),
        "expected": expected,
        "lower": lower,
        "upper": upper,
    }


def realization_survey(d: int, cfg: SearchConfig = DEFAULT_CONFIG) -> dict:
    """Five-part survey of the realization landscape at degree d.

    Parts needing the exhaustive ground truth (the k* parts) report
    themselves unverifiable beyond the table bound rather than
    pretending a search settles them.
    """
    if d < 1:
        raise ValueError("degree must be >= 1")
    table = classify_degree(d, cfg) if d <= TABLE_BOUND else None
    parts = {
        "only_constant_orders_universal": _constant_orders_universal(d, cfg),
        "patterns_realizable_with_all_orders": _full_order_patterns(d, cfg),
        "no_pattern_has_kstar_two": _no_kstar_two(d, table),
        "kstar_three_exactly_the_two_run_orbit": _kstar_three_set(d, table),
        "lstar_of_top_order_family": _lstar_top_order(d, cfg),
    }
    ok = all(p["status"] != "failed" for p in parts.values())
    return {"degree": d, "parts": parts, "ok": ok}
