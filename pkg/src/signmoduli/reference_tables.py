"""Ground-truth realizability tables for degrees 1 through 5.

For d <= 5 the full classification of compatible couples is known.
The tables below list, per sign pattern with a_{d-1} > 0, the set of
realizable moduli orders; the a_{d-1} < 0 half follows by the mirror
involution (negate every root), which maps realizable couples to
realizable couples bijectively.

Two degree-5 rows are pinned by their cardinality rather than an
explicit list; their sets are completed by applying the composed
mirror-reverse involution to rows that are listed in full, which is an
exact derivation, not a guess.  REFERENCE_GRANULARITY records which
rows those are so tests can compare at the right granularity.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .counting import chi
from .patterns import (
    Couple,
    ModuliOrder,
    SignPattern,
    mirror_sign_pattern,
)

TABLE_BOUND = 5

# realizable orders per sign pattern, a_{d-1} > 0 half only
_HALF_TABLES: dict[int, dict[str, tuple[str, ...]]] = {
    1: {
        "++": ("N",),
    },
    2: {
        "+++": ("NN",),
        "++-": ("PN",),
    },
    3: {
        "++++": ("NNN",),
        "+++-": ("PNN",),
        "++--": ("PNN", "NPN", "NNP"),
        "++-+": ("PPN",),
    },
    4: {
        "+++++": ("NNNN",),
        "++++-": ("PNNN",),
        "+++--": ("PNNN", "NPNN", "NNPN"),
        "++---": ("NPNN", "NNPN", "NNNP"),
        "++-++": ("NPPN",),
        "++--+": ("PNPN", "NPPN", "PPNN", "PNNP"),
        "+++-+": ("PPNN",),
        "++-+-": ("PPPN",),
    },
    5: {
        # canonical patterns: exactly the canonical order
        "++++++": ("NNNNN",),
        "+++++-": ("PNNNN",),
        "++-+++": ("NNPPN",),
        "+++-++": ("NPPNN",),
        "++++-+": ("PPNNN",),
        "++-+--": ("NPPPN",),
        "+++-+-": ("PPPNN",),
        "++-+-+": ("PPPPN",),
        # remaining patterns
        "++++--": ("PNNNN", "NPNNN", "NNPNN"),
        "+++---": ("PNNNN", "NPNNN", "NNPNN", "NNNPN", "NNNNP"),
        "++----": ("NNPNN", "NNNPN", "NNNNP"),
        "++---+": ("PPNNN", "PNPNN", "PNNPN", "PNNNP", "NPPNN"),
        "+++--+": ("PPNNN", "PNPNN", "PNNPN", "NPPNN"),
        "++--++": (
            "PPNNN", "PNPNN", "PNNPN", "PNNNP", "NPPNN",
            "NPNPN", "NPNNP", "NNPPN", "NNPNP", "NNNPP",
        ),
        # sets completed via the mirror-reverse images of the two
        # fully listed c=2 rows above; the independent datum is the count
        "++-++-": ("PPPNN", "PPNPN", "PNPPN", "NPPPN", "PPNNP"),
        "++--+-": ("PPPNN", "PPNPN", "PNPPN", "PPNNP"),
    },
}

# rows whose ground truth is the cardinality of the realizable set
REFERENCE_GRANULARITY: dict[tuple[int, str], str] = {
    (d, sp): "set" for d, table in _HALF_TABLES.items() for sp in table
}
REFERENCE_GRANULARITY[(5, "++-++-")] = "count"
REFERENCE_GRANULARITY[(5, "++--+-")] = "count"

REFERENCE_RATIOS: dict[int, Fraction] = {
    1: Fraction(1),
    2: Fraction(2, 3),
    3: Fraction(3, 5),
    4: Fraction(3, 7),
    5: Fraction(47, 126),
}


def _mirror_order_word(order: str) -> str:
    return order.translate(str.maketrans("PN", "NP"))


@lru_cache(maxsize=None)
def realizable_table(d: int) -> dict[SignPattern, frozenset[ModuliOrder]]:
    """Full realizability table for degree d, both halves.

    Keys cover every sign pattern of degree d; a couple is realizable
    iff its order is in the value set of its pattern.
    """
    if not 1 <= d <= TABLE_BOUND:
        raise ValueError(f"tables cover 1 <= d <= {TABLE_BOUND}")
    table: dict[SignPattern, frozenset[ModuliOrder]] = {}
    for sp_str, orders in _HALF_TABLES[d].items():
        sp = SignPattern(sp_str)
        mirrored = mirror_sign_pattern(sp)
        assert mirrored != sp and mirrored not in table
        table[sp] = frozenset(ModuliOrder(o) for o in orders)
        table[mirrored] = frozenset(
            ModuliOrder(_mirror_order_word(o)) for o in orders
        )
    assert len(table) == 2 ** d
    return table


def is_table_realizable(couple: Couple) -> bool | None:
    """Table verdict for a couple, or None beyond the table bound."""
    d = couple.degree
    if d > TABLE_BOUND:
        return None
    return couple.order in realizable_table(d)[couple.sign_pattern]


def table_realizable_count(d: int) -> int:
    return sum(len(v) for v in realizable_table(d).values())


def table_ratio(d: int) -> Fraction:
    """Realizable couples over compatible couples, from the tables."""
    return Fraction(table_realizable_count(d), chi(d))
