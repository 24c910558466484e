"""Search, classification tables, star counts, realization survey."""

from fractions import Fraction

import pytest

from signmoduli import (
    Couple,
    ModuliOrder,
    SearchConfig,
    SignPattern,
    chi,
    classify_degree,
    couple_of,
    realizable_table,
    realization_survey,
    search_witness,
    sp_to_cpp,
    star_counts,
    star_details,
)

CFG = SearchConfig()


def _couple(sp, order):
    return Couple(sp_to_cpp(SignPattern(sp)), ModuliOrder(order))


def test_search_config_validation():
    with pytest.raises(ValueError):
        SearchConfig(budget=-1)
    with pytest.raises(ValueError):
        SearchConfig(base=1)
    with pytest.raises(ValueError):
        SearchConfig(spread=-2)
    assert SearchConfig(base=2).base == Fraction(2)


def test_search_rejects_incompatible():
    with pytest.raises(ValueError):
        search_witness(Couple("cp", "PP"), CFG)


def test_zero_budget_blocks_search_not_filters():
    # realizable couple: no filter fires, and with no candidate budget
    # the search cannot conclude anything
    free = SearchConfig(budget=0)
    st = search_witness(_couple("++--+", "PNPN"), free)
    assert st.kind == "unresolved"
    st = search_witness(Couple("cp", "PN"), free)
    assert st.kind == "impossible" and st.filter == "leading-sum"


def test_search_realizes_published_couples():
    for order in ("PNPN", "NPPN", "PPNN", "PNNP"):
        st = search_witness(_couple("++--+", order), CFG)
        assert st.kind == "realized"
        assert couple_of(st.witness) == _couple("++--+", order)


def test_classify_degree_bounds():
    with pytest.raises(ValueError):
        classify_degree(0, CFG)
    with pytest.raises(ValueError):
        classify_degree(8, CFG)


def test_tables_reproduced_exactly():
    expected_ratios = {
        1: Fraction(1),
        2: Fraction(2, 3),
        3: Fraction(3, 5),
        4: Fraction(3, 7),
        5: Fraction(47, 126),
    }
    for d in range(1, 6):
        table = classify_degree(d, CFG)
        assert table.total == chi(d)
        assert table.unresolved_count == 0
        assert table.matches_reference is True
        assert table.ratio_lower == table.ratio_upper == expected_ratios[d]


def test_worker_merge_is_deterministic():
    serial = classify_degree(3, CFG, workers=1)
    parallel = classify_degree(3, CFG, workers=2)
    assert serial == parallel


def test_every_realized_witness_validates():
    table = classify_degree(4, CFG)
    for couple, status in table.records:
        if status.kind == "realized":
            assert couple_of(status.witness) == couple
        else:
            assert status.witness is None


def test_star_counts_dispatch():
    # sign-pattern string, cpp string, and order string all accepted
    lo, hi = star_counts("++--+", CFG)
    assert (lo, hi) == star_counts(sp_to_cpp(SignPattern("++--+")), CFG)
    lo2, hi2 = star_counts("PNPN", CFG)
    assert lo2 <= hi2
    with pytest.raises(TypeError):
        star_counts(_couple("++--+", "PNPN"), CFG)


def test_kstar_two_runs_closed_under_five():
    # pattern with runs m, n has exactly 2*min(m, n) - 1 realizable orders
    cases = {(1, 2): 1, (2, 1): 1, (2, 2): 3, (1, 4): 1, (2, 3): 3, (3, 2): 3}
    for (m, n), want in cases.items():
        sp = "+" * m + "-" * n
        lo, hi = star_counts(sp, CFG)
        assert lo == hi == want, (sp, lo, hi)


def test_kstar_details_partition():
    det = star_details("++--+", CFG)
    kinds = {str(c.order): st.kind for c, st in det}
    assert sorted(kinds) == sorted(
        ("PNPN", "NPPN", "PPNN", "PNNP", "NPNP", "NNPP")
    )
    assert sum(1 for k in kinds.values() if k == "realized") == 4
    assert kinds["NPNP"] == kinds["NNPP"] == "impossible"


def test_lstar_small_order():
    lo, hi = star_counts("PNNN", CFG)
    assert lo == hi == 2


def test_realized_set_matches_table_per_couple():
    table = classify_degree(3, CFG)
    lookup = realizable_table(3)
    for couple, status in table.records:
        realizable = couple.order in lookup[couple.sign_pattern]
        assert (status.kind == "realized") == realizable


def test_survey_statuses_small_degrees():
    for d in (3, 4, 5):
        rep = realization_survey(d, CFG)
        assert rep["ok"] is True
        parts = rep["parts"]
        assert parts["only_constant_orders_universal"]["status"] == "verified"
        assert parts["no_pattern_has_kstar_two"]["status"] == "verified"
        if d >= 3:
            assert parts["kstar_three_exactly_the_two_run_orbit"]["status"] == "verified"
        if d % 2 == 0:
            assert parts["lstar_of_top_order_family"]["status"] == "verified"
        else:
            assert parts["lstar_of_top_order_family"]["status"] == "not-applicable"
