"""Impossibility filters: attribution, order, soundness, completeness."""

import pytest

from signmoduli import (
    FILTERS,
    FILTER_IDS,
    Couple,
    ModuliOrder,
    RealizationStatus,
    SignPattern,
    apply_filters,
    filter_is_cited,
    is_table_realizable,
    iter_compatible_couples,
    orbit_of,
    soundness_fuzz,
    sp_to_cpp,
)


def _couple(sp, order):
    return Couple(sp_to_cpp(SignPattern(sp)), ModuliOrder(order))


def test_battery_registry():
    assert FILTER_IDS == (
        "leading-sum", "even-degree", "canonical", "rigid",
        "superposition", "two-change", "reference-table",
    )
    assert [f.id for f in FILTERS] == list(FILTER_IDS)
    assert filter_is_cited("two-change")
    assert filter_is_cited("reference-table")
    assert not filter_is_cited("canonical")
    with pytest.raises(KeyError):
        filter_is_cited("nonesuch")


def test_status_constructors_validate():
    with pytest.raises(ValueError):
        RealizationStatus(kind="bogus", witness=None, filter=None)
    with pytest.raises(ValueError):
        RealizationStatus(kind="impossible", witness=None, filter=None)
    ok = RealizationStatus.impossible("canonical")
    assert ok.kind == "impossible" and ok.filter == "canonical"


def test_attribution_examples():
    # both leading-sum and canonical would fire on (cp, PN);
    # battery order makes leading-sum the verdict
    st = apply_filters(Couple("cp", "PN"))
    assert st.kind == "impossible" and st.filter == "leading-sum"

    st = apply_filters(_couple("++-++", "NNPP"))
    assert st.filter == "canonical"

    st = apply_filters(_couple("+---+", "NPPN"))
    assert st.filter == "even-degree"

    st = apply_filters(_couple("+++-", "NPN"))
    assert st.filter == "canonical"


def test_rigid_filter():
    # NPNP forces +--++; the couple with ++--+ survives every earlier
    # filter and dies on the rigid one
    st = apply_filters(_couple("++--+", "NPNP"))
    assert st.filter == "rigid"
    assert apply_filters(_couple("+--++", "NPNP")).kind == "unresolved"
    assert apply_filters(_couple("++--+", "PNPN")).kind == "unresolved"


def test_superposition_filter_fires():
    hits = [
        (str(c.sign_pattern), str(c.order))
        for c in iter_compatible_couples(5)
        if apply_filters(c).filter == "superposition"
    ]
    assert hits, "no superposition rejection at d=5"
    for sp, order in hits:
        assert is_table_realizable(_couple(sp, order)) is False


def test_two_change_filter_gate():
    # d = 10 = 8k+2 with k=1, order NNNNPPNNNN, short outer run dies
    order = ModuliOrder("N" * 4 + "PP" + "N" * 4)
    st = apply_filters(_couple("++" + "-" * 8 + "+", order))
    # run lengths 2, 8, 1: the trailing run is <= k
    assert st.filter == "two-change"
    long_runs = "++" + "-" * 7 + "++"
    assert apply_filters(_couple(long_runs, order)).kind == "unresolved"


def test_incompatible_couple_rejected():
    with pytest.raises(ValueError):
        apply_filters(Couple("cp", "PP"))


def test_attribution_census_frozen():
    census = {}
    for d in range(1, 6):
        for couple in iter_compatible_couples(d):
            st = apply_filters(couple)
            if st.kind == "impossible":
                census[st.filter] = census.get(st.filter, 0) + 1
    assert census == {
        "leading-sum": 36,
        "even-degree": 3,
        "canonical": 121,
        "rigid": 7,
        "superposition": 19,
        "reference-table": 22,
    }
    assert sum(census.values()) == 208


def test_filters_complete_and_sound_up_to_table_bound():
    for d in range(1, 6):
        for couple in iter_compatible_couples(d):
            verdict = apply_filters(couple)
            realizable = is_table_realizable(couple)
            if realizable:
                assert verdict.kind == "unresolved", (couple, verdict.filter)
            else:
                assert verdict.kind == "impossible", couple


def test_filter_verdicts_constant_on_orbits():
    for d in range(1, 6):
        for couple in iter_compatible_couples(d):
            kinds = {apply_filters(m).kind for m in orbit_of(couple)}
            assert len(kinds) == 1, couple


def test_soundness_fuzz_small():
    assert soundness_fuzz(3000, seed=11, max_degree=10) == []
