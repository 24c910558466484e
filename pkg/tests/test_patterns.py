"""Word-level invariants: encodings, involutions, canonical and rigid forms."""

import pytest
from hypothesis import given, strategies as st

from signmoduli import (
    ChangePreservationPattern,
    Couple,
    ModuliOrder,
    SignPattern,
    apply_involution,
    canonical_order_of,
    chi,
    cpp_to_sp,
    forced_pattern_of_rigid,
    is_canonical_pattern,
    is_rigid_order,
    iter_compatible_couples,
    iter_cpps,
    iter_orders,
    iter_sign_patterns,
    mirror_sign_pattern,
    orbit_of,
    sp_to_cpp,
    superposition_decompose,
)


@st.composite
def sign_patterns(draw, max_degree=9):
    d = draw(st.integers(1, max_degree))
    tail = draw(st.lists(st.sampled_from("+-"), min_size=d, max_size=d))
    return SignPattern("+" + "".join(tail))


@st.composite
def cpps(draw, max_degree=9):
    d = draw(st.integers(1, max_degree))
    return ChangePreservationPattern(
        "".join(draw(st.lists(st.sampled_from("cp"), min_size=d, max_size=d)))
    )


@st.composite
def orders(draw, max_degree=9):
    d = draw(st.integers(1, max_degree))
    return ModuliOrder(
        "".join(draw(st.lists(st.sampled_from("PN"), min_size=d, max_size=d)))
    )


@st.composite
def compatible_couples(draw, max_degree=8):
    cpp = draw(cpps(max_degree))
    letters = ["P"] * cpp.change_count + ["N"] * (
        cpp.degree - cpp.change_count
    )
    word = "".join(draw(st.permutations(letters)))
    return Couple(cpp, ModuliOrder(word))


def test_sign_pattern_validation():
    with pytest.raises(ValueError):
        SignPattern("-++")
    with pytest.raises(ValueError):
        SignPattern("+")
    with pytest.raises(ValueError):
        SignPattern("+x-")
    with pytest.raises(ValueError):
        ChangePreservationPattern("cq")
    with pytest.raises(ValueError):
        ModuliOrder("PX")


@given(sign_patterns())
def test_sp_cpp_roundtrip(sp):
    assert cpp_to_sp(sp_to_cpp(sp)) == sp


@given(cpps())
def test_cpp_sp_roundtrip(cpp):
    assert sp_to_cpp(cpp_to_sp(cpp)) == cpp


@given(cpps())
def test_change_count_is_c_count(cpp):
    assert cpp.change_count == cpp.count("c")
    sp = cpp_to_sp(cpp)
    changes = sum(sp[i] != sp[i + 1] for i in range(len(sp) - 1))
    assert changes == cpp.change_count


@given(cpps())
def test_canonical_order_is_compatible(cpp):
    order = canonical_order_of(cpp)
    assert Couple(cpp, order).is_compatible


@given(sign_patterns())
def test_canonical_characterizations_agree(sp):
    windows = ("++--", "--++", "+--+", "-++-")
    by_window = not any(
        sp[i:i + 4] in windows for i in range(len(sp) - 3)
    )
    cpp = sp_to_cpp(sp)
    by_factor = "cpc" not in cpp and "pcp" not in cpp
    assert is_canonical_pattern(sp) == by_window == by_factor


@given(compatible_couples())
def test_involutions_are_involutions(couple):
    for kind in ("mirror", "reverse"):
        twice = apply_involution(apply_involution(couple, kind), kind)
        assert twice == couple


@given(compatible_couples())
def test_involutions_commute_and_preserve_compatibility(couple):
    m = apply_involution(couple, "mirror")
    r = apply_involution(couple, "reverse")
    assert apply_involution(m, "reverse") == apply_involution(r, "mirror")
    assert m.is_compatible and r.is_compatible


@given(compatible_couples())
def test_mirror_couple_matches_sign_pattern_view(couple):
    mirrored = apply_involution(couple, "mirror")
    assert mirrored.sign_pattern == mirror_sign_pattern(couple.sign_pattern)


@given(compatible_couples())
def test_orbit_size(couple):
    orbit = orbit_of(couple)
    assert len(orbit) in (2, 4)
    assert couple in orbit
    # mirror flips every letter, so it never fixes a couple
    assert apply_involution(couple, "mirror") != couple


def test_rigid_orders_count():
    assert sum(is_rigid_order(o) for o in iter_orders(1)) == 2
    for d in range(2, 7):
        rigid = [o for o in iter_orders(d) if is_rigid_order(o)]
        assert len(rigid) == 4
        assert ModuliOrder("P" * d) in rigid
        assert ModuliOrder("N" * d) in rigid


def test_forced_pattern_small_cases():
    assert forced_pattern_of_rigid(ModuliOrder("NNNN")) == "+++++"
    assert forced_pattern_of_rigid(ModuliOrder("PPPP")) == "+-+-+"
    assert forced_pattern_of_rigid(ModuliOrder("PNPN")) == "++--+"
    assert forced_pattern_of_rigid(ModuliOrder("NPNP")) == "+--++"
    with pytest.raises(ValueError):
        forced_pattern_of_rigid(ModuliOrder("PPN"))


def test_forced_pattern_inverts_canonical_order():
    for d in range(1, 8):
        for order in iter_orders(d):
            if not is_rigid_order(order):
                continue
            sp = forced_pattern_of_rigid(order)
            assert canonical_order_of(sp_to_cpp(sp)) == order


@given(orders(max_degree=8))
def test_superposition_parts_are_alternating_and_partition(order):
    for deco in superposition_decompose(order):
        assert deco.first[0] == 0
        positions = sorted(deco.first + deco.second)
        assert positions == list(range(len(order)))
        for part in (deco.first, deco.second):
            word = "".join(order[i] for i in part)
            assert all(word[i] != word[i + 1] for i in range(len(word) - 1))


def test_alternating_orders_decompose():
    # an alternating order splits at every cut point, plus interleavings
    assert superposition_decompose(ModuliOrder("PN"))
    assert superposition_decompose(ModuliOrder("PPNN")) != []
    assert superposition_decompose(ModuliOrder("P")) == []


def test_enumerators_are_complete_and_sorted():
    for d in range(1, 7):
        sps = list(iter_sign_patterns(d))
        assert len(sps) == 2 ** d
        assert len(set(sps)) == len(sps)
        assert len(list(iter_cpps(d))) == 2 ** d
        assert len(list(iter_orders(d))) == 2 ** d
        couples = list(iter_compatible_couples(d))
        assert len(couples) == chi(d)
        assert couples == sorted(
            couples, key=lambda c: (c.pattern.change_count, c.pattern, c.order)
        )
        assert all(c.is_compatible for c in couples)


def test_iter_orders_positive_count_filter():
    assert list(iter_orders(3, positive_count=0)) == [ModuliOrder("NNN")]
    two = list(iter_orders(4, positive_count=2))
    assert len(two) == 6
    assert all(o.positive_count == 2 for o in two)


def test_compatibility_examples():
    assert Couple("cp", "PN").is_compatible
    assert not Couple("cp", "PP").is_compatible
    assert Couple(sp_to_cpp(SignPattern("++--+")), ModuliOrder("PNPN")).is_compatible
