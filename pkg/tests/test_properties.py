"""Property-based invariants over randomly drawn families."""

import hypothesis.strategies as st
from hypothesis import given

from cross_sperner import (
    Family,
    FamilyPair,
    GroundSet,
    InequalityParams,
    SubsetMask,
    canonicalize_pair,
    format_family_file,
    intersection_family,
    is_cross_sperner,
    maximal_partner,
    padding_inequality_sides,
    parse_family_file,
    permute_pair,
    proper_submasks,
    subset_leq,
)

import naive


@st.composite
def pairs(draw, min_n=1, max_n=6, max_members=6):
    n = draw(st.integers(min_n, max_n))
    ground = GroundSet(n)
    size = 1 << n
    f_bits = draw(st.lists(st.integers(0, size - 1), max_size=max_members))
    g_bits = draw(st.lists(st.integers(0, size - 1), max_size=max_members))
    return FamilyPair(
        Family.from_bits(ground, f_bits), Family.from_bits(ground, g_bits)
    )


@st.composite
def pairs_with_perm(draw, max_n=5):
    pair = draw(pairs(max_n=max_n))
    perm = draw(st.permutations(tuple(range(pair.ground.n))))
    return pair, perm


def to_sets(fam):
    return [frozenset(m.elements()) for m in fam.members]


@given(pairs())
def test_cross_sperner_is_role_symmetric(pair):
    swapped = FamilyPair(pair.g, pair.f)
    assert is_cross_sperner(pair) == is_cross_sperner(swapped)
    a = {m.bits for m in intersection_family(pair)}
    b = {m.bits for m in intersection_family(swapped)}
    assert a == b


@given(pairs())
def test_matches_naive_reference(pair):
    f_sets, g_sets = to_sets(pair.f), to_sets(pair.g)
    assert is_cross_sperner(pair) == naive.is_cross_sperner_sets(f_sets, g_sets)
    got = {frozenset(m.elements()) for m in intersection_family(pair)}
    assert got == naive.intersections(f_sets, g_sets)


@given(pairs())
def test_intersection_size_bounded(pair):
    assert len(intersection_family(pair)) <= len(pair.f) * len(pair.g)


@given(pairs())
def test_partner_characterizes_compatibility(pair):
    partner = set(maximal_partner(pair.g).mask_tuple())
    assert is_cross_sperner(pair) == set(pair.f.mask_tuple()).issubset(partner)


@given(pairs_with_perm())
def test_relabeling_preserves_everything(pair_perm):
    pair, perm = pair_perm
    image = permute_pair(pair, perm)
    assert is_cross_sperner(image) == is_cross_sperner(pair)
    assert len(intersection_family(image)) == len(intersection_family(pair))
    assert canonicalize_pair(image) == canonicalize_pair(pair)


@given(pairs(max_n=5))
def test_canonicalize_idempotent(pair):
    canon = canonicalize_pair(pair)
    assert canonicalize_pair(canon) == canon
    assert len(canon.f) == len(pair.f) and len(canon.g) == len(pair.g)


@given(pairs(max_n=8))
def test_pair_file_round_trip(pair):
    assert parse_family_file(format_family_file(pair)) == pair


@given(st.integers(3, 24), st.data())
def test_padding_gap_identity(n, data):
    x = data.draw(st.integers(1, n - 2))
    y = data.draw(st.integers(1, n - 1 - x))
    p = InequalityParams(n=n, m=x + y, x=x, y=y)
    lhs, rhs, bracket = padding_inequality_sides(p)
    assert rhs - lhs == ((1 << x) - 1) * ((1 << y) - 1)
    assert lhs < rhs
    assert bracket > 0


@given(st.integers(0, (1 << 12) - 1))
def test_proper_submasks_complete_and_strict(mask):
    subs = set(proper_submasks(mask))
    assert len(subs) == (1 << mask.bit_count()) - 1
    for s in subs:
        assert s & mask == s and s != mask


@given(st.integers(1, 8), st.data())
def test_subset_leq_is_a_partial_order(n, data):
    ground = GroundSet(n)
    size = (1 << n) - 1
    a = SubsetMask(data.draw(st.integers(0, size)), ground)
    b = SubsetMask(data.draw(st.integers(0, size)), ground)
    c = SubsetMask(data.draw(st.integers(0, size)), ground)
    assert subset_leq(a, a)
    if subset_leq(a, b) and subset_leq(b, a):
        assert a.bits == b.bits
    if subset_leq(a, b) and subset_leq(b, c):
        assert subset_leq(a, c)
