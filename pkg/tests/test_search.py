"""The exhaustive engine against the naive oracles and the closed form."""

import pytest

from cross_sperner import (
    Family,
    FamilyPair,
    GroundSet,
    Pruning,
    canonicalize_pair,
    cross_validate,
    intersection_family,
    is_cross_sperner,
    m_formula,
    maximal_partner,
    search_m,
    type_xy,
)

import naive


def test_pruning_from_string():
    assert Pruning.from_string("none") is Pruning.NONE
    assert Pruning.from_string("common-element") is Pruning.COMMON_ELEMENT
    assert Pruning.from_string("full") is Pruning.FULL
    with pytest.raises(ValueError):
        Pruning.from_string("fast")


def test_unpruned_matches_double_enumeration_oracle():
    # independent frozenset oracle, recomputed here every run
    for n in (1, 2, 3):
        assert search_m(n, Pruning.NONE).m_value == naive.brute_max(n)


def test_unpruned_n4_matches_partner_reduction_oracle():
    assert search_m(4, Pruning.NONE).m_value == naive.partner_reduction_max(4)


def test_known_values_all_levels():
    for n, expect in ((2, 1), (3, 3), (4, 9)):
        for level in Pruning:
            report = search_m(n, level)
            assert report.m_value == expect
            assert report.formula_value == m_formula(n)
            assert report.agrees
    assert search_m(5, Pruning.COMMON_ELEMENT).m_value == 21
    assert search_m(5, Pruning.FULL).m_value == 21
    assert search_m(6, Pruning.FULL).m_value == 49


def test_candidate_space_closed_forms():
    assert search_m(2, Pruning.NONE).candidates_examined == 1 << 4
    assert search_m(3, Pruning.NONE).candidates_examined == 1 << 8
    assert search_m(4, Pruning.NONE).candidates_examined == 1 << 16
    assert search_m(4, Pruning.COMMON_ELEMENT).candidates_examined == 1 << 7
    assert search_m(5, Pruning.COMMON_ELEMENT).candidates_examined == 1 << 15
    assert search_m(5, Pruning.FULL).candidates_examined == 1 << 14
    assert search_m(6, Pruning.FULL).candidates_examined == 1 << 30


def test_assumption_lists():
    assert search_m(3, Pruning.NONE).assumptions == ()
    assert search_m(3, Pruning.COMMON_ELEMENT).assumptions == (
        "common-element",
    )
    assert search_m(3, Pruning.FULL).assumptions == (
        "common-element",
        "co-singleton-member",
    )


def test_witnesses_are_extremal_and_canonical():
    cases = [
        (2, Pruning.NONE),
        (3, Pruning.NONE),
        (4, Pruning.NONE),
        (5, Pruning.COMMON_ELEMENT),
    ]
    for n, level in cases:
        report = search_m(n, level, enumerate_witnesses=True)
        assert report.witnesses, f"no witnesses at n={n}"
        for w in report.witnesses:
            pair = w.pair
            assert is_cross_sperner(pair)
            assert w.i_size == report.m_value
            assert len(intersection_family(pair)) == report.m_value
            # mutual maximality in both directions
            assert maximal_partner(pair.g) == pair.f
            assert maximal_partner(pair.f) == pair.g
            # stored in canonical form, deduplicated
            assert canonicalize_pair(pair) == pair
            # classified split regenerates the pair exactly
            assert w.split is not None
            assert type_xy(w.split) == pair


def test_witness_counts():
    # ordered mutually-maximal extremal pairs, canonical classes
    expect = {
        (2, Pruning.NONE): (2, 1),
        (3, Pruning.NONE): (6, 2),
        (4, Pruning.NONE): (6, 1),
        (5, Pruning.COMMON_ELEMENT): (10, 2),
    }
    for (n, level), (ordered, classes) in expect.items():
        report = search_m(n, level, enumerate_witnesses=True)
        assert report.mutually_maximal_found == ordered
        assert len(report.witnesses) == classes


def test_canonical_witness_forms():
    g2 = GroundSet(2)
    r2 = search_m(2, Pruning.NONE, enumerate_witnesses=True)
    assert [w.pair for w in r2.witnesses] == [
        FamilyPair(Family.of(g2, [1]), Family.of(g2, [2]))
    ]

    g3 = GroundSet(3)
    r3 = search_m(3, Pruning.NONE, enumerate_witnesses=True)
    assert [w.pair for w in r3.witnesses] == [
        FamilyPair(
            Family.of(g3, [1], [1, 2], [1, 3]), Family.of(g3, [2, 3])
        ),
        FamilyPair(
            Family.of(g3, [1, 2]), Family.of(g3, [3], [1, 3], [2, 3])
        ),
    ]

    g4 = GroundSet(4)
    r4 = search_m(4, Pruning.NONE, enumerate_witnesses=True)
    assert [w.pair for w in r4.witnesses] == [
        FamilyPair(
            Family.of(g4, [1, 2], [1, 2, 3], [1, 2, 4]),
            Family.of(g4, [3, 4], [1, 3, 4], [2, 3, 4]),
        )
    ]


def test_witness_splits_are_balanced():
    for n, level in ((4, Pruning.NONE), (5, Pruning.COMMON_ELEMENT)):
        report = search_m(n, level, enumerate_witnesses=True)
        for w in report.witnesses:
            sizes = {w.split.x.size, w.split.y.size}
            assert sizes == {n // 2, (n + 1) // 2}


def test_worker_count_does_not_change_results():
    for n, level in ((3, Pruning.NONE), (5, Pruning.COMMON_ELEMENT)):
        base = search_m(n, level, enumerate_witnesses=True, workers=1)
        multi = search_m(n, level, enumerate_witnesses=True, workers=4)
        assert multi.m_value == base.m_value
        assert multi.candidates_examined == base.candidates_examined
        assert multi.mutually_maximal_found == base.mutually_maximal_found
        assert [w.pair for w in multi.witnesses] == [
            w.pair for w in base.witnesses
        ]


def test_input_validation():
    with pytest.raises(ValueError):
        search_m(0)
    with pytest.raises(ValueError):
        search_m(-3)
    with pytest.raises(ValueError):
        search_m(True)
    with pytest.raises(ValueError):
        search_m(3, workers=0)
    # a level never silently downgrades an out-of-range request
    with pytest.raises(ValueError):
        search_m(5, Pruning.NONE)
    with pytest.raises(ValueError):
        search_m(6, Pruning.COMMON_ELEMENT)
    with pytest.raises(ValueError):
        search_m(8, Pruning.FULL)


def test_cross_validate():
    for n in (2, 3, 4):
        assert cross_validate(n) is True
    with pytest.raises(ValueError):
        cross_validate(1)
    with pytest.raises(ValueError):
        cross_validate(5)
