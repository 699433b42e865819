"""Turán edge counts, interval counts, and the identity tying them together."""

from itertools import combinations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from schreier import (
    IntervalCountParams,
    TuranSpec,
    balanced_part_sizes,
    count_interval_bruteforce,
    interval_count_closed,
    interval_count_sum,
    turan_edges_construction,
    turan_edges_formula,
    verify_turan_identity,
)


def test_edge_formula_known_values():
    assert turan_edges_formula(4, 3) == 5
    assert turan_edges_formula(5, 2) == 6
    assert turan_edges_formula(4, 4) == 6  # complete K_4


def test_edge_construction_known_values():
    assert turan_edges_construction(7, 3) == 16
    assert turan_edges_construction(5, 3) == 8
    assert turan_edges_construction(3, 1) == 0


def test_more_parts_than_vertices_gives_the_complete_graph():
    assert balanced_part_sizes(3, 5) == (1, 1, 1, 0, 0)
    assert turan_edges_construction(3, 5) == 3
    assert turan_edges_formula(3, 5) == 3  # delegates to the construction


def vertex_pair_count(n, p):
    """Literal oracle: place vertices into blocks, count cross pairs one by one."""
    block = []
    for index, size in enumerate(balanced_part_sizes(n, p)):
        block.extend([index] * size)
    return sum(1 for a, b in combinations(range(n), 2) if block[a] != block[b])


@pytest.mark.parametrize("p", [1, 2, 3, 5, 8])
def test_edge_counts_match_a_literal_graph(p):
    for n in range(1, 30):
        assert turan_edges_formula(n, p) == vertex_pair_count(n, p)


def test_part_sizes_are_balanced_and_sum_to_n():
    for n in range(1, 40):
        for p in range(1, 12):
            sizes = balanced_part_sizes(n, p)
            assert len(sizes) == p
            assert sum(sizes) == n
            assert max(sizes) - min(sizes) <= 1


def test_turan_spec_properties():
    spec = TuranSpec(7, 3)
    assert spec.part_sizes == (3, 2, 2)
    assert spec.residue == 1
    assert spec.edge_count == 16
    with pytest.raises(ValueError):
        TuranSpec(3, 5)  # nonempty parts require p <= n
    with pytest.raises(ValueError):
        TuranSpec(0, 1)


def test_interval_count_params():
    assert IntervalCountParams(3, 2).delta == 1
    assert IntervalCountParams(11, 2).delta == 4
    with pytest.raises(ValueError):
        IntervalCountParams(1, 0)


def test_interval_sum_known_values():
    assert interval_count_sum(3, 2) == 5
    assert interval_count_sum(1, 1) == 1
    assert interval_count_sum(3, 5) == 6


def test_interval_closed_known_values():
    assert interval_count_closed(3, 2) == 5
    assert interval_count_closed(4, 2) == 8
    assert interval_count_closed(2, 9) == 3


def test_interval_three_way_agreement_small_grid():
    for p in range(1, 7):
        for n in range(1, 40):
            summed = interval_count_sum(n, p)
            assert summed == interval_count_closed(n, p)
            assert summed == count_interval_bruteforce(n, p)


def test_identity_known_reports():
    report = verify_turan_identity(3, 2)
    assert report.passed
    assert (
        report.interval_closed
        == report.interval_sum
        == report.interval_enumeration
        == report.turan_formula
        == report.turan_construction
        == 5
    )
    assert verify_turan_identity(4, 4).turan_formula == 10
    assert verify_turan_identity(4, 2).interval_closed == 8


def test_identity_rejects_n_below_p():
    with pytest.raises(ValueError):
        verify_turan_identity(2, 3)  # the identity only holds for n >= p


def test_identity_enumeration_leg_is_optional():
    report = verify_turan_identity(30, 4, include_enumeration=False)
    assert report.interval_enumeration is None
    assert report.passed


@given(st.integers(min_value=1, max_value=60), st.integers(min_value=1, max_value=60))
def test_formula_and_construction_always_agree(n, p):
    assert turan_edges_formula(n, p) == turan_edges_construction(n, p)


@given(st.integers(min_value=1, max_value=80))
def test_two_part_column_is_quarter_squares(n):
    assert turan_edges_formula(n, 2) == n * n // 4


@given(st.integers(min_value=1, max_value=50))
def test_identity_along_the_diagonal(n):
    # At n = p both sides degenerate to C(n+1, 2).
    report = verify_turan_identity(n, n)
    assert report.passed
    assert report.turan_formula == (n + 1) * n // 2
