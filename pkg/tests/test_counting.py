"""Fast counting: recurrence and direct formula, against each other and the oracle."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from schreier import (
    Ratio,
    binomial,
    count_schreier_bruteforce,
    count_schreier_direct,
    count_schreier_recurrence,
    schreier_sequence,
)


def test_recurrence_known_values():
    assert count_schreier_recurrence(10, Ratio(1, 1)) == 55
    assert count_schreier_recurrence(5, Ratio(2, 1)) == 2
    # The q=2 recurrence gives 2*5 - 3 + 2 = 9 here, matching the oracle.
    assert count_schreier_recurrence(5, Ratio(1, 2)) == 9


def test_direct_known_values():
    assert count_schreier_direct(3, Ratio(1, 1)) == 2
    assert count_schreier_direct(4, Ratio(1, 2)) == 5
    assert count_schreier_direct(1, Ratio(3, 1)) == 0


def test_n_zero_counts_nothing():
    assert count_schreier_recurrence(0, Ratio(1, 1)) == 0
    assert count_schreier_direct(0, Ratio(2, 3)) == 0


def test_sequence_known_prefixes():
    assert schreier_sequence(Ratio(1, 1), 6).values == (0, 1, 1, 2, 3, 5, 8)
    assert schreier_sequence(Ratio(1, 2), 5).values == (0, 1, 2, 3, 5, 9)
    assert schreier_sequence(Ratio(2, 1), 4).values == (0, 0, 1, 1, 1)


def test_sequence_indexing_and_length():
    seq = schreier_sequence(Ratio(1, 1), 10)
    assert seq.n_max == 10
    assert len(seq) == 11
    assert seq[10] == 55
    assert list(seq)[:3] == [0, 1, 1]


def test_sequence_agrees_with_point_queries():
    for p, q in [(1, 1), (2, 3), (4, 1)]:
        ratio = Ratio(p, q)
        seq = schreier_sequence(ratio, 40)
        for n in range(41):
            assert seq[n] == count_schreier_recurrence(n, ratio)


@pytest.mark.parametrize("p,q", [(1, 1), (1, 2), (2, 1), (2, 2), (3, 2), (1, 4)])
def test_recurrence_matches_oracle_on_small_grid(p, q):
    ratio = Ratio(p, q)
    for n in range(1, 15):
        assert count_schreier_recurrence(n, ratio) == count_schreier_bruteforce(n, ratio)


def test_q_one_specialization():
    # For q = 1 the recurrence collapses to count(n-1) + count(n-p-1).
    for p in range(1, 6):
        seq = schreier_sequence(Ratio(p, 1), 60)
        for n in range(p + 1, 61):
            assert seq[n] == seq[n - 1] + seq[n - p - 1]


def test_negative_arguments_are_rejected():
    with pytest.raises(ValueError):
        count_schreier_recurrence(-1, Ratio(1, 1))
    with pytest.raises(ValueError):
        schreier_sequence(Ratio(1, 1), -3)


ratios = st.builds(
    Ratio, st.integers(min_value=1, max_value=5), st.integers(min_value=1, max_value=5)
)


@given(ratios, st.integers(min_value=0, max_value=120))
@settings(max_examples=60)
def test_recurrence_and_direct_agree(ratio, n):
    assert count_schreier_recurrence(n, ratio) == count_schreier_direct(n, ratio)


@given(ratios, st.integers(min_value=1, max_value=150))
@settings(max_examples=40)
def test_sequence_values_never_go_negative(ratio, n_max):
    # The alternating signs in the recurrence must never undershoot zero.
    assert all(v >= 0 for v in schreier_sequence(ratio, n_max))


@given(ratios, st.integers(min_value=2, max_value=4), st.integers(min_value=0, max_value=80))
@settings(max_examples=40)
def test_counts_ignore_the_ratio_representation(ratio, k, n):
    assert count_schreier_recurrence(n, ratio) == count_schreier_recurrence(
        n, ratio.scaled(k)
    )


def test_binomial_values_and_edges():
    assert binomial(5, 2) == 10
    assert binomial(7, 0) == 1
    assert binomial(4, 5) == 0
    assert binomial(4, -1) == 0
    with pytest.raises(ValueError):
        binomial(-1, 0)
