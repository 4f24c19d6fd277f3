import math

import pytest

from bollobas.errors import GuardError
from bollobas.partitions import (
    canonical,
    check_lemma_3_1,
    enumerate_partitions,
    f_pi,
    min_f_formula,
    minimizers,
    one_step_refinements,
    restricted_growth_strings,
    stirling2,
)

from oracles import bell_triangle, f_direct, set_partitions, stirling_recurrence


@pytest.mark.parametrize("k", range(1, 13))
def test_partition_counts_are_bell_numbers(k):
    assert len(enumerate_partitions(k)) == bell_triangle(12)[k]


@pytest.mark.parametrize("k", range(1, 8))
def test_enumeration_matches_insertion_oracle(k):
    mine = {tuple(pi) for pi in enumerate_partitions(k)}
    theirs = {canonical([tuple(sorted(p)) for p in q]) for q in set_partitions(range(1, k + 1))}
    assert mine == theirs


def test_rgs_order_and_canonical_form():
    assert list(restricted_growth_strings(3)) == [
        (0, 0, 0), (0, 0, 1), (0, 1, 0), (0, 1, 1), (0, 1, 2)
    ]
    assert enumerate_partitions(3, 2) == [((1, 2), (3,)), ((1, 3), (2,)), ((1,), (2, 3))]
    assert canonical([(4, 2), (1, 3)]) == ((1, 3), (2, 4))


def test_enumeration_guard():
    with pytest.raises(GuardError):
        enumerate_partitions(13)


@pytest.mark.parametrize("k", range(0, 11))
def test_stirling_matches_recurrence(k):
    for s in range(0, k + 1):
        assert stirling2(k, s) == stirling_recurrence(k, s)
    assert stirling2(4, 2) == 7


def test_f_pi_examples():
    assert f_pi(((1,), (2,), (3,), (4,)), 2) == 6
    assert f_pi(((1, 2), (3,), (4,)), 2) == 5
    assert f_pi(((1, 2, 3),), 2) == 0
    assert f_pi(((1, 2), (3,)), 3) == 0


@pytest.mark.parametrize("k", range(2, 8))
def test_f_pi_matches_direct_expansion(k):
    for pi in enumerate_partitions(k):
        sizes = [len(p) for p in pi]
        for t in range(2, k + 1):
            assert f_pi(pi, t) == f_direct(sizes, t)


def test_min_formula_examples():
    assert min_f_formula(4, 3, 2) == 5 == minimizers(4, 3, 2)[0]
    assert min_f_formula(5, 3, 3) == 3 == minimizers(5, 3, 3)[0]
    for k in range(2, 9):
        for t in range(2, k + 1):
            assert min_f_formula(k, k, t) == math.comb(k, t)


def test_minimizer_has_one_big_part():
    best, args = minimizers(6, 3, 2)
    assert best == min_f_formula(6, 3, 2)
    assert any(sorted(len(p) for p in pi) == [1, 1, 4] for pi in args)


def test_refinements_split_one_part():
    pi = ((1, 2, 3), (4,))
    out = list(one_step_refinements(pi))
    assert len(out) == 3  # S(3,2)
    for finer in out:
        assert len(finer) == 3
        assert (4,) in finer


@pytest.mark.parametrize("k,t", [(4, 2), (5, 3), (6, 2), (7, 4), (8, 3)])
def test_lemma_holds(k, t):
    rep = check_lemma_3_1(k, t)
    assert rep.ok
    assert rep.refinement_pairs > 0


def test_lemma_harness_detects_a_broken_statistic():
    rep = check_lemma_3_1(5, 2, f=lambda pi, t: -f_pi(pi, t))
    assert rep.refinement_violations and rep.merge_violations
