import itertools
import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bollobas import search
from bollobas.constructions import classical_pairs, permutation_kk, relabel, sharpness_k2
from bollobas.core import (
    FORBIDDEN_NONEMPTY,
    MISSING_NONEMPTY,
    FamilySystem,
    Surjection,
    derived_sets,
    elements_of,
    is_bollobas_tuple,
    mask_of,
    multinomial,
    popcount,
    reduce_via_surjection,
    scan_index_tuples,
    theorem_sum,
)
from bollobas.errors import GuardError, NotValidatedError, ParameterError

from oracles import brute_derived, brute_sum, brute_verdict, multinomial_by_factorials, surjections

PAIR = FamilySystem.from_lists([[[0], [1]], [[1], [0]]], n=2, t=2)


@st.composite
def systems(draw, max_k=3, max_m=4, max_n=5):
    k = draw(st.integers(2, max_k))
    m = draw(st.integers(1, max_m))
    n = draw(st.integers(1, max_n))
    sets = st.lists(st.integers(0, n - 1), max_size=n)
    fams = draw(st.lists(st.lists(sets, min_size=m, max_size=m), min_size=k, max_size=k))
    return FamilySystem.from_lists(fams, n)


# -- bit helpers and types ---------------------------------------------------


@given(st.sets(st.integers(0, 200)))
def test_mask_round_trip(xs):
    mask = mask_of(xs)
    assert elements_of(mask) == tuple(sorted(xs))
    assert popcount(mask) == len(xs)


def test_family_system_rejects_bad_shapes():
    with pytest.raises(ParameterError):
        FamilySystem.from_lists([[[0]]], n=1)  # k = 1
    with pytest.raises(ParameterError):
        FamilySystem.from_lists([[[0], [3]], [[1], [0]]], n=3)
    with pytest.raises(ParameterError):
        FamilySystem(2, 2, 2, ((1, 2), (2,)))
    with pytest.raises(ParameterError):
        FamilySystem(2, 2, 1, ((1,), (2,)), t=3)


def test_select_columns_and_ground_union():
    sys = classical_pairs(1, 2)
    sub = sys.select_columns([2, 0])
    assert sub.as_lists() == [[[2], [0]], [[0, 1], [1, 2]]]
    assert elements_of(sys.ground_union()) == (0, 1, 2)


def test_surjection_basics():
    phi = Surjection((1, 2, 2))
    assert (phi.k, phi.t) == (3, 2)
    assert phi.preimage(2) == (1, 2)
    assert Surjection.singleton(3, 2).image == (2, 1, 2)
    assert Surjection.identity(3).image == (1, 2, 3)
    with pytest.raises(ParameterError):
        Surjection((1, 3))  # misses 2
    assert sorted(p.image for p in Surjection.all(3, 2)) == sorted(surjections(3, 2))
    assert len(list(Surjection.all(4, 3))) == 36


# -- multinomial -------------------------------------------------------------


@given(st.lists(st.integers(0, 12), min_size=1, max_size=5))
def test_multinomial_matches_factorials(parts):
    value = multinomial(sum(parts), parts)
    assert value == multinomial_by_factorials(parts)
    assert value * math.prod(math.factorial(p) for p in parts) == math.factorial(sum(parts))


def test_multinomial_examples():
    assert multinomial(5, [2, 3]) == 10
    assert multinomial(3, [0, 3]) == 1
    with pytest.raises(ParameterError):
        multinomial(4, [1, 2])


# -- the intersection condition ----------------------------------------------


def test_partition_pair_is_valid():
    assert is_bollobas_tuple(PAIR, 2)


def test_lexicographically_first_violation():
    bad = FamilySystem.from_lists([[[0], [1]], [[0], [0]]], n=2)
    v = is_bollobas_tuple(bad, 2)
    assert not v
    assert (v.indices, v.kind) == ((0, 0), FORBIDDEN_NONEMPTY)
    missing = FamilySystem.from_lists([[[0], [1]], [[1], [2]]], n=3)
    v = is_bollobas_tuple(missing, 2)
    assert (v.indices, v.kind) == ((0, 1), MISSING_NONEMPTY)


@settings(max_examples=300, deadline=None)
@given(systems(), st.data())
def test_scan_agrees_with_brute_force(sys, data):
    t = data.draw(st.integers(2, sys.k))
    if sys.m < t:
        return
    v = is_bollobas_tuple(sys, t)
    expected = brute_verdict(sys.as_lists(), t)
    if expected is None:
        assert v.valid
    else:
        assert (v.indices, v.kind) == expected


@settings(max_examples=100, deadline=None)
@given(systems(max_m=5, max_n=70))
def test_scan_counts_over_wide_ground_sets(sys):
    # more than one 64-bit word per set
    res = scan_index_tuples(sys.sets, sys.n, 2, count=True)
    sets = sys.as_lists()
    forbidden = missing = 0
    for idx in itertools.product(range(sys.m), repeat=sys.k):
        meet = set.intersection(*(set(sets[j][i]) for j, i in enumerate(idx)))
        need = len(set(idx)) >= 2
        forbidden += bool(meet) and not need
        missing += need and not meet
    assert (res.forbidden, res.missing) == (forbidden, missing)


def test_m_below_t_is_rejected():
    one = FamilySystem.from_lists([[[0]], [[1]]], n=2)
    with pytest.raises(ParameterError):
        is_bollobas_tuple(one, 2)
    with pytest.raises(ParameterError):
        is_bollobas_tuple(PAIR, 3)


def test_guard_refuses_huge_enumerations():
    wide = FamilySystem(1, 10, 8, tuple((1,) * 8 for _ in range(10)))
    with pytest.raises(GuardError):
        is_bollobas_tuple(wide, 2)


# -- derived sets and the sum --------------------------------------------------


def test_derived_sets_examples():
    assert derived_sets(PAIR, 2, Surjection.identity(2), (0,)) == [frozenset({0}), frozenset({1})]
    sys = sharpness_k2(3, 12)
    for i in range(12):
        a1, a2 = derived_sets(sys, 2, Surjection((1, 2, 2)), (i,))
        assert a1 == frozenset(range(12)) - {i}
        assert a2 == {i}
    full = FamilySystem.from_lists([[[0, 1], [0]], [[1], [0, 1]]], n=2)
    assert derived_sets(full, 2, Surjection.identity(2), (0,))[1] == frozenset()


def test_theorem_sum_examples():
    assert theorem_sum(PAIR, 2) == 1
    assert theorem_sum(sharpness_k2(3, 12), 2, Surjection((1, 2, 2))) == 1
    assert theorem_sum(sharpness_k2(3, 12), 2) == 1


def test_sum_refuses_invalid_systems():
    bad = FamilySystem.from_lists([[[0], [0]], [[1], [0]]], n=2)
    with pytest.raises(NotValidatedError):
        theorem_sum(bad, 2)


def test_deleting_a_column_lowers_the_sum():
    sys = classical_pairs(2, 2)
    full = theorem_sum(sys, 2)
    for drop in range(sys.m):
        keep = [i for i in range(sys.m) if i != drop]
        assert theorem_sum(sys.select_columns(keep), 2) < full


@pytest.mark.parametrize("a,b", [(1, 1), (1, 3), (2, 2), (2, 3)])
def test_two_family_sum_is_the_pair_sum(a, b):
    # t = k = 2: sum over i of 1 / C(|A_i u B_i|, |A_i|)
    sys = classical_pairs(a, b)
    fams = sys.as_lists()
    pair_sum = sum(
        Fraction(1, math.comb(len(set(x) | set(y)), len(x))) for x, y in zip(*fams)
    )
    assert theorem_sum(sys, 2, Surjection.identity(2)) == pair_sum == 1


@settings(max_examples=200, deadline=None)
@given(systems(max_k=3, max_m=4, max_n=4), st.data())
def test_sum_and_derived_sets_match_oracle(sys, data):
    t = data.draw(st.integers(2, sys.k))
    if sys.m < t:
        return
    phi = Surjection(data.draw(st.sampled_from(surjections(sys.k, t))))
    got = theorem_sum(sys, t, phi, validate=False)
    assert got == brute_sum(sys.as_lists(), t, phi.image, sys.n)
    sigma = tuple(data.draw(st.permutations(range(sys.m)))[: t - 1])
    derived = derived_sets(sys, t, phi, sigma)
    assert derived == brute_derived(sys.as_lists(), t, phi.image, sigma, sys.n)
    # pairwise disjoint, union inside the sets it was cut from
    seen = set()
    for part in derived:
        assert not seen & part
        seen |= part


@pytest.mark.parametrize("k,n", [(3, 12), (4, 16)])
def test_reduction_keeps_validity(k, n):
    sys = sharpness_k2(k, n)
    for phi in Surjection.all(k, 2):
        reduced = reduce_via_surjection(sys, 2, phi)
        assert reduced.k == 2 and reduced.m == sys.m
        assert is_bollobas_tuple(reduced, 2)


@pytest.mark.parametrize("seed", range(5))
def test_reduction_of_searched_tuples(seed):
    rng = np.random.default_rng(seed)
    sys = search.random_tuple(3, 2, 3, 6, rng)
    assert sys is not None
    for phi in Surjection.all(3, 2):
        assert is_bollobas_tuple(reduce_via_surjection(sys, 2, phi), 2)
    # the identity reduction of a (k,k)-tuple is itself
    perm = relabel(permutation_kk(3), rng)
    assert reduce_via_surjection(perm, 3, Surjection.identity(3)).sets == perm.sets
