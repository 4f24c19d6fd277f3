import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from bollobas.bounds import (
    ALL_N,
    LARGE_N,
    EntropyDomainError,
    beta_bounds,
    beta_rates,
    binary_entropy,
    clique_cover_formulas,
    f_bounds,
    orlin_min_m,
    threshold_min_m,
)
from bollobas.covering import exact_beta, exact_min_cover
from bollobas.errors import ParameterError


def threshold_oracle(n, k):
    # smallest m >= 1 with C(m, ceil(m/k)) >= n, by scanning m directly
    return next(m for m in range(1, 200) if math.comb(m, math.ceil(m / k)) >= n)


def test_entropy_values():
    assert binary_entropy(0.5) == 1
    assert binary_entropy(0.25) == pytest.approx(0.8112781244591328, abs=1e-12)
    assert binary_entropy(1 / 3) == pytest.approx(0.9182958340544896, abs=1e-12)


def test_entropy_domain():
    for q in (0, 1):
        with pytest.raises(EntropyDomainError) as info:
            binary_entropy(q)
        assert info.value.limit == 0.0
    with pytest.raises(ParameterError):
        binary_entropy(1.5)


@pytest.mark.parametrize("k", range(3, 31))
def test_entropy_chain(k):
    h = binary_entropy(1 / k)
    assert 1 / k <= h + 1e-12
    assert h <= math.log2(k * math.e) / k + 1e-12


def test_threshold_examples():
    assert threshold_min_m(3, 2) == 3
    assert threshold_min_m(7, 3) == 5
    for k in (2, 3, 7):
        assert threshold_min_m(1, k) == 1


@given(st.integers(1, 5000), st.integers(2, 8))
def test_threshold_oracle_and_monotone(n, k):
    v = threshold_min_m(n, k)
    assert v == threshold_oracle(n, k)
    assert threshold_min_m(n + 1, k) >= v
    # larger k lowers the binomial, so the threshold can only grow
    assert threshold_min_m(n, k + 1) >= v


def test_orlin_values():
    assert orlin_min_m(2) == 1  # 2 C(0, 0) = 2 already at m = 1
    assert orlin_min_m(3) == 3
    assert orlin_min_m(4) == 3
    vals = [orlin_min_m(n) for n in range(1, 10**4 + 1)]
    assert all(a <= b for a, b in zip(vals, vals[1:]))


def test_orlin_next_to_biclique_threshold():
    for n in range(1, 20001, 7):
        assert orlin_min_m(n) <= threshold_min_m(n, 2) + 1


def test_beta_rates():
    lo, hi = beta_rates(3, 2)
    assert lo == pytest.approx(1 / 3) and hi == pytest.approx(0.9182958340544896, abs=1e-12)
    lo, hi = beta_rates(4, 3)
    assert lo == pytest.approx(math.log2(math.e) / 216, abs=1e-15)
    assert hi == pytest.approx(1 / 3, abs=1e-15)


@pytest.mark.parametrize("g", [2, 3, 4])
def test_beta_bounds_against_exact(g):
    exact = exact_beta(2, 2, g)
    assert exact == math.comb(g, g // 2)
    rep = beta_bounds(2, 2, g, exact=exact)
    assert not rep.violations()


def test_beta_bounds_k3_reports_validity():
    rep = beta_bounds(3, 2, 4, exact=exact_beta(3, 2, 4))
    assert rep.get("binomial C(n, floor(n/k))").validity == ALL_N
    assert rep.get("entropy n H(1/k)").validity == LARGE_N
    assert not rep.violations()


def test_f_bounds_named_values():
    rep = f_bounds(3, 2, 1024)
    assert rep.get("k log2 n").value == pytest.approx(30)
    assert rep.get("log2 n / H(1/k)").value == pytest.approx(10 / binary_entropy(1 / 3))
    assert rep.get("threshold min m: C(m, ceil(m/k)) >= n").value == threshold_min_m(1024, 3)
    rep44 = f_bounds(4, 4, 1024)
    assert rep44.get("C(k,t-1) (t-1)^(t-3) / 2 log2 n").value == pytest.approx(60)


def test_f_bounds_exact_small_instances():
    for n in (2, 3, 4, 5, 6):
        rep = f_bounds(2, 2, n, exact=exact_min_cover(2, 2, n).m)
        assert not rep.violations()
    rep = f_bounds(3, 2, 2, exact=exact_min_cover(3, 2, 2).m)
    assert not rep.violations()
    random_row = rep.get("random cover")
    assert not random_row.asserted  # n = 2 is below k S(k,t)


def test_csv_layout():
    text = f_bounds(3, 2, 1024).to_csv()
    lines = text.strip().split("\n")
    assert lines[0] == "bound-name,direction,value,validity"
    assert any(line.startswith("k log2 n,upper,30.0") for line in lines)


def test_clique_cover_formulas():
    c = clique_cover_formulas(3**10, 3)
    h = binary_entropy(1 / 3)
    assert c.hypergraph_lb == pytest.approx(math.log2(3**9) / h)
    assert c.hypergraph_lb >= c.hypergraph_lb_weak
    assert clique_cover_formulas(4, 2).orlin == 3
    assert clique_cover_formulas(4, 2).hypergraph_lb is None
