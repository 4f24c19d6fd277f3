"""Closed-form bounds on beta_{k,t}(n) and f_{k,t}(n).

Binomial thresholds are exact integer searches.  Entropy and logarithmic
bounds are floats and carry a validity note: ``"all n"`` bounds hold for
every ``n``; ``"large n"`` bounds are only claimed asymptotically, so they
are reported but never asserted against exact values.
"""
from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass, field

from .errors import ParameterError
from .partitions import stirling2

LOG2E = math.log2(math.e)
TOL = 1e-12

ALL_N = "all n"
LARGE_N = "large n"


class EntropyDomainError(ParameterError):
    """Entropy requested at 0 or 1; ``limit`` holds the continuous extension."""

    limit = 0.0


def binary_entropy(q: float) -> float:
    if q == 0 or q == 1:
        raise EntropyDomainError(f"H({q}) is defined by continuity only; the limit is 0")
    if not 0 < q < 1:
        raise ParameterError(f"entropy argument {q} outside (0, 1)")
    return -q * math.log2(q) - (1 - q) * math.log2(1 - q)


def threshold_min_m(n: int, k: int) -> int:
    """Least ``m >= 1`` with ``C(m, ceil(m/k)) >= n``."""
    if n < 1 or k < 2:
        raise ParameterError(f"need n >= 1 and k >= 2, got n={n}, k={k}")
    m = 1
    while math.comb(m, -(-m // k)) < n:
        m += 1
    return m


def orlin_min_m(n: int) -> int:
    """Least ``m >= 1`` with ``2 C(m-1, floor(m/2)) >= n``."""
    if n < 1:
        raise ParameterError(f"need n >= 1, got n={n}")
    m = 1
    while 2 * math.comb(m - 1, m // 2) < n:
        m += 1
    return m


@dataclass(frozen=True)
class Bound:
    name: str
    direction: str  # "lower" | "upper"
    value: float
    validity: str
    holds_here: bool

    @property
    def asserted(self) -> bool:
        return self.holds_here


@dataclass
class BoundReport:
    """Named bounds on one quantity at fixed ``(k, t, n)``, plus the exact value if known."""

    quantity: str
    k: int
    t: int
    n: int
    bounds: list[Bound] = field(default_factory=list)
    exact: float | None = None

    def add(self, name, direction, value, validity, holds_here=None):
        if holds_here is None:
            holds_here = validity == ALL_N
        self.bounds.append(Bound(name, direction, float(value), validity, holds_here))

    def get(self, name: str) -> Bound:
        for b in self.bounds:
            if b.name == name:
                return b
        raise KeyError(name)

    def violations(self) -> list[str]:
        """Asserted bounds contradicting each other or the exact value."""
        out = []
        lows = [b for b in self.bounds if b.direction == "lower" and b.asserted]
        ups = [b for b in self.bounds if b.direction == "upper" and b.asserted]
        for lo in lows:
            for up in ups:
                if lo.value > up.value + TOL:
                    out.append(f"{lo.name}={lo.value} > {up.name}={up.value}")
        if self.exact is not None:
            for lo in lows:
                if lo.value > self.exact + TOL:
                    out.append(f"{lo.name}={lo.value} > exact {self.exact}")
            for up in ups:
                if up.value < self.exact - TOL:
                    out.append(f"{up.name}={up.value} < exact {self.exact}")
        return out

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["bound-name", "direction", "value", "validity"])
        for b in self.bounds:
            w.writerow([b.name, b.direction, repr(b.value), b.validity])
        if self.exact is not None:
            w.writerow(["exact", "exact", repr(float(self.exact)), ALL_N])
        return buf.getvalue()


def beta_rates(k: int, t: int) -> tuple[float, float]:
    """Asymptotic (lower, upper) rates for ``log2(beta_{k,t}(n)) / n``."""
    if t == 2:
        if k < 3:
            raise ParameterError("the entropy rates need k >= 3")
        return 1 / k, binary_entropy(1 / k)
    if not 3 <= t <= k:
        raise ParameterError(f"need 3 <= t <= k, got k={k}, t={t}")
    c = math.comb(k, t - 1)
    return LOG2E / (c * (t + 1) * t ** (t - 1)), 2 / (c * (t - 1) ** (t - 3))


def beta_bounds(k: int, t: int, n: int, exact: int | None = None) -> BoundReport:
    """Bounds on ``log2(beta_{k,t}(n))`` (values are base-2 logarithms)."""
    if not 2 <= t <= k or n < 1:
        raise ParameterError(f"bad parameters k={k}, t={t}, n={n}")
    rep = BoundReport("log2 beta", k, t, n, exact=None if exact is None else math.log2(exact))
    if t == 2 and k == 2:
        v = math.log2(math.comb(n, n // 2))
        rep.add("partition pairs (tight)", "lower", v, ALL_N)
        rep.add("set pairs inequality", "upper", v, ALL_N)
    elif t == 2:
        lo, hi = beta_rates(k, t)
        rep.add("block construction", "lower", n // k, ALL_N)
        rep.add("rate 1/k", "lower", n * lo, LARGE_N)
        rep.add("binomial C(n, floor(n/k))", "upper", math.log2(math.comb(n, n // k)), ALL_N)
        rep.add("entropy n H(1/k)", "upper", n * hi, LARGE_N)
        rep.add("n log2(ke)/k", "upper", n * math.log2(k * math.e) / k, LARGE_N)
    else:
        lo, hi = beta_rates(k, t)
        rep.add("random construction rate", "lower", n * lo, LARGE_N)
        rep.add("shadow rate", "upper", n * hi, LARGE_N)
    return rep


def random_cover_size_bound(k: int, t: int, n: int) -> float:
    """``C(k,t) (t+1) t^t log2(n) / ((k-t+1) log2 e)``."""
    return math.comb(k, t) * (t + 1) * t**t * math.log2(n) / ((k - t + 1) * LOG2E)


def f_bounds(k: int, t: int, n: int, exact: int | None = None) -> BoundReport:
    """Bounds on the fewest complete k-partite k-graphs covering ``H_{k,t}(n)``."""
    if not 2 <= t <= k or n < 2:
        raise ParameterError(f"bad parameters k={k}, t={t}, n={n}")
    rep = BoundReport("f", k, t, n, exact=exact)
    lg = math.log2(n)
    random_ok = n >= k * stirling2(k, t)
    if t == 2 and k == 2:
        v = threshold_min_m(n, 2)
        rep.add("biclique cover (exact)", "lower", v, ALL_N)
        rep.add("biclique cover (exact)", "upper", v, ALL_N)
        return rep
    if t == 2:
        h = binary_entropy(1 / k)
        rep.add("threshold min m: C(m, ceil(m/k)) >= n", "lower", threshold_min_m(n, k), ALL_N)
        rep.add("log2 n / H(1/k)", "lower", lg / h, LARGE_N)
        rep.add("k log2 n / log2(ke)", "lower", k * lg / math.log2(k * math.e), LARGE_N)
        rep.add("k log2 n", "upper", k * lg, LARGE_N)
    else:
        c = math.comb(k, t - 1)
        rep.add("C(k,t-1) (t-1)^(t-3) / 2 log2 n", "lower", c * (t - 1) ** (t - 3) / 2 * lg, LARGE_N)
        if t == k:
            rep.add("k^(k-2) / 2 log2 n", "lower", k ** (k - 2) / 2 * lg, LARGE_N)
    rep.add(
        "random cover",
        "upper",
        random_cover_size_bound(k, t, n),
        "n >= k S(k,t)",
        holds_here=random_ok,
    )
    return rep


@dataclass(frozen=True)
class CliqueCoverFormulas:
    orlin: int
    hypergraph_lb: float | None
    hypergraph_lb_weak: float | None


def clique_cover_formulas(n: int, k: int) -> CliqueCoverFormulas:
    """Orlin's threshold for ``cc(K_n - M)`` and the entropy lower bound for ``cc(K_n^k - M)``."""
    if n < 2:
        raise ParameterError(f"need n >= 2, got n={n}")
    orlin = orlin_min_m(n)
    if k < 3:
        return CliqueCoverFormulas(orlin, None, None)
    lg = math.log2(n / k)
    return CliqueCoverFormulas(
        orlin, lg / binary_entropy(1 / k), k * lg / math.log2(k * math.e)
    )
