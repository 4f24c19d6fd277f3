"""The acceptance suite: ten end-to-end checks with their time budgets.

Each ``criterion_N`` returns a :class:`CriterionResult`; a criterion passes
only if every check holds and the stated runtime budget is met.  The CLI
``selftest`` and ``tests/test_acceptance.py`` both run this module.
"""
from __future__ import annotations

import math
import time
import warnings
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

import numpy as np

from . import search
from .bounds import binary_entropy, orlin_min_m, threshold_min_m
from .chains import ChainContext, summarize
from .constructions import classical_pairs, modular_k2, permutation_kk, relabel, sharpness_k2
from .core import FamilySystem, Surjection, is_bollobas_tuple, reduce_via_surjection, theorem_sum
from .covering import LasVegasFailure, exact_beta, exact_min_cover, random_cover, verify_cover
from .partitions import check_lemma_3_1, min_f_formula, minimizers


@dataclass(frozen=True)
class CriterionResult:
    number: int
    title: str
    passed: bool
    detail: str
    seconds: float

    def line(self) -> str:
        mark = "PASS" if self.passed else "FAIL"
        return f"[{mark}] criterion {self.number:2d}: {self.title} ({self.seconds:.2f} s) {self.detail}"


class _Run:
    """Collects failures and timings for one criterion."""

    def __init__(self, number: int, title: str):
        self.number, self.title = number, title
        self.failures: list[str] = []
        self.notes: list[str] = []
        self.start = time.perf_counter()

    def check(self, ok: bool, what: str) -> bool:
        if not ok:
            self.failures.append(what)
        return ok

    def budget(self, seconds: float, limit: float, what: str) -> None:
        self.check(seconds < limit, f"{what} took {seconds:.1f} s (budget {limit:g} s)")

    def done(self, limit: float | None = None) -> CriterionResult:
        elapsed = time.perf_counter() - self.start
        if limit is not None:
            self.budget(elapsed, limit, "criterion")
        shown = self.failures[:3] + ([f"... {len(self.failures) - 3} more"] if len(self.failures) > 3 else [])
        detail = "; ".join(shown) if shown else "; ".join(self.notes)
        return CriterionResult(self.number, self.title, not self.failures, detail, elapsed)


def criterion_1() -> CriterionResult:
    run = _Run(1, "t=2 tightness of the cyclic construction")
    cases = [(2, 8), (2, 12), (2, 16), (3, 12), (3, 16), (4, 16)]
    for k, n in cases:
        t0 = time.perf_counter()
        sys = sharpness_k2(k, n)
        valid = is_bollobas_tuple(sys, 2)
        if run.check(bool(valid), f"({k},{n}) invalid: {valid.kind} at {valid.indices}"):
            value = theorem_sum(sys, 2, Surjection.singleton(k, 1), validate=False)
            run.check(value == 1, f"({k},{n}) sum {value}")
        run.budget(time.perf_counter() - t0, 10, f"({k},{n})")
    run.notes.append(f"{len(cases)} instances, sum exactly 1")
    return run.done()


def criterion_2() -> CriterionResult:
    run = _Run(2, "classical partition pairs are tight")
    betas = {g: exact_beta(2, 2, g) for g in range(2, 6)}
    count = 0
    for a in range(1, 7):
        for b in range(1, 8 - a):
            g = a + b
            sys = classical_pairs(a, b)
            count += 1
            run.check(sys.m == math.comb(g, a), f"({a},{b}) has m={sys.m}")
            value = theorem_sum(sys, 2)
            run.check(value == 1, f"({a},{b}) sum {value}")
            # exact maximum where searchable, the tight closed form beyond
            top = betas.get(g, math.comb(g, g // 2))
            run.check(sys.m <= top, f"({a},{b}) m={sys.m} exceeds beta={top}")
            if a == g // 2:
                run.check(sys.m == top, f"({a},{b}) balanced size {sys.m} != beta {top}")
    run.notes.append(f"{count} pairs (a,b); exact beta_2,2(g) for g<=5: {list(betas.values())}")
    return run.done()


# Parameter pool for criterion 3: (k, t, m, g) with a tuple known to exist.
def _pool() -> list[tuple[int, int, int, int]]:
    pool = []
    for g in range(2, 7):
        for m in range(2, min(5, math.comb(g, g // 2)) + 1):
            pool.append((2, 2, m, g))
    pool += [(3, 2, 2, g) for g in range(3, 7)]
    pool += [(3, 2, 3, 5), (3, 2, 3, 6), (3, 2, 4, 5), (3, 2, 4, 6), (3, 2, 5, 5), (3, 2, 5, 6)]
    pool.append((3, 3, 3, 6))
    return pool


def _seed_tuple(k: int, t: int, m: int, g: int) -> FamilySystem:
    """A fixed tuple for configurations where random backtracking is unreliable."""
    if (k, t) == (3, 3):
        return permutation_kk(3)
    found = search.find_tuple(k, t, g, m, guard_override=True)
    assert found is not None
    return found


def random_valid_tuples(count: int, seed: int = 0):
    """Yield ``count`` valid tuples with k <= 3, t in {2,3}, m <= 5, ground <= 6.

    Configurations are drawn uniformly from the pool; each tuple comes from
    randomized backtracking, falling back to a random relabeling of a fixed
    tuple when the search budget runs out.  For (3,3) with ground <= 6 the
    permutation tuple is the only one up to relabeling, so it is used
    directly.
    """
    rng = np.random.default_rng(seed)
    pool = _pool()
    seeds: dict[tuple[int, ...], FamilySystem] = {}
    for _ in range(count):
        cfg = pool[int(rng.integers(len(pool)))]
        k, t, m, g = cfg
        sys = None
        if (k, t) != (3, 3):
            sys = search.random_tuple(k, t, m, g, rng, restarts=2, node_budget=500)
        source = "search"
        if sys is None:
            if cfg not in seeds:
                seeds[cfg] = _seed_tuple(*cfg)
            sys = relabel(seeds[cfg], rng)
            source = "relabel"
        yield cfg, source, sys


def criterion_3(count: int = 500) -> CriterionResult:
    run = _Run(3, "theorem sum <= 1 on random valid tuples, every surjection")
    sources = {"search": 0, "relabel": 0}
    sums = 0
    largest = Fraction(0)
    for cfg, source, sys in random_valid_tuples(count):
        k, t, m, g = cfg
        sources[source] += 1
        verdict = is_bollobas_tuple(sys, t)
        if not run.check(bool(verdict), f"{cfg} generator produced an invalid tuple"):
            continue
        for phi in Surjection.all(k, t):
            value = theorem_sum(sys, t, phi, validate=False)
            sums += 1
            largest = max(largest, value)
            run.check(value <= 1, f"{cfg} phi={phi.image} sum {value} > 1")
    run.notes.append(
        f"{count} tuples ({sources['search']} searched, {sources['relabel']} relabeled), "
        f"{sums} sums, max {largest}"
    )
    return run.done(300)


def criterion_4() -> CriterionResult:
    run = _Run(4, "exact biclique covers and beta_2,2 match closed forms")
    found = []
    for n in range(2, 7):
        res = exact_min_cover(2, 2, n)
        want = threshold_min_m(n, 2)
        found.append(res.m)
        run.check(res.m == want, f"f_2,2({n})={res.m}, formula {want}")
        cert = res.certificate
        run.check(len(cert.blocks) == res.m and bool(verify_cover(cert)), f"n={n} certificate rejected")
    for g in (2, 3, 4):
        b = exact_beta(2, 2, g)
        run.check(b == math.comb(g, g // 2), f"beta_2,2({g})={b}")
    run.notes.append(f"f_2,2(2..6) = {found}")
    return run.done(600)


def criterion_5() -> CriterionResult:
    run = _Run(5, "exact f_3,2(n) respects the binomial threshold")
    vals = {}
    # n = 2 fits the default guard; n = 3..5 need ground 5 and the override.
    for n in range(2, 6):
        res = exact_min_cover(3, 2, n, guard_override=n > 2)
        vals[n] = res.m
        want = threshold_min_m(n, 3)
        run.check(res.m >= want, f"f_3,2({n})={res.m} < threshold {want}")
        run.check(bool(verify_cover(res.certificate)), f"n={n} certificate rejected")
    run.notes.append(
        "f_3,2: " + ", ".join(f"n={n}: {v} >= {threshold_min_m(n, 3)}" for n, v in vals.items())
    )
    return run.done()


def criterion_6() -> CriterionResult:
    run = _Run(6, "partition lemma and min f_pi formula for k <= 8")
    pairs = 0
    for k in range(2, 9):
        for t in range(2, k + 1):
            rep = check_lemma_3_1(k, t)
            pairs += rep.refinement_pairs + rep.merge_pairs
            run.check(rep.ok, f"lemma fails at k={k}, t={t}")
            for s in range(t, k + 1):
                best, _ = minimizers(k, s, t)
                run.check(best == min_f_formula(k, s, t), f"min f at ({k},{s},{t}) = {best}")
    run.notes.append(f"{pairs} partition pairs compared")
    return run.done(60)


def _chain_systems():
    for a in range(1, 7):
        for b in range(1, 8 - a):
            yield f"classical({a},{b})", classical_pairs(a, b)
    base = sharpness_k2(2, 8)
    for phi in Surjection.all(2, 2):
        yield f"sharpness(2,8) via {phi.image}", reduce_via_surjection(base, 2, phi)
    rng = np.random.default_rng(7)
    yield "permutation(3)", permutation_kk(3)
    for i in range(3):
        yield f"permutation(3) relabel {i}", relabel(permutation_kk(3), rng)


def criterion_7() -> CriterionResult:
    run = _Run(7, "chain families are disjoint and count n! times the sum")
    names = []
    for name, sys in _chain_systems():
        ctx = ChainContext.of(sys)
        summary = summarize(ctx)
        names.append(name)
        run.check(summary.report.disjoint, f"{name}: collision {summary.report.collision}")
        total = sum(c.enumerated for c in summary.counts)
        run.check(
            total == summary.theorem_sum * math.factorial(ctx.n),
            f"{name}: {total} chains vs {ctx.n}! * {summary.theorem_sum}",
        )
    run.notes.append(f"{len(names)} systems")
    return run.done(300)


def criterion_8(seeds: int = 20) -> CriterionResult:
    run = _Run(8, "Las Vegas covers succeed within 10 attempts")
    worst = 0
    flagged = []
    for k, t, n in [(3, 2, 64), (3, 3, 27), (4, 2, 64)]:
        for seed in range(seeds):
            with warnings.catch_warnings():
                warnings.simplefilter("ignore")
                try:
                    res = random_cover(k, t, n, seed=seed, max_attempts=10)
                except LasVegasFailure as exc:
                    run.check(False, f"({k},{t},{n}) seed {seed}: {exc}")
                    continue
            worst = max(worst, res.attempts)
            run.check(bool(verify_cover(res.cover)), f"({k},{t},{n}) seed {seed} rejected")
            if res.bound >= 1:
                run.check(not res.large_n and bool(res.notes), f"({k},{t},{n}) bound {res.bound} unflagged")
                flagged.append((k, t, n))
        run.notes.append(f"({k},{t},{n}) N={res.N} bound={res.bound:.3g}")
    run.notes.append(f"max attempts {worst}")
    if flagged:
        run.notes.append(f"bound >= 1 flagged at {sorted(set(flagged))}")
    return run.done(600)


def criterion_9() -> CriterionResult:
    run = _Run(9, "block construction certifies log2 beta_k,2(kn) >= n")
    for k, n in [(3, 3), (3, 4), (4, 3), (5, 2)]:
        sys = modular_k2(k, n)
        v = is_bollobas_tuple(sys, 2)
        run.check(bool(v), f"({k},{n}) invalid: {v.kind} at {v.indices}")
        run.check(sys.m == 2**n, f"({k},{n}) m={sys.m}")
        run.check(sys.n == k * n, f"({k},{n}) ground {sys.n}")
        run.check(math.log2(sys.m) >= n, f"({k},{n}) log2 m < n")
    run.notes.append("4 instances valid")
    return run.done()


def criterion_10() -> CriterionResult:
    run = _Run(10, "entropy chain and monotone Orlin threshold")
    tol = 1e-12
    for k in range(3, 31):
        h = binary_entropy(1 / k)
        run.check(1 / k <= h + tol, f"1/{k} > H(1/{k})")
        run.check(h <= math.log2(k * math.e) / k + tol, f"H(1/{k}) > log2({k}e)/{k}")
    prev = 0
    for n in range(1, 10**4 + 1):
        v = orlin_min_m(n)
        run.check(v >= prev, f"orlin({n})={v} < orlin({n - 1})={prev}")
        prev = v
    run.notes.append(f"k=3..30; orlin(10^4)={prev}")
    return run.done()


CRITERIA: list[Callable[[], CriterionResult]] = [
    criterion_1,
    criterion_2,
    criterion_3,
    criterion_4,
    criterion_5,
    criterion_6,
    criterion_7,
    criterion_8,
    criterion_9,
    criterion_10,
]


def run_all(only: list[int] | None = None, echo: Callable[[str], None] | None = None) -> list[CriterionResult]:
    out = []
    for i, fn in enumerate(CRITERIA, start=1):
        if only and i not in only:
            continue
        res = fn()
        if echo:
            echo(res.line())
        out.append(res)
    return out
