"""Backtracking over columns for Bollobas tuples on a tiny ground set.

A column is a k-tuple of nonempty subsets of ``{0..g-1}`` (bitmasks).  A
set of columns is a valid (k,t)-tuple when every assignment of columns to
the k families meets the intersection condition.  Candidate columns live in
a numpy array so that compatibility with the columns chosen so far is tested
for all candidates at once.

Symmetry: the first column is restricted to one representative per orbit of
ground-set relabelings (elements sorted by their membership pattern); later
columns are added in increasing candidate order.  Any valid tuple can be
relabeled so that one of its columns is a representative, which keeps the
search exhaustive.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

import numpy as np

from .core import FamilySystem
from .errors import GuardError, ParameterError

#: Largest ground set searched by default, per k.
GROUND_GUARD = {2: 5, 3: 4}
#: For other k, the largest candidate space ``(2^g - 1)^k`` searched by default.
CANDIDATE_GUARD = 3375


def check_search_guard(k: int, g: int, override: bool = False) -> None:
    if override:
        return
    limit = GROUND_GUARD.get(k)
    if limit is not None:
        ok = g <= limit
    else:
        ok = (2**g - 1) ** k <= CANDIDATE_GUARD
    if not ok:
        raise GuardError(
            f"ground size {g} exceeds the exhaustive-search guard at k={k}; use guard_override"
        )


@lru_cache(maxsize=None)
def candidate_columns(k: int, g: int) -> np.ndarray:
    """All columns of nonempty sets whose k-wise intersection is empty, lexicographically."""
    masks = np.arange(1, 2**g, dtype=np.int64)
    grid = np.stack(np.meshgrid(*([masks] * k), indexing="ij"), axis=-1).reshape(-1, k)
    meet = np.bitwise_and.reduce(grid, axis=1)
    out = grid[meet == 0]
    out.setflags(write=False)
    return out


def is_orbit_representative(column: Sequence[int], g: int) -> bool:
    """True if element membership patterns are non-increasing along ``0..g-1``."""
    k = len(column)
    codes = [sum(((column[j] >> x) & 1) << (k - 1 - j) for j in range(k)) for x in range(g)]
    return all(a >= b for a, b in zip(codes, codes[1:]))


def compatible(
    cands: np.ndarray, chosen: Sequence[Sequence[int]], t: int, required: int | None = None
) -> np.ndarray:
    """Which candidates keep ``chosen + [candidate]`` valid.

    Only assignments that use the candidate (and column ``required``, when
    given) are tested; the caller guarantees the others were checked before.
    """
    k = cands.shape[1]
    s = len(chosen)
    new = s
    ok = np.ones(len(cands), dtype=bool)
    for h in itertools.product(range(s + 1), repeat=k):
        if new not in h or (required is not None and required not in h):
            continue
        fixed = -1
        for j, c in enumerate(h):
            if c != new:
                fixed &= chosen[c][j]
        need = len(set(h)) >= t
        if fixed == 0:
            if need:
                return np.zeros(len(cands), dtype=bool)
            continue
        meet = np.full(len(cands), fixed, dtype=np.int64)
        for j, c in enumerate(h):
            if c == new:
                meet &= cands[:, j]
        ok &= (meet != 0) == need
        if not ok.any():
            break
    return ok


@dataclass
class SearchResult:
    size: int
    columns: list[tuple[int, ...]]
    nodes: int

    def system(self, k: int, g: int, t: int) -> FamilySystem | None:
        if not self.columns:
            return None
        sets = tuple(tuple(col[j] for col in self.columns) for j in range(k))
        return FamilySystem(g, k, len(self.columns), sets, t)


class _Search:
    def __init__(self, k: int, t: int, g: int, target: int | None):
        self.k, self.t, self.g = k, t, g
        self.target = target
        self.cands = candidate_columns(k, g)
        self.best: list[tuple[int, ...]] = []
        self.nodes = 0
        self.done = False

    def run(self) -> None:
        cands = self.cands
        for idx in range(len(cands)):
            first = tuple(int(v) for v in cands[idx])
            if not is_orbit_representative(first, self.g):
                continue
            rest = np.delete(cands, idx, axis=0)
            rest = rest[compatible(rest, [first], self.t)]
            self._extend([first], rest)
            if self.done:
                return

    def _extend(self, chosen: list[tuple[int, ...]], avail: np.ndarray) -> None:
        self.nodes += 1
        if len(chosen) > len(self.best):
            self.best = list(chosen)
            if self.target is not None and len(chosen) >= self.target:
                self.done = True
                return
        goal = self.target if self.target is not None else len(self.best) + 1
        for idx in range(len(avail)):
            if len(chosen) + len(avail) - idx < goal:
                return
            col = tuple(int(v) for v in avail[idx])
            nxt = chosen + [col]
            rest = avail[idx + 1:]
            if len(rest):
                rest = rest[compatible(rest, nxt, self.t, required=len(nxt) - 1)]
            self._extend(nxt, rest)
            if self.done:
                return
            if self.target is None:
                goal = len(self.best) + 1


def _check(k: int, t: int, g: int) -> None:
    if not 2 <= t <= k:
        raise ParameterError(f"need 2 <= t <= k, got k={k}, t={t}")
    if g < 1:
        raise ParameterError(f"need a ground set of size >= 1, got {g}")


def max_tuple(k: int, t: int, g: int, *, guard_override: bool = False) -> SearchResult:
    """Exhaustive maximum; sizes below t need no nonempty sets, so the floor is ``t - 1``."""
    _check(k, t, g)
    check_search_guard(k, g, guard_override)
    s = _Search(k, t, g, None)
    s.run()
    if len(s.best) < t:
        return SearchResult(t - 1, [], s.nodes)
    return SearchResult(len(s.best), s.best, s.nodes)


def find_tuple(
    k: int, t: int, g: int, size: int, *, guard_override: bool = False
) -> FamilySystem | None:
    """A (k,t)-tuple of exactly ``size >= t`` columns over ``{0..g-1}``, or None if none exists."""
    _check(k, t, g)
    if size < t:
        raise ParameterError(f"size {size} < t={t}; such tuples need no search")
    check_search_guard(k, g, guard_override)
    s = _Search(k, t, g, size)
    s.run()
    if len(s.best) < size:
        return None
    return SearchResult(size, s.best[:size], s.nodes).system(k, g, t)


def random_tuple(
    k: int,
    t: int,
    m: int,
    g: int,
    rng: np.random.Generator,
    *,
    restarts: int = 200,
    node_budget: int = 2000,
) -> FamilySystem | None:
    """A random (k,t)-tuple with ``m`` columns over ``{0..g-1}``, or None.

    Each restart is a depth-first search trying compatible candidates in a
    fresh random order, backtracking out of dead ends until ``node_budget``
    nodes are spent.  None means every restart ran out of budget, not that
    no tuple exists.
    """
    _check(k, t, g)
    if m < t:
        raise ParameterError(f"need m >= t, got m={m}, t={t}")
    cands = candidate_columns(k, g)

    def dfs(chosen: list[tuple[int, ...]], avail: np.ndarray, budget: list[int]):
        if len(chosen) == m:
            return chosen
        for idx in rng.permutation(len(avail)):
            if budget[0] <= 0 or len(chosen) + len(avail) < m:
                return None
            budget[0] -= 1
            nxt = chosen + [tuple(int(v) for v in avail[idx])]
            rest = np.delete(avail, idx, axis=0)
            rest = rest[compatible(rest, nxt, t, required=len(nxt) - 1)]
            found = dfs(nxt, rest, budget)
            if found is not None:
                return found
        return None

    for _ in range(restarts):
        found = dfs([], cands, [node_budget])
        if found is not None:
            return SearchResult(m, found, 0).system(k, g, t)
    return None
