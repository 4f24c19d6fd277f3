"""Covers of H_{k,t}(n) by complete k-partite k-graphs.

``H_{k,t}(n)`` has parts ``X_1..X_k``, each a copy of ``{0..n-1}``; its edges
are the index tuples ``(i_1, ..., i_k)`` with at least ``t`` distinct values.
A block is a complete k-partite k-graph given by one vertex subset per part.
Covers and Bollobas tuples are two views of the same incidence data: block
``r`` contains vertex ``j`` of part ``i`` iff ``r`` belongs to ``A[i][j]``.
"""
from __future__ import annotations

import itertools
import math
import warnings
from collections import Counter
from dataclasses import dataclass, field
from typing import Sequence

import mpmath
import numpy as np

from . import search
from .core import (
    FORBIDDEN_NONEMPTY,
    FamilySystem,
    check_guard,
    elements_of,
    is_bollobas_tuple,
    mask_of,
    scan_index_tuples,
)
from .errors import BollobasError, NotValidatedError, ParameterError
from .partitions import enumerate_partitions, f_pi, stirling2

BAD_BLOCK = "bad-block"
UNCOVERED = "uncovered"
BOUND_PRECISION = 128  # bits


@dataclass(frozen=True)
class PartiteBlock:
    """Complete k-partite block; ``parts[i]`` is a bitmask of the chosen vertices of side ``i``."""

    parts: tuple[int, ...]

    def __post_init__(self):
        if any(p <= 0 for p in self.parts):
            raise ParameterError("every part of a block must be nonempty")

    @classmethod
    def from_lists(cls, parts: Sequence[Sequence[int]]) -> "PartiteBlock":
        return cls(tuple(mask_of(p) for p in parts))

    def as_lists(self) -> list[list[int]]:
        return [list(elements_of(p)) for p in self.parts]

    def contains(self, edge: Sequence[int]) -> bool:
        return all(p >> v & 1 for p, v in zip(self.parts, edge))


@dataclass(frozen=True)
class PartiteCover:
    k: int
    t: int
    n: int
    blocks: tuple[PartiteBlock, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "blocks", tuple(self.blocks))
        if not 2 <= self.t <= self.k:
            raise ParameterError(f"need 2 <= t <= k, got k={self.k}, t={self.t}")
        if self.n < 1:
            raise ParameterError(f"need n >= 1, got n={self.n}")
        full = (1 << self.n) - 1
        for r, b in enumerate(self.blocks):
            if len(b.parts) != self.k:
                raise ParameterError(f"block {r} has {len(b.parts)} parts, expected {self.k}")
            if any(p & ~full for p in b.parts):
                raise ParameterError(f"block {r} uses vertices outside [0, {self.n})")

    def incidence(self) -> tuple[tuple[int, ...], ...]:
        """``rows[i][j]``: bitmask of the blocks that contain vertex ``j`` of side ``i``."""
        rows = []
        for i in range(self.k):
            row = []
            for j in range(self.n):
                row.append(mask_of(r for r, b in enumerate(self.blocks) if b.parts[i] >> j & 1))
            rows.append(tuple(row))
        return tuple(rows)


@dataclass(frozen=True)
class CoverVerdict:
    valid: bool
    kind: str | None = None
    edge: tuple[int, ...] | None = None
    block: int | None = None

    def __bool__(self) -> bool:
        return self.valid


def hkt_contains(k: int, t: int, n: int, indices: Sequence[int]) -> bool:
    if len(indices) != k or any(not 0 <= v < n for v in indices):
        raise ParameterError(f"{tuple(indices)} is not a {k}-tuple over [0, {n})")
    return len(set(indices)) >= t


def verify_cover(cover: PartiteCover, *, allow_large: bool = False) -> CoverVerdict:
    """Check every block lies inside H_{k,t}(n) and every edge is covered.

    Edges are scanned in lexicographic order and the first problem found is
    reported: a block containing a non-edge (``bad-block``, lowest such block
    index) or an edge in no block (``uncovered``).
    """
    check_guard(cover.n**cover.k, allow_large, "edges")
    res = scan_index_tuples(cover.incidence(), len(cover.blocks), cover.t)
    if res.indices is None:
        return CoverVerdict(True)
    if res.kind == FORBIDDEN_NONEMPTY:
        return CoverVerdict(False, BAD_BLOCK, res.indices, res.witness)
    return CoverVerdict(False, UNCOVERED, res.indices)


def count_uncovered(cover: PartiteCover, *, allow_large: bool = False) -> int:
    check_guard(cover.n**cover.k, allow_large, "edges")
    res = scan_index_tuples(cover.incidence(), len(cover.blocks), cover.t, count=True)
    return res.missing


def cover_to_tuple(cover: PartiteCover, *, allow_large: bool = False) -> FamilySystem:
    """The (k,t)-tuple with ``A[i][j]`` = blocks containing vertex ``j`` of side ``i``."""
    verdict = verify_cover(cover, allow_large=allow_large)
    if not verdict:
        raise NotValidatedError(f"invalid cover: {verdict.kind} at {verdict.edge}")
    if not cover.blocks:
        raise ParameterError("a cover with no blocks yields a tuple over an empty ground set")
    return FamilySystem(len(cover.blocks), cover.k, cover.n, cover.incidence(), cover.t)


def tuple_to_cover(sys: FamilySystem, t: int, *, allow_large: bool = False) -> PartiteCover:
    """Inverse of :func:`cover_to_tuple`: ground element ``r`` becomes block ``r``.

    Elements missing from every set of some family would give a block with an
    empty part, which has no edges; such elements are skipped, so the cover
    can have fewer blocks than the ground set has elements.
    """
    verdict = is_bollobas_tuple(sys, t, allow_large=allow_large)
    if not verdict:
        raise NotValidatedError(f"invalid tuple: {verdict.kind} at {verdict.indices}")
    blocks = []
    for r in range(sys.n):
        parts = tuple(
            mask_of(j for j in range(sys.m) if sys.sets[i][j] >> r & 1) for i in range(sys.k)
        )
        if all(parts):
            blocks.append(PartiteBlock(parts))
    return PartiteCover(sys.k, t, sys.m, tuple(blocks))


# -- randomized construction ---------------------------------------------------


def copies_per_subset(k: int, t: int, n: int) -> int:
    """``floor((t+1) t^t log2(n) / ((k-t+1) log2(e)))``, the number of colourings per t-subset."""
    value = mpmath.mpf((t + 1) * t**t) * mpmath.log(n) / (k - t + 1)
    return int(mpmath.floor(value))


def large_n_threshold(k: int, t: int) -> int:
    """``k * S(k, t)``: the size from which the expectation argument is claimed."""
    return k * stirling2(k, t)


def expected_uncovered_bound(k: int, t: int, n: int, N: int) -> mpmath.mpf:
    """Upper bound on the expected number of uncovered edges after ``N`` colourings per subset.

    Sum over partitions ``pi`` of ``{1..k}`` with at least ``t`` parts of
    ``n^|pi| (1 - t^-t)^(N f(pi, t))``, evaluated at 128-bit precision.
    """
    if not 2 <= t <= k or n < 1 or N < 0:
        raise ParameterError(f"bad parameters k={k}, t={t}, n={n}, N={N}")
    with mpmath.workprec(BOUND_PRECISION):
        q = 1 - mpmath.mpf(1) / t**t
        total = mpmath.mpf(0)
        for s in range(t, k + 1):
            by_f = Counter(f_pi(pi, t) for pi in enumerate_partitions(k, s))
            inner = mpmath.fsum(c * q ** (N * f) for f, c in by_f.items())
            total += mpmath.mpf(n) ** s * inner
        return +total


def _stream(seed: int, *key: int) -> np.random.Generator:
    return np.random.default_rng(np.random.SeedSequence(seed, spawn_key=key))


def draw_random_blocks(k: int, t: int, n: int, N: int, seed: int, attempt: int = 0) -> list[PartiteBlock]:
    """One draw of ``C(k,t) * N`` coloured blocks.

    For each t-subset ``T`` (index ``ti`` in lexicographic order) and copy
    ``c``, a uniform colouring ``[n] -> T`` comes from its own stream
    ``(seed, attempt, ti, c)``; sides in ``T`` keep their colour class, the
    other sides are complete.  Colourings leaving a class empty give an
    edgeless block, which is dropped.
    """
    full = (1 << n) - 1
    blocks = []
    for ti, T in enumerate(itertools.combinations(range(k), t)):
        for c in range(N):
            colours = _stream(seed, attempt, ti, c).integers(t, size=n)
            parts = [full] * k
            for q, side in enumerate(T):
                parts[side] = mask_of(np.flatnonzero(colours == q).tolist())
            if all(parts):
                blocks.append(PartiteBlock(tuple(parts)))
    return blocks


@dataclass
class RandomCoverResult:
    cover: PartiteCover
    attempts: int
    N: int
    bound: float
    large_n: bool
    notes: list[str] = field(default_factory=list)

    @property
    def block_limit(self) -> int:
        return math.comb(self.cover.k, self.cover.t) * self.N


class LasVegasFailure(BollobasError):
    """No draw covered H_{k,t}(n) within the attempt budget."""

    def __init__(self, message: str, attempts: int, uncovered: int):
        super().__init__(message)
        self.attempts = attempts
        self.uncovered = uncovered


def random_cover(
    k: int,
    t: int,
    n: int,
    seed: int = 0,
    max_attempts: int = 1000,
    *,
    N: int | None = None,
    allow_large: bool = False,
) -> RandomCoverResult:
    """Draw random coloured blocks until they cover H_{k,t}(n).

    Each attempt draws a fresh family (see :func:`draw_random_blocks`) and
    keeps it only if :func:`verify_cover` accepts it, so the output is always
    a valid cover; only the number of attempts is random.
    """
    if not 2 <= t <= k <= n:
        raise ParameterError(f"need 2 <= t <= k <= n, got k={k}, t={t}, n={n}")
    if N is None:
        N = copies_per_subset(k, t, n)
    if N < 1:
        raise ParameterError(f"N={N} copies per subset; n={n} is too small")
    if max_attempts < 1:
        raise ParameterError("max_attempts must be >= 1")
    check_guard(n**k, allow_large, "edges")
    notes = []
    threshold = large_n_threshold(k, t)
    large_n = n >= threshold
    if not large_n:
        msg = f"n={n} is below k*S(k,t)={threshold}; the expectation bound is not claimed here"
        warnings.warn(msg, stacklevel=2)
        notes.append(msg)
    bound = float(expected_uncovered_bound(k, t, n, N))
    cover = None
    for attempt in range(max_attempts):
        cover = PartiteCover(k, t, n, draw_random_blocks(k, t, n, N, seed, attempt))
        if verify_cover(cover, allow_large=allow_large):
            return RandomCoverResult(cover, attempt + 1, N, bound, large_n, notes)
    uncovered = count_uncovered(cover, allow_large=allow_large)
    raise LasVegasFailure(
        f"no cover of H_{k},{t}({n}) in {max_attempts} attempts; "
        f"last draw left {uncovered} edges uncovered",
        max_attempts,
        uncovered,
    )


# -- exact values for tiny parameters -----------------------------------------


def exact_beta(k: int, t: int, m_ground: int, *, guard_override: bool = False) -> int:
    """Largest size of a (k,t)-tuple with sets inside ``{0..m_ground-1}``, by exhaustive search."""
    return search.max_tuple(k, t, m_ground, guard_override=guard_override).size


@dataclass
class MinCover:
    m: int
    certificate: PartiteCover | None
    witness: FamilySystem | None = None


def exact_min_cover(k: int, t: int, n: int, *, guard_override: bool = False) -> MinCover:
    """Fewest blocks covering H_{k,t}(n): the least ``m`` with ``beta_{k,t}(m) >= n``.

    The certificate comes from a tuple of size ``n`` over ``[m]`` found by the
    search.  For ``n < t`` the hypergraph has no edges and the answer is 0.
    """
    if not 2 <= t <= k or n < 1:
        raise ParameterError(f"bad parameters k={k}, t={t}, n={n}")
    if n < t:
        return MinCover(0, PartiteCover(k, t, n, ()))
    m = 1
    while True:
        found = search.find_tuple(k, t, m, n, guard_override=guard_override)
        if found is not None:
            cover = tuple_to_cover(found, t)
            return MinCover(m, cover, found)
        m += 1
