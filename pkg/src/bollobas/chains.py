"""Chain families of permutations attached to a (k,k)-tuple.

For a column sequence ``sigma`` the derived sets ``A_1, ..., A_k`` (identity
surjection) are disjoint.  A permutation of the effective ground set ``X``
is in the chain family of ``sigma`` when every element of ``A_1`` precedes
every element of ``A_2``, which precede those of ``A_3``, and so on.  The
families for distinct ``sigma`` are pairwise disjoint for valid tuples and
each has ``n! / multinomial(|U|; |A_1|, ..., |A_k|)`` members; both facts are
checked here by enumerating all ``n!`` permutations.

An empty derived set imposes no constraint: its neighbours are compared
directly.  Such ``sigma`` are flagged in the results.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

import numpy as np

from .core import (
    FamilySystem,
    Surjection,
    derived_masks,
    elements_of,
    index_sequences,
    is_bollobas_tuple,
    multinomial,
    theorem_sum,
)
from .errors import GuardError, InvariantError, NotValidatedError, ParameterError

MAX_GROUND = 9
MAX_CHECKS = 5 * 10**7


@dataclass(frozen=True)
class ChainContext:
    sys: FamilySystem
    X: tuple[int, ...]

    @classmethod
    def of(cls, sys: FamilySystem, *, validate: bool = True) -> "ChainContext":
        """Validate ``sys`` as a (k,k)-tuple and fix its effective ground set.

        ``validate=False`` skips the check; only useful for negative controls.
        """
        verdict = is_bollobas_tuple(sys, sys.k) if validate else None
        if verdict is not None and not verdict:
            raise NotValidatedError(
                f"not a ({sys.k},{sys.k})-tuple: {verdict.kind} at {verdict.indices}"
            )
        X = elements_of(sys.ground_union())
        if len(X) > MAX_GROUND:
            raise GuardError(f"|X|={len(X)} exceeds the permutation guard {MAX_GROUND}")
        return cls(sys, X)

    @property
    def n(self) -> int:
        return len(self.X)

    @property
    def k(self) -> int:
        return self.sys.k

    def sigmas(self) -> list[tuple[int, ...]]:
        return list(index_sequences(self.sys.m, self.k - 1))

    def blocks(self, sigma: Sequence[int]) -> list[list[int]]:
        """Derived sets of ``sigma`` as positions into ``X``."""
        if len(sigma) != self.k - 1 or len(set(sigma)) != len(sigma):
            raise ParameterError(f"sigma={tuple(sigma)} is not {self.k - 1} distinct columns")
        pos = {x: p for p, x in enumerate(self.X)}
        masks = derived_masks(self.sys, self.k, Surjection.identity(self.k), sigma)
        return [[pos[x] for x in elements_of(mk)] for mk in masks]


@lru_cache(maxsize=None)
def rank_arrays(n: int) -> np.ndarray:
    """All permutations of ``range(n)`` as rank arrays, in lexicographic order."""
    perms = np.array(list(itertools.permutations(range(n))), dtype=np.int8).reshape(-1, n)
    perms.setflags(write=False)
    return perms


def _is_chain(blocks: list[list[int]], rank: Sequence[int]) -> bool:
    prev_max = None
    for block in blocks:
        if not block:
            continue
        ranks = [rank[p] for p in block]
        if prev_max is not None and prev_max >= min(ranks):
            return False
        prev_max = max(ranks)
    return True


def chain_membership(ctx: ChainContext, sigma: Sequence[int], perm: Sequence[int]) -> bool:
    """Whether ``perm`` (``perm[p]`` = rank of ``X[p]``) orders the derived sets of ``sigma`` as a chain."""
    if sorted(perm) != list(range(len(perm))) and sorted(perm) != list(range(1, len(perm) + 1)):
        raise ParameterError("perm must be a bijection onto 0..n-1 or 1..n")
    if len(perm) != ctx.n:
        raise ParameterError(f"perm has length {len(perm)}, expected |X|={ctx.n}")
    return _is_chain(ctx.blocks(sigma), perm)


def _members(blocks: list[list[int]], perms: np.ndarray) -> np.ndarray:
    ok = np.ones(len(perms), dtype=bool)
    prev_max = None
    for block in blocks:
        if not block:
            continue
        sub = perms[:, block]
        if prev_max is not None:
            ok &= prev_max < sub.min(axis=1)
        prev_max = sub.max(axis=1)
    return ok


@dataclass(frozen=True)
class ChainCount:
    sigma: tuple[int, ...]
    sizes: tuple[int, ...]
    formula: int
    enumerated: int

    @property
    def empty_block(self) -> bool:
        return 0 in self.sizes


def chain_formula(n: int, sizes: Sequence[int]) -> int:
    """``C(n, |U|) * prod |A_j|! * (n - |U|)!``, checked against ``n! / multinomial``."""
    u = sum(sizes)
    direct = math.comb(n, u) * math.prod(math.factorial(s) for s in sizes) * math.factorial(n - u)
    via_multinomial = Fraction(math.factorial(n), multinomial(u, sizes))
    if via_multinomial != direct:
        raise InvariantError(f"chain count forms disagree for n={n}, sizes={list(sizes)}")
    return direct


def chain_count(ctx: ChainContext, sigma: Sequence[int]) -> ChainCount:
    """Closed-form size of the chain family of ``sigma``, confirmed by enumerating all ``n!`` permutations."""
    sigma = tuple(sigma)
    blocks = ctx.blocks(sigma)
    sizes = tuple(len(b) for b in blocks)
    formula = chain_formula(ctx.n, sizes)
    enumerated = int(_members(blocks, rank_arrays(ctx.n)).sum())
    if formula != enumerated:
        raise InvariantError(
            f"sigma={sigma}: formula gives {formula}, enumeration finds {enumerated}"
        )
    return ChainCount(sigma, sizes, formula, enumerated)


@dataclass
class DisjointnessReport:
    collision: tuple[tuple[int, ...], tuple[int, ...], tuple[int, ...]] | None
    counts: dict[tuple[int, ...], int] = field(default_factory=dict)
    n_perms: int = 0

    @property
    def disjoint(self) -> bool:
        return self.collision is None

    @property
    def total(self) -> int:
        return sum(self.counts.values())


def verify_disjointness(ctx: ChainContext) -> DisjointnessReport:
    """Classify every permutation of ``X`` against every ``sigma``.

    The first permutation (lexicographic rank order) lying in two chain
    families is reported with the first two such ``sigma``.
    """
    sigmas = ctx.sigmas()
    perms = rank_arrays(ctx.n)
    if len(sigmas) * len(perms) > MAX_CHECKS:
        raise GuardError(f"{len(sigmas)} x {len(perms)} membership tests exceed {MAX_CHECKS}")
    member = np.zeros((len(sigmas), len(perms)), dtype=bool)
    for r, sigma in enumerate(sigmas):
        member[r] = _members(ctx.blocks(sigma), perms)
    report = DisjointnessReport(None, {s: int(c) for s, c in zip(sigmas, member.sum(axis=1))}, len(perms))
    hits = member.sum(axis=0)
    if len(sigmas) and hits.max(initial=0) > 1:
        p = int(np.argmax(hits > 1))
        owners = np.flatnonzero(member[:, p])
        report.collision = (sigmas[owners[0]], sigmas[owners[1]], tuple(int(v) for v in perms[p]))
    return report


@dataclass
class ChainSummary:
    counts: list[ChainCount]
    report: DisjointnessReport
    theorem_sum: Fraction

    @property
    def identity_holds(self) -> bool:
        """Sum of chain-family sizes equals ``n!`` times the theorem sum."""
        return sum(c.formula for c in self.counts) == self.theorem_sum * self.report.n_perms


def summarize(ctx: ChainContext) -> ChainSummary:
    """Per-sigma counts, disjointness, and the exact value of the theorem sum."""
    counts = [chain_count(ctx, s) for s in ctx.sigmas()]
    report = verify_disjointness(ctx)
    for c in counts:
        if report.counts[c.sigma] != c.enumerated:
            raise InvariantError(f"sigma={c.sigma}: inconsistent enumeration")
    value = theorem_sum(ctx.sys, ctx.k, Surjection.identity(ctx.k))
    return ChainSummary(counts, report, value)
