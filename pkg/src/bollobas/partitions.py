"""Set partitions of ``{1..k}`` and the block-product statistic f(pi, t)."""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from typing import Callable, Iterator

from .errors import GuardError, ParameterError

MAX_K = 12
LEMMA_MAX_K = 9

SetPartition = tuple[tuple[int, ...], ...]
"""Parts of ``{1..k}`` as sorted tuples, ordered by their minimum element."""


def restricted_growth_strings(k: int) -> Iterator[tuple[int, ...]]:
    """Yield all RGS ``a`` of length k (``a[0] = 0``, ``a[i] <= 1 + max(a[:i])``)."""
    if k == 0:
        yield ()
        return
    a = [0] * k
    b = [1] * k  # b[i] = 1 + max(a[:i]), the largest value allowed at i
    while True:
        yield tuple(a)
        i = k - 1
        while i > 0 and a[i] == b[i]:
            i -= 1
        if i == 0:
            return
        a[i] += 1
        for j in range(i + 1, k):
            a[j] = 0
            b[j] = max(b[i], a[i] + 1)


def partition_from_rgs(rgs: tuple[int, ...]) -> SetPartition:
    parts: list[list[int]] = [[] for _ in range(max(rgs) + 1)] if rgs else []
    for elem, block in enumerate(rgs, start=1):
        parts[block].append(elem)
    return tuple(tuple(p) for p in parts)


def enumerate_partitions(k: int, s: int | None = None) -> list[SetPartition]:
    """All partitions of ``{1..k}``, or only those with exactly ``s`` parts."""
    if not 1 <= k <= MAX_K:
        raise GuardError(f"k={k} outside the enumeration guard [1, {MAX_K}]")
    if s is not None and not 1 <= s <= k:
        raise ParameterError(f"need 1 <= s <= k, got s={s}, k={k}")
    out = []
    for rgs in restricted_growth_strings(k):
        if s is None or max(rgs) + 1 == s:
            out.append(partition_from_rgs(rgs))
    return out


def canonical(parts) -> SetPartition:
    return tuple(sorted((tuple(sorted(p)) for p in parts if p), key=lambda p: p[0]))


def stirling2(k: int, s: int) -> int:
    """Stirling number of the second kind, by the inclusion-exclusion formula."""
    if k < 0 or s < 0:
        raise ParameterError("negative argument")
    total = sum((-1) ** i * math.comb(s, i) * (s - i) ** k for i in range(s + 1))
    return total // math.factorial(s)


def f_pi(pi: SetPartition, t: int) -> int:
    """Sum over t-subsets of the parts of the product of their sizes."""
    if t < 2:
        raise ParameterError(f"need t >= 2, got t={t}")
    sizes = [len(p) for p in pi]
    # elementary symmetric polynomial e_t of the part sizes
    e = [1] + [0] * t
    for x in sizes:
        for d in range(t, 0, -1):
            e[d] += e[d - 1] * x
    return e[t]


def min_f_formula(k: int, s: int, t: int) -> int:
    if not t <= s <= k:
        raise ParameterError(f"need t <= s <= k, got k={k}, s={s}, t={t}")
    return (k - s + 1) * math.comb(s - 1, t - 1) + math.comb(s - 1, t)


def minimizers(k: int, s: int, t: int) -> tuple[int, list[SetPartition]]:
    """Brute-force minimum of ``f_pi`` over partitions with ``s`` parts, and its argmins."""
    best, arg = None, []
    for pi in enumerate_partitions(k, s):
        v = f_pi(pi, t)
        if best is None or v < best:
            best, arg = v, [pi]
        elif v == best:
            arg.append(pi)
    return best, arg


def one_step_refinements(pi: SetPartition) -> Iterator[SetPartition]:
    """Partitions obtained by splitting one part into two nonempty pieces."""
    for idx, part in enumerate(pi):
        if len(part) < 2:
            continue
        head, rest = part[0], part[1:]
        # each split counted once: the piece holding ``head`` is listed first
        for r in range(len(rest)):
            for chosen in itertools.combinations(rest, r):
                first = (head,) + chosen
                second = tuple(x for x in rest if x not in chosen)
                yield canonical(pi[:idx] + (first, second) + pi[idx + 1:])


@dataclass
class LemmaReport:
    refinement_violations: list = field(default_factory=list)
    merge_violations: list = field(default_factory=list)
    refinement_pairs: int = 0
    merge_pairs: int = 0

    @property
    def ok(self) -> bool:
        return not self.refinement_violations and not self.merge_violations


def check_lemma_3_1(
    k: int, t: int, f: Callable[[SetPartition, int], int] = f_pi
) -> LemmaReport:
    """Exhaustively test the two monotonicity properties of ``f`` on partitions of ``{1..k}``.

    (i) splitting a part never decreases ``f``; (ii) for parts ``P1, P2`` with
    ``|P1| >= |P2| >= 2`` and ``a`` in ``P2``, moving ``P2 - {a}`` into ``P1``
    never increases ``f``.  Partitions range over ``t <= s <= k`` parts.
    ``f`` is injectable so a broken statistic can be used as a negative control.
    """
    if not 2 <= t <= k:
        raise ParameterError(f"need 2 <= t <= k, got k={k}, t={t}")
    if k > LEMMA_MAX_K:
        raise GuardError(f"k={k} exceeds the guard {LEMMA_MAX_K}")
    report = LemmaReport()
    for s in range(t, k + 1):
        for pi in enumerate_partitions(k, s):
            value = f(pi, t)
            if s < k:
                for finer in one_step_refinements(pi):
                    report.refinement_pairs += 1
                    if value > f(finer, t):
                        report.refinement_violations.append((pi, finer))
            for i1, i2 in itertools.permutations(range(s), 2):
                p1, p2 = pi[i1], pi[i2]
                if not len(p1) >= len(p2) >= 2:
                    continue
                for a in p2:
                    merged = [p for idx, p in enumerate(pi) if idx not in (i1, i2)]
                    merged += [p1 + tuple(x for x in p2 if x != a), (a,)]
                    moved = canonical(merged)
                    report.merge_pairs += 1
                    if f(moved, t) > value:
                        report.merge_violations.append((pi, a, moved))
    return report
