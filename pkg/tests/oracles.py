"""Slow, independent reference implementations used as test oracles.

Nothing here imports the package's algorithms: sets are frozensets, sums use
factorial quotients, partitions are built by recursive insertion.
"""
from __future__ import annotations

import itertools
import math
from collections import Counter
from fractions import Fraction


def lists_to_sets(families):
    return [[frozenset(s) for s in fam] for fam in families]


def brute_verdict(families, t):
    """First index tuple (lexicographic) violating the condition, with its kind, or None."""
    sets = lists_to_sets(families)
    k, m = len(sets), len(sets[0])
    for idx in itertools.product(range(m), repeat=k):
        meet = frozenset.intersection(*(sets[j][i] for j, i in enumerate(idx)))
        need = len(set(idx)) >= t
        if need and not meet:
            return idx, "missing-nonempty"
        if meet and not need:
            return idx, "forbidden-nonempty"
    return None


def multinomial_by_factorials(parts):
    return math.factorial(sum(parts)) // math.prod(math.factorial(p) for p in parts)


def brute_derived(families, t, phi, sigma, n):
    sets = lists_to_sets(families)
    cols = list(sigma) + [sigma[0]]
    out, used = [], frozenset()
    for j in range(1, t + 1):
        acc = frozenset(range(n))
        for h, v in enumerate(phi):
            if v == j:
                acc &= sets[h][cols[j - 1]]
        acc -= used
        out.append(acc)
        used |= acc
    return out


def brute_sum(families, t, phi, n):
    m = len(families[0])
    total = Fraction(0)
    for sigma in itertools.permutations(range(m), t - 1):
        sizes = [len(a) for a in brute_derived(families, t, phi, sigma, n)]
        total += Fraction(1, multinomial_by_factorials(sizes))
    return total


def surjections(k, t):
    return [p for p in itertools.product(range(1, t + 1), repeat=k) if set(p) == set(range(1, t + 1))]


def set_partitions(items):
    """All set partitions of ``items`` by inserting the last item everywhere."""
    items = list(items)
    if not items:
        yield []
        return
    *rest, last = items
    for p in set_partitions(rest):
        for i in range(len(p)):
            yield p[:i] + [p[i] + [last]] + p[i + 1:]
        yield p + [[last]]


def bell_triangle(n):
    """Bell numbers B_0..B_n from Aitken's array."""
    bells, row = [1], [1]
    for _ in range(n):
        nxt = [row[-1]]
        for x in row:
            nxt.append(nxt[-1] + x)
        row = nxt
        bells.append(row[0])
    return bells


def stirling_recurrence(k, s):
    table = [[0] * (s + 1) for _ in range(k + 1)]
    table[0][0] = 1
    for a in range(1, k + 1):
        for b in range(1, s + 1):
            table[a][b] = b * table[a - 1][b] + table[a - 1][b - 1]
    return table[k][s]


def f_direct(sizes, t):
    return sum(math.prod(c) for c in itertools.combinations(sizes, t))


def integer_partitions(k, largest=None):
    largest = k if largest is None else largest
    if k == 0:
        yield ()
        return
    for first in range(min(k, largest), 0, -1):
        for rest in integer_partitions(k - first, first):
            yield (first,) + rest


def set_partitions_of_type(lam):
    """Number of set partitions of [sum(lam)] with block sizes ``lam``."""
    k = sum(lam)
    denom = math.prod(math.factorial(x) for x in lam)
    denom *= math.prod(math.factorial(c) for c in Counter(lam).values())
    return math.factorial(k) // denom


def expected_bound_by_types(k, t, n, N):
    """The expected-uncovered bound summed over block-size types, as an exact rational."""
    q = 1 - Fraction(1, t**t)
    total = Fraction(0)
    for lam in integer_partitions(k):
        if len(lam) < t:
            continue
        total += set_partitions_of_type(lam) * Fraction(n) ** len(lam) * q ** (N * f_direct(lam, t))
    return total


def brute_cover_ok(k, t, n, blocks):
    """``blocks``: lists of k vertex lists.  Returns (valid, reason)."""
    bsets = [[set(p) for p in b] for b in blocks]
    for edge in itertools.product(range(n), repeat=k):
        is_edge = len(set(edge)) >= t
        inside = [r for r, b in enumerate(bsets) if all(v in b[i] for i, v in enumerate(edge))]
        if inside and not is_edge:
            return False, ("bad-block", edge, inside[0])
        if is_edge and not inside:
            return False, ("uncovered", edge)
    return True, None


def brute_beta(k, t, g):
    """Largest (k,t)-tuple over a ground set of size g by plain clique growth (tiny g only)."""
    subsets = [frozenset(c) for r in range(1, g + 1) for c in itertools.combinations(range(g), r)]
    cols = [c for c in itertools.product(subsets, repeat=k) if not frozenset.intersection(*c)]
    best = t - 1

    def ok(chosen):
        fams = [[list(c[j]) for c in chosen] for j in range(k)]
        return brute_verdict(fams, t) is None

    def grow(chosen, start):
        nonlocal best
        best = max(best, len(chosen))
        for i in range(start, len(cols)):
            nxt = chosen + [cols[i]]
            if ok(nxt):
                grow(nxt, i + 1)

    grow([], 0)
    return best
