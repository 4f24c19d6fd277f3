"""Explicit Bollobas tuples: partition pairs, the tight (k,2) family, the block
construction and the permutation (k,k)-tuple."""
from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .core import FamilySystem, check_guard, mask_of
from .errors import ParameterError

KINDS = ("classical-pairs", "sharpness-k2", "modular-k2", "permutation-kk")


@dataclass(frozen=True)
class ConstructionSpec:
    kind: str
    params: tuple[int, ...]

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ParameterError(f"unknown construction kind {self.kind!r}")

    def build(self, *, allow_large: bool = False) -> FamilySystem:
        if self.kind == "permutation-kk":
            return permutation_kk(*self.params)
        x, y = self.params
        if self.kind == "classical-pairs":
            return classical_pairs(x, y)
        if self.kind == "sharpness-k2":
            return sharpness_k2(x, y)
        return modular_k2(x, y, allow_large=allow_large)


def classical_pairs(a: int, b: int) -> FamilySystem:
    """All ordered partitions ``(A, B)`` of ``{0..a+b-1}`` with ``|A| = a``.

    Columns follow the lexicographic order of ``A``.
    """
    if a < 1 or b < 1:
        raise ParameterError(f"need a, b >= 1, got a={a}, b={b}")
    n = a + b
    full = (1 << n) - 1
    firsts = [mask_of(c) for c in itertools.combinations(range(n), a)]
    return FamilySystem(
        n, 2, len(firsts), (tuple(firsts), tuple(full & ~s for s in firsts)), t=2
    )


def sharpness_k2(k: int, n: int) -> FamilySystem:
    """The (k,2)-tuple on ``Z_n`` whose t=2 sum equals 1.

    Column ``i``: family 1 is ``{i}^c``, family ``j`` for ``2 <= j <= k-1`` is
    ``{i-(j-1), i+(j-1)}^c`` and family ``k`` is the interval
    ``{i-k+2, ..., i+k-2}`` (all mod n).
    """
    if k < 2:
        raise ParameterError(f"need k >= 2, got k={k}")
    if n < 4 * k:
        raise ParameterError(f"need n >= 4k, got n={n}, k={k}")
    full = (1 << n) - 1
    rows = [tuple(full & ~(1 << i) for i in range(n))]
    for j in range(2, k):
        rows.append(
            tuple(full & ~mask_of({(i - (j - 1)) % n, (i + (j - 1)) % n}) for i in range(n))
        )
    rows.append(
        tuple(mask_of((i + d) % n for d in range(-(k - 2), k - 1)) for i in range(n))
    )
    return FamilySystem(n, k, n, tuple(rows), t=2)


def modular_k2(k: int, n: int, *, colors: int = 2, allow_large: bool = False) -> FamilySystem:
    """The block construction of a (k,2)-tuple with ``colors**n`` columns over ``k*n`` points.

    Point ``b*k + c`` is element ``c`` of block ``b``.  For each
    ``f: [n] -> [colors]`` (columns in counting order, ``f(1)`` most
    significant), family ``j`` omits element ``(f(b) + j) mod k`` of every
    block ``b``.  ``colors=3`` gives the 3^n-column variant, which is not
    known to be valid and is provided for experiments only.
    """
    if k < 3:
        raise ParameterError(f"need k >= 3, got k={k}")
    if n < 1:
        raise ParameterError(f"need n >= 1, got n={n}")
    if not 2 <= colors <= k:
        raise ParameterError(f"need 2 <= colors <= k, got colors={colors}")
    m = colors**n
    check_guard(m**k, allow_large)
    size = k * n
    full = (1 << size) - 1
    rows = []
    for j in range(k):
        row = []
        for f in itertools.product(range(colors), repeat=n):
            omit = mask_of(b * k + (f[b] + j) % k for b in range(n))
            row.append(full & ~omit)
        rows.append(tuple(row))
    return FamilySystem(size, k, m, tuple(rows), t=2)



def permutation_kk(k: int) -> FamilySystem:
    """The (k,k)-tuple with ``k`` columns over the ``k!`` permutations of ``[k]``.

    Point ``p`` (permutations in lexicographic order) lies in column ``p[j]``
    of family ``j`` and nowhere else, so a k-wise intersection is the single
    point ``p`` when the chosen columns form ``p`` and empty otherwise.  For
    ``k = 3`` every (3,3)-tuple with 3 columns on at
    most 6 points is a relabeling of this one.
    """
    if not 2 <= k <= 7:
        raise ParameterError(f"need 2 <= k <= 7, got k={k}")
    perms = list(itertools.permutations(range(k)))
    rows = tuple(
        tuple(mask_of(x for x, p in enumerate(perms) if p[j] == i) for i in range(k))
        for j in range(k)
    )
    return FamilySystem(len(perms), k, k, rows, t=k)


def relabel(sys: FamilySystem, rng: np.random.Generator) -> FamilySystem:
    """Apply random permutations to the ground set, the columns and the families.

    All three preserve the intersection pattern, hence validity and the
    theorem sum for every surjection up to relabeling.
    """
    point = rng.permutation(sys.n)
    cols = rng.permutation(sys.m)
    fams = rng.permutation(sys.k)

    def move(mask: int) -> int:
        return mask_of(int(point[x]) for x in range(sys.n) if mask >> x & 1)

    rows = tuple(tuple(move(sys.sets[j][i]) for i in cols) for j in fams)
    return FamilySystem(sys.n, sys.k, sys.m, rows, sys.t)
