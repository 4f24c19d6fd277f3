"""Set-family systems, the k-wise intersection condition and the exact inequality sum.

Sets are stored as Python integers used as bit-vectors over the ground set
``{0, ..., n-1}``.  The intersection condition is checked by scanning every
index tuple in lexicographic order; the scan is vectorised with numpy over the
trailing coordinates so that systems with a few million index tuples are
handled in well under a second.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

import numpy as np

from .errors import GuardError, NotValidatedError, ParameterError

#: Largest number of index tuples scanned without ``allow_large=True``.
GUARD_LIMIT = 10**9

FORBIDDEN_NONEMPTY = "forbidden-nonempty"
MISSING_NONEMPTY = "missing-nonempty"

_WORD = 64
_WORD_MASK = (1 << _WORD) - 1
_TAIL_MAX = 1 << 18


def mask_of(elements: Iterable[int]) -> int:
    mask = 0
    for x in elements:
        mask |= 1 << x
    return mask


def elements_of(mask: int) -> tuple[int, ...]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return tuple(out)


def popcount(mask: int) -> int:
    return bin(mask).count("1")


@dataclass(frozen=True)
class FamilySystem:
    """``k`` families of ``m`` sets each, over the ground set ``{0, ..., n-1}``.

    ``sets[j][i]`` is the bitmask of the set in family ``j`` (0-based), column
    ``i`` (0-based).  ``t`` is optional metadata: the intersection parameter
    the system is declared for (it is what the JSON format carries).
    """

    n: int
    k: int
    m: int
    sets: tuple[tuple[int, ...], ...]
    t: int | None = field(default=None, compare=False)

    def __post_init__(self):
        if self.n < 1:
            raise ParameterError(f"ground set size must be >= 1, got n={self.n}")
        if self.k < 2:
            raise ParameterError(f"need at least two families, got k={self.k}")
        if self.m < 1:
            raise ParameterError(f"need at least one set per family, got m={self.m}")
        if len(self.sets) != self.k or any(len(row) != self.m for row in self.sets):
            raise ParameterError("sets must be a k x m array")
        full = (1 << self.n) - 1
        for j, row in enumerate(self.sets):
            for i, s in enumerate(row):
                if s < 0 or s & ~full:
                    raise ParameterError(
                        f"set A[{j}][{i}] has elements outside [0, {self.n})"
                    )
        if self.t is not None and not 2 <= self.t <= self.k:
            raise ParameterError(f"declared t={self.t} outside [2, k={self.k}]")

    @classmethod
    def from_lists(
        cls, families: Sequence[Sequence[Iterable[int]]], n: int, t: int | None = None
    ) -> "FamilySystem":
        """Build a system from nested element lists ``families[j][i]``."""
        k = len(families)
        m = len(families[0]) if k else 0
        for j, fam in enumerate(families):
            for i, s in enumerate(fam):
                for x in s:
                    if not 0 <= x < n:
                        raise ParameterError(
                            f"element {x} of A[{j}][{i}] outside [0, {n})"
                        )
        sets = tuple(tuple(mask_of(s) for s in fam) for fam in families)
        return cls(n=n, k=k, m=m, sets=sets, t=t)

    def as_lists(self) -> list[list[list[int]]]:
        return [[list(elements_of(s)) for s in row] for row in self.sets]

    def column(self, i: int) -> tuple[int, ...]:
        return tuple(row[i] for row in self.sets)

    def columns(self) -> list[tuple[int, ...]]:
        return [self.column(i) for i in range(self.m)]

    def select_columns(self, indices: Sequence[int]) -> "FamilySystem":
        """Sub-system keeping only the listed columns, in the given order."""
        sets = tuple(tuple(row[i] for i in indices) for row in self.sets)
        return FamilySystem(self.n, self.k, len(indices), sets, self.t)

    def with_t(self, t: int | None) -> "FamilySystem":
        return FamilySystem(self.n, self.k, self.m, self.sets, t)

    def ground_union(self) -> int:
        u = 0
        for row in self.sets:
            for s in row:
                u |= s
        return u


@dataclass(frozen=True)
class Surjection:
    """A map ``[k] -> [t]`` hitting every value; ``image[h-1]`` is the value at ``h``.

    Values are 1-based, so ``Surjection((1, 2, 2))`` sends family 1 to group 1
    and families 2, 3 to group 2.
    """

    image: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "image", tuple(int(v) for v in self.image))
        t = max(self.image) if self.image else 0
        if set(self.image) != set(range(1, t + 1)) or t < 1:
            raise ParameterError(f"{self.image} is not a surjection onto [1..{t}]")

    @property
    def k(self) -> int:
        return len(self.image)

    @property
    def t(self) -> int:
        return max(self.image)

    def preimage(self, value: int) -> tuple[int, ...]:
        """0-based family indices mapped to ``value``."""
        return tuple(h for h, v in enumerate(self.image) if v == value)

    @classmethod
    def identity(cls, k: int) -> "Surjection":
        return cls(tuple(range(1, k + 1)))

    @classmethod
    def singleton(cls, k: int, j: int = 1) -> "Surjection":
        """The t=2 map sending family ``j`` (1-based) to 1 and the rest to 2."""
        if not 1 <= j <= k:
            raise ParameterError(f"j={j} outside [1, {k}]")
        return cls(tuple(1 if h == j else 2 for h in range(1, k + 1)))

    @classmethod
    def all(cls, k: int, t: int) -> Iterator["Surjection"]:
        """Every surjection ``[k] -> [t]``, in lexicographic order of the image."""
        for image in itertools.product(range(1, t + 1), repeat=k):
            if len(set(image)) == t:
                yield cls(image)


@dataclass(frozen=True)
class Verdict:
    """Outcome of a k-wise intersection check.

    ``indices`` is the lexicographically first violating index tuple
    (0-based columns) and ``kind`` says whether that intersection was nonempty
    although fewer than t indices are distinct, or empty although at least t
    are.
    """

    valid: bool
    indices: tuple[int, ...] | None = None
    kind: str | None = None

    def __bool__(self) -> bool:
        return self.valid


def multinomial(total: int, parts: Sequence[int]) -> int:
    """``total! / prod(p!)``, exactly."""
    if total < 0 or any(p < 0 for p in parts):
        raise ParameterError("multinomial arguments must be nonnegative")
    if sum(parts) != total:
        raise ParameterError(f"parts {list(parts)} do not sum to {total}")
    result, left = 1, total
    for p in parts:
        result *= math.comb(left, p)
        left -= p
    return result


# -- the index-tuple scan ------------------------------------------------------


def _words(mask: int, width: int) -> list[int]:
    return [(mask >> (_WORD * w)) & _WORD_MASK for w in range(width)]


def _incidence_words(rows: Sequence[Sequence[int]], nbits: int) -> list[np.ndarray]:
    width = max(1, -(-nbits // _WORD))
    return [
        np.array([_words(s, width) for s in row], dtype=np.uint64).reshape(len(row), width)
        for row in rows
    ]


@dataclass
class ScanResult:
    indices: tuple[int, ...] | None
    kind: str | None
    witness: int | None
    forbidden: int | None = None
    missing: int | None = None


def scan_index_tuples(
    rows: Sequence[Sequence[int]], nbits: int, t: int, *, count: bool = False
) -> ScanResult:
    """Scan all of ``[m]^k`` for tuples whose intersection disagrees with the threshold.

    ``rows[j][i]`` is a bitmask with at most ``nbits`` bits.  A tuple needs a
    nonempty intersection exactly when at least ``t`` of its entries differ.
    Returns the first disagreement in lexicographic order (plus the lowest
    element of its intersection, if nonempty); with ``count=True`` the whole
    space is scanned and both kinds of disagreement are tallied.
    """
    k = len(rows)
    m = len(rows[0])
    words = _incidence_words(rows, nbits)
    width = words[0].shape[1]

    tail_len = 1
    while tail_len < k and m ** (tail_len + 1) <= _TAIL_MAX:
        tail_len += 1
    p = k - tail_len

    coords = np.indices((m,) * tail_len).reshape(tail_len, -1).T
    tail_and = words[p][coords[:, 0]]
    for q in range(1, tail_len):
        tail_and = tail_and & words[p + q][coords[:, q]]
    srt = np.sort(coords, axis=1)
    tail_distinct = 1 + np.count_nonzero(np.diff(srt, axis=1), axis=1)
    in_tail: dict[int, np.ndarray] = {}
    ones = np.full(width, np.iinfo(np.uint64).max, dtype=np.uint64)

    first: ScanResult | None = None
    forbidden = missing = 0
    for prefix in itertools.product(range(m), repeat=p):
        pw = ones
        for j, v in enumerate(prefix):
            pw = pw & words[j][v]
        inter = tail_and & pw
        nonempty = inter.any(axis=1)
        distinct = tail_distinct
        for v in set(prefix):
            if v not in in_tail:
                in_tail[v] = ~(coords == v).any(axis=1)
            distinct = distinct + in_tail[v]
        need = distinct >= t
        bad = nonempty != need
        if count:
            forbidden += int(np.count_nonzero(nonempty & ~need))
            missing += int(np.count_nonzero(need & ~nonempty))
        if first is None and bad.any():
            idx = int(np.argmax(bad))
            full = tuple(prefix) + tuple(int(c) for c in coords[idx])
            if nonempty[idx]:
                mask = sum(int(w) << (_WORD * q) for q, w in enumerate(inter[idx]))
                witness = (mask & -mask).bit_length() - 1
                first = ScanResult(full, FORBIDDEN_NONEMPTY, witness)
            else:
                first = ScanResult(full, MISSING_NONEMPTY, None)
            if not count:
                return first
    if first is None:
        first = ScanResult(None, None, None)
    if count:
        first.forbidden, first.missing = forbidden, missing
    return first


def check_guard(space: int, allow_large: bool, what: str = "index tuples") -> None:
    if space > GUARD_LIMIT and not allow_large:
        raise GuardError(
            f"{space} {what} exceed the guard of {GUARD_LIMIT}; pass allow_large=True"
        )


def _check_t(sys: FamilySystem, t: int) -> None:
    if not 2 <= t <= sys.k:
        raise ParameterError(f"need 2 <= t <= k, got t={t}, k={sys.k}")
    if sys.m < t:
        raise ParameterError(f"need m >= t, got m={sys.m}, t={t}")


def is_bollobas_tuple(sys: FamilySystem, t: int, *, allow_large: bool = False) -> Verdict:
    """Check that ``A[0][i_1] & ... & A[k-1][i_k]`` is nonempty iff >= t indices differ."""
    _check_t(sys, t)
    check_guard(sys.m**sys.k, allow_large)
    res = scan_index_tuples(sys.sets, sys.n, t)
    if res.indices is None:
        return Verdict(True)
    return Verdict(False, res.indices, res.kind)


def _require_valid(sys: FamilySystem, t: int, allow_large: bool) -> None:
    verdict = is_bollobas_tuple(sys, t, allow_large=allow_large)
    if not verdict:
        raise NotValidatedError(
            f"not a Bollobas ({sys.k},{t})-tuple: {verdict.kind} at {verdict.indices}"
        )


def _check_phi(sys: FamilySystem, t: int, phi: Surjection) -> None:
    if phi.k != sys.k or phi.t != t:
        raise ParameterError(f"surjection {phi.image} is not [k={sys.k}] -> [t={t}]")


def reduce_via_surjection(sys: FamilySystem, t: int, phi: Surjection) -> FamilySystem:
    """Collapse to ``t`` families: family ``l`` column ``i`` is the meet of ``A[h][i]`` over ``phi(h) = l``."""
    if not isinstance(phi, Surjection):
        phi = Surjection(tuple(phi))
    _check_phi(sys, t, phi)
    full = (1 << sys.n) - 1
    rows = []
    for value in range(1, t + 1):
        group = phi.preimage(value)
        row = []
        for i in range(sys.m):
            s = full
            for h in group:
                s &= sys.sets[h][i]
            row.append(s)
        rows.append(tuple(row))
    return FamilySystem(sys.n, t, sys.m, tuple(rows), t)


def index_sequences(m: int, length: int) -> Iterator[tuple[int, ...]]:
    """Sequences of ``length`` distinct 0-based columns, lexicographically."""
    return itertools.permutations(range(m), length)


def _check_sigma(sigma: Sequence[int], m: int, t: int) -> None:
    if len(sigma) != t - 1 or len(set(sigma)) != len(sigma):
        raise ParameterError(f"sigma={tuple(sigma)} is not {t - 1} distinct columns")
    if any(not 0 <= c < m for c in sigma):
        raise ParameterError(f"sigma={tuple(sigma)} has columns outside [0, {m})")


def derived_masks(
    sys: FamilySystem, t: int, phi: Surjection, sigma: Sequence[int]
) -> list[int]:
    full = (1 << sys.n) - 1
    out: list[int] = []
    used = 0
    for j in range(1, t + 1):
        col = sigma[j - 1] if j < t else sigma[0]
        s = full
        for h in phi.preimage(j):
            s &= sys.sets[h][col]
        s &= ~used
        out.append(s)
        used |= s
    return out


def derived_sets(
    sys: FamilySystem, t: int, phi: Surjection, sigma: Sequence[int]
) -> list[frozenset[int]]:
    """The disjointified sets ``A_{1,sigma}, ..., A_{t,sigma}``.

    ``sigma`` lists ``t - 1`` distinct 0-based columns; group ``t`` reuses
    ``sigma[0]``.  Each set is the meet of its group's sets at that column,
    minus every earlier derived set.
    """
    if not isinstance(phi, Surjection):
        phi = Surjection(tuple(phi))
    _check_phi(sys, t, phi)
    _check_sigma(sigma, sys.m, t)
    return [frozenset(elements_of(s)) for s in derived_masks(sys, t, phi, sigma)]


def theorem_sum(
    sys: FamilySystem,
    t: int,
    phi: Surjection | None = None,
    *,
    validate: bool = True,
    allow_large: bool = False,
) -> Fraction:
    """Sum over sigma of the reciprocal multinomial of the derived-set sizes.

    The system is first checked to be a valid (k, t)-tuple; the sum is only
    bounded by 1 for those, so invalid input raises :class:`NotValidatedError`.
    ``phi`` defaults to :meth:`Surjection.singleton` for t = 2 and the
    identity when t = k.
    """
    _check_t(sys, t)
    if phi is None:
        if t == 2:
            phi = Surjection.singleton(sys.k, 1)
        elif t == sys.k:
            phi = Surjection.identity(sys.k)
        else:
            raise ParameterError("no default surjection for 2 < t < k; pass phi")
    elif not isinstance(phi, Surjection):
        phi = Surjection(tuple(phi))
    _check_phi(sys, t, phi)
    if validate:
        _require_valid(sys, t, allow_large)
    total = Fraction(0)
    for sigma in index_sequences(sys.m, t - 1):
        sizes = [popcount(s) for s in derived_masks(sys, t, phi, sigma)]
        total += Fraction(1, multinomial(sum(sizes), sizes))
    return total
