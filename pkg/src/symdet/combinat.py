"""Partitions, compositions, Young diagrams and semistandard tableaux.

The tableau frame fixes the row-major labeling of diagram boxes by
1..n; its row and column label sets generate the two permutation
groups that the symmetrizer module materializes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from .exact import Poly, binomial_poly

Pattern = tuple[int, ...]  # letter multiplicities in increasing letter order


@dataclass(frozen=True, order=True)
class Partition:
    """Non-increasing positive parts; the empty partition is allowed."""

    parts: tuple[int, ...] = ()

    def __init__(self, parts=()):
        parts = tuple(int(p) for p in parts)
        if any(p <= 0 for p in parts):
            raise ValueError("partition parts must be positive")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError("partition parts must be non-increasing")
        object.__setattr__(self, "parts", parts)

    @property
    def n(self) -> int:
        return sum(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __getitem__(self, i: int) -> int:
        return self.parts[i]

    def conjugate(self) -> "Partition":
        if not self.parts:
            return Partition()
        return Partition(
            tuple(sum(1 for p in self.parts if p > i) for i in range(self.parts[0]))
        )

    def __str__(self) -> str:
        return "(" + ",".join(str(p) for p in self.parts) + ")"


@lru_cache(maxsize=None)
def partitions_of(n: int) -> tuple[Partition, ...]:
    """All partitions of n in lexicographically decreasing order."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        return (Partition(),)

    def gen(remaining: int, maxpart: int, prefix: tuple[int, ...]):
        if remaining == 0:
            yield prefix
            return
        for p in range(min(remaining, maxpart), 0, -1):
            yield from gen(remaining - p, p, prefix + (p,))

    return tuple(Partition(p) for p in gen(n, n, ()))


@lru_cache(maxsize=None)
def compositions_of(n: int) -> tuple[Pattern, ...]:
    """All compositions of n, grouped by length k = 1..n.

    Within a length the order is lexicographically decreasing, so the
    whole listing is deterministic.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        return ((),)
    out: list[Pattern] = []
    for k in range(1, n + 1):
        out.extend(_compositions_length(n, k))
    return tuple(out)


def _compositions_length(n: int, k: int) -> list[Pattern]:
    if k == 1:
        return [(n,)]
    out = []
    for first in range(n - k + 1, 0, -1):
        for rest in _compositions_length(n - first, k - 1):
            out.append((first,) + rest)
    return out


@dataclass(frozen=True)
class TableauFrame:
    """Row-major labeling of the boxes of a shape by positions 0..n-1.

    ``rows``/``cols`` are the label sets of the horizontal and vertical
    partitions of {0,..,n-1}; the symmetrizer is built from them.
    """

    shape: Partition
    rows: tuple[tuple[int, ...], ...]
    cols: tuple[tuple[int, ...], ...]


@lru_cache(maxsize=None)
def frame_of(shape: Partition) -> TableauFrame:
    rows = []
    label = 0
    for p in shape:
        rows.append(tuple(range(label, label + p)))
        label += p
    ncols = shape[0] if len(shape) else 0
    cols = []
    for c in range(ncols):
        col = []
        for r, p in enumerate(shape):
            if c < p:
                col.append(rows[r][c])
        cols.append(tuple(col))
    return TableauFrame(shape, tuple(rows), tuple(cols))


@lru_cache(maxsize=None)
def ssyt_with_pattern(shape: Partition, pattern: Pattern) -> tuple[tuple[tuple[int, ...], ...], ...]:
    """All semistandard fillings of ``shape`` with letter i+1 used pattern[i] times.

    Rows weakly increase, columns strictly increase.  Tableaux are
    returned sorted by the lexicographic order of their row-major
    reading, which fixes the basis order of every Gram block.
    """
    n = shape.n
    if sum(pattern) != n:
        raise ValueError("pattern must sum to the partition weight")
    if n == 0:
        return ((),)
    remaining = list(pattern)
    rows = [[0] * p for p in shape.parts]
    out: list[tuple[tuple[int, ...], ...]] = []

    cells = [(r, c) for r, p in enumerate(shape.parts) for c in range(p)]

    def backtrack(idx: int) -> None:
        if idx == n:
            out.append(tuple(tuple(row) for row in rows))
            return
        r, c = cells[idx]
        lo = rows[r][c - 1] if c > 0 else 1
        above = rows[r - 1][c] if r > 0 else 0
        lo = max(lo, above + 1)
        for letter in range(lo, len(remaining) + 1):
            if remaining[letter - 1] == 0:
                continue
            remaining[letter - 1] -= 1
            rows[r][c] = letter
            backtrack(idx + 1)
            remaining[letter - 1] += 1
        rows[r][c] = 0

    backtrack(0)
    out.sort(key=lambda t: tuple(x for row in t for x in row))
    return tuple(out)


@lru_cache(maxsize=None)
def kostka(shape: Partition, pattern: Pattern) -> int:
    return len(ssyt_with_pattern(shape, pattern))


@lru_cache(maxsize=None)
def dimension_poly(shape: Partition) -> Poly:
    """Number of semistandard tableaux with entries <= N, as a polynomial.

    Counted pattern by pattern: contents using k distinct letters come
    in C(N,k) relabelings, so the total is
    sum_k (sum over length-k patterns of the filling count) * C(N,k).
    """
    n = shape.n
    if n == 0:
        return Poly.const(1)
    out = Poly()
    for pattern in compositions_of(n):
        count = kostka(shape, pattern)
        if count:
            out = out + binomial_poly(len(pattern)) * count
    return out


@lru_cache(maxsize=None)
def standard_tableau_count(shape: Partition) -> int:
    """Number of standard fillings, by the hook length formula."""
    n = shape.n
    if n == 0:
        return 1
    conj = shape.conjugate()
    hooks = 1
    for r, p in enumerate(shape.parts):
        for c in range(p):
            hooks *= (p - c) + (conj[c] - r) - 1
    return math.factorial(n) // hooks


def enumerate_ssyt(shape: Partition, max_letter: int) -> list[tuple[tuple[int, ...], ...]]:
    """Direct enumeration of all SSYT with entries in 1..max_letter."""
    out = []
    for pattern in compositions_of(shape.n):
        k = len(pattern)
        if k > max_letter:
            continue
        for tab in ssyt_with_pattern(shape, pattern):
            for letters in _increasing_tuples(k, max_letter):
                relabel = {i + 1: letters[i] for i in range(k)}
                out.append(tuple(tuple(relabel[x] for x in row) for row in tab))
    return out


def _increasing_tuples(k: int, max_letter: int):
    import itertools

    return itertools.combinations(range(1, max_letter + 1), k)
