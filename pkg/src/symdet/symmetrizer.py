"""Row/column symmetrizer acting on formal sums of words.

A word is the letter sequence of a pure tensor (letter i at tensor
position i).  The symmetrizer of a shape is the signed double sum over
its column group and row group; applying it to a word yields a signed
integer combination of words with the same letter multiset.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from functools import lru_cache
from operator import itemgetter

from .combinat import Partition, TableauFrame, frame_of

Word = tuple[int, ...]


@dataclass
class SignedWordSum:
    """Sparse integer combination of equal-length words."""

    shape: Partition
    terms: dict[Word, int] = field(default_factory=dict)

    def add(self, word: Word, coeff: int) -> None:
        c = self.terms.get(word, 0) + coeff
        if c:
            self.terms[word] = c
        else:
            self.terms.pop(word, None)

    def scaled(self, c: int) -> "SignedWordSum":
        if c == 0:
            return SignedWordSum(self.shape)
        return SignedWordSum(self.shape, {w: c * v for w, v in self.terms.items()})

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SignedWordSum)
            and self.shape == other.shape
            and self.terms == other.terms
        )

    def sorted_terms(self) -> list[tuple[Word, int]]:
        return sorted(self.terms.items())

    def content(self) -> tuple[int, ...]:
        if not self.terms:
            return ()
        return tuple(sorted(next(iter(self.terms))))


def _perm_sign(perm: tuple[int, ...]) -> int:
    seen = [False] * len(perm)
    sign = 1
    for i in range(len(perm)):
        if seen[i]:
            continue
        length = 0
        j = i
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def _block_permutations(blocks: tuple[tuple[int, ...], ...], n: int):
    """All permutations fixing each block setwise, as inverse index tuples.

    Yields (inverse, sign) pairs; applying g to a word w is
    tuple(w[inverse[i]] for i) since position i of g*w receives the
    letter from position g^{-1}(i).
    """
    per_block = []
    for block in blocks:
        if len(block) < 2:
            continue
        per_block.append([(block, perm) for perm in itertools.permutations(block)])
    if not per_block:
        yield tuple(range(n)), 1
        return
    for combo in itertools.product(*per_block):
        perm = list(range(n))
        for block, images in combo:
            for src, dst in zip(block, images):
                perm[src] = dst
        perm_t = tuple(perm)
        sign = _perm_sign(perm_t)
        inverse = [0] * n
        for i, p in enumerate(perm_t):
            inverse[p] = i
        yield tuple(inverse), sign


@lru_cache(maxsize=None)
def _symmetrizer_tables(shape: Partition):
    """Compiled permutation appliers for the row-major frame.

    Returns (row getters, signed column getters); a getter maps a word
    tuple to its image under one group element.  Requires n >= 2.
    """
    frame = frame_of(shape)
    n = shape.n
    if n < 2:
        raise ValueError("symmetrizer tables need n >= 2")
    rows = tuple(
        itemgetter(*inv) for inv, _ in _block_permutations(frame.rows, n)
    )
    cols = tuple(
        (itemgetter(*inv), sign) for inv, sign in _block_permutations(frame.cols, n)
    )
    return rows, cols


def word_of_tableau(frame: TableauFrame, tableau: tuple[tuple[int, ...], ...]) -> Word:
    """Letter at position i = entry of the box labeled i (row-major)."""
    if tuple(len(r) for r in tableau) != frame.shape.parts:
        raise ValueError("tableau shape does not match the frame")
    return tuple(x for row in tableau for x in row)


def apply_symmetrizer(frame: TableauFrame, word: Word) -> SignedWordSum:
    """Signed double orbit sum of the word under the frame's groups.

    The row group acts first, the signed column group second; the
    coefficient of each image word is accumulated exactly.
    """
    n = frame.shape.n
    if len(word) != n:
        raise ValueError("word length must equal the shape weight")
    if n < 2:
        return SignedWordSum(frame.shape, {word: 1})
    rows, cols = _symmetrizer_tables(frame.shape)
    row_orbit: dict[Word, int] = {}
    for get in rows:
        u = get(word)
        row_orbit[u] = row_orbit.get(u, 0) + 1
    out = SignedWordSum(frame.shape)
    terms = out.terms
    for get, sign in cols:
        for u, cnt in row_orbit.items():
            v = get(u)
            c = terms.get(v, 0) + sign * cnt
            if c:
                terms[v] = c
            else:
                del terms[v]
    return out


def symmetrizer_order(shape: Partition) -> int:
    """|row group| * |column group|, the number of summands."""
    rows, cols = _symmetrizer_tables(shape)
    return len(rows) * len(cols)


def inner_product_reduced(u: SignedWordSum, v: SignedWordSum) -> int:
    """Coefficientwise dot product (orthonormal model, q-factor removed)."""
    if u.shape != v.shape:
        raise ValueError("mismatched shapes")
    a, b = u.terms, v.terms
    if len(b) < len(a):
        a, b = b, a
    return sum(c * b.get(w, 0) for w, c in a.items())


def apply_symmetrizer_to_sum(shape: Partition, s: SignedWordSum) -> SignedWordSum:
    out = SignedWordSum(shape)
    frame = frame_of(shape)
    for word, coeff in s.terms.items():
        img = apply_symmetrizer(frame, word)
        for w, c in img.terms.items():
            out.add(w, c * coeff)
    return out


def idempotent_scale(shape: Partition) -> int:
    """e^2 = scale * e; equals n! / (number of standard fillings)."""
    from .combinat import standard_tableau_count

    return math.factorial(shape.n) // standard_tableau_count(shape)
