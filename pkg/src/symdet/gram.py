"""Gram blocks of symmetrized forms and their exact determinants.

For a shape of weight n the symmetrized form splits orthogonally by the
content of the tableau basis.  Contents sharing one multiplicity
pattern give the same integer block, and a pattern with k distinct
letters occurs once per k-subset of {1..N}, i.e. with multiplicity
C(N,k).  The determinant class of the whole form is therefore the
product over patterns of det(block)^C(N,k), times det(B) raised to the
exact exponent dim * n / N.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache

from .combinat import (
    Partition,
    Pattern,
    compositions_of,
    dimension_poly,
    frame_of,
    kostka,
    ssyt_with_pattern,
)
from .exact import (
    POLY_N,
    Poly,
    SquareClassFormula,
    bareiss_det,
    binomial_poly,
    factorint,
)
from .symmetrizer import apply_symmetrizer, inner_product_reduced, word_of_tableau


class NoTableauxError(ValueError):
    """Requested a Gram block for a pattern admitting no tableaux."""


@dataclass(frozen=True)
class GramBlock:
    shape: Partition
    pattern: Pattern
    matrix: tuple[tuple[int, ...], ...]
    det: int

    @property
    def size(self) -> int:
        return len(self.matrix)

    @property
    def k(self) -> int:
        """Number of distinct letters; the block multiplicity is C(N,k)."""
        return len(self.pattern)


@lru_cache(maxsize=None)
def gram_block(shape: Partition, pattern: Pattern) -> GramBlock:
    """Exact Gram block of the symmetrized tableau basis for one pattern.

    Entry (s,t) is the coefficientwise inner product of the symmetrizer
    images of the tableau words; the determinant comes from fraction-free
    elimination over the integers.
    """
    tableaux = ssyt_with_pattern(shape, pattern)
    if not tableaux:
        raise NoTableauxError(f"no tableaux for shape {shape} pattern {pattern}")
    frame = frame_of(shape)
    images = [apply_symmetrizer(frame, word_of_tableau(frame, t)) for t in tableaux]
    size = len(images)
    matrix = [[0] * size for _ in range(size)]
    for i in range(size):
        for j in range(i, size):
            v = inner_product_reduced(images[i], images[j])
            matrix[i][j] = v
            matrix[j][i] = v
    det = bareiss_det(matrix)
    return GramBlock(shape, pattern, tuple(tuple(row) for row in matrix), det)


def _block_task(args: tuple[Partition, Pattern]) -> GramBlock:
    return gram_block(*args)


@dataclass
class SymDetResult:
    shape: Partition
    blocks: dict[Pattern, GramBlock]
    c_formula: SquareClassFormula  # exact exponents, before square reduction
    dimension: Poly
    detB_exponent: Poly

    def c_reduced(self) -> SquareClassFormula:
        return self.c_formula.reduced()

    def full_formula(self) -> SquareClassFormula:
        out = self.c_formula.copy()
        out.detB_exponent = self.detB_exponent
        return out


def patterns_of(shape: Partition) -> list[Pattern]:
    """Patterns with at least one tableau, in the deterministic order."""
    return [p for p in compositions_of(shape.n) if kostka(shape, p) > 0]


@lru_cache(maxsize=None)
def symmetrization_determinant(shape: Partition, jobs: int = 1) -> SymDetResult:
    """Assemble every Gram block of a shape and the determinant formula.

    Blocks are independent, so they may be computed in parallel; the
    reduction runs in the fixed pattern order either way.
    """
    if shape.n < 1:
        raise ValueError("need a partition of n >= 1")
    pats = patterns_of(shape)
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            blocks = list(pool.map(_block_task, [(shape, p) for p in pats]))
    else:
        blocks = [gram_block(shape, p) for p in pats]
    block_map = {b.pattern: b for b in blocks}

    c_formula = SquareClassFormula.one()
    for b in blocks:
        c_formula = c_formula.times(
            SquareClassFormula.from_integer(b.det, binomial_poly(b.k))
        )
    dim = dimension_poly(shape)
    detb = (dim * shape.n).divexact(POLY_N)
    return SymDetResult(shape, block_map, c_formula, dim, detb)


# ---------------------------------------------------------------------------
# closed forms for the four infinite families
# ---------------------------------------------------------------------------


def closed_form_c(shape: Partition) -> SquareClassFormula | None:
    """Unreduced closed form of the determinant class, when one is known.

    Covers the single row, the single column, and the two near-column
    hooks (2,1,..,1) and (3,1,..,1); returns None for other shapes.
    """
    parts = shape.parts
    n = shape.n
    if len(parts) == 1:
        return _closed_row(n)
    if all(p == 1 for p in parts):
        return SquareClassFormula.from_integer(math.factorial(n), binomial_poly(n))
    if parts[0] == 2 and all(p == 1 for p in parts[1:]):
        return _closed_two_hook(n)
    if parts[0] == 3 and all(p == 1 for p in parts[1:]):
        return _closed_three_hook(n)
    return None


def _closed_row(n: int) -> SquareClassFormula:
    # product over compositions of the multinomial, per k-block
    out = SquareClassFormula.one()
    for comp in compositions_of(n):
        coeff = math.factorial(n)
        for x in comp:
            coeff //= math.factorial(x)
        out = out.times(
            SquareClassFormula.from_integer(coeff, binomial_poly(len(comp)))
        )
    return out


def _closed_two_hook(n: int) -> SquareClassFormula:
    # n^C(N,n) * ((n-1)!)^((n-1) * C(N+1,n))
    cn = binomial_poly(n)
    cn1 = binomial_poly(n - 1)
    out = SquareClassFormula.from_integer(n, cn)
    return out.times(
        SquareClassFormula.from_integer(math.factorial(n - 1), (cn + cn1) * (n - 1))
    )


def _closed_three_hook(n: int) -> SquareClassFormula:
    # (n-2)!^x * 2^y * n^z assembled from the per-pattern contributions:
    #   one letter tripled              -> (n-2)!            size 1
    #   two letters doubled             -> 2*(n-2)!          size 1
    #   one of n-1 letters doubled      -> det (n-2)!^(n-2) * 2^(n-3) * n
    #   all letters distinct            -> det (2(n-2)!)^C(n-1,2) * n^(n-2)
    cn = binomial_poly(n)
    cn1 = binomial_poly(n - 1)
    cn2 = binomial_poly(n - 2)
    half = math.comb(n - 1, 2)
    x = (cn2 + cn) * half + cn1 * ((n - 1) * (n - 2))
    y = cn2 * math.comb(n - 2, 2) + cn1 * ((n - 1) * (n - 3)) + cn * half
    z = cn1 * (n - 1) + cn * (n - 2)
    out = SquareClassFormula.from_integer(math.factorial(n - 2), x)
    out = out.times(SquareClassFormula.from_integer(2, y))
    return out.times(SquareClassFormula.from_integer(n, z))


def hook_block_det(n: int, ell: int) -> int:
    """Determinant of the multiplicity-free block of the hook (ell, 1^(n-ell)).

    The block is the Gram matrix of the C(n-1, ell-1) tableaux on a
    content of n distinct letters; rescaling by the off-diagonal value
    identifies it with an exterior power of the I+J lattice of rank n-1,
    whose determinant is n^C(n-2, ell-2).
    """
    if not 1 <= ell <= n:
        raise ValueError("need 1 <= ell <= n")
    base = math.factorial(ell - 1) * math.factorial(n - ell + 1)
    size_exp = math.comb(n - 1, ell - 1)
    n_exp = math.comb(n - 2, ell - 2) if ell >= 2 else 0
    return base**size_exp * n**n_exp
