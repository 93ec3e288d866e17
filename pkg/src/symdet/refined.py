"""Refined symmetrizations for the orthogonal group.

The symmetrized space of a shape decomposes under the orthogonal group
of the form into a traceless core plus copies of smaller refined
pieces, reached by inserting paired basis vectors at chosen tensor
positions and re-symmetrizing.  For each smaller shape gamma the
coupling is a symmetric matrix of polynomials in N; its size is the
multiplicity and its determinant class feeds the refined determinant.

All concrete computation runs in the orthonormal model (every basis
vector of norm 1): the couplings are polynomials in N alone, so no
generality is lost.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .combinat import Partition, frame_of, partitions_of
from .exact import (
    POLY_N,
    Poly,
    SquareClassFormula,
    interpolate,
    poly_factor_rational,
    poly_matrix_det,
    poly_matrix_rank,
    squarefree_part,
)
from .gram import symmetrization_determinant
from .symmetrizer import SignedWordSum, apply_symmetrizer

Word = tuple[int, ...]
Chain = tuple[tuple[int, int], ...]

MAX_REFINED_N = 7


@dataclass
class ConcreteTensor:
    """Sparse element of the n-th tensor power at concrete dimension."""

    degree: int
    dim: int
    terms: dict[Word, Fraction]

    def add(self, word: Word, coeff) -> None:
        c = self.terms.get(word, 0) + coeff
        if c:
            self.terms[word] = c
        else:
            self.terms.pop(word, None)

    def norm(self) -> Fraction:
        """Inner product with itself in the orthonormal model."""
        return sum((c * c for c in self.terms.values()), Fraction(0))

    def dot(self, other: "ConcreteTensor") -> Fraction:
        a, b = self.terms, other.terms
        if len(b) < len(a):
            a, b = b, a
        return sum((c * b[w] for w, c in a.items() if w in b), Fraction(0))

    def is_zero(self) -> bool:
        return not self.terms

    @staticmethod
    def from_word_sum(s: SignedWordSum, dim: int) -> "ConcreteTensor":
        return ConcreteTensor(s.shape.n, dim, {w: Fraction(c) for w, c in s.terms.items()})


def phi_insert(t: ConcreteTensor, i: int, j: int) -> ConcreteTensor:
    """Insert a summed dual pair at positions i < j of the result.

    Positions are 1-based and refer to the new degree t.degree + 2; the
    original factors keep their order in the remaining slots.
    """
    n2 = t.degree + 2
    if not (1 <= i < j <= n2):
        raise ValueError("insertion positions out of range")
    out = ConcreteTensor(n2, t.dim, {})
    slots = [p for p in range(n2) if p not in (i - 1, j - 1)]
    for word, coeff in t.terms.items():
        template = [0] * n2
        for p, letter in zip(slots, word):
            template[p] = letter
        for k in range(1, t.dim + 1):
            template[i - 1] = k
            template[j - 1] = k
            out.add(tuple(template), coeff)
    return out


def pi_contract(t: ConcreteTensor, i: int, j: int) -> ConcreteTensor:
    """Evaluate the form at positions i < j and drop them (orthonormal)."""
    if t.degree < 2:
        raise ValueError("tensor degree must be at least 2")
    if not (1 <= i < j <= t.degree):
        raise ValueError("contraction positions out of range")
    out = ConcreteTensor(t.degree - 2, t.dim, {})
    for word, coeff in t.terms.items():
        if word[i - 1] != word[j - 1]:
            continue
        reduced = tuple(x for p, x in enumerate(word) if p not in (i - 1, j - 1))
        out.add(reduced, coeff)
    return out


def embed_chain(chain: Chain, src: ConcreteTensor, target_degree: int) -> ConcreteTensor:
    """Apply the insertions of a chain, pair positions in the final frame.

    Each pair receives its own summation letter; the source letters
    fill the remaining positions in order.  Equivalent to composing
    single insertions whose indices are written for the final degree.
    """
    pairs = list(chain)
    taken = [p for ij in pairs for p in ij]
    if len(set(taken)) != len(taken):
        raise ValueError("chain pairs must be disjoint")
    if any(not (1 <= i < j <= target_degree) for i, j in pairs):
        raise ValueError("chain positions out of range")
    if src.degree + 2 * len(pairs) != target_degree:
        raise ValueError("chain length does not bridge the degrees")
    slots = [p for p in range(target_degree) if p + 1 not in taken]
    out = ConcreteTensor(target_degree, src.dim, {})
    dim = src.dim
    for word, coeff in src.terms.items():
        template = [0] * target_degree
        for p, letter in zip(slots, word):
            template[p] = letter
        for ks in itertools.product(range(1, dim + 1), repeat=len(pairs)):
            for (i, j), k in zip(pairs, ks):
                template[i - 1] = k
                template[j - 1] = k
            out.add(tuple(template), coeff)
    return out


def symmetrize_tensor(shape: Partition, t: ConcreteTensor) -> ConcreteTensor:
    """Apply the shape's symmetrizer to every term.

    Terms are first merged by their row-sorted form: words in one row
    orbit have identical symmetrizer images, so only one orbit sum per
    class is expanded.
    """
    from .symmetrizer import _symmetrizer_tables

    if t.degree != shape.n:
        raise ValueError("degree must match the shape weight")
    if shape.n < 2:
        return ConcreteTensor(t.degree, t.dim, dict(t.terms))
    rows, cols = _symmetrizer_tables(shape)
    segs = []
    start = 0
    for p in shape.parts:
        segs.append((start, start + p))
        start += p
    merged: dict[Word, Fraction] = {}
    for word, coeff in t.terms.items():
        key = tuple(x for a, b in segs for x in sorted(word[a:b]))
        c = merged.get(key, 0) + coeff
        if c:
            merged[key] = c
        else:
            del merged[key]
    acc: dict[Word, Fraction] = {}
    for word, coeff in merged.items():
        row_orbit: dict[Word, int] = {}
        for get in rows:
            u = get(word)
            row_orbit[u] = row_orbit.get(u, 0) + 1
        for get, sign in cols:
            s = sign * coeff
            for u, cnt in row_orbit.items():
                v = get(u)
                c = acc.get(v, 0) + s * cnt
                if c:
                    acc[v] = c
                else:
                    del acc[v]
    return ConcreteTensor(t.degree, t.dim, acc)


def reference_vector(gamma: Partition, dim: int) -> ConcreteTensor:
    """Symmetrizer image of the all-distinct word, a traceless element.

    Every contraction kills it because all letters differ, so it lies
    in the refined part of gamma's symmetrization.
    """
    m = gamma.n
    if dim < m:
        raise ValueError("ambient dimension too small for the reference vector")
    if m == 0:
        return ConcreteTensor(0, dim, {(): Fraction(1)})
    word = tuple(range(1, m + 1))
    img = apply_symmetrizer(frame_of(gamma), word)
    return ConcreteTensor.from_word_sum(img, dim)


def constituent_gram(
    shape: Partition, gamma: Partition, chains: list[Chain], N: int
) -> list[list[Fraction]]:
    """Coupling Gram matrix of the chain embeddings at concrete N.

    Entry (a,b) is the inner product of the symmetrized chain images of
    the reference vector, divided by the reference vector's own norm;
    with that normalization the matrix is the coupling in a basis of
    the multiplicity space, anchored to the restriction form on the
    refined gamma space.
    """
    n = shape.n
    if N < n:
        raise ValueError("ambient too small")
    v = reference_vector(gamma, N)
    nv = v.norm()
    images = [symmetrize_tensor(shape, embed_chain(ch, v, n)) for ch in chains]
    size = len(images)
    out = [[Fraction(0)] * size for _ in range(size)]
    for a in range(size):
        for b in range(a, size):
            val = images[a].dot(images[b]) / nv
            out[a][b] = val
            out[b][a] = val
    return out


# ---------------------------------------------------------------------------
# chain pools
# ---------------------------------------------------------------------------


def _aligned_pairs(n: int) -> list[tuple[int, int]]:
    return [(2 * i - 1, 2 * i) for i in range(1, n // 2 + 1)]


def chain_pool(n: int, j: int, cap: int) -> list[Chain]:
    """Deterministic candidate chains: aligned pairs first, one straddle per level.

    The first pair is always (1,2); deeper levels offer the remaining
    aligned pairs plus the smallest non-aligned disjoint pair, so the
    pool stays small but spans the coupling space in practice.
    """
    aligned = set(_aligned_pairs(n))

    def extend(prefix: list[tuple[int, int]], used: set[int]) -> list[Chain]:
        if len(prefix) == j:
            return [tuple(prefix)]
        options: list[tuple[int, int]] = []
        for p in _aligned_pairs(n):
            if p[0] not in used and p[1] not in used and (not prefix or p > prefix[-1]):
                options.append(p)
        straddle = None
        for i, jj in itertools.combinations(range(1, n + 1), 2):
            if (i, jj) in aligned or i in used or jj in used:
                continue
            straddle = (i, jj)
            break
        if straddle is not None and straddle not in options:
            options.append(straddle)
        out = []
        for p in options:
            out.extend(extend(prefix + [p], used | set(p)))
        return out

    level1 = [(1, 2)]
    if j == 1 and n >= 3:
        level1.append((1, 3))
    chains: list[Chain] = []
    for first in level1:
        chains.extend(extend([first], set(first)))
    # dedupe preserving order
    seen = set()
    uniq = [c for c in chains if not (c in seen or seen.add(c))]
    return uniq[:cap]


def all_disjoint_chains(n: int, j: int) -> list[Chain]:
    """Every chain of j disjoint ordered pairs, lexicographically."""
    out: list[Chain] = []

    def rec(prefix: list[tuple[int, int]], used: set[int]) -> None:
        if len(prefix) == j:
            out.append(tuple(prefix))
            return
        for i, jj in itertools.combinations(range(1, n + 1), 2):
            if i in used or jj in used:
                continue
            if prefix and (i, jj) <= prefix[-1]:
                continue
            rec(prefix + [(i, jj)], used | {i, jj})

    rec([], set())
    return out


# ---------------------------------------------------------------------------
# constituents as polynomial matrices
# ---------------------------------------------------------------------------


@dataclass
class RefinedConstituent:
    gamma: Partition
    multiplicity: int
    chains: tuple[Chain, ...]
    c_matrix: tuple[tuple[Poly, ...], ...]
    c_det: Poly
    c_reduced: Poly  # squarefree content times distinct linear factors
    reduced_ok: bool  # False when the determinant did not split


def _interpolated_gram(
    shape: Partition, gamma: Partition, chains: list[Chain]
) -> list[list[Poly]]:
    """Entrywise polynomial Gram over the sample window.

    Each entry has degree at most twice the chain length; sampling at
    2j+2 consecutive dimensions leaves one point to cross-check the
    degree model, and a failure raises rather than refitting.
    """
    n = shape.n
    j = len(chains[0])
    bound = 2 * j
    samples = list(range(n, n + bound + 2))
    grams = {N: constituent_gram(shape, gamma, chains, N) for N in samples}
    size = len(chains)
    out = [[Poly()] * size for _ in range(size)]
    for a in range(size):
        for b in range(a, size):
            pts = [(N, grams[N][a][b]) for N in samples]
            p = interpolate(pts, bound)
            out[a][b] = p
            out[b][a] = p
    return out


def _reduce_det(det: Poly) -> tuple[Poly, bool]:
    """Square-class representative of a polynomial value.

    Squarefree part of the content times each linear factor to the
    parity of its multiplicity.  If a nonlinear residual survives the
    original polynomial is returned unreduced.
    """
    content, linear, residual = poly_factor_rational(det)
    if residual.degree > 0:
        return det, False
    sf = squarefree_part(content)[0]
    out = Poly.const(sf)
    for fac, mult in linear:
        if mult % 2:
            out = out * fac
    return out, True


def _candidate_chains(n: int, j: int) -> list[Chain]:
    """Structured pool first, then every remaining disjoint-pair chain."""
    structured = chain_pool(n, j, cap=1 << 20)
    seen = set(structured)
    return structured + [c for c in all_disjoint_chains(n, j) if c not in seen]


def _nonzero_chains(shape: Partition, gamma: Partition, candidates: list[Chain], N: int):
    """Chains whose symmetrized embedding of the reference vector survives.

    The ambient form is positive definite in the orthonormal model, so
    a chain contributes to the coupling at this N exactly when its
    image is nonzero; if the constituent is present at all, some chain
    image must survive (a nonzero invariant map cannot kill a nonzero
    vector of an irreducible).
    """
    v = reference_vector(gamma, N)
    for ch in candidates:
        if not symmetrize_tensor(shape, embed_chain(ch, v, shape.n)).is_zero():
            yield ch


@lru_cache(maxsize=None)
def constituent_poly(shape: Partition, gamma: Partition) -> RefinedConstituent | None:
    """Coupling of a smaller shape inside a symmetrization, or None.

    Scans candidate chains for surviving images, interpolates the Gram
    of the survivors to polynomials, and reads the multiplicity off as
    the rank over the rational function field.  A pool whose rank
    saturates it is widened before the multiplicity is trusted; absence
    means every disjoint-pair chain killed the reference vector, which
    is cross-checked at a second dimension.
    """
    n, m = shape.n, gamma.n
    if (n - m) % 2 or n == m:
        raise ValueError("gamma must have weight n - 2j for some j >= 1")
    j = (n - m) // 2

    candidates = _candidate_chains(n, j)
    survivors = _nonzero_chains(shape, gamma, candidates, n + 1)
    pool = list(itertools.islice(survivors, 4))
    if not pool:
        if any(True for _ in _nonzero_chains(shape, gamma, candidates, n + 2)):
            raise ArithmeticError(
                f"inconsistent vanishing for {shape} / {gamma}"
            )  # pragma: no cover
        return None

    while True:
        gram = _interpolated_gram(shape, gamma, pool)
        rank = poly_matrix_rank(gram)
        if rank < len(pool):
            break
        extra = list(itertools.islice(survivors, 2 * rank + 2 - len(pool)))
        if not extra:
            break
        pool += extra

    chosen: list[int] = []
    for idx in range(len(pool)):
        trial = chosen + [idx]
        sub = [[gram[a][b] for b in trial] for a in trial]
        if poly_matrix_rank(sub) == len(trial):
            chosen.append(idx)
        if len(chosen) == rank:
            break
    c_matrix = tuple(tuple(gram[a][b] for b in chosen) for a in chosen)
    det = poly_matrix_det([list(r) for r in c_matrix])
    reduced, ok = _reduce_det(det)
    return RefinedConstituent(
        gamma=gamma,
        multiplicity=rank,
        chains=tuple(pool[i] for i in chosen),
        c_matrix=c_matrix,
        c_det=det,
        c_reduced=reduced,
        reduced_ok=ok,
    )


# ---------------------------------------------------------------------------
# full decomposition
# ---------------------------------------------------------------------------


@dataclass
class RefinedResult:
    shape: Partition
    constituents: list[RefinedConstituent]
    refined_dimension: Poly
    refined_det: SquareClassFormula  # exact exponents; reduce for display


@lru_cache(maxsize=None)
def refined_decomposition(shape: Partition) -> RefinedResult:
    """Constituent list, refined dimension and refined determinant.

    The refined dimension subtracts every coupled copy recursively; the
    refined determinant divides the full determinant class by each
    coupling determinant (raised to the copy's dimension) and each
    copy's refined determinant (raised to the multiplicity).
    """
    n = shape.n
    if n > MAX_REFINED_N:
        raise ValueError(f"refined decomposition supported for n <= {MAX_REFINED_N}")
    if n == 0:
        return RefinedResult(shape, [], Poly.const(1), SquareClassFormula.one())
    if n == 1:
        f = SquareClassFormula.one()
        f.detB_exponent = Poly.const(1)
        return RefinedResult(shape, [], POLY_N, f)

    constituents: list[RefinedConstituent] = []
    for j in range(1, n // 2 + 1):
        for gamma in partitions_of(n - 2 * j):
            c = constituent_poly(shape, gamma)
            if c is not None:
                constituents.append(c)

    sym = symmetrization_determinant(shape)
    dim = sym.dimension
    det = sym.full_formula()
    for c in constituents:
        sub = refined_decomposition(c.gamma)
        dim = dim - sub.refined_dimension * c.multiplicity
        det = det.with_poly_value(c.c_det, -sub.refined_dimension)
        det = det.times(sub.refined_det, power=-c.multiplicity)
    return RefinedResult(shape, constituents, dim, det)
