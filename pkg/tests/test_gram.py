import math

import pytest

from symdet.combinat import (
    Partition,
    compositions_of,
    dimension_poly,
    enumerate_ssyt,
    frame_of,
    kostka,
    partitions_of,
)
from symdet.exact import POLY_N, Poly
from symdet.gram import (
    NoTableauxError,
    closed_form_c,
    gram_block,
    hook_block_det,
    patterns_of,
    symmetrization_determinant,
)
from symdet.symmetrizer import apply_symmetrizer, word_of_tableau

P = Partition


class TestWorkedBlocks:
    def test_two_one(self):
        assert gram_block(P((2, 1)), (2, 1)).matrix == ((8,),)
        assert gram_block(P((2, 1)), (1, 2)).matrix == ((2,),)
        block = gram_block(P((2, 1)), (1, 1, 1))
        assert block.matrix == ((4, -2), (-2, 4))
        assert block.det == 12

    def test_three_one(self):
        assert gram_block(P((3, 1)), (3, 1)).matrix == ((72,),)
        assert gram_block(P((3, 1)), (2, 2)).matrix == ((16,),)
        assert gram_block(P((3, 1)), (1, 3)).matrix == ((8,),)
        assert gram_block(P((3, 1)), (2, 1, 1)).matrix == ((24, -8), (-8, 24))
        assert gram_block(P((3, 1)), (1, 2, 1)).matrix == ((24, -8), (-8, 8))
        # under the row-major lexicographic tableau order the two diagonal
        # norms of the (1,1,2) block come out swapped relative to (1,2,1);
        # the matrices are congruent by the basis transposition
        assert gram_block(P((3, 1)), (1, 1, 2)).matrix == ((8, -8), (-8, 24))
        block = gram_block(P((3, 1)), (1, 1, 1, 1))
        assert block.matrix == ((12, -4, -4), (-4, 12, -4), (-4, -4, 12))
        assert block.det == 1024

    def test_two_two(self):
        assert gram_block(P((2, 2)), (2, 2)).matrix == ((64,),)
        assert gram_block(P((2, 2)), (2, 1, 1)).matrix == ((32,),)
        assert gram_block(P((2, 2)), (1, 2, 1)).matrix == ((8,),)
        assert gram_block(P((2, 2)), (1, 1, 2)).matrix == ((32,),)
        block = gram_block(P((2, 2)), (1, 1, 1, 1))
        assert block.matrix == ((16, -8), (-8, 16))
        assert block.det == 192

    def test_empty_pattern_rejected(self):
        with pytest.raises(NoTableauxError, match="no tableaux"):
            gram_block(P((1, 1, 1)), (2, 1))


def _symbolic_inner(u, v):
    """Full inner product with symbolic diagonal form values.

    Returns a dict mapping letter-multiplicity monomials to integers:
    the coefficient of prod a_i^e_i in the inner product.
    """
    out = {}
    for w, cu in u.terms.items():
        cv = v.terms.get(w)
        if cv is None:
            continue
        mono = tuple(sorted(w))
        out[mono] = out.get(mono, 0) + cu * cv
        if out[mono] == 0:
            del out[mono]
    return out


class TestBlockDiagonalStructure:
    def test_dense_oracle_small(self):
        # the full Gram matrix of the tableau basis at concrete N, with
        # symbolic diagonal values, is block diagonal by content and each
        # block is the shared pattern matrix times the content monomial
        for n in range(2, 5):
            for shape in partitions_of(n):
                frame = frame_of(shape)
                for N in range(n, min(n + 2, 6)):
                    tabs = enumerate_ssyt(shape, N)
                    words = [word_of_tableau(frame, t) for t in tabs]
                    images = [apply_symmetrizer(frame, w) for w in words]
                    contents = [tuple(sorted(w)) for w in words]
                    by_content = {}
                    for i, c in enumerate(contents):
                        by_content.setdefault(c, []).append(i)
                    for i in range(len(tabs)):
                        for j in range(len(tabs)):
                            got = _symbolic_inner(images[i], images[j])
                            if contents[i] != contents[j]:
                                assert got == {}, (shape, N, i, j)
                    for content, idxs in by_content.items():
                        idxs.sort(key=lambda i: words[i])
                        pattern = _pattern_of(content)
                        block = gram_block(shape, pattern)
                        for a, ia in enumerate(idxs):
                            for b, ib in enumerate(idxs):
                                entry = _symbolic_inner(images[ia], images[ib])
                                expect = (
                                    {content: block.matrix[a][b]}
                                    if block.matrix[a][b]
                                    else {}
                                )
                                assert entry == expect, (shape, N, content)


def _pattern_of(content):
    from collections import Counter

    counts = Counter(content)
    return tuple(counts[x] for x in sorted(counts))


class TestSymmetrizationDeterminant:
    def test_two_one(self):
        result = symmetrization_determinant(P((2, 1)))
        assert result.c_reduced().render_text() == "3^C(N,3)"
        assert result.detB_exponent == Poly((-1, 0, 1))

    def test_three_one(self):
        result = symmetrization_determinant(P((3, 1)))
        assert result.c_reduced().render_text() == "2^C(N,3)"

    def test_two_two(self):
        result = symmetrization_determinant(P((2, 2)))
        assert result.c_reduced().render_text() == "2^C(N,3) * 3^C(N,4)"

    def test_detb_identity(self):
        for n in range(2, 7):
            for shape in partitions_of(n):
                result = symmetrization_determinant(shape)
                assert result.detB_exponent * POLY_N == result.dimension * n

    def test_block_dets_positive(self):
        for n in range(2, 7):
            for shape in partitions_of(n):
                for block in symmetrization_determinant(shape).blocks.values():
                    assert block.det > 0

    def test_size_consistency(self):
        # sum over patterns of size * C(N,k) equals the dimension
        for n in range(2, 7):
            for shape in partitions_of(n):
                dim = dimension_poly(shape)
                for N in range(n, n + 4):
                    total = sum(
                        kostka(shape, pat) * math.comb(N, len(pat))
                        for pat in patterns_of(shape)
                    )
                    assert total == dim(N)

    def test_parallel_matches_serial(self):
        serial = symmetrization_determinant(P((3, 2)), jobs=1)
        parallel = symmetrization_determinant(P((3, 2)), jobs=2)
        assert serial.c_formula.reduced_key() == parallel.c_formula.reduced_key()
        assert serial.dimension == parallel.dimension
        assert {p: b.matrix for p, b in serial.blocks.items()} == {
            p: b.matrix for p, b in parallel.blocks.items()
        }


class TestClosedForms:
    def test_families_match_engine_small(self):
        shapes = []
        for n in range(2, 7):
            shapes += [P((n,)), P((1,) * n)]
        for n in range(3, 7):
            shapes.append(P((2,) + (1,) * (n - 2)))
        for n in range(4, 7):
            shapes.append(P((3,) + (1,) * (n - 3)))
        for shape in shapes:
            closed = closed_form_c(shape)
            assert closed is not None, shape
            engine = symmetrization_determinant(shape)
            assert closed.reduced_key() == engine.c_formula.reduced_key(), shape

    def test_unsupported_returns_none(self):
        assert closed_form_c(P((2, 2))) is None
        assert closed_form_c(P((3, 2))) is None
        assert closed_form_c(P((4, 2, 1))) is None

    def test_exterior_power_value(self):
        closed = closed_form_c(P((1, 1, 1, 1, 1)))
        assert closed.evaluate_class(5) == 30  # 5! = 120 ~ 30 modulo squares


class TestHookBlockDet:
    def test_matches_direct_gram(self):
        cases = [
            (3, 2, P((2, 1))),
            (4, 2, P((2, 1, 1))),
            (4, 3, P((3, 1))),
            (5, 2, P((2, 1, 1, 1))),
            (5, 3, P((3, 1, 1))),
            (5, 4, P((4, 1))),
        ]
        for n, ell, shape in cases:
            pattern = (1,) * n
            assert hook_block_det(n, ell) == gram_block(shape, pattern).det, (n, ell)

    def test_single_column(self):
        # the antisymmetrizer block is the scalar n!
        for n in range(2, 7):
            assert hook_block_det(n, 1) == math.factorial(n)
            assert gram_block(P((1,) * n), (1,) * n).det == math.factorial(n)

    def test_single_row(self):
        for n in range(2, 7):
            assert hook_block_det(n, n) == math.factorial(n)

    def test_known_values(self):
        assert hook_block_det(3, 2) == 12
        assert hook_block_det(4, 2) == 864
        assert hook_block_det(4, 3) == 1024

    def test_bounds(self):
        with pytest.raises(ValueError):
            hook_block_det(4, 0)
        with pytest.raises(ValueError):
            hook_block_det(4, 5)
