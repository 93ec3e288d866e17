import math
import random

from hypothesis import given, settings, strategies as st

from symdet.combinat import (
    Partition,
    compositions_of,
    frame_of,
    partitions_of,
    ssyt_with_pattern,
    standard_tableau_count,
)
from symdet.symmetrizer import (
    SignedWordSum,
    apply_symmetrizer,
    apply_symmetrizer_to_sum,
    idempotent_scale,
    inner_product_reduced,
    word_of_tableau,
)


def _sym(shape_parts, word):
    return apply_symmetrizer(frame_of(Partition(shape_parts)), word)


class TestWorkedExpansions:
    """The four expansions of the smallest two-row shape, coefficient-exact."""

    def test_aab(self):
        assert _sym((2, 1), (1, 1, 2)).terms == {(1, 1, 2): 2, (2, 1, 1): -2}

    def test_abb(self):
        assert _sym((2, 1), (1, 2, 2)).terms == {(1, 2, 2): 1, (2, 2, 1): -1}

    def test_abc(self):
        assert _sym((2, 1), (1, 2, 3)).terms == {
            (1, 2, 3): 1,
            (3, 2, 1): -1,
            (2, 1, 3): 1,
            (3, 1, 2): -1,
        }

    def test_acb(self):
        assert _sym((2, 1), (1, 3, 2)).terms == {
            (1, 3, 2): 1,
            (2, 3, 1): -1,
            (3, 1, 2): 1,
            (2, 1, 3): -1,
        }

    def test_antisymmetrizer(self):
        assert _sym((1, 1), (1, 2)).terms == {(1, 2): 1, (2, 1): -1}

    def test_column_repeat_vanishes(self):
        assert _sym((1, 1), (1, 1)).terms == {}


class TestWordOfTableau:
    def test_row_major(self):
        frame = frame_of(Partition((2, 1)))
        assert word_of_tableau(frame, ((1, 1), (2,))) == (1, 1, 2)
        assert word_of_tableau(frame, ((1, 3), (2,))) == (1, 3, 2)

    def test_column_shape(self):
        frame = frame_of(Partition((1, 1, 1)))
        assert word_of_tableau(frame, ((1,), (2,), (3,))) == (1, 2, 3)


class TestInnerProduct:
    def test_norm_of_repeated_letter_image(self):
        e = _sym((2, 1), (1, 1, 2))
        assert inner_product_reduced(e, e) == 8

    def test_cross_term(self):
        u = _sym((2, 1), (1, 2, 3))
        v = _sym((2, 1), (1, 3, 2))
        assert inner_product_reduced(u, v) == -2

    def test_different_content_orthogonal(self):
        u = _sym((2, 1), (1, 1, 2))
        v = _sym((2, 1), (1, 2, 2))
        assert inner_product_reduced(u, v) == 0

    def test_symmetric_and_bilinear(self):
        u = _sym((2, 2), (1, 2, 1, 2))
        v = _sym((2, 2), (1, 1, 2, 2))
        assert inner_product_reduced(u, v) == inner_product_reduced(v, u)
        assert inner_product_reduced(u.scaled(3), v) == 3 * inner_product_reduced(u, v)


def _random_word(rng, n):
    return tuple(rng.randint(1, 4) for _ in range(n))


class TestIdempotentLaw:
    def test_all_shapes_up_to_five(self):
        rng = random.Random(20240817)
        for n in range(2, 6):
            for shape in partitions_of(n):
                frame = frame_of(shape)
                scale = idempotent_scale(shape)
                assert scale * standard_tableau_count(shape) == math.factorial(n)
                for _ in range(3):
                    word = _random_word(rng, n)
                    once = apply_symmetrizer(frame, word)
                    twice = apply_symmetrizer_to_sum(shape, once)
                    assert twice == once.scaled(scale), (shape, word)


class TestContentPreservation:
    @given(
        st.sampled_from([p for n in range(2, 6) for p in partitions_of(n)]),
        st.data(),
    )
    def test_letter_multiset_preserved(self, shape, data):
        word = tuple(
            data.draw(st.integers(min_value=1, max_value=4)) for _ in range(shape.n)
        )
        img = apply_symmetrizer(frame_of(shape), word)
        for w in img.terms:
            assert sorted(w) == sorted(word)


class TestContentOrthogonality:
    def test_exhaustive_different_patterns(self):
        for n in range(2, 6):
            for shape in partitions_of(n):
                frame = frame_of(shape)
                images = {}
                for pattern in compositions_of(n):
                    for tab in ssyt_with_pattern(shape, pattern):
                        word = word_of_tableau(frame, tab)
                        images.setdefault(pattern, []).append(
                            apply_symmetrizer(frame, word)
                        )
                patterns = sorted(images)
                for i, p in enumerate(patterns):
                    for q in patterns[i + 1:]:
                        for u in images[p]:
                            for v in images[q]:
                                assert inner_product_reduced(u, v) == 0


@settings(max_examples=30)
@given(
    st.sampled_from([p for n in range(2, 5) for p in partitions_of(n)]),
    st.data(),
)
def test_no_zero_coefficients_stored(shape, data):
    word = tuple(
        data.draw(st.integers(min_value=1, max_value=3)) for _ in range(shape.n)
    )
    img = apply_symmetrizer(frame_of(shape), word)
    assert all(c != 0 for c in img.terms.values())


def test_signed_word_sum_add_cancels():
    s = SignedWordSum(Partition((2,)))
    s.add((1, 2), 5)
    s.add((1, 2), -5)
    assert s.terms == {}
