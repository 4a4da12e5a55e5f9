# -*- coding: utf-8 -*-
"""Module containing the tests for embedding and sew rewrites."""
import pytest

from ksnake.errors import InapplicableRewriteError, InvalidEmbeddingError
from ksnake.extended.embed import EmbeddingMap, embed_inner_snake, iter_embedding_maps
from ksnake.extended.pipeline import GOLDEN_MAP, GOLDEN_PIVOT
from ksnake.extended.sew import apply_sew_rewrite, iter_sew_rewrites, plan_sew_rewrite, rewrite_indices
from ksnake.partition import LINKAGE_CLASS, class_of
from ksnake.perm import Permutation
from ksnake.snake import Snake
from ksnake.verify import Mode, verify_snake


@pytest.fixture
def embedded(he_s5: Snake) -> Snake:
    """Return the S_5 snake embedded into class [2,1] of S_7.

    :param he_s5: The S_5 snake.
    :type he_s5: Snake
    :return: The embedded snake.
    :rtype: Snake
    """
    return embed_inner_snake(3, he_s5, GOLDEN_MAP)


def test_embedding_maps(he_s5: Snake):
    """Test that half of the 120 maps keep the codewords even, listed in lexicographic order.

    :param he_s5: The S_5 snake.
    :type he_s5: Snake
    """
    maps = list(iter_embedding_maps(3, he_s5.initial))
    assert len(maps) == 60
    assert maps == sorted(maps)
    assert GOLDEN_MAP in maps
    assert GOLDEN_MAP((1, 2, 3, 4, 5)) == (5, 6, 3, 7, 4, 2, 1)


def test_invalid_maps(he_s5: Snake):
    """Test that non-bijections and parity-breaking maps are rejected.

    :param he_s5: The S_5 snake.
    :type he_s5: Snake
    """
    with pytest.raises(InvalidEmbeddingError):
        EmbeddingMap((3, 3, 4, 5, 6))

    with pytest.raises(InvalidEmbeddingError):
        embed_inner_snake(3, he_s5, EmbeddingMap((6, 5, 3, 7, 4)))

    with pytest.raises(InvalidEmbeddingError):
        embed_inner_snake(4, he_s5, GOLDEN_MAP)


def test_embedded_matches_figure(embedded: Snake, figure_embedded_s7: list[Permutation]):
    """Test the embedded snake against the transcribed figure.

    :param embedded: The embedded snake.
    :type embedded: Snake
    :param figure_embedded_s7: The transcribed figure.
    :type figure_embedded_s7: list[Permutation]
    """
    assert list(embedded.codewords()) == figure_embedded_s7
    assert {class_of(p) for p in embedded.codewords()} == {LINKAGE_CLASS}
    assert verify_snake(embedded, Mode.FULL).passed


def test_sewn_matches_figure(embedded: Snake, figure_sewn_s7: list[Permutation]):
    """Test the rewrite at [3,5,6,7,4,2,1] against the transcribed figure.

    :param embedded: The embedded snake.
    :type embedded: Snake
    :param figure_sewn_s7: The transcribed figure.
    :type figure_sewn_s7: list[Permutation]
    """
    rewrite = plan_sew_rewrite(GOLDEN_PIVOT)
    sewn = apply_sew_rewrite(embedded, rewrite)
    assert list(sewn.codewords()) == figure_sewn_s7

    before, after = embedded.transition_histogram(), sewn.transition_histogram()
    assert after["t_5"] - before["t_5"] == 3
    assert before["t_3"] - after["t_3"] == 3
    assert sewn.transitions.count(5) == 30


def test_every_rewrite_keeps_a_snake(embedded: Snake):
    """Test that each applicable rewrite keeps the codeword set and the K-snake property.

    :param embedded: The embedded snake.
    :type embedded: Snake
    """
    codewords = set(embedded.codewords())
    rewrites = list(iter_sew_rewrites(embedded))
    assert rewrites

    for rewrite in rewrites:
        sewn = apply_sew_rewrite(embedded, rewrite)
        assert set(sewn.codewords()) == codewords
        assert sewn.transitions.count(5) == embedded.transitions.count(5) + 3
        assert verify_snake(sewn, Mode.FULL).passed


def test_inapplicable_rewrite(embedded: Snake):
    """Test that a pivot followed by t_5 is rejected.

    :param embedded: The embedded snake.
    :type embedded: Snake
    """
    assert embedded.transitions[0] == 5

    with pytest.raises(InapplicableRewriteError):
        apply_sew_rewrite(embedded, plan_sew_rewrite(embedded.initial))


def test_rewrite_indices():
    """Test lo = 2n-3 and hi = 2n-1."""
    assert rewrite_indices(7) == (3, 5)
    assert rewrite_indices(9) == (5, 7)
