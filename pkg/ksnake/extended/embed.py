# -*- coding: utf-8 -*-
"""Relabel a snake of S_{2n-1} into class [2,1] of S_{2n+1}."""
from collections.abc import Iterator
from dataclasses import dataclass
from itertools import permutations

from ksnake.errors import InvalidEmbeddingError
from ksnake.partition import LINKAGE_CLASS, length_of
from ksnake.perm import Permutation, is_even
from ksnake.snake import Snake


@dataclass(frozen=True, order=True)
class EmbeddingMap:
    """A bijection f: {1..2n-1} -> {3..2n+1}, stored as (f(1), ..., f(2n-1))."""

    images: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.images) != list(range(3, len(self.images) + 3)):
            raise InvalidEmbeddingError(
                "{} is not a bijection onto 3..{}.".format(list(self.images), len(self.images) + 2)
            )

    def __call__(self, p: Permutation) -> Permutation:
        return tuple(self.images[v - 1] for v in p) + tuple(LINKAGE_CLASS)

    def __str__(self):
        return ", ".join("f({})={}".format(i, v) for i, v in enumerate(self.images, start=1))


def iter_embedding_maps(n_param: int, inner_initial: Permutation) -> Iterator[EmbeddingMap]:
    """Yield, in lexicographic order, every map that sends ``inner_initial`` to an even codeword."""
    for images in permutations(range(3, length_of(n_param) + 1)):
        f = EmbeddingMap(images)

        if is_even(f(inner_initial)):
            yield f


def embed_inner_snake(n_param: int, inner: Snake, f: EmbeddingMap) -> Snake:
    """Relabel an inner snake by ``f`` and append the tail (2,1).

    Transitions keep their indices, so all codewords share the parity of the first one.

    :param n_param: n, the outer snake lives in S_{2n+1}
    :type n_param: int
    :param inner: Snake of S_{2n-1}
    :type inner: Snake
    :param f: Relabeling map
    :type f: EmbeddingMap
    :return: Snake inside class [2,1] of S_{2n+1}
    :rtype: Snake
    """
    if inner.length != length_of(n_param) - 2 or len(f.images) != inner.length:
        raise InvalidEmbeddingError(
            "Cannot embed a snake of S_{} into S_{} with a map on {} values.".format(
                inner.length, length_of(n_param), len(f.images)
            )
        )

    initial = f(inner.initial)

    if not is_even(initial):
        raise InvalidEmbeddingError(
            "Map {} sends {} to the odd permutation {}.".format(f, list(inner.initial), list(initial))
        )

    return Snake(initial=initial, transitions=inner.transitions, construction="embedded")
