# -*- coding: utf-8 -*-
"""Permutation arithmetic, push-to-the-top transitions and the Kendall tau metric.

Permutations are tuples in vector notation with values 1..n. Positions are 1-based in
every public signature, so ``apply_transition(p, 3)`` is the transition t_3.
"""
from bisect import bisect_right, insort
from collections.abc import Iterable, Mapping
from dataclasses import dataclass
from enum import Enum

from ksnake.errors import InvalidPermutationError, LengthMismatchError, TransitionBoundsError

Permutation = tuple[int, ...]


class Parity(str, Enum):
    EVEN = "even"
    ODD = "odd"


def check_permutation(entries: Iterable[int]) -> Permutation:
    """Return the entries as a permutation tuple, rejecting anything that is not a bijection on 1..n.

    :param entries: Values in vector notation
    :type entries: Iterable[int]
    :return: The validated permutation
    :rtype: Permutation
    """
    p = tuple(entries)

    if sorted(p) != list(range(1, len(p) + 1)):
        raise InvalidPermutationError(p)

    return p


def identity(length: int) -> Permutation:
    return tuple(range(1, length + 1))


def _check_index(p: Permutation, index: int) -> None:
    if not 2 <= index <= len(p):
        raise TransitionBoundsError(index, len(p))


def apply_transition(p: Permutation, index: int) -> Permutation:
    """Move the element at position ``index`` to the front.

    :param p: Permutation to transform
    :type p: Permutation
    :param index: 1-based position, 2 <= index <= len(p)
    :type index: int
    :return: t_index(p)
    :rtype: Permutation
    """
    _check_index(p, index)
    return (p[index - 1],) + p[:index - 1] + p[index:]


def apply_inverse(p: Permutation, index: int) -> Permutation:
    """Move the front element back to position ``index``.

    :param p: Permutation to transform
    :type p: Permutation
    :param index: 1-based position, 2 <= index <= len(p)
    :type index: int
    :return: t_index^{-1}(p)
    :rtype: Permutation
    """
    _check_index(p, index)
    return p[1:index] + (p[0],) + p[index:]


def transition_between(p: Permutation, q: Permutation) -> int | None:
    """Return the index i with t_i(p) = q, or None if q is not one push away from p."""
    if len(p) != len(q):
        raise LengthMismatchError(len(p), len(q))

    index = p.index(q[0]) + 1

    if index >= 2 and apply_transition(p, index) == q:
        return index

    return None


def compose(s: Permutation, p: Permutation) -> Permutation:
    """Return s∘p, i.e. the permutation i -> s(p(i)).

    Composing on the left relabels the values of ``p`` through ``s``.
    """
    if len(s) != len(p):
        raise LengthMismatchError(len(s), len(p))

    return tuple(s[v - 1] for v in p)


def inverse_of(p: Permutation) -> Permutation:
    result = [0] * len(p)

    for i, v in enumerate(p, start=1):
        result[v - 1] = i

    return tuple(result)


def relabel(p: Iterable[int], mapping: Mapping[int, int]) -> tuple[int, ...]:
    """Replace every value by its image, leaving values outside the mapping untouched."""
    return tuple(mapping.get(v, v) for v in p)


def count_inversions(values: Iterable[int]) -> int:
    """Count pairs i < j with values[i] > values[j]."""
    seen: list[int] = []
    inversions = 0

    for v in values:
        inversions += len(seen) - bisect_right(seen, v)
        insort(seen, v)

    return inversions


def parity(p: Permutation) -> Parity:
    return Parity.EVEN if count_inversions(p) % 2 == 0 else Parity.ODD


def is_even(p: Permutation) -> bool:
    return parity(p) is Parity.EVEN


def kendall_distance(a: Permutation, b: Permutation) -> int:
    """Return the number of adjacent transpositions needed to turn ``a`` into ``b``.

    :param a: First permutation
    :type a: Permutation
    :param b: Second permutation
    :type b: Permutation
    :return: Inversion count of ``a`` read in the order of ``b``
    :rtype: int
    """
    if len(a) != len(b):
        raise LengthMismatchError(len(a), len(b))

    position = {v: i for i, v in enumerate(b)}
    return count_inversions(position[v] for v in a)


@dataclass(frozen=True, order=True)
class Cycle:
    """A cyclic arrangement of distinct integers, stored with its minimum element first."""

    elements: tuple[int, ...]

    def __post_init__(self):
        elements = tuple(self.elements)

        if not elements or len(set(elements)) != len(elements):
            raise ValueError("A cycle needs distinct elements, got {}.".format(list(elements)))

        start = elements.index(min(elements))
        object.__setattr__(self, "elements", elements[start:] + elements[:start])

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __str__(self):
        return "[{}]".format(",".join(str(v) for v in self.elements))

    def rotated_to(self, start: int) -> tuple[int, ...]:
        """Return the elements read cyclically from ``start``."""
        i = self.elements.index(start)
        return self.elements[i:] + self.elements[:i]

    def as_mapping(self) -> dict[int, int]:
        """Return the cycle as a map sending each element to the next one."""
        return {v: self.elements[(i + 1) % len(self.elements)] for i, v in enumerate(self.elements)}

    def as_permutation(self, length: int) -> Permutation:
        return relabel(identity(length), self.as_mapping())

    def relabel(self, mapping: Mapping[int, int]) -> "Cycle":
        return Cycle(relabel(self.elements, mapping))
