# -*- coding: utf-8 -*-
"""Split the even permutations of S_{2n+1} into classes [x,y] and necklaces."""
from collections.abc import Iterator
from dataclasses import dataclass
from functools import cached_property
from itertools import permutations
from typing import NamedTuple

from ksnake.errors import InvalidLabelError, InvalidLengthError, ParityError
from ksnake.perm import Cycle, Permutation, apply_transition, check_permutation, is_even


class ClassLabel(NamedTuple):
    """The values at positions 2n and 2n+1."""

    x: int
    y: int

    def __str__(self):
        return "[{},{}]".format(self.x, self.y)


ROOT_CLASS = ClassLabel(1, 2)
LINKAGE_CLASS = ClassLabel(2, 1)


def length_of(n_param: int) -> int:
    return 2 * n_param + 1


def n_param_of(length: int) -> int:
    """Return n for codewords of length 2n+1."""
    if length < 5 or length % 2 == 0:
        raise InvalidLengthError(length)

    return (length - 1) // 2


@dataclass(frozen=True, order=True)
class Necklace:
    """The orbit of an even permutation under t_{2n-1} inside one class."""

    label: ClassLabel
    front: Cycle

    @property
    def length(self) -> int:
        return len(self.front) + 2

    @property
    def representative(self) -> Permutation:
        """The rotation starting with the smallest front element."""
        return self.front.elements + tuple(self.label)

    @cached_property
    def codewords(self) -> tuple[Permutation, ...]:
        """All rotations in t_{2n-1} order, starting from the representative."""
        codeword = self.representative
        result = [codeword]

        for _ in range(len(self.front) - 1):
            codeword = apply_transition(codeword, self.length - 2)
            result.append(codeword)

        return tuple(result)

    def rotation_ending_with(self, value: int) -> Permutation:
        """Return the codeword holding ``value`` at position 2n-1."""
        rotated = self.front.rotated_to(value)
        return rotated[1:] + rotated[:1] + tuple(self.label)

    def __str__(self):
        return "{}-{}".format(self.front, self.label)


def format_name(necklace: Necklace, start: int = 4) -> str:
    """Render a necklace with its front read from ``start``, e.g. ``[4,5,6,7,3]-[1,2]``."""
    front = necklace.front.rotated_to(start) if start in necklace.front.elements else necklace.front.elements
    return "[{}]-{}".format(",".join(str(v) for v in front), necklace.label)


def class_of(p: Permutation) -> ClassLabel:
    """Return the class [x,y] of an even permutation of odd length at least 5.

    :param p: An even permutation
    :type p: Permutation
    :return: The values at the last two positions
    :rtype: ClassLabel
    """
    n_param_of(len(p))

    if not is_even(p):
        raise ParityError(p)

    return ClassLabel(p[-2], p[-1])


def necklace_of(p: Permutation) -> Necklace:
    label = class_of(p)
    return Necklace(label, Cycle(p[:-2]))


def class_labels(n_param: int) -> list[ClassLabel]:
    values = range(1, length_of(n_param) + 1)
    return [ClassLabel(x, y) for x in values for y in values if x != y]


def check_label(n_param: int, label: ClassLabel) -> ClassLabel:
    length = length_of(n_param)

    if label.x == label.y or not (1 <= label.x <= length and 1 <= label.y <= length):
        raise InvalidLabelError(label, length)

    return ClassLabel(*label)


def enumerate_necklaces(n_param: int, label: ClassLabel) -> list[Necklace]:
    """Return every necklace of a class, sorted by canonical representative.

    :param n_param: n, so that codewords have length 2n+1
    :type n_param: int
    :param label: The class
    :type label: ClassLabel
    :return: The (2n-2)!/2 necklaces of the class
    :rtype: list[Necklace]
    """
    n_param_of(length_of(n_param))
    label = check_label(n_param, label)
    others = sorted(set(range(1, length_of(n_param) + 1)) - set(label))
    first, rest = others[0], others[1:]
    necklaces = []

    for arrangement in permutations(rest):
        front = (first,) + arrangement

        if is_even(front + tuple(label)):
            necklaces.append(Necklace(label, Cycle(front)))

    return necklaces


def iter_even_permutations(length: int) -> Iterator[Permutation]:
    """Yield the alternating group of the given degree in lexicographic order."""
    for p in permutations(range(1, length + 1)):
        if is_even(p):
            yield p


def parse_permutation(text: str) -> Permutation:
    """Parse ``"3 4 5 1 2"`` or ``"[3,4,5,1,2]"`` into a permutation."""
    cleaned = text.replace("[", " ").replace("]", " ").replace(",", " ").replace("|", " ")
    return check_permutation(int(v) for v in cleaned.split())
