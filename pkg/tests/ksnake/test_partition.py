# -*- coding: utf-8 -*-
"""Module containing the tests for classes and necklaces."""
from collections import Counter
from itertools import combinations

import pytest

from ksnake.errors import InvalidLabelError, InvalidLengthError, ParityError
from ksnake.partition import (
    LINKAGE_CLASS,
    ROOT_CLASS,
    ClassLabel,
    Necklace,
    class_labels,
    class_of,
    enumerate_necklaces,
    format_name,
    iter_even_permutations,
    n_param_of,
    necklace_of,
    parse_permutation,
)
from ksnake.perm import Cycle, kendall_distance

LINKAGE_NAMES = [
    "[4,5,7,6,3]-[2,1]",
    "[4,6,5,7,3]-[2,1]",
    "[4,7,6,5,3]-[2,1]",
    "[4,6,7,3,5]-[2,1]",
    "[4,3,5,6,7]-[2,1]",
    "[4,6,3,5,7]-[2,1]",
    "[4,7,5,3,6]-[2,1]",
    "[4,7,3,6,5]-[2,1]",
    "[4,3,6,7,5]-[2,1]",
    "[4,5,6,3,7]-[2,1]",
    "[4,3,7,5,6]-[2,1]",
    "[4,5,3,7,6]-[2,1]",
]


def test_class_of():
    """Test class_of() reads the last two positions of an even permutation."""
    assert class_of((3, 4, 5, 6, 7, 1, 2)) == ROOT_CLASS
    assert class_of((4, 5, 7, 6, 3, 2, 1)) == LINKAGE_CLASS
    assert str(ClassLabel(2, 1)) == "[2,1]"

    with pytest.raises(ParityError):
        class_of((2, 1, 3, 4, 5))

    with pytest.raises(InvalidLengthError):
        class_of((1, 2, 3))


def test_n_param_of():
    """Test that only odd lengths of at least 5 are accepted."""
    assert n_param_of(5) == 2
    assert n_param_of(9) == 4

    for length in (3, 4, 6):
        with pytest.raises(InvalidLengthError):
            n_param_of(length)


def test_necklace_codewords():
    """Test the t_{2n-1} orbit of [3,4,5,6,7,1,2]."""
    necklace = necklace_of((3, 4, 5, 6, 7, 1, 2))
    assert necklace.codewords == (
        (3, 4, 5, 6, 7, 1, 2),
        (7, 3, 4, 5, 6, 1, 2),
        (6, 7, 3, 4, 5, 1, 2),
        (5, 6, 7, 3, 4, 1, 2),
        (4, 5, 6, 7, 3, 1, 2),
    )
    assert necklace_of((6, 7, 3, 4, 5, 1, 2)) == necklace
    assert necklace.rotation_ending_with(3) == (4, 5, 6, 7, 3, 1, 2)
    assert format_name(necklace) == "[4,5,6,7,3]-[1,2]"


def test_class_sizes():
    """Test that every class of S_7 holds 60 even permutations in 12 necklaces."""
    counts = Counter(class_of(p) for p in iter_even_permutations(7))
    assert set(counts) == set(class_labels(3))
    assert set(counts.values()) == {60}

    for label in (ROOT_CLASS, LINKAGE_CLASS, ClassLabel(5, 3)):
        necklaces = enumerate_necklaces(3, label)
        assert len(necklaces) == 12
        assert len({p for necklace in necklaces for p in necklace.codewords}) == 60


@pytest.mark.parametrize("n_param", [2, 3])
def test_necklace_distances(n_param: int):
    """Test that necklaces partition every class with rotations 2n-2 apart and no pair closer than 2.

    :param n_param: n, so that codewords have length 2n+1.
    :type n_param: int
    """
    classes = {}

    for p in iter_even_permutations(2 * n_param + 1):
        classes.setdefault(class_of(p), set()).add(p)

    for label in class_labels(n_param):
        covered = []

        for necklace in enumerate_necklaces(n_param, label):
            codewords = necklace.codewords
            covered += codewords

            for a, b in zip(codewords, codewords[1:] + codewords[:1]):
                assert kendall_distance(a, b) == 2 * n_param - 2

            for a, b in combinations(codewords, 2):
                assert kendall_distance(a, b) >= 2

        assert len(covered) == len(set(covered))
        assert set(covered) == classes[label]


def test_enumerate_necklaces_s5():
    """Test that class [2,1] of S_5 is a single necklace of three codewords."""
    necklaces = enumerate_necklaces(2, LINKAGE_CLASS)
    assert len(necklaces) == 1
    assert len(necklaces[0].codewords) == 3


def test_enumerate_linkages_s7():
    """Test that the linkages of S_7 read from 4 are the twelve published names."""
    names = [format_name(necklace) for necklace in enumerate_necklaces(3, LINKAGE_CLASS)]
    assert sorted(names) == sorted(LINKAGE_NAMES)


def test_enumerate_necklaces_rejects_bad_labels():
    """Test that labels outside 1..2n+1 or with equal entries are rejected."""
    with pytest.raises(InvalidLabelError):
        enumerate_necklaces(3, ClassLabel(2, 2))

    with pytest.raises(InvalidLabelError):
        enumerate_necklaces(3, ClassLabel(1, 8))


def test_parse_permutation():
    """Test the accepted permutation spellings."""
    assert parse_permutation("3 4 5 1 2") == (3, 4, 5, 1, 2)
    assert parse_permutation("[3,4,5,1,2]") == (3, 4, 5, 1, 2)
    assert parse_permutation("3|4|5|1|2") == (3, 4, 5, 1, 2)
    assert Necklace(ROOT_CLASS, Cycle((3, 4, 5))).representative == (3, 4, 5, 1, 2)
