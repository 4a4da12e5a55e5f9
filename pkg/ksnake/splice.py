# -*- coding: utf-8 -*-
"""Successor maps: the mutable form of a cyclic codeword sequence used while splicing."""
from collections.abc import Iterable, Sequence

from ksnake.errors import AssemblyError, SplicePointError
from ksnake.perm import Permutation, apply_transition, transition_between

Successors = dict[Permutation, Permutation]
Arc = tuple[Permutation, Permutation]


def successors_from_transitions(initial: Permutation, transitions: Iterable[int]) -> Successors:
    successor = {}
    codeword = initial

    for index in transitions:
        following = apply_transition(codeword, index)
        successor[codeword] = following
        codeword = following

    if codeword != initial:
        raise AssemblyError("Transitions from {} do not close the cycle.".format(list(initial)))

    return successor


def add_cycle(successor: Successors, codewords: Sequence[Permutation]) -> None:
    """Add the arcs of a closed sequence, last codeword pointing back to the first."""
    for i, codeword in enumerate(codewords):
        successor[codeword] = codewords[(i + 1) % len(codewords)]


def rotate_arcs(successor: Successors, arcs: Sequence[Arc]) -> None:
    """Reconnect each tail to the next arc's head.

    Given arcs (u_0, v_0), ..., (u_k, v_k) of one or more cycles, point u_i to v_{i+1}
    (indices mod k+1). Three arcs from three different cycles merge them into one.
    Every arc must be present before anything is changed.

    :param successor: Successor map, modified in place
    :type successor: Successors
    :param arcs: Arcs to rotate
    :type arcs: Sequence[Arc]
    """
    for tail, head in arcs:
        found = successor.get(tail)

        if found != head:
            raise SplicePointError(tail, head, list(found) if found is not None else None)

    for i, (tail, _) in enumerate(arcs):
        successor[tail] = arcs[(i + 1) % len(arcs)][1]


def walk(successor: Successors, start: Permutation) -> list[Permutation]:
    """Return the codewords of the cycle through ``start``, in order."""
    codewords = [start]
    codeword = successor[start]

    while codeword != start:
        codewords.append(codeword)
        codeword = successor[codeword]

        if len(codewords) > len(successor):
            raise AssemblyError("Successor map starting at {} never returns.".format(list(start)))

    return codewords


def transitions_along(codewords: Sequence[Permutation]) -> tuple[int, ...]:
    """Return the transition indices of a closed codeword sequence."""
    transitions = []

    for i, codeword in enumerate(codewords):
        following = codewords[(i + 1) % len(codewords)]
        index = transition_between(codeword, following)

        if index is None:
            raise AssemblyError(
                "{} and {} are not one transition apart.".format(list(codeword), list(following))
            )

        transitions.append(index)

    return tuple(transitions)
