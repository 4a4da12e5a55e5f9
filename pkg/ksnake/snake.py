# -*- coding: utf-8 -*-
"""The snake value: an initial codeword and a cyclic transition sequence."""
from collections.abc import Iterator
from dataclasses import dataclass
from math import factorial

import pandas as pd

from ksnake.partition import length_of, n_param_of
from ksnake.perm import Permutation, apply_transition
from ksnake.splice import Successors, successors_from_transitions, transitions_along, walk


def he_size(n_param: int) -> int:
    return factorial(length_of(n_param)) // 2 - 2 * n_param + 1


def extended_size(n_param: int) -> int:
    return factorial(length_of(n_param)) // 2 - 2 * n_param + 3


@dataclass(frozen=True)
class Snake:
    initial: Permutation
    transitions: tuple[int, ...]
    construction: str

    @property
    def length(self) -> int:
        return len(self.initial)

    @property
    def n_param(self) -> int:
        return n_param_of(self.length)

    @property
    def size(self) -> int:
        return len(self.transitions)

    def codewords(self) -> Iterator[Permutation]:
        """Yield the codewords in order, without repeating the initial one at the end."""
        codeword = self.initial

        for index in self.transitions:
            yield codeword
            codeword = apply_transition(codeword, index)

    def successors(self) -> Successors:
        return successors_from_transitions(self.initial, self.transitions)

    def transition_histogram(self) -> pd.Series:
        """Count each transition index, indexed by ``t_i`` labels in increasing i."""
        counts = pd.Series(self.transitions, dtype="int64").value_counts().sort_index()
        counts.index = ["t_{}".format(i) for i in counts.index]
        counts.name = "count"
        return counts


def snake_from_successors(successor: Successors, initial: Permutation, construction: str) -> Snake:
    codewords = walk(successor, initial)
    return Snake(initial=initial, transitions=transitions_along(codewords), construction=construction)
