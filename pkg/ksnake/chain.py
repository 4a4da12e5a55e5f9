# -*- coding: utf-8 -*-
"""Merge necklaces into chains by walking the merge tree."""
from collections.abc import Iterator
from dataclasses import dataclass, field

from ksnake.errors import ConstructionOrderError, InvalidLabelError, NotInAnyChainError
from ksnake.partition import (
    LINKAGE_CLASS,
    ROOT_CLASS,
    ClassLabel,
    Necklace,
    class_of,
    enumerate_necklaces,
    necklace_of,
)
from ksnake.perm import Cycle, Permutation, apply_transition
from ksnake.snake import Snake, snake_from_successors
from ksnake.splice import Successors, add_cycle, rotate_arcs, walk
from ksnake.tree import HyperEdge, build_merge_tree
from ksnake.util import map_jobs


@dataclass(frozen=True)
class Chain:
    """A cyclic snake holding one necklace of every class except [2,1], named c[alpha]."""

    name: Cycle
    snake: Snake

    @property
    def initial(self) -> Permutation:
        return self.snake.initial

    @property
    def transitions(self) -> tuple[int, ...]:
        return self.snake.transitions

    @property
    def size(self) -> int:
        return self.snake.size

    def codewords(self) -> Iterator[Permutation]:
        return self.snake.codewords()

    def __str__(self):
        return "c{}".format(self.name)


@dataclass
class ChainInProgress:
    """A partially merged chain: its successor map and the necklace it holds per class."""

    start: Permutation
    successor: Successors = field(default_factory=dict)
    necklaces: dict[ClassLabel, Necklace] = field(default_factory=dict)

    @classmethod
    def from_necklace(cls, necklace: Necklace) -> "ChainInProgress":
        progress = cls(start=necklace.representative)
        progress.add_necklace(necklace)
        return progress

    def add_necklace(self, necklace: Necklace) -> None:
        add_cycle(self.successor, necklace.codewords)
        self.necklaces[necklace.label] = necklace

    def codewords(self) -> list[Permutation]:
        return walk(self.successor, self.start)


def splice_edge(progress: ChainInProgress, edge: HyperEdge) -> ChainInProgress:
    """Merge the two missing necklaces of a hyperedge into the chain.

    The edge is rotated to <x,y,z> so that [x,y] is the class already held. The arc
    leaving [beta,z,x,y] is cut, and the [z,x]- and [y,z]-necklaces are threaded in
    with three t_{2n+1} transitions.

    :param progress: Chain being built, modified in place
    :type progress: ChainInProgress
    :param edge: Next merge tree edge
    :type edge: HyperEdge
    :return: The same chain-in-progress
    :rtype: ChainInProgress
    """
    present = [r for r in edge.rotations() if ClassLabel(r.x, r.y) in progress.necklaces]

    if len(present) != 1:
        raise ConstructionOrderError(edge, len(present))

    x, y, z = present[0]
    held = progress.necklaces[ClassLabel(x, y)]
    split = held.rotation_ending_with(z)
    beta = split[:-3]

    zx = necklace_of((y,) + beta + (z, x))
    yz = necklace_of((x,) + beta + (y, z))
    progress.add_necklace(zx)
    progress.add_necklace(yz)

    push = len(split) - 2
    rotate_arcs(
        progress.successor,
        [
            (split, apply_transition(split, push)),
            (beta + (y, z, x), (y,) + beta + (z, x)),
            (beta + (x, y, z), (x,) + beta + (y, z)),
        ],
    )
    return progress


def build_chain(start: Necklace, n_param: int) -> Chain:
    """Grow a chain from a [1,2]-necklace by splicing every merge tree edge in order.

    :param start: Necklace of class [1,2]
    :type start: Necklace
    :param n_param: n, so that codewords have length 2n+1
    :type n_param: int
    :return: The chain c[alpha] where alpha is the front of ``start``
    :rtype: Chain
    """
    if start.label != ROOT_CLASS:
        raise InvalidLabelError(start.label, 2 * n_param + 1)

    progress = ChainInProgress.from_necklace(start)

    for edge in build_merge_tree(n_param).edges:
        splice_edge(progress, edge)

    return Chain(start.front, snake_from_successors(progress.successor, progress.start, "chain"))


@dataclass
class ChainSet:
    """All chains of S_{2n+1} keyed by name, with a codeword to owner index."""

    n_param: int
    chains: dict[Cycle, Chain]
    index: dict[Permutation, Cycle]

    def __len__(self):
        return len(self.chains)

    def __iter__(self):
        return iter(self.chains.values())

    def __getitem__(self, name: Cycle) -> Chain:
        return self.chains[name]

    def names(self) -> list[Cycle]:
        return list(self.chains)

    def owner(self, p: Permutation) -> Cycle:
        name = self.index.get(p)

        if name is None:
            raise NotInAnyChainError(p)

        return name


def build_all_chains(n_param: int, num_jobs: int = 1) -> ChainSet:
    """Build one chain per [1,2]-necklace and index every codeword.

    :param n_param: n >= 2
    :type n_param: int
    :param num_jobs: Number of chains built concurrently
    :type num_jobs: int
    :return: The (2n-2)!/2 chains and the owner index
    :rtype: ChainSet
    """
    starts = enumerate_necklaces(n_param, ROOT_CLASS)
    built = map_jobs(build_chain, starts, num_jobs, desc="chains", n_param=n_param)
    chains = {chain.name: chain for chain in built}
    index = {}

    for chain in built:
        for codeword in chain.codewords():
            index[codeword] = chain.name

    return ChainSet(n_param=n_param, chains=chains, index=index)


def trace_chain_of(p: Permutation, chains: ChainSet) -> Cycle:
    """Return the name of the chain holding ``p``.

    :param p: Even permutation outside class [2,1]
    :type p: Permutation
    :param chains: Chain set to search
    :type chains: ChainSet
    :return: Owner chain name
    :rtype: Cycle
    """
    if class_of(p) == LINKAGE_CLASS:
        raise NotInAnyChainError(p)

    return chains.owner(p)
