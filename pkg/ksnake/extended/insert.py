# -*- coding: utf-8 -*-
"""Insert pairs of chains into a [2,1]-class snake at t_{2n-1} steps [alpha,x,2,1] -> [x,alpha,2,1]."""
from collections.abc import Sequence
from dataclasses import dataclass

from ksnake.chain import ChainSet
from ksnake.errors import InvalidSiteError
from ksnake.graph import splice_arcs
from ksnake.partition import LINKAGE_CLASS
from ksnake.perm import Cycle, Permutation
from ksnake.snake import Snake, snake_from_successors
from ksnake.splice import add_cycle, rotate_arcs


@dataclass(frozen=True)
class InsertionSite:
    tail: Permutation
    head: Permutation
    chains: tuple[Cycle, Cycle]
    position: int

    @property
    def sign(self) -> int:
        return self.tail[-3]

    def other(self, name: Cycle) -> Cycle:
        return self.chains[1] if self.chains[0] == name else self.chains[0]


def _site_at(codeword: Permutation, index: int, chains: ChainSet, position: int) -> InsertionSite | None:
    if index != len(codeword) - 2 or codeword[-2:] != tuple(LINKAGE_CLASS) or codeword[-3] <= 5:
        return None

    arcs = splice_arcs(codeword)
    owners = chains.owner(arcs[1][0]), chains.owner(arcs[2][0])

    if owners[0] == owners[1]:
        return None

    return InsertionSite(tail=codeword, head=arcs[0][1], chains=owners, position=position)


def find_insertion_sites(snake: Snake, chains: ChainSet) -> list[InsertionSite]:
    """Return every arc of the snake where an M[x]-connection with x > 5 can insert two chains.

    :param snake: Snake inside class [2,1]
    :type snake: Snake
    :param chains: Chains of the same degree
    :type chains: ChainSet
    :return: Sites in snake order
    :rtype: list[InsertionSite]
    """
    sites = []

    for position, (codeword, index) in enumerate(zip(snake.codewords(), snake.transitions)):
        site = _site_at(codeword, index, chains, position)

        if site is not None:
            sites.append(site)

    return sites


def _check_site(snake_successors: dict, site: InsertionSite, chains: ChainSet) -> None:
    if snake_successors.get(site.tail) != site.head:
        raise InvalidSiteError("{} is not followed by {} in the snake.".format(list(site.tail), list(site.head)))

    found = _site_at(site.tail, len(site.tail) - 2, chains, site.position)

    if found is None or set(found.chains) != set(site.chains):
        raise InvalidSiteError("Site {} does not join two distinct chains {}.".format(list(site.tail), site.chains))


def insert_chain_pairs(snake: Snake, sites: Sequence[InsertionSite], chains: ChainSet) -> Snake:
    """Insert the two chains of every site; no chain may be used twice.

    :param snake: Snake inside class [2,1]
    :type snake: Snake
    :param sites: Sites whose chain pairs are disjoint
    :type sites: Sequence[InsertionSite]
    :param chains: Chains of the same degree
    :type chains: ChainSet
    :return: The enlarged snake, pre-existing codewords kept in their order
    :rtype: Snake
    """
    successor = snake.successors()
    used = [name for site in sites for name in site.chains]

    if len(set(used)) != len(used):
        raise InvalidSiteError("Sites reuse a chain.")

    for site in sites:
        _check_site(successor, site, chains)

    for site in sites:
        for name in site.chains:
            add_cycle(successor, list(chains[name].codewords()))

        rotate_arcs(successor, splice_arcs(site.tail))

    return snake_from_successors(successor, snake.initial, snake.construction)


def insert_chain_pair(snake: Snake, site: InsertionSite, chains: ChainSet) -> Snake:
    return insert_chain_pairs(snake, [site], chains)
