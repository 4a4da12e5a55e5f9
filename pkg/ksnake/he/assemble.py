# -*- coding: utf-8 -*-
"""Assemble the Horovitz-Etzion snake by splicing chains along a spanning tree."""
from collections.abc import Sequence
from time import perf_counter

from ksnake.chain import ChainSet, build_all_chains
from ksnake.errors import AssemblyError
from ksnake.graph import ChainGraph, ConnectionEdge, build_chain_graph, splice_arcs
from ksnake.he.spanning import select_spanning_tree
from ksnake.partition import length_of
from ksnake.snake import Snake, he_size, snake_from_successors
from ksnake.splice import Successors, add_cycle, rotate_arcs


def splice_connection(successor: Successors, edge: ConnectionEdge) -> None:
    rotate_arcs(successor, splice_arcs(edge.splice_site[0]))


def assemble_he_snake(
    n_param: int,
    chains: ChainSet | None = None,
    graph: ChainGraph | None = None,
    order: Sequence[ConnectionEdge] | None = None,
    num_jobs: int = 1,
) -> Snake:
    """Build the snake of size (2n+1)!/2 - 2n + 1.

    :param n_param: n >= 2
    :type n_param: int
    :param chains: Chains of S_{2n+1}, built when omitted
    :type chains: ChainSet | None
    :param graph: Chain graph, built when omitted
    :type graph: ChainGraph | None
    :param order: Spanning tree edges in the order they are spliced, selected when omitted
    :type order: Sequence[ConnectionEdge] | None
    :param num_jobs: Number of concurrent jobs for chain and graph construction
    :type num_jobs: int
    :return: The assembled snake
    :rtype: Snake
    """
    start_time = perf_counter()
    print("Building HE snake for S_{}...".format(length_of(n_param)))

    if chains is None:
        chains = build_all_chains(n_param, num_jobs)

    first_chain = chains[min(chains.names())]

    if n_param == 2:
        snake = Snake(first_chain.initial, first_chain.transitions, "he")
    else:
        if order is None:
            if graph is None:
                graph = build_chain_graph(n_param, chains, num_jobs)

            order = select_spanning_tree(n_param, graph).edges

        successor: Successors = {}

        for chain in chains:
            add_cycle(successor, list(chain.codewords()))

        for edge in order:
            add_cycle(successor, edge.label.codewords)

        for edge in order:
            splice_connection(successor, edge)

        snake = snake_from_successors(successor, first_chain.initial, "he")

    if snake.size != he_size(n_param):
        raise AssemblyError("Assembled {} codewords, expected {}.".format(snake.size, he_size(n_param)))

    print("HE snake of size {} built in {:.2f} s.".format(snake.size, perf_counter() - start_time))
    print("--------------------------------------------------")
    return snake
