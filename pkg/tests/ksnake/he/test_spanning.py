# -*- coding: utf-8 -*-
"""Module containing the tests for the distinct-label spanning tree."""
import pytest

from ksnake.graph import ChainGraph, DisjointSet, component_of, enumerate_linkages
from ksnake.he.spanning import (
    base_cycle_edges,
    component_cycle,
    select_spanning_tree,
    select_spanning_tree_s7,
    wrap,
)

GRID_ROWS = [
    [(2, 4), (2, 5), (2, 6), (2, 7), (2, 3)],
    [(3, 5), (3, 6), (3, 7), (3, 2), (3, 4)],
    [(4, 6), (4, 7), (4, 2), (4, 3), (4, 5)],
    [(5, 7), (5, 2), (5, 3), (5, 4), (5, 6)],
    [(6, 2), (6, 3), (6, 4), (6, 5), (6, 7)],
    [(7, 3), (7, 4), (7, 5), (7, 6), (7, 2)],
]
GRID_VERTICALS = [
    ((2, 4), (3, 4)),
    ((3, 5), (4, 5)),
    ((4, 6), (5, 6)),
    ((5, 7), (6, 7)),
    ((6, 2), (7, 2)),
    ((7, 3), (2, 3)),
]


def _grid_cycle() -> set[frozenset]:
    pairs = {frozenset(pair) for pair in GRID_VERTICALS}

    for row in GRID_ROWS:
        pairs |= {frozenset(pair) for pair in zip(row, row[1:])}

    return pairs


def test_wrap():
    """Test that positions wrap inside 2..2m-1."""
    assert [wrap(k, 3) for k in range(0, 8)] == [4, 5, 2, 3, 4, 5, 2, 3]
    assert wrap(1, 4) == 7
    assert wrap(8, 4) == 2


def test_s7_base_cycle(s7_graph: ChainGraph):
    """Test that the twelve chosen edges form a Hamiltonian cycle with distinct labels.

    :param s7_graph: The S_7 chain graph.
    :type s7_graph: ChainGraph
    """
    edges = base_cycle_edges(s7_graph, enumerate_linkages(3), list(s7_graph.vertices))
    assert len(edges) == 12
    assert len({edge.label for edge in edges}) == 12

    m6 = [edge for edge in edges if edge.sign == 6]
    assert len(m6) == 4

    for edge in m6:
        i, j = component_of(edge.label.front, 3)
        assert j == wrap(i - 1, 3)


def test_s7_spanning_tree(s7_graph: ChainGraph):
    """Test the S_7 spanning tree: eleven edges, distinct labels, largest label dropped.

    :param s7_graph: The S_7 chain graph.
    :type s7_graph: ChainGraph
    """
    selection = select_spanning_tree_s7(s7_graph)
    cycle = base_cycle_edges(s7_graph, enumerate_linkages(3), list(s7_graph.vertices))
    assert len(selection.edges) == 11
    assert len(set(selection.labels)) == 11
    assert max(edge.label for edge in cycle) not in selection.labels

    disjoint = DisjointSet(s7_graph.vertices)

    for edge in selection.edges:
        assert disjoint.union(*edge.endpoints)


@pytest.mark.slow
def test_s9_component_cycle(s9_graph: ChainGraph):
    """Test that the top-level S_9 cycle over the 30 components is the published grid cycle.

    :param s9_graph: The S_9 chain graph.
    :type s9_graph: ChainGraph
    """
    assert component_cycle(s9_graph) == _grid_cycle()


@pytest.mark.slow
def test_s9_spanning_tree(s9_graph: ChainGraph):
    """Test the S_9 spanning tree: 359 edges with distinct labels.

    :param s9_graph: The S_9 chain graph.
    :type s9_graph: ChainGraph
    """
    selection = select_spanning_tree(4, s9_graph)
    assert len(selection.edges) == 359
    assert len(set(selection.labels)) == 359
