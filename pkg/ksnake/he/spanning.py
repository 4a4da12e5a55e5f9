# -*- coding: utf-8 -*-
"""Select a spanning tree of the chain graph whose edges carry distinct linkages."""
from collections import defaultdict
from collections.abc import Hashable, Iterable
from dataclasses import dataclass

from ksnake.errors import SpanningSelectionError
from ksnake.graph import (
    ChainGraph,
    ComponentKey,
    ConnectionEdge,
    DisjointSet,
    build_chain_graph,
    component_of,
    enumerate_linkages,
    reduced_positions,
)
from ksnake.partition import Necklace
from ksnake.perm import Cycle


@dataclass(frozen=True)
class SpanningSelection:
    edges: tuple[ConnectionEdge, ...]

    @property
    def labels(self) -> tuple[Necklace, ...]:
        return tuple(edge.label for edge in self.edges)


def wrap(k: int, level: int) -> int:
    """Map a position into 2..2m-1, counting modulo 2m-2."""
    return (k - 2) % (2 * level - 2) + 2


def _check_cycle(pairs: list[tuple[Hashable, Hashable]], vertices: Iterable[Hashable], what: str) -> None:
    vertices = set(vertices)
    degree: dict = defaultdict(int)
    disjoint = DisjointSet(vertices)

    for a, b in pairs:
        if a == b or a not in vertices or b not in vertices:
            raise SpanningSelectionError("{} edge {} - {} does not join two distinct vertices.".format(what, a, b))

        degree[a] += 1
        degree[b] += 1
        disjoint.union(a, b)

    if len(pairs) != len(vertices) or any(degree[v] != 2 for v in vertices) or len(disjoint.groups()) != 1:
        raise SpanningSelectionError(
            "{} edges do not form a Hamiltonian cycle on {} vertices.".format(what, len(vertices))
        )


def _base_sign(linkage: Necklace, level: int) -> int:
    positions = reduced_positions(linkage.front, level)
    i, j = positions[2 * level], positions[2 * level + 1]
    return 2 * level if j == wrap(i - 1, level) else 2 * level + 1


def base_cycle_edges(graph: ChainGraph, linkages: list[Necklace], chain_names: list[Cycle]) -> list[ConnectionEdge]:
    """Return the distinct-label cycle through a set of S_7-sized chains.

    A linkage whose 7 sits just before its 6 (cyclically over positions 2..5, names
    read from 4) contributes its M[6]-connection, every other linkage its M[7]-connection.
    """
    edges = []

    for linkage in linkages:
        sign = _base_sign(linkage, 3)
        edge = graph.edge(linkage, sign)

        if edge is None:
            raise SpanningSelectionError("Linkage {} has no M[{}]-connection.".format(linkage, sign))

        edges.append(edge)

    _check_cycle([edge.endpoints for edge in edges], chain_names, "Base")
    return edges


def _hat_rule(key: ComponentKey, level: int) -> tuple[int, int, int]:
    """Return the positions of 3 and 2m-1, and the sign, of the linkage chosen in L_{i,j}."""
    i, j = key

    if j == wrap(i - 1, level):
        return wrap(i - 2, level), wrap(i - 3, level), 2 * level

    if j == wrap(i - 2, level):
        return wrap(i - 1, level), wrap(i + 1, level), 2 * level + 1

    return wrap(j + 1, level), wrap(j + 2, level), 2 * level + 1


def _group(names: Iterable, level: int, key=lambda item: item) -> dict[ComponentKey, list]:
    groups: dict = defaultdict(list)

    for item in names:
        groups[component_of(key(item), level)].append(item)

    return {k: sorted(v) for k, v in sorted(groups.items())}


def hat_cycle_edges(
    graph: ChainGraph,
    linkages: list[Necklace],
    chain_names: list[Cycle],
    level: int,
) -> list[ConnectionEdge]:
    """Return one M[2m]/M[2m+1] edge per linkage group, forming a cycle over the chain groups.

    :param graph: Chain graph
    :type graph: ChainGraph
    :param linkages: Linkages of the component being connected
    :type linkages: list[Necklace]
    :param chain_names: Chains of the same component
    :type chain_names: list[Cycle]
    :param level: m, so that groups are keyed by the positions of 2m and 2m+1
    :type level: int
    :return: The cycle edges, in group order
    :rtype: list[ConnectionEdge]
    """
    edges = []

    for key, group in _group(linkages, level, key=lambda linkage: linkage.front).items():
        p3, q, sign = _hat_rule(key, level)
        candidates = [
            linkage
            for linkage in group
            if reduced_positions(linkage.front, level)[3] == p3
            and reduced_positions(linkage.front, level)[2 * level - 1] == q
        ]

        if not candidates:
            raise SpanningSelectionError(
                "No linkage in L{} has 3 at position {} and {} at position {}.".format(key, p3, 2 * level - 1, q)
            )

        edge = graph.edge(candidates[0], sign)

        if edge is None:
            raise SpanningSelectionError("Linkage {} has no M[{}]-connection.".format(candidates[0], sign))

        edges.append(edge)

    pairs = [tuple(component_of(name, level) for name in edge.endpoints) for edge in edges]
    _check_cycle(pairs, _group(chain_names, level), "Level {}".format(level))
    return edges


def _spanning_edges(
    graph: ChainGraph,
    linkages: list[Necklace],
    chain_names: list[Cycle],
    level: int,
    forbidden: Necklace | None,
) -> list[ConnectionEdge]:
    if level == 3:
        cycle = base_cycle_edges(graph, linkages, chain_names)
        dropped = forbidden if forbidden is not None else max(edge.label for edge in cycle)
        kept = [edge for edge in cycle if edge.label != dropped]

        if len(kept) != len(cycle) - 1:
            raise SpanningSelectionError("Linkage {} is not on the base cycle.".format(dropped))

        return kept

    hat = hat_cycle_edges(graph, linkages, chain_names, level)

    if forbidden is None:
        dropped = max(hat, key=lambda edge: edge.label)
    else:
        home = component_of(forbidden.front, level)
        dropped = next(edge for edge in hat if component_of(edge.label.front, level) == home)

    kept = [edge for edge in hat if edge is not dropped]
    occupied = {component_of(edge.label.front, level): edge.label for edge in kept}
    linkage_groups = _group(linkages, level, key=lambda linkage: linkage.front)
    chain_groups = _group(chain_names, level)
    selected = list(kept)

    for key, group in linkage_groups.items():
        inner_forbidden = occupied.get(key)

        if inner_forbidden is None and forbidden is not None and component_of(forbidden.front, level) == key:
            inner_forbidden = forbidden

        selected += _spanning_edges(graph, group, chain_groups[key], level - 1, inner_forbidden)

    return selected


def _check_spanning_tree(edges: list[ConnectionEdge], vertices: tuple[Cycle, ...]) -> None:
    labels = [edge.label for edge in edges]

    if len(set(labels)) != len(labels):
        raise SpanningSelectionError("Spanning tree reuses a linkage.")

    if len(edges) != len(vertices) - 1:
        raise SpanningSelectionError(
            "Spanning tree has {} edges for {} chains.".format(len(edges), len(vertices))
        )

    disjoint = DisjointSet(vertices)

    for edge in edges:
        if not disjoint.union(*edge.endpoints):
            raise SpanningSelectionError("Edge {} closes a cycle.".format(edge))


def select_spanning_tree_s7(graph: ChainGraph | None = None) -> SpanningSelection:
    """Return the S_7 cycle of twelve distinct-label edges minus its largest label."""
    return select_spanning_tree(3, graph)


def select_spanning_tree(n_param: int, graph: ChainGraph | None = None) -> SpanningSelection:
    """Return a spanning tree of the chain graph using every linkage at most once.

    :param n_param: n >= 3
    :type n_param: int
    :param graph: Chain graph of S_{2n+1}, built when omitted
    :type graph: ChainGraph | None
    :return: (2n-2)!/2 - 1 edges with distinct labels
    :rtype: SpanningSelection
    """
    if graph is None:
        graph = build_chain_graph(n_param)

    if graph.n_param != n_param:
        raise SpanningSelectionError("Graph is for n={}, expected n={}.".format(graph.n_param, n_param))

    edges = _spanning_edges(graph, enumerate_linkages(n_param), list(graph.vertices), n_param, None)
    _check_spanning_tree(edges, graph.vertices)
    return SpanningSelection(edges=tuple(edges))


def component_cycle(graph: ChainGraph) -> set[frozenset[ComponentKey]]:
    """Return the top-level cycle over the components C_{i,j} as unordered key pairs."""
    level = graph.n_param
    edges = hat_cycle_edges(graph, enumerate_linkages(level), list(graph.vertices), level)
    return {frozenset(component_of(name, level) for name in edge.endpoints) for edge in edges}
