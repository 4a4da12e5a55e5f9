# -*- coding: utf-8 -*-
"""Build the chain graph whose edges are M[x]-connections through [2,1]-necklaces."""
from dataclasses import dataclass, field

from ksnake.chain import ChainSet, build_all_chains, trace_chain_of
from ksnake.errors import ConnectionFormulaError, InvalidLabelError, SignRangeError
from ksnake.partition import LINKAGE_CLASS, Necklace, enumerate_necklaces, length_of
from ksnake.perm import Cycle, Permutation, apply_transition
from ksnake.util import map_jobs

ComponentKey = tuple[int, int]


@dataclass(frozen=True)
class ConnectionEdge:
    """An M[x]-connection merging two chains through a linkage."""

    sign: int
    label: Necklace
    endpoints: tuple[Cycle, Cycle]

    @property
    def splice_site(self) -> tuple[Permutation, Permutation]:
        """The linkage arc [alpha,x,2,1] -> [x,alpha,2,1] that the connection cuts."""
        return linkage_site(self.label, self.sign)

    def __str__(self):
        return "M[{}] {} {} {}".format(self.sign, self.label.front, *self.endpoints)


def enumerate_linkages(n_param: int) -> list[Necklace]:
    return enumerate_necklaces(n_param, LINKAGE_CLASS)


def _check_linkage(linkage: Necklace) -> None:
    if linkage.label != LINKAGE_CLASS:
        raise InvalidLabelError(linkage.label, linkage.length)


def linkage_site(linkage: Necklace, x: int) -> tuple[Permutation, Permutation]:
    """Return the arc [alpha,x,2,1] -> [x,alpha,2,1] of a linkage."""
    _check_linkage(linkage)
    tail = linkage.rotation_ending_with(x)
    alpha = tail[:-3]
    return tail, (x,) + alpha + (2, 1)


def connection_pair(linkage: Necklace, x: int) -> tuple[Permutation, Permutation]:
    """Return [alpha,1,x,2] and [alpha,2,1,x], the chain codewords an M[x]-connection joins."""
    tail, _ = linkage_site(linkage, x)
    alpha = tail[:-3]
    return alpha + (1, x, 2), alpha + (2, 1, x)


def splice_arcs(tail: Permutation) -> list[tuple[Permutation, Permutation]]:
    """Return the arcs an M[x]-connection rotates at the linkage arc leaving [alpha,x,2,1].

    The linkage arc is redirected into the chain holding [alpha,1,x,2], which then runs
    into the chain holding [alpha,2,1,x], which returns to [x,alpha,2,1]. The three new
    arcs are all t_{2n+1}.
    """
    push = len(tail) - 2
    alpha, x = tail[:-3], tail[-3]
    first, second = alpha + (1, x, 2), alpha + (2, 1, x)
    return [
        (tail, (x,) + alpha + (2, 1)),
        (first, apply_transition(first, push)),
        (second, apply_transition(second, push)),
    ]


def _shift_cycle(x: int) -> Cycle:
    # (5 6 ... 2t) for x = 2t, (5 6 ... 2t-1 2t+1) for x = 2t+1
    if x % 2 == 0:
        return Cycle(tuple(range(5, x + 1)))

    return Cycle(tuple(range(5, x - 1)) + (x,))


def m_connection_endpoints(linkage: Necklace, x: int) -> tuple[Cycle, Cycle] | None:
    """Return the chains joined by the M[x]-connection of a linkage, by formula.

    For x > 5 the connection joins [(3x)pi]-[1,2] and [sigma pi]-[1,2], both cycles acting
    on the values of the linkage front pi. For x <= 5 both codewords lie in one chain.

    :param linkage: Necklace of class [2,1]
    :type linkage: Necklace
    :param x: Sign, 3 <= x <= 2n+1
    :type x: int
    :return: Chain names for [alpha,1,x,2] and [alpha,2,1,x], or None
    :rtype: tuple[Cycle, Cycle] | None
    """
    _check_linkage(linkage)

    if not 3 <= x <= linkage.length:
        raise SignRangeError(x, linkage.length)

    if x <= 5:
        return None

    swap = Cycle((3, x)).as_mapping()
    return linkage.front.relabel(swap), linkage.front.relabel(_shift_cycle(x).as_mapping())


def trace_endpoints(linkage: Necklace, x: int, chains: ChainSet) -> tuple[Cycle, Cycle] | None:
    """Return the owners of [alpha,1,x,2] and [alpha,2,1,x], or None when they coincide."""
    if not 3 <= x <= linkage.length:
        raise SignRangeError(x, linkage.length)

    first, second = connection_pair(linkage, x)
    owners = trace_chain_of(first, chains), trace_chain_of(second, chains)
    return None if owners[0] == owners[1] else owners


def component_of(name: Cycle, level: int) -> ComponentKey:
    """Return the positions (i, j) of 2m and 2m+1 in a name read from 4, values above 2m+1 dropped."""
    reduced = [v for v in name.rotated_to(4) if v <= 2 * level + 1]
    return reduced.index(2 * level) + 1, reduced.index(2 * level + 1) + 1


def reduced_positions(name: Cycle, level: int) -> dict[int, int]:
    """Return value -> 1-based position in a name read from 4, keeping values up to 2m+1."""
    reduced = [v for v in name.rotated_to(4) if v <= 2 * level + 1]
    return {v: i for i, v in enumerate(reduced, start=1)}


class DisjointSet:
    def __init__(self, items):
        self.parent = {item: item for item in items}

    def find(self, item):
        root = item

        while self.parent[root] != root:
            root = self.parent[root]

        while self.parent[item] != root:
            self.parent[item], item = root, self.parent[item]

        return root

    def union(self, a, b) -> bool:
        root_a, root_b = self.find(a), self.find(b)

        if root_a == root_b:
            return False

        self.parent[max(root_a, root_b)] = min(root_a, root_b)
        return True

    def groups(self) -> list[list]:
        grouped: dict = {}

        for item in self.parent:
            grouped.setdefault(self.find(item), []).append(item)

        return sorted(sorted(group) for group in grouped.values())


@dataclass
class ChainGraph:
    n_param: int
    vertices: tuple[Cycle, ...]
    edges: list[ConnectionEdge]
    component_index: dict[Cycle, ComponentKey] = field(default_factory=dict)

    def __post_init__(self):
        self._by_label = {(edge.label, edge.sign): edge for edge in self.edges}

    def edge(self, label: Necklace, sign: int) -> ConnectionEdge | None:
        return self._by_label.get((label, sign))

    def components(self, exclude_signs: set[int] = frozenset()) -> list[list[Cycle]]:
        """Return connected components using only edges whose sign is not excluded."""
        disjoint = DisjointSet(self.vertices)

        for edge in self.edges:
            if edge.sign not in exclude_signs:
                disjoint.union(*edge.endpoints)

        return disjoint.groups()

    def dump(self) -> str:
        lines = ["{}".format(vertex) for vertex in self.vertices]
        lines += ["{} {} {} {}".format(edge.sign, edge.label.front, *edge.endpoints) for edge in self.edges]
        return "\n".join(lines) + "\n"


def _linkage_edges(linkage: Necklace, chains: ChainSet) -> tuple[list[ConnectionEdge], list[str]]:
    edges, mismatches = [], []

    for x in range(3, linkage.length + 1):
        formula = m_connection_endpoints(linkage, x)
        traced = trace_endpoints(linkage, x, chains)

        if formula != traced:
            mismatches.append("{} M[{}]: formula {} traced {}".format(linkage, x, formula, traced))
        elif traced is not None:
            edges.append(ConnectionEdge(sign=x, label=linkage, endpoints=traced))

    return edges, mismatches


def build_chain_graph(n_param: int, chains: ChainSet | None = None, num_jobs: int = 1) -> ChainGraph:
    """Build every M[x]-connection of S_{2n+1}, gated on the formula agreeing with tracing.

    :param n_param: n >= 3
    :type n_param: int
    :param chains: Chains of S_{2n+1}, built when omitted
    :type chains: ChainSet | None
    :param num_jobs: Number of linkages processed concurrently
    :type num_jobs: int
    :return: The chain graph with its component index at the top level
    :rtype: ChainGraph
    """
    if n_param < 3:
        raise ValueError("The chain graph needs n >= 3, got {}.".format(n_param))

    if chains is None:
        chains = build_all_chains(n_param, num_jobs)

    results = map_jobs(_linkage_edges, enumerate_linkages(n_param), num_jobs, desc="linkages", chains=chains)
    edges = [edge for linkage_edges, _ in results for edge in linkage_edges]
    mismatches = [mismatch for _, linkage_mismatches in results for mismatch in linkage_mismatches]

    if mismatches:
        raise ConnectionFormulaError(mismatches)

    vertices = tuple(chains.names())
    index = {name: component_of(name, n_param) for name in vertices}
    return ChainGraph(n_param=n_param, vertices=vertices, edges=edges, component_index=index)


def expected_edge_count(n_param: int) -> int:
    """Return the number of M[x]-connections, one per linkage and sign 6 <= x <= 2n+1."""
    return len(enumerate_linkages(n_param)) * (length_of(n_param) - 5)
