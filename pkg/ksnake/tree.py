# -*- coding: utf-8 -*-
"""Build and check the ordered hypertree that drives necklace merging."""
from dataclasses import dataclass, field
from functools import lru_cache
from typing import NamedTuple

from ksnake.partition import LINKAGE_CLASS, ROOT_CLASS, ClassLabel, class_labels, length_of


class HyperEdge(NamedTuple):
    """The hyperedge <x,y,z> joining the classes [x,y], [y,z] and [z,x]."""

    x: int
    y: int
    z: int

    def __str__(self):
        return "<{},{},{}>".format(self.x, self.y, self.z)

    def rotations(self) -> tuple["HyperEdge", "HyperEdge", "HyperEdge"]:
        x, y, z = self
        return HyperEdge(x, y, z), HyperEdge(y, z, x), HyperEdge(z, x, y)

    def classes(self) -> tuple[ClassLabel, ClassLabel, ClassLabel]:
        return tuple(ClassLabel(r.x, r.y) for r in self.rotations())


BASE_EDGES = tuple(
    HyperEdge(*e)
    for e in [(1, 2, 3), (1, 2, 4), (1, 2, 5), (1, 5, 3), (2, 3, 5), (1, 3, 4), (2, 4, 3), (1, 4, 5), (2, 5, 4)]
)


@dataclass(frozen=True)
class MergeTree:
    n_param: int
    edges: tuple[HyperEdge, ...]

    def dump(self) -> str:
        return "".join("{} {} {}\n".format(*edge) for edge in self.edges)


@dataclass
class TreeReport:
    valid: bool
    violations: list[str] = field(default_factory=list)

    @property
    def first_violation(self) -> str | None:
        return self.violations[0] if self.violations else None


@lru_cache(maxsize=None)
def build_merge_tree(n_param: int) -> MergeTree:
    """Return the nearly spanning tree T_{2n+1} with its edges in processing order.

    :param n_param: n >= 2
    :type n_param: int
    :return: The tree, base edges first, then each recursion step's edges
    :rtype: MergeTree
    """
    if n_param < 2:
        raise ValueError("The merge tree needs n >= 2, got {}.".format(n_param))

    edges = list(BASE_EDGES)

    for m in range(3, n_param + 1):
        top, last = 2 * m, 2 * m + 1
        edges += [HyperEdge(x, x + 1, top) for x in range(2, top - 1)]
        edges += [HyperEdge(x, x + 1, last) for x in range(2, top - 1)]
        edges += [
            HyperEdge(1, 2, top),
            HyperEdge(1, top, top - 1),
            HyperEdge(1, last, top - 1),
            HyperEdge(1, top, last),
            HyperEdge(2, last, top),
        ]

    return MergeTree(n_param, tuple(edges))


def validate_tree(tree: MergeTree) -> TreeReport:
    """Check coverage, the hypertree shape and prefix validity of a merge tree.

    Edges are replayed in order from the root class [1,2]; each must touch exactly one
    class merged so far. An edge touching none is reported and skipped, an edge touching
    two or three closes a cycle.

    :param tree: Tree to check
    :type tree: MergeTree
    :return: Report listing every violation found, in order
    :rtype: TreeReport
    """
    length = length_of(tree.n_param)
    violations = []
    connected = {ROOT_CLASS}

    for edge in tree.edges:
        if len(set(edge)) != 3 or not all(1 <= v <= length for v in edge):
            violations.append("edge {} is not a triple of distinct values in 1..{}".format(edge, length))
            continue

        classes = edge.classes()

        if LINKAGE_CLASS in classes:
            violations.append("edge {} touches the excluded class {}".format(edge, LINKAGE_CLASS))

        present = sum(label in connected for label in classes)

        if present == 0:
            violations.append("edge {} touches no merged class".format(edge))
            continue

        if present > 1:
            violations.append("edge {} touches {} merged classes and closes a cycle".format(edge, present))

        connected.update(classes)

    expected = set(class_labels(tree.n_param)) - {LINKAGE_CLASS}
    uncovered = sorted(expected - connected)

    if uncovered:
        violations.append("uncovered classes: {}".format(", ".join(str(label) for label in uncovered)))

    edge_count = tree.n_param * length - 1

    if len(tree.edges) != edge_count:
        violations.append("tree has {} edges, expected {}".format(len(tree.edges), edge_count))

    return TreeReport(valid=not violations, violations=violations)
