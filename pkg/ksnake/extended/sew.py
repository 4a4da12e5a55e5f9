# -*- coding: utf-8 -*-
"""Sew-and-mend: move a segment of a snake so that a t_{2n-3} step becomes a t_{2n-1} step.

With lo = 2n-3 and hi = 2n-1, the identity t_lo^{-1} t_hi t_lo^{-1} = t_hi^{-1} t_lo t_hi^{-1}
lets the segment from t_lo(pi) to t_lo^{-1} t_hi(pi) be cut out, pi joined directly to
t_hi(pi), and the segment reinserted between a = t_hi^{-1} t_lo(pi) and t_lo(a).
"""
from collections.abc import Iterator
from dataclasses import dataclass

from ksnake.errors import InapplicableRewriteError
from ksnake.perm import Permutation, apply_inverse, apply_transition
from ksnake.snake import Snake, snake_from_successors
from ksnake.splice import Arc, rotate_arcs


def rewrite_indices(length: int) -> tuple[int, int]:
    return length - 4, length - 2


@dataclass(frozen=True)
class SewRewrite:
    pivot: Permutation
    cut_segment: tuple[Permutation, Permutation]
    insert_after: Permutation
    insert_before: Permutation
    pivot_successor: Permutation

    def arcs(self) -> list[Arc]:
        """The three t_{2n-3} arcs the rewrite replaces, in rotation order."""
        first, last = self.cut_segment
        return [
            (self.pivot, first),
            (last, self.pivot_successor),
            (self.insert_after, self.insert_before),
        ]

    def new_arc_tails(self) -> tuple[Permutation, Permutation, Permutation]:
        """Tails of the three t_{2n-1} arcs the rewrite creates."""
        return self.pivot, self.insert_after, self.cut_segment[1]


def plan_sew_rewrite(pivot: Permutation) -> SewRewrite:
    lo, hi = rewrite_indices(len(pivot))
    first = apply_transition(pivot, lo)
    pivot_successor = apply_transition(pivot, hi)
    insert_after = apply_inverse(first, hi)
    return SewRewrite(
        pivot=tuple(pivot),
        cut_segment=(first, apply_inverse(pivot_successor, lo)),
        insert_after=insert_after,
        insert_before=apply_transition(insert_after, lo),
        pivot_successor=pivot_successor,
    )


class _Layout:
    """Codeword order and positions of a snake, for applicability checks."""

    def __init__(self, snake: Snake):
        self.codewords = list(snake.codewords())
        self.position = {codeword: i for i, codeword in enumerate(self.codewords)}

    def successor(self, codeword: Permutation) -> Permutation | None:
        i = self.position.get(codeword)
        return None if i is None else self.codewords[(i + 1) % len(self.codewords)]

    def offset(self, start: Permutation, codeword: Permutation) -> int:
        return (self.position[codeword] - self.position[start]) % len(self.codewords)

    def inapplicable_reason(self, rewrite: SewRewrite) -> str | None:
        for tail, head in rewrite.arcs():
            if self.successor(tail) != head:
                return "{} is not followed by {}".format(list(tail), list(head))

        first, last = rewrite.cut_segment
        span = self.offset(first, last)

        for codeword in (rewrite.insert_after, rewrite.insert_before):
            if self.offset(first, codeword) <= span:
                return "{} lies inside the cut segment".format(list(codeword))

        return None


def _apply(snake: Snake, rewrite: SewRewrite) -> Snake:
    successor = snake.successors()
    rotate_arcs(successor, rewrite.arcs())
    return snake_from_successors(successor, snake.initial, snake.construction)


def apply_sew_rewrite(snake: Snake, rewrite: SewRewrite) -> Snake:
    """Return the snake with the rewrite applied; the codeword set is unchanged.

    :param snake: Snake inside one class, using t_{2n-3} and t_{2n-1}
    :type snake: Snake
    :param rewrite: Planned rewrite
    :type rewrite: SewRewrite
    :return: New snake where the pivot is followed by t_{2n-1}(pivot)
    :rtype: Snake
    """
    reason = _Layout(snake).inapplicable_reason(rewrite)

    if reason is not None:
        raise InapplicableRewriteError(rewrite.pivot, reason)

    return _apply(snake, rewrite)


def iter_sew_rewrites(snake: Snake) -> Iterator[SewRewrite]:
    """Yield every applicable rewrite, pivots in snake order."""
    lo, _ = rewrite_indices(snake.length)
    layout = _Layout(snake)

    for codeword, index in zip(layout.codewords, snake.transitions):
        if index == lo:
            rewrite = plan_sew_rewrite(codeword)

            if layout.inapplicable_reason(rewrite) is None:
                yield rewrite
