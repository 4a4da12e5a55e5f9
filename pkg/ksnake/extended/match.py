# -*- coding: utf-8 -*-
"""Perfect matchings of chains over insertion sites, by deterministic backtracking."""
from collections import defaultdict
from collections.abc import Sequence
from dataclasses import dataclass

from ksnake.extended.insert import InsertionSite
from ksnake.perm import Cycle


@dataclass
class MatchingStats:
    attempts: int = 0
    nodes: int = 0
    exhausted: int = 0


def find_perfect_matching(
    names: Sequence[Cycle],
    sites: Sequence[InsertionSite],
    node_budget: int,
    stats: MatchingStats | None = None,
) -> list[InsertionSite] | None:
    """Pick sites so that every chain is inserted exactly once.

    The most constrained unmatched chain is branched on first (fewest usable sites, then
    smallest name); its sites are tried in snake order.

    :param names: Chains to cover
    :type names: Sequence[Cycle]
    :param sites: Candidate sites
    :type sites: Sequence[InsertionSite]
    :param node_budget: Maximum number of search nodes
    :type node_budget: int
    :param stats: Counters updated in place
    :type stats: MatchingStats | None
    :return: The matching sites, or None when none exists or the budget ran out
    :rtype: list[InsertionSite] | None
    """
    stats = stats if stats is not None else MatchingStats()
    stats.attempts += 1
    incident: dict[Cycle, list[InsertionSite]] = defaultdict(list)

    for site in sorted(sites, key=lambda s: s.position):
        for name in site.chains:
            incident[name].append(site)

    if len(names) % 2 or any(not incident[name] for name in names):
        return None

    unmatched = set(names)
    chosen: list[InsertionSite] = []
    nodes = 0

    def usable(name: Cycle) -> list[InsertionSite]:
        return [site for site in incident[name] if site.other(name) in unmatched]

    def branch() -> list:
        name = min(unmatched, key=lambda v: (len(usable(v)), v))
        # chain, its usable sites, next site to try, site currently applied
        return [name, usable(name), 0, None]

    frames = [branch()] if unmatched else []

    while frames:
        nodes += 1
        stats.nodes += 1

        if nodes > node_budget:
            stats.exhausted += 1
            return None

        frame = frames[-1]
        name, options, k, applied = frame

        if applied is not None:
            chosen.pop()
            unmatched.update((name, applied.other(name)))
            frame[3] = None

        if k == len(options):
            frames.pop()
            continue

        site = options[k]
        frame[2], frame[3] = k + 1, site
        unmatched.difference_update((name, site.other(name)))
        chosen.append(site)

        if not unmatched:
            return list(chosen)

        frames.append(branch())

    return None if names else []
