# -*- coding: utf-8 -*-
"""Define the pipeline for the extended snake of size (2n+1)!/2 - 2n + 3."""
from collections import Counter
from dataclasses import dataclass, field
from time import perf_counter

import pandas as pd

from ksnake.chain import ChainSet, build_all_chains
from ksnake.errors import AssemblyError, ConjectureUnresolvedError
from ksnake.extended.embed import EmbeddingMap, embed_inner_snake, iter_embedding_maps
from ksnake.extended.insert import InsertionSite, find_insertion_sites, insert_chain_pairs
from ksnake.extended.match import MatchingStats, find_perfect_matching
from ksnake.extended.sew import SewRewrite, apply_sew_rewrite, iter_sew_rewrites, plan_sew_rewrite
from ksnake.he.assemble import assemble_he_snake
from ksnake.partition import length_of
from ksnake.snake import Snake, extended_size
from ksnake.util import iter_batches, map_jobs

GOLDEN_MAP = EmbeddingMap((5, 6, 3, 7, 4))
GOLDEN_PIVOT = (3, 5, 6, 7, 4, 2, 1)


@dataclass
class SearchSettings:
    max_maps: int | None = None
    max_rewrites: int = 3
    max_branching: int = 4
    node_budget: int = 50000
    time_budget: float | None = None


@dataclass
class SearchReport:
    length: int
    maps_tried: int = 0
    rewrites_applied: int = 0
    sites_per_sign: Counter = field(default_factory=Counter)
    matching_attempts: int = 0
    nodes: int = 0
    budget_exhausted: int = 0
    elapsed: float = 0.0
    reason: str = ""

    def merge(self, other: "SearchReport") -> None:
        self.maps_tried += other.maps_tried
        self.rewrites_applied += other.rewrites_applied
        self.matching_attempts += other.matching_attempts
        self.nodes += other.nodes
        self.budget_exhausted += other.budget_exhausted

        for sign, count in other.sites_per_sign.items():
            self.sites_per_sign[sign] = max(self.sites_per_sign[sign], count)

    def to_text(self) -> str:
        summary = pd.Series(
            {
                "maps tried": self.maps_tried,
                "rewrites applied": self.rewrites_applied,
                "matching attempts": self.matching_attempts,
                "backtracking nodes": self.nodes,
                "node budget exhausted": self.budget_exhausted,
                "elapsed seconds": "{:.2f}".format(self.elapsed),
            },
            dtype=object,
        )
        sites = pd.Series(
            {"x={}".format(sign): count for sign, count in sorted(self.sites_per_sign.items())}, dtype="int64"
        )
        return "\n".join(
            [
                "extended search for S_{}: {}".format(self.length, self.reason),
                summary.to_string(),
                "most insertion sites seen per sign:",
                sites.to_string() if len(sites) else "none",
            ]
        )


def _try_matching(
    snake: Snake,
    chains: ChainSet,
    settings: SearchSettings,
    report: SearchReport,
) -> list[InsertionSite] | None:
    sites = find_insertion_sites(snake, chains)

    for sign, count in Counter(site.sign for site in sites).items():
        report.sites_per_sign[sign] = max(report.sites_per_sign[sign], count)

    stats = MatchingStats()
    matching = find_perfect_matching(chains.names(), sites, settings.node_budget, stats)
    report.matching_attempts += stats.attempts
    report.nodes += stats.nodes
    report.budget_exhausted += stats.exhausted
    return matching


def _new_sites(rewrite: SewRewrite) -> int:
    return sum(tail[-3] > 5 for tail in rewrite.new_arc_tails())


def _ranked_rewrites(snake: Snake, limit: int) -> list[SewRewrite]:
    candidates = [rewrite for rewrite in iter_sew_rewrites(snake) if _new_sites(rewrite) > 0]
    candidates.sort(key=lambda rewrite: -_new_sites(rewrite))
    return candidates[:limit]


def _search_map(
    f: EmbeddingMap,
    n_param: int,
    inner: Snake,
    chains: ChainSet,
    settings: SearchSettings,
    deadline: float | None,
) -> tuple[Snake | None, SearchReport]:
    """Try one embedding map: match, and on failure explore sew rewrites depth first."""
    report = SearchReport(length=length_of(n_param), maps_tried=1)
    embedded = embed_inner_snake(n_param, inner, f)

    def explore(snake: Snake, depth: int) -> Snake | None:
        if deadline is not None and perf_counter() > deadline:
            return None

        matching = _try_matching(snake, chains, settings, report)

        if matching is not None:
            return insert_chain_pairs(snake, matching, chains)

        if depth == settings.max_rewrites:
            return None

        for rewrite in _ranked_rewrites(snake, settings.max_branching):
            report.rewrites_applied += 1
            found = explore(apply_sew_rewrite(snake, rewrite), depth + 1)

            if found is not None:
                return found

        return None

    return explore(embedded, 0), report


def search_extended_snake(
    n_param: int,
    inner: Snake,
    chains: ChainSet,
    settings: SearchSettings | None = None,
    num_jobs: int = 1,
) -> Snake:
    """Search embedding maps in lexicographic order and return the first extended snake found.

    :param n_param: n >= 3
    :type n_param: int
    :param inner: Snake of S_{2n-1} to embed
    :type inner: Snake
    :param chains: Chains of S_{2n+1}
    :type chains: ChainSet
    :param settings: Search limits
    :type settings: SearchSettings | None
    :param num_jobs: Number of maps evaluated concurrently
    :type num_jobs: int
    :return: The extended snake
    :rtype: Snake
    """
    settings = settings or SearchSettings()
    start_time = perf_counter()
    deadline = start_time + settings.time_budget if settings.time_budget is not None else None
    report = SearchReport(length=length_of(n_param))
    maps = list(iter_embedding_maps(n_param, inner.initial))

    if settings.max_maps is not None:
        maps = maps[:settings.max_maps]

    for batch in iter_batches(maps, max(1, num_jobs)):
        outcomes = map_jobs(
            _search_map,
            batch,
            num_jobs,
            desc="maps",
            n_param=n_param,
            inner=inner,
            chains=chains,
            settings=settings,
            deadline=deadline,
        )

        for snake, map_report in outcomes:
            report.merge(map_report)

            if snake is not None:
                return snake

        if deadline is not None and perf_counter() > deadline:
            report.reason = "time budget of {} s exhausted".format(settings.time_budget)
            break
    else:
        report.reason = "all {} embedding maps tried".format(len(maps))

    report.elapsed = perf_counter() - start_time
    raise ConjectureUnresolvedError(report)


def golden_extended_snake(inner: Snake, chains: ChainSet, settings: SearchSettings | None = None) -> Snake:
    """Build the S_7 snake of size 2517 from the fixed map f = (5,6,3,7,4) and one rewrite."""
    settings = settings or SearchSettings()
    report = SearchReport(length=7, maps_tried=1, rewrites_applied=1)
    embedded = embed_inner_snake(3, inner, GOLDEN_MAP)
    sewn = apply_sew_rewrite(embedded, plan_sew_rewrite(GOLDEN_PIVOT))
    matching = _try_matching(sewn, chains, settings, report)

    if matching is None:
        report.reason = "no perfect matching over the sewn snake's sites"
        raise ConjectureUnresolvedError(report)

    return insert_chain_pairs(sewn, matching, chains)


def assemble_extended_snake(
    n_param: int,
    golden: bool | None = None,
    settings: SearchSettings | None = None,
    inner: Snake | None = None,
    chains: ChainSet | None = None,
    num_jobs: int = 1,
) -> Snake:
    """Build the extended snake of S_{2n+1}.

    :param n_param: n >= 3
    :type n_param: int
    :param golden: Use the fixed S_7 recipe; defaults to True exactly when n = 3
    :type golden: bool | None
    :param settings: Search limits for the search path
    :type settings: SearchSettings | None
    :param inner: HE snake of S_{2n-1}, built when omitted
    :type inner: Snake | None
    :param chains: Chains of S_{2n+1}, built when omitted
    :type chains: ChainSet | None
    :param num_jobs: Number of concurrent jobs
    :type num_jobs: int
    :return: Snake of size (2n+1)!/2 - 2n + 3
    :rtype: Snake
    """
    if n_param < 3:
        raise ValueError("The extended construction needs n >= 3, got {}.".format(n_param))

    if golden is None:
        golden = n_param == 3

    if golden and n_param != 3:
        raise ValueError("The fixed recipe only exists for n = 3.")

    start_time = perf_counter()

    if inner is None:
        inner = assemble_he_snake(n_param - 1, num_jobs=num_jobs)

    print("Building extended snake for S_{}...".format(length_of(n_param)))

    if chains is None:
        chains = build_all_chains(n_param, num_jobs)

    if golden:
        snake = golden_extended_snake(inner, chains, settings)
    else:
        snake = search_extended_snake(n_param, inner, chains, settings, num_jobs)

    snake = Snake(snake.initial, snake.transitions, "extended")

    if snake.size != extended_size(n_param):
        raise AssemblyError("Extended snake has {} codewords, expected {}.".format(snake.size, extended_size(n_param)))

    print("Extended snake of size {} built in {:.2f} s.".format(snake.size, perf_counter() - start_time))
    print("--------------------------------------------------")
    return snake
