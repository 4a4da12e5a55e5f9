# -*- coding: utf-8 -*-
"""Define session fixtures shared by the snake tests."""
from pathlib import Path

import pytest

from ksnake.chain import ChainSet, build_all_chains
from ksnake.extended.pipeline import assemble_extended_snake
from ksnake.graph import ChainGraph, build_chain_graph
from ksnake.he.assemble import assemble_he_snake
from ksnake.perm import Permutation
from ksnake.snake import Snake

FIGURES_DIR = Path(__file__).resolve().parent.parent / "dataset" / "figures"


def read_figure(name: str) -> list[Permutation]:
    """Read a transcribed figure, one row per position and one column per codeword.

    :param name: File name under dataset/figures
    :type name: str
    :return: The codewords, left to right
    :rtype: list[Permutation]
    """
    rows = [
        [int(v) for v in line.split("|")]
        for line in (FIGURES_DIR / name).read_text(encoding="ascii").splitlines()
        if line.strip()
    ]
    return [tuple(column) for column in zip(*rows)]


@pytest.fixture(scope="session")
def figure_he_s5() -> list[Permutation]:
    """Return the 57 codewords of the S_5 merging figure.

    :return: The codewords.
    :rtype: list[Permutation]
    """
    return read_figure("s5_he_snake.txt")


@pytest.fixture(scope="session")
def figure_embedded_s7() -> list[Permutation]:
    """Return the embedded S_5 snake inside class [2,1] of S_7.

    :return: The codewords.
    :rtype: list[Permutation]
    """
    return read_figure("s7_embedded_snake.txt")


@pytest.fixture(scope="session")
def figure_sewn_s7() -> list[Permutation]:
    """Return the embedded snake after one sew rewrite.

    :return: The codewords.
    :rtype: list[Permutation]
    """
    return read_figure("s7_sewn_snake.txt")


@pytest.fixture(scope="session")
def s5_chains() -> ChainSet:
    """Return the single chain of S_5.

    :return: The chain set.
    :rtype: ChainSet
    """
    return build_all_chains(2)


@pytest.fixture(scope="session")
def s7_chains() -> ChainSet:
    """Return the twelve chains of S_7.

    :return: The chain set.
    :rtype: ChainSet
    """
    return build_all_chains(3, num_jobs=4)


@pytest.fixture(scope="session")
def s7_graph(s7_chains: ChainSet) -> ChainGraph:
    """Return the chain graph of S_7.

    :param s7_chains: The S_7 chains.
    :type s7_chains: ChainSet
    :return: The chain graph.
    :rtype: ChainGraph
    """
    return build_chain_graph(3, s7_chains, num_jobs=4)


@pytest.fixture(scope="session")
def he_s5(s5_chains: ChainSet) -> Snake:
    """Return the HE snake of S_5.

    :param s5_chains: The S_5 chains.
    :type s5_chains: ChainSet
    :return: The snake.
    :rtype: Snake
    """
    return assemble_he_snake(2, chains=s5_chains)


@pytest.fixture(scope="session")
def he_s7(s7_chains: ChainSet, s7_graph: ChainGraph) -> Snake:
    """Return the HE snake of S_7.

    :param s7_chains: The S_7 chains.
    :type s7_chains: ChainSet
    :param s7_graph: The S_7 chain graph.
    :type s7_graph: ChainGraph
    :return: The snake.
    :rtype: Snake
    """
    return assemble_he_snake(3, chains=s7_chains, graph=s7_graph)


@pytest.fixture(scope="session")
def extended_s7(he_s5: Snake, s7_chains: ChainSet) -> Snake:
    """Return the extended snake of S_7 built from the fixed recipe.

    :param he_s5: The S_5 snake to embed.
    :type he_s5: Snake
    :param s7_chains: The S_7 chains.
    :type s7_chains: ChainSet
    :return: The snake.
    :rtype: Snake
    """
    return assemble_extended_snake(3, golden=True, inner=he_s5, chains=s7_chains)


@pytest.fixture(scope="session")
def s9_chains() -> ChainSet:
    """Return the 360 chains of S_9.

    :return: The chain set.
    :rtype: ChainSet
    """
    return build_all_chains(4, num_jobs=8)


@pytest.fixture(scope="session")
def s9_graph(s9_chains: ChainSet) -> ChainGraph:
    """Return the chain graph of S_9.

    :param s9_chains: The S_9 chains.
    :type s9_chains: ChainSet
    :return: The chain graph.
    :rtype: ChainGraph
    """
    return build_chain_graph(4, s9_chains, num_jobs=8)
