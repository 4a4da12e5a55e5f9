# -*- coding: utf-8 -*-
"""Module containing the tests for the command line."""
from pathlib import Path

import pytest

from ksnake.cli import EXIT_FAILED, EXIT_OK, EXIT_USAGE, main, parse_args
from ksnake.snakefile import read_snake_file


@pytest.fixture
def config_path(tmp_path: Path) -> str:
    """Return the path of a config file with blank and set values.

    :param tmp_path: The pytest tmp_path fixture.
    :type tmp_path: Path
    :return: The config path.
    :rtype: str
    """
    path = tmp_path / "config.ini"
    path.write_text(
        "\n".join(
            [
                "[construction]",
                "n = 2",
                "construction = he",
                "fallback_he = no",
                "[verification]",
                "mode =",
                "[search]",
                "max_maps =",
                "node_budget = 100",
                "time_budget = 30",
                "[output]",
                "out =",
                "num_jobs =",
            ]
        ),
        encoding="ascii",
    )
    return str(path)


def test_parse_args(config_path: str):
    """Test that file values are typed and command line values win.

    :param config_path: The config path.
    :type config_path: str
    """
    args = parse_args(["-c", config_path, "generate"])
    assert args["n"] == 2
    assert args["fallback_he"] is False
    assert args["mode"] is None
    assert args["max_maps"] is None
    assert args["node_budget"] == 100
    assert args["time_budget"] == 30.0
    assert args["num_jobs"] == 1

    args = parse_args(["-c", config_path, "-j", "3", "generate", "--n", "3", "--fallback-he"])
    assert args["n"] == 3
    assert args["fallback_he"] is True
    assert args["num_jobs"] == 3


def test_parse_args_without_config(tmp_path: Path):
    """Test that a missing config file leaves the defaults.

    :param tmp_path: The pytest tmp_path fixture.
    :type tmp_path: Path
    """
    args = parse_args(["-c", str(tmp_path / "none.ini"), "verify", "--in", "x.snake"])
    assert args["command"] == "verify"
    assert args["in_path"] == "x.snake"
    assert args["n"] == 3
    assert args["max_rewrites"] == 3


def test_generate_verify_stats(config_path: str, tmp_path: Path, capsys: pytest.CaptureFixture):
    """Test the generate, verify and stats round trip on S_5.

    :param config_path: The config path.
    :type config_path: str
    :param tmp_path: The pytest tmp_path fixture.
    :type tmp_path: Path
    :param capsys: The pytest capsys fixture.
    :type capsys: pytest.CaptureFixture
    """
    out = tmp_path / "s5.snake"
    tree = tmp_path / "tree.txt"
    assert main(["-c", config_path, "generate", "--out", str(out), "--dump_tree", str(tree)]) == EXIT_OK
    assert read_snake_file(out).size == 57
    assert len(tree.read_text(encoding="ascii").splitlines()) == 9

    assert main(["-c", config_path, "verify", "--in", str(out), "--mode", "full"]) == EXIT_OK
    assert "pairs checked: 1596" in capsys.readouterr().out

    assert main(["-c", config_path, "stats", "--in", str(out)]) == EXIT_OK
    printed = capsys.readouterr().out
    assert "size: 57" in printed
    assert "missing codewords: 3" in printed
    assert "t_3" in printed


def test_verify_flags_even_transition(config_path: str, tmp_path: Path):
    """Test that a file with an even transition index fails verification.

    :param config_path: The config path.
    :type config_path: str
    :param tmp_path: The pytest tmp_path fixture.
    :type tmp_path: Path
    """
    out = tmp_path / "s5.snake"
    assert main(["-c", config_path, "generate", "--out", str(out)]) == EXIT_OK

    lines = out.read_text(encoding="ascii").splitlines()
    transitions = lines[3].split()
    transitions[0] = "2"
    lines[3] = " ".join(transitions)
    out.write_text("\n".join(lines) + "\n", encoding="ascii")

    assert main(["-c", config_path, "verify", "--in", str(out)]) == EXIT_FAILED


def test_invalid_arguments(config_path: str, tmp_path: Path):
    """Test the exit codes for invalid n and unreadable files.

    :param config_path: The config path.
    :type config_path: str
    :param tmp_path: The pytest tmp_path fixture.
    :type tmp_path: Path
    """
    assert main(["-c", config_path, "generate", "--n", "1"]) == EXIT_USAGE
    assert main(["-c", config_path, "generate", "--n", "2", "--construction", "extended"]) == EXIT_USAGE
    assert main(["-c", config_path, "verify", "--in", str(tmp_path / "missing.snake")]) == EXIT_FAILED

    with pytest.raises(SystemExit):
        main(["-c", config_path, "generate", "--construction", "other"])


def test_generate_extended_s7(config_path: str, tmp_path: Path, capsys: pytest.CaptureFixture):
    """Test the extended construction end to end on S_7.

    :param config_path: The config path.
    :type config_path: str
    :param tmp_path: The pytest tmp_path fixture.
    :type tmp_path: Path
    :param capsys: The pytest capsys fixture.
    :type capsys: pytest.CaptureFixture
    """
    out = tmp_path / "s7.snake"
    argv = ["-c", config_path, "generate", "--n", "3", "--construction", "extended", "--out", str(out)]
    assert main(argv) == EXIT_OK
    assert read_snake_file(out).size == 2517
    assert main(["-c", config_path, "verify", "--in", str(out)]) == EXIT_OK

    assert main(["-c", config_path, "stats", "--in", str(out)]) == EXIT_OK
    assert "missing codewords: 3" in capsys.readouterr().out


def test_verify_tiny_malformed_snake(config_path: str, tmp_path: Path):
    """Test that a length-1 file with an even transition exits 1 instead of raising.

    :param config_path: The config path.
    :type config_path: str
    :param tmp_path: The pytest tmp_path fixture.
    :type tmp_path: Path
    """
    path = tmp_path / "tiny.snake"
    path.write_text("snake v1\nn=1 construction=he size=1\n1\n2\n", encoding="ascii")
    assert main(["-c", config_path, "verify", "--in", str(path)]) == EXIT_FAILED
