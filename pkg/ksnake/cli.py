# -*- coding: utf-8 -*-
"""Command line entry point: generate, verify and inspect snake files."""
import os
from argparse import ArgumentParser
from configparser import ConfigParser
from time import perf_counter

from ksnake.chain import build_all_chains
from ksnake.errors import ConjectureUnresolvedError, InvalidLengthError, SnakeError, SnakeFileError
from ksnake.extended.pipeline import SearchSettings, assemble_extended_snake
from ksnake.graph import build_chain_graph
from ksnake.he.assemble import assemble_he_snake
from ksnake.partition import length_of
from ksnake.snake import Snake
from ksnake.snakefile import read_snake_file, write_snake_file
from ksnake.tree import build_merge_tree
from ksnake.verify import Mode, check_upper_bounds, missing_codewords, verify_snake

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2
EXIT_UNRESOLVED = 3

INT_ARGS = [
    "n",
    "max_maps",
    "max_rewrites",
    "max_branching",
    "node_budget",
    "num_jobs",
]

FLOAT_ARGS = [
    "time_budget",
]

BOOL_ARGS = [
    "fallback_he",
]

DEFAULTS = {
    "n": 3,
    "construction": "he",
    "fallback_he": False,
    "mode": None,
    "out": None,
    "max_maps": None,
    "max_rewrites": 3,
    "max_branching": 4,
    "node_budget": 50000,
    "time_budget": 1800.0,
    "num_jobs": 1,
}


def parse_config_args(filepath: str | os.PathLike) -> dict[str, dict[str, str | None]]:
    config = ConfigParser(allow_no_value=True)
    config.read(filepath)
    args = dict()

    for section in config.sections():
        args[section] = dict()

        for option in config.options(section):
            value = config.get(section, option)

            if value == "":
                value = None

            args[section][option] = value

    return args


def _parse_bool(value: str) -> bool:
    if value.strip().lower() in ("1", "true", "yes", "on"):
        return True

    if value.strip().lower() in ("0", "false", "no", "off"):
        return False

    raise ValueError("Not a boolean: {}".format(value))


def command_parser() -> ArgumentParser:
    """Parse the command line arguments."""
    parser = ArgumentParser(
        prog="ksnake",
        description="Constructs and verifies K-snakes over the alternating group A_{2n+1}.",
    )

    parser.add_argument(
        "-c",
        "--config_path",
        type=str,
        default="config.ini",
        help="Path for config file. Command line arguments override file arguments. (default: \"config.ini\")",
    )

    parser.add_argument(
        "-j",
        "--num_jobs",
        type=int,
        help="Maximum number of concurrently running jobs.",
    )

    commands = parser.add_subparsers(dest="command", required=True)
    generate = commands.add_parser("generate", help="Construct a snake and write it to a snake file.")

    generate.add_argument(
        "--n",
        type=int,
        help="Snake parameter n; codewords are permutations of length 2n+1.",
    )

    generate.add_argument(
        "--construction",
        type=str,
        choices=["he", "extended"],
        help="Construction to run, \"he\" or \"extended\".",
    )

    generate.add_argument(
        "--out",
        type=str,
        help="Output path. Defaults to snakes/s<2n+1>_<construction>.snake.",
    )

    generate.add_argument(
        "--fallback-he",
        dest="fallback_he",
        action="store_const",
        const=True,
        help="Write the HE snake when the extended search is unresolved.",
    )

    generate.add_argument(
        "--search",
        action="store_const",
        const=True,
        help="Use the search path for n = 3 instead of the fixed recipe.",
    )

    generate.add_argument(
        "--dump_tree",
        type=str,
        help="Also write the merge tree, one edge \"x y z\" per line, to this path.",
    )

    generate.add_argument(
        "--dump_graph",
        type=str,
        help="Also write the chain graph to this path (n >= 3).",
    )

    verify = commands.add_parser("verify", help="Check a snake file.")
    verify.add_argument("--in", dest="in_path", type=str, required=True, help="Snake file to check.")

    verify.add_argument(
        "--mode",
        type=str,
        choices=[mode.value for mode in Mode],
        help="\"structural\" or \"full\". Defaults to full for S_7 and below.",
    )

    stats = commands.add_parser("stats", help="Print size, transition histogram and missing codewords.")
    stats.add_argument("--in", dest="in_path", type=str, required=True, help="Snake file to inspect.")
    return parser


def parse_args(argv: list[str] | None = None) -> dict:
    command_args = vars(command_parser().parse_args(argv))
    config_args = parse_config_args(command_args.pop("config_path"))
    args = dict(DEFAULTS)

    for section in config_args:
        for arg in config_args[section]:
            value = config_args[section][arg]

            if value is None:
                args[arg] = None
            elif arg in BOOL_ARGS:
                args[arg] = _parse_bool(value)
            elif arg in INT_ARGS:
                args[arg] = int(value)
            elif arg in FLOAT_ARGS:
                args[arg] = float(value)
            else:
                args[arg] = value

    for arg in command_args:
        if command_args[arg] is not None:
            args[arg] = command_args[arg]

    if args["num_jobs"] is None:
        args["num_jobs"] = DEFAULTS["num_jobs"]

    return args


def _search_settings(args: dict) -> SearchSettings:
    # blank max_maps and time_budget mean no limit, the others fall back to defaults
    limits = {
        name: args[name] if args[name] is not None else DEFAULTS[name]
        for name in ("max_rewrites", "max_branching", "node_budget")
    }
    return SearchSettings(max_maps=args["max_maps"], time_budget=args["time_budget"], **limits)


def _build(args: dict) -> Snake:
    n_param, construction = args["n"], args["construction"]

    if construction == "he":
        return assemble_he_snake(n_param, num_jobs=args["num_jobs"])

    golden = False if args.get("search") else None

    try:
        return assemble_extended_snake(n_param, golden, _search_settings(args), num_jobs=args["num_jobs"])
    except ConjectureUnresolvedError as error:
        print(error.report.to_text())

        if not args["fallback_he"]:
            raise

        print("Falling back to the HE construction.")
        return assemble_he_snake(n_param, num_jobs=args["num_jobs"])


def cmd_generate(args: dict) -> int:
    n_param, construction = args["n"], args["construction"]
    minimum = 2 if construction == "he" else 3

    if n_param is None or n_param < minimum:
        print("Construction {} needs n >= {}, got {}.".format(construction, minimum, n_param))
        return EXIT_USAGE

    start_time = perf_counter()

    if args.get("dump_tree"):
        with open(args["dump_tree"], "w", encoding="ascii") as file:
            file.write(build_merge_tree(n_param).dump())

    if args.get("dump_graph") and n_param >= 3:
        graph = build_chain_graph(n_param, build_all_chains(n_param, args["num_jobs"]), args["num_jobs"])

        with open(args["dump_graph"], "w", encoding="ascii") as file:
            file.write(graph.dump())

    try:
        snake = _build(args)
    except ConjectureUnresolvedError:
        return EXIT_UNRESOLVED

    out = args["out"] or os.path.join("snakes", "s{}_{}.snake".format(length_of(n_param), snake.construction))
    path = write_snake_file(snake, out)
    print(
        "Wrote {} snake of size {} to {} ({:.2f} s).".format(
            snake.construction, snake.size, path, perf_counter() - start_time
        )
    )
    return EXIT_OK


def cmd_verify(args: dict) -> int:
    snake_file = read_snake_file(args["in_path"])
    snake = snake_file.to_snake()
    start_time = perf_counter()
    report = verify_snake(snake, args["mode"], expected_size=snake_file.size, num_jobs=args["num_jobs"])
    bounds = check_upper_bounds(snake)
    print(report.to_text())
    print(bounds.to_text())
    print("Verified in {:.2f} s.".format(perf_counter() - start_time))
    return EXIT_OK if report.passed and bounds.passed else EXIT_FAILED


def cmd_stats(args: dict) -> int:
    snake_file = read_snake_file(args["in_path"])
    snake = snake_file.to_snake()
    missing = sorted(missing_codewords(snake))
    print("S_{} {} snake".format(snake.length, snake.construction))
    print("size: {}".format(snake.size))
    print("transitions:")
    print(snake.transition_histogram().to_string())
    print("missing codewords: {}".format(len(missing)))

    if snake.length <= 7:
        for codeword in missing:
            print("  [{}]".format(",".join(str(v) for v in codeword)))

    return EXIT_OK


COMMANDS = {
    "generate": cmd_generate,
    "verify": cmd_verify,
    "stats": cmd_stats,
}


def main(argv: list[str] | None = None) -> int:
    args = parse_args(argv)

    try:
        return COMMANDS[args["command"]](args)
    except SnakeFileError as error:
        print(error.message)
        return EXIT_FAILED
    except InvalidLengthError as error:
        print(error.message)
        return EXIT_USAGE
    except SnakeError as error:
        print(error.message)
        return EXIT_FAILED
