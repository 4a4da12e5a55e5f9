# -*- coding: utf-8 -*-
"""Check a snake against the definitions, independently of how it was built."""
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from itertools import combinations, permutations
from math import comb, factorial

import numpy as np
import pandas as pd
from joblib import Parallel, delayed

from ksnake.snake import Snake
from ksnake.util import iter_batches

MAX_FULL_LENGTH = 11
POPCOUNT = np.array([bin(i).count("1") for i in range(256)], dtype=np.uint8)


class Mode(str, Enum):
    STRUCTURAL = "structural"
    FULL = "full"


@dataclass
class Check:
    name: str
    passed: bool
    witness: str | None = None
    detail: str | None = None


@dataclass
class VerificationReport:
    mode: Mode
    checks: list[Check] = field(default_factory=list)
    pairs_checked: int = 0

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    def check(self, name: str) -> Check:
        return next(check for check in self.checks if check.name == name)

    def failures(self) -> list[Check]:
        return [check for check in self.checks if not check.passed]

    def to_text(self) -> str:
        table = pd.DataFrame(
            [
                {
                    "check": check.name,
                    "result": "pass" if check.passed else "FAIL",
                    "detail": check.witness or check.detail or "",
                }
                for check in self.checks
            ]
        )
        lines = ["mode: {}".format(self.mode.value), table.to_string(index=False)]

        if self.mode is Mode.FULL:
            lines.append("pairs checked: {}".format(self.pairs_checked))

        lines.append("result: {}".format("pass" if self.passed else "FAIL"))
        return "\n".join(lines)


def default_mode(length: int) -> Mode:
    return Mode.FULL if length <= 7 else Mode.STRUCTURAL


def _push(codeword: tuple, index: int) -> tuple:
    return (codeword[index - 1],) + codeword[:index - 1] + codeword[index:]


def _inversions(values) -> int:
    values = list(values)
    return sum(1 for a, b in combinations(values, 2) if a > b)


def _walk(snake: Snake) -> tuple[list[tuple], tuple, Check | None]:
    """Apply the transitions, stopping at the first index out of range."""
    codewords = []
    codeword = tuple(snake.initial)

    for position, index in enumerate(snake.transitions):
        codewords.append(codeword)

        if not 2 <= index <= len(codeword):
            return codewords, codeword, Check(
                "transition bounds", False, "t_{} at position {} is out of range".format(index, position)
            )

        codeword = _push(codeword, index)

    return codewords, codeword, None


def _order_masks(codewords: list[tuple], length: int) -> np.ndarray:
    """Encode each codeword as a bitmask over value pairs (u, v), bit set when u precedes v."""
    values = np.asarray(codewords, dtype=np.int64) - 1
    positions = np.empty_like(values)
    rows = np.arange(len(codewords))[:, None]
    positions[rows, values] = np.arange(length)
    masks = np.zeros(len(codewords), dtype=np.uint64)

    for bit, (u, v) in enumerate(combinations(range(length), 2)):
        masks |= (positions[:, u] < positions[:, v]).astype(np.uint64) << np.uint64(bit)

    return masks


def _scan_rows(masks: np.ndarray, rows: range) -> tuple[tuple[int, int, int] | None, int]:
    """Return the first pair (i, j, distance) below distance 2 with i in ``rows``, and pairs scanned."""
    scanned = 0

    for i in rows:
        diff = np.bitwise_xor(masks[i + 1:], masks[i])
        distances = POPCOUNT[diff.view(np.uint8).reshape(-1, 8)].sum(axis=1)
        scanned += len(distances)
        close = np.flatnonzero(distances < 2)

        if len(close):
            j = i + 1 + int(close[0])
            return (i, j, int(distances[close[0]])), scanned

    return None, scanned


def _pairwise_check(codewords: list[tuple], num_jobs: int) -> tuple[Check, int]:
    length = len(codewords[0])

    if length > MAX_FULL_LENGTH:
        detail = "full mode supports lengths up to {}".format(MAX_FULL_LENGTH)
        return Check("pairwise distance", False, detail=detail), 0

    masks = _order_masks(codewords, length)
    chunk = max(1, len(codewords) // max(1, 4 * num_jobs))
    results = Parallel(n_jobs=num_jobs)(
        delayed(_scan_rows)(masks, rows) for rows in iter_batches(range(len(codewords)), chunk)
    )
    pairs = sum(scanned for _, scanned in results)
    found = [witness for witness, _ in results if witness is not None]

    if not found:
        return Check("pairwise distance", True, detail="minimum distance >= 2"), pairs

    i, j, distance = min(found)
    return Check(
        "pairwise distance",
        False,
        "codewords {} {} and {} {} are at distance {}".format(i, list(codewords[i]), j, list(codewords[j]), distance),
    ), pairs


def verify_snake(
    snake: Snake,
    mode: Mode | str | None = None,
    expected_size: int | None = None,
    num_jobs: int = 1,
) -> VerificationReport:
    """Run the closure, distinctness, parity, distance and size checks on a snake.

    :param snake: Snake to check
    :type snake: Snake
    :param mode: ``full`` adds the pairwise Kendall check; defaults to full up to S_7
    :type mode: Mode | str | None
    :param expected_size: Declared size to compare against, skipped when None
    :type expected_size: int | None
    :param num_jobs: Workers for the pairwise check
    :type num_jobs: int
    :return: One check per property, each failure with a witness
    :rtype: VerificationReport
    """
    mode = Mode(mode) if mode is not None else default_mode(snake.length)
    report = VerificationReport(mode=mode)
    codewords, final, bounds_failure = _walk(snake)

    if bounds_failure is not None:
        report.checks.append(bounds_failure)
        return report

    if final == tuple(snake.initial):
        report.checks.append(Check("closure", True))
    else:
        report.checks.append(
            Check(
                "closure",
                False,
                "after {} transitions reached {}, expected {}".format(snake.size, list(final), list(snake.initial)),
            )
        )

    seen: dict[tuple, int] = {}
    duplicate = None

    for position, codeword in enumerate(codewords):
        first = seen.setdefault(codeword, position)

        if first != position and codewords[first] == codeword:
            duplicate = "codeword {} appears at positions {} and {}".format(list(codeword), first, position)
            break

    report.checks.append(Check("distinct codewords", duplicate is None, duplicate))

    even_index = next(
        (
            "t_{} at position {}".format(index, position)
            for position, index in enumerate(snake.transitions)
            if index % 2 == 0
        ),
        None,
    )
    report.checks.append(Check("odd transitions", even_index is None, even_index))

    odd_codeword = next(
        (
            "codeword {} at position {}".format(list(c), position)
            for position, c in enumerate(codewords)
            if _inversions(c) % 2
        ),
        None,
    )
    report.checks.append(Check("even codewords", odd_codeword is None, odd_codeword))

    if mode is Mode.FULL and codewords:
        check, report.pairs_checked = _pairwise_check(codewords, num_jobs)
        report.checks.append(check)

    if expected_size is not None:
        report.checks.append(
            Check(
                "size",
                snake.size == expected_size,
                None if snake.size == expected_size else "declared {}, found {}".format(expected_size, snake.size),
                detail=str(snake.size),
            )
        )

    return report


def missing_codewords(snake: Snake) -> set[tuple]:
    """Return the even permutations of the snake's degree that the snake never visits."""
    present = set(_walk(snake)[0])
    missing = set()

    for p in permutations(range(1, snake.length + 1)):
        if p not in present and _inversions(p) % 2 == 0:
            missing.add(p)

    return missing


def even_transition_bound(length: int) -> Fraction:
    """Return |S_n|/2 - C(floor(n/2) - 1, 2) / (n - 1); the correction vanishes below n = 4."""
    if length < 4:
        return Fraction(factorial(length), 2)

    return Fraction(factorial(length), 2) - Fraction(comb(length // 2 - 1, 2), length - 1)


def check_upper_bounds(snake: Snake) -> VerificationReport:
    """Compare the size with |S_n|/2, and with the stricter bound when an even transition occurs."""
    report = VerificationReport(mode=Mode.STRUCTURAL)
    half = factorial(snake.length) // 2
    report.checks.append(
        Check("size <= |S_n|/2", snake.size <= half, None if snake.size <= half else "{} > {}".format(snake.size, half))
    )

    if any(index % 2 == 0 for index in snake.transitions):
        bound = even_transition_bound(snake.length)
        passed = snake.size <= bound
        report.checks.append(
            Check("even-transition bound", passed, None if passed else "{} > {}".format(snake.size, float(bound)))
        )
    else:
        report.checks.append(Check("even-transition bound", True, detail="no even transitions"))

    return report
