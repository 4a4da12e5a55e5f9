# -*- coding: utf-8 -*-
"""Read and write the plain-text snake file format.

    snake v1
    n=<2n+1> construction=<id> size=<M>
    <initial permutation, space separated>
    <transition indices, 60 per line>
"""
import os
from dataclasses import dataclass
from pathlib import Path

from ksnake.errors import InvalidPermutationError, SnakeFileError
from ksnake.perm import Permutation, check_permutation
from ksnake.snake import Snake
from ksnake.util import iter_batches

MAGIC = "snake v1"
PER_LINE = 60


@dataclass(frozen=True)
class SnakeFile:
    length: int
    construction: str
    size: int
    initial: Permutation
    transitions: tuple[int, ...]

    @classmethod
    def from_snake(cls, snake: Snake) -> "SnakeFile":
        return cls(snake.length, snake.construction, snake.size, snake.initial, snake.transitions)

    def to_snake(self) -> Snake:
        return Snake(initial=self.initial, transitions=self.transitions, construction=self.construction)


def dumps(snake: Snake) -> str:
    lines = [
        MAGIC,
        "n={} construction={} size={}".format(snake.length, snake.construction, snake.size),
        " ".join(str(v) for v in snake.initial),
    ]
    lines += [" ".join(str(i) for i in batch) for batch in iter_batches(snake.transitions, PER_LINE)]
    return "\n".join(lines) + "\n"


def loads(text: str, source: str | os.PathLike = "<string>") -> SnakeFile:
    """Parse snake file text; the declared size is kept even when it disagrees with the transitions.

    :param text: File contents
    :type text: str
    :param source: Name used in error messages
    :type source: str | os.PathLike
    :return: Parsed file
    :rtype: SnakeFile
    """
    lines = text.splitlines()

    if len(lines) < 3 or lines[0].strip() != MAGIC:
        raise SnakeFileError(source, "missing '{}' header".format(MAGIC))

    try:
        header = dict(field.split("=", 1) for field in lines[1].split())
        length, construction, size = int(header["n"]), header["construction"], int(header["size"])
        initial = check_permutation(int(v) for v in lines[2].split())
        transitions = tuple(int(v) for line in lines[3:] for v in line.split())
    except (KeyError, ValueError) as error:
        if isinstance(error, InvalidPermutationError):
            raise SnakeFileError(source, error.message) from error

        raise SnakeFileError(source, "malformed header or body ({})".format(error)) from error

    if len(initial) != length:
        raise SnakeFileError(source, "initial permutation has length {}, header says {}".format(len(initial), length))

    return SnakeFile(length, construction, size, initial, transitions)


def write_snake_file(snake: Snake, path: str | os.PathLike) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(dumps(snake), encoding="ascii", newline="\n")
    return path


def read_snake_file(path: str | os.PathLike) -> SnakeFile:
    try:
        text = Path(path).read_text(encoding="ascii")
    except (OSError, UnicodeDecodeError) as error:
        raise SnakeFileError(path, str(error)) from error

    return loads(text, path)
