from collections.abc import Callable, Iterator, Sequence
from functools import partial
from multiprocessing.dummy import Pool as ThreadPool
from typing import TypeVar

from tqdm import tqdm

T = TypeVar("T")
R = TypeVar("R")


def map_jobs(
    func: Callable[..., R],
    items: Sequence[T],
    num_jobs: int,
    desc: str | None = None,
    **kwargs,
) -> list[R]:
    """Apply a function to every item on a thread pool, keeping the input order.

    :param func: Function called as ``func(item, **kwargs)``
    :type func: Callable
    :param items: Items to process
    :type items: Sequence
    :param num_jobs: Number of worker threads
    :type num_jobs: int
    :param desc: Progress bar label
    :type desc: str | None
    :return: One result per item, in input order
    :rtype: list
    """
    results = []

    with ThreadPool(max(1, num_jobs)) as pool:
        with tqdm(total=len(items), desc=desc, leave=False) as pbar:
            chunk_size = max(1, len(items) // max(1, num_jobs) // 10)

            for result in pool.imap(partial(func, **kwargs), items, chunk_size):
                results.append(result)
                pbar.update(1)

    return results


def iter_batches(a: Sequence[T], batch_size: int) -> Iterator[Sequence[T]]:
    for i in range(0, len(a), batch_size):
        yield a[i:i + batch_size]
