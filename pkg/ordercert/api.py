"""Batch and asyncio front ends for recognition.

ordercert.api
-------------

Key exports:
    - batch_recognize: recognise one class on many graphs, serially or on a
      thread or process pool, in chunks.
    - async_recognize, async_batch_recognize: asyncio wrappers that offload
      the work to threads, bounded by a semaphore.

Each graph is handled independently; results come back in input order.

Example:
    >>> from ordercert.generators import gen
    >>> [r.member for r in batch_recognize([gen("cycle:4"), gen("path:4")], "chordal")]
    [False, True]

"""

import asyncio
import concurrent.futures
import os
from collections.abc import Iterable, Sequence
from functools import partial
from typing import Optional, Union

from .graph import Graph
from .recognition import ClassId, Method, Mode, Recognition, recognize
from .utils import chunked


def _recognize_chunk(
    graphs: Sequence[Graph],
    cls: ClassId,
    method: Method,
    max_n: Optional[int],
) -> list[Recognition]:
    return [recognize(g, cls, method=method, max_n=max_n) for g in graphs]


def _check_graphs(graphs: Iterable[Graph], caller: str) -> list[Graph]:
    if isinstance(graphs, Graph):
        raise TypeError(
            f"Input to {caller} must be an iterable of graphs, not a Graph."
        )
    items = list(graphs)
    for g in items:
        if not isinstance(g, Graph):
            raise TypeError(f"{caller} expects Graph items, got {type(g).__name__}")
    return items


def batch_recognize(
    graphs: Iterable[Graph],
    cls: Union[ClassId, str],
    *,
    method: Method = "auto",
    max_n: Optional[int] = None,
    parallel: bool = False,
    workers: Optional[int] = None,
    mode: Mode = "thread",
    chunk_size: int = 16,
) -> list[Recognition]:
    """Recognise cls on every graph.

    Args:
        graphs (Iterable[Graph]): Input graphs.
        cls (ClassId | str): Class to test.
        method (str): "auto" or "search" (see recognize).
        max_n (int, optional): Override for the search size guard.
        parallel (bool): Use an executor (default: False).
        workers (int, optional): Number of workers (default: CPU count).
        mode (str): 'thread', 'process' or 'serial' (default: 'thread').
        chunk_size (int): Graphs per task handed to the executor.

    Returns:
        list[Recognition]: One result per input graph, in order.

    Raises:
        TypeError: If graphs is a single Graph or holds non-Graph items.
        ValueError: On an invalid mode or chunk size.

    """
    items = _check_graphs(graphs, "batch_recognize")
    cls = ClassId.parse(cls)
    if mode not in {"thread", "process", "serial"}:
        raise ValueError(f"Invalid mode: {mode}")
    if not items:
        return []
    chunks = list(chunked(items, chunk_size))
    if not parallel or mode == "serial" or len(chunks) == 1:
        return _recognize_chunk(items, cls, method, max_n)
    executor_cls = {
        "thread": concurrent.futures.ThreadPoolExecutor,
        "process": concurrent.futures.ProcessPoolExecutor,
    }[mode]
    func = partial(_recognize_chunk, cls=cls, method=method, max_n=max_n)
    with executor_cls(max_workers=workers or os.cpu_count() or 1) as executor:
        results = list(executor.map(func, chunks))
    return [r for chunk in results for r in chunk]


async def async_recognize(
    g: Graph,
    cls: Union[ClassId, str],
    *,
    method: Method = "auto",
    max_n: Optional[int] = None,
) -> Recognition:
    """Async version of recognize, offloading to a thread."""
    return await asyncio.to_thread(recognize, g, cls, method=method, max_n=max_n)


async def async_batch_recognize(
    graphs: Iterable[Graph],
    cls: Union[ClassId, str],
    *,
    method: Method = "auto",
    max_n: Optional[int] = None,
    workers: Optional[int] = None,
) -> list[Recognition]:
    """Recognise cls on every graph concurrently, at most workers at a time.

    Returns:
        list[Recognition]: One result per input graph, in order.

    """
    items = _check_graphs(graphs, "async_batch_recognize")
    if not items:
        return []
    sem = asyncio.Semaphore(workers or (os.cpu_count() or 1))

    async def sem_task(g: Graph) -> Recognition:
        async with sem:
            return await async_recognize(g, cls, method=method, max_n=max_n)

    return list(await asyncio.gather(*(sem_task(g) for g in items)))
