"""Parallel processing utilities."""

import os

from collections.abc import Callable, Sequence
from concurrent.futures import ProcessPoolExecutor, as_completed
from functools import partial
from typing import Any

from tqdm import tqdm


def _process_single_cell(indexed_cell, process_func, func_kwargs):
    """Wrapper to handle exceptions for single cell processing."""
    index, cell = indexed_cell
    try:
        result = process_func(cell, **func_kwargs)
        return index, True, result, None
    except Exception as e:
        return index, False, None, f"{type(e).__name__}: {e}"


def process_cells(
    cells: Sequence[Any],
    process_func: Callable,
    func_kwargs: dict[str, Any] | None = None,
    max_workers: int | None = None,
    show_progress: bool = True,
) -> tuple[list[Any], list[tuple[Any, str]]]:
    """Process independent sweep cells, optionally in parallel.

    Parameters
    ----------
    cells : Sequence
        Cells to process, e.g. ``(n, lambda)`` pairs. Must be picklable when
        ``max_workers > 1``.
    process_func : Callable
        Function applied to each cell. Must accept the cell as first argument.
    func_kwargs : dict[str, Any], optional
        Additional keyword arguments to pass to process_func.
    max_workers : int, optional
        ``None`` or ``1`` runs sequentially in this process; an integer
        ``> 1`` uses that many worker processes (capped by the cell count).
    show_progress : bool, default True
        Whether to show a tqdm progress bar for parallel runs.

    Returns
    -------
    tuple[list, list[tuple[Any, str]]]
        ``(results, failed)``. ``results`` holds one entry per cell in input
        order (``None`` for failed cells); ``failed`` lists
        ``(cell, error_message)`` in input order.
    """
    func_kwargs = func_kwargs or {}
    indexed = list(enumerate(cells))
    outcomes = []

    worker_func = partial(_process_single_cell, process_func=process_func, func_kwargs=func_kwargs)

    # Sequential processing
    if max_workers is None or max_workers < 2 or len(indexed) < 2:
        outcomes = [worker_func(item) for item in indexed]

    # Parallel processing
    else:
        max_workers = min(max_workers, os.cpu_count() or 1, len(indexed))
        with ProcessPoolExecutor(max_workers=max_workers) as executor:
            futures = {executor.submit(worker_func, item): item for item in indexed}
            iterator = as_completed(futures)
            if show_progress:
                iterator = tqdm(iterator, total=len(indexed), desc="Processing")
            for future in iterator:
                outcomes.append(future.result())

    # Deterministic aggregation by input index
    outcomes.sort(key=lambda outcome: outcome[0])
    results = []
    failed = []
    for index, success, result, error in outcomes:
        results.append(result if success else None)
        if not success:
            failed.append((cells[index], error))
    return results, failed
