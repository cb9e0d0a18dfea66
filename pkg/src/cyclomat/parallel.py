"""Process-pool helper for partitioned sweeps.

``run_chunks`` applies a top-level worker function to a list of job
tuples.  With ``threads <= 1`` everything runs in-process (the fully
serial mode used for debugging); otherwise a fork-based pool is used.
Callers must merge results with order-independent operations (integer
addition, list union followed by sorting), so the outcome is identical
for every worker count.
"""

from __future__ import annotations

import multiprocessing as mp
import os
from typing import Callable, Iterable, Sequence


def cpu_count() -> int:
    return os.cpu_count() or 1


def run_chunks(worker: Callable, jobs: Sequence, threads: int) -> list:
    if threads <= 1 or len(jobs) <= 1:
        return [worker(job) for job in jobs]
    procs = min(threads, len(jobs))
    ctx = mp.get_context("fork")
    with ctx.Pool(processes=procs) as pool:
        return pool.map(worker, jobs)
