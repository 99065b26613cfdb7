"""Order-preserving map honouring the ``TROPKIT_THREADS`` environment variable."""
from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor


def thread_count() -> int:
    raw = os.environ.get("TROPKIT_THREADS", "0").strip()
    try:
        k = int(raw)
    except ValueError:
        return 0
    return max(k, 0)


def map_ordered(fn, items):
    """``list(map(fn, items))``, run on a thread pool when ``TROPKIT_THREADS > 1``.

    Results come back in input order, so output never depends on scheduling.
    """
    items = list(items)
    k = thread_count()
    if k <= 1 or len(items) < 2:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=k) as pool:
        return list(pool.map(fn, items))
