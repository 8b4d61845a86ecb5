import multiprocessing as mp

from raag.config import n_workers as _default_n_workers


def parallel_map(func, items, n_workers=None):
    """
    Map `func` over `items`, in worker processes if more than one is allowed.

    Results come back in input order whatever the scheduling, so callers
    see the same output for any worker count. `func` has to be a
    module-level function so it can be sent to a spawned process.
    """
    items = list(items)
    if n_workers is None:
        n_workers = _default_n_workers
    n_workers = min(n_workers, len(items))
    if n_workers <= 1:
        return [func(item) for item in items]

    # spawn is the default on macOS and, starting in Python 3.14, on Linux.
    ctx = mp.get_context("spawn")
    with ctx.Pool(n_workers) as pool:
        return pool.map(func, items)
