from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Iterable, List, Optional, TypeVar

from .. import config

T = TypeVar("T")
R = TypeVar("R")


def parallel_map(func: Callable[[T], R], items: Iterable[T], workers: Optional[int] = None) -> List[R]:
    """Maps ``func`` over ``items`` on a thread pool capped by NILSPECTRA_THREADS; results keep input order."""
    items = list(items)
    if workers is None:
        workers = config.get_thread_count()
    workers = max(1, min(workers, len(items)))
    if workers == 1:
        return [func(item) for item in items]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(func, items))


__all__ = ["parallel_map"]
