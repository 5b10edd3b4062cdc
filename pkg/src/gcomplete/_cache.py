"""Per-degree build-once caches."""

from __future__ import annotations

import threading
from functools import wraps


def per_degree(fn):
    """Memoize ``fn(d)``; each value is built once, then read without locking."""
    cache = {}
    lock = threading.Lock()

    @wraps(fn)
    def wrapper(d: int):
        try:
            return cache[d]
        except KeyError:
            pass
        with lock:
            if d not in cache:
                cache[d] = fn(d)
            return cache[d]

    wrapper.cache = cache
    return wrapper
