"""Shared-memory cooperation between search workers.

Workers share three things: a monotone incumbent cell (``SharedBound``), the
graph's alive mask, and a removal channel that tells the task generator which
vertices disappeared so it can keep reduced degrees current.  Every shared
write is monotone, so a worker that reads a stale value only does extra work.
"""
from __future__ import annotations

import threading
from concurrent.futures import ThreadPoolExecutor
from queue import Empty, SimpleQueue

from .heuristic import Clique


class SharedBound:
    """Best clique found so far, installed under a lock.

    ``lag`` is a fault-injection knob: readers of ``size`` see the value as
    it was ``lag`` installs ago.
    """

    def __init__(self, lag: int = 0):
        self._lock = threading.Lock()
        self._size = 0
        self.members: tuple[int, ...] = ()
        self.generation = 0
        self.history: list[int] = []
        self.lag = lag

    @property
    def size(self) -> int:
        if self.lag and self.history:
            i = len(self.history) - 1 - self.lag
            return self.history[i] if i >= 0 else 0
        return self._size

    @property
    def true_size(self) -> int:
        return self._size

    def try_install(self, clique: Clique) -> bool:
        with self._lock:
            if clique.size <= self._size:
                return False
            self._size = clique.size
            self.members = clique.members
            self.generation += 1
            self.history.append(clique.size)
            return True

    @property
    def best(self) -> Clique:
        return Clique(self.members)


def publish_bound(candidate: Clique, shared: SharedBound) -> bool:
    """Install ``candidate`` iff it beats the shared incumbent."""
    return shared.try_install(candidate)


class RemovalChannel:
    """Vertices deleted since the task generator last looked."""

    def __init__(self):
        self._q: SimpleQueue = SimpleQueue()

    def put(self, v: int):
        self._q.put(v)

    def drain(self) -> list[int]:
        out = []
        while True:
            try:
                out.append(self._q.get_nowait())
            except Empty:
                return out


def broadcast_removals(vertices, graph, channel: RemovalChannel | None = None) -> int:
    """Delete ``vertices`` from ``graph`` and announce the ones that were
    still alive.  Returns how many were newly removed."""
    k = 0
    for v in vertices:
        if graph.remove_implicit(v):
            k += 1
            if channel is not None:
                channel.put(v)
    return k


def max_clique_parallel(g, config=None):
    """Exact maximum clique with ``config.workers`` cooperating threads.

    Returns a ``SearchResult``; see ``search.solve``.
    """
    from .search import SearchConfig, Solver

    config = config or SearchConfig()
    if config.workers == 1:
        return Solver(g, config).run()
    with ThreadPoolExecutor(config.workers) as pool:
        return Solver(g, config).run(pool)
