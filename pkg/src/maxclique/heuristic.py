"""Greedy core-guided clique heuristic used to seed the exact search."""
from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from .bounds import CoreDecomposition
from .graph import StaticGraph


class NotACliqueError(ValueError):
    pass


@dataclass(frozen=True)
class Clique:
    """A vertex set known to be pairwise adjacent.

    ``members`` are sorted ids in the numbering of the graph it was checked
    against (the root graph for anything the solvers return).
    """
    members: tuple[int, ...] = ()

    @property
    def size(self) -> int:
        return len(self.members)

    def __len__(self):
        return len(self.members)

    @classmethod
    def checked(cls, g: StaticGraph, members) -> Clique:
        ms = tuple(sorted(set(int(v) for v in members)))
        for i, u in enumerate(ms):
            for v in ms[i + 1:]:
                if not g.has_edge(u, v):
                    raise NotACliqueError(f"{u} and {v} are not adjacent")
        return cls(ms)


def seed_order(g: StaticGraph, cores: CoreDecomposition) -> list[int]:
    """Alive vertices by decreasing core number, then degree, then id."""
    core = cores.core
    return sorted(g.alive_vertices().tolist(),
                  key=lambda v: (-core[v], -g.degree(v), v))


def _greedy_from_seeds(g, cores, seeds, early_exit=True) -> list[int]:
    core = cores.core
    alive = g._alive
    best: list[int] = []
    top = 0
    for v in seeds:
        if core[v] < top:
            if early_exit:
                break
            continue
        S = [u for u in g.neighbors(v) if alive[u] and core[u] > top]
        if len(S) + 1 <= top:
            continue
        S.sort(key=lambda u: (-core[u], -g.degree(u), u))
        C = [v]
        has_edge = g.has_edge
        for i, u in enumerate(S):
            if len(C) + len(S) - i <= top:
                break           # cannot beat the incumbent any more
            # u is adjacent to v already
            if all(has_edge(u, c) for c in C[1:]):
                C.append(u)
        if len(C) > top:
            best, top = C, len(C)
    return best


def heuristic_clique(g: StaticGraph, cores: CoreDecomposition,
                     early_exit: bool = True) -> Clique:
    """Greedy clique built around each vertex, best first by core number.

    Seeds whose core number is below the best size found so far cannot lie
    in a larger clique, so the scan stops at the first one.
    """
    C = _greedy_from_seeds(g, cores, seed_order(g, cores), early_exit)
    return Clique(tuple(sorted(C)))


def heuristic_clique_parallel(g: StaticGraph, cores: CoreDecomposition,
                              workers: int) -> Clique:
    """Seeds dealt round-robin to ``workers`` threads; largest result wins,
    ties go to the lexicographically smallest member list."""
    if workers < 1:
        raise ValueError("workers must be >= 1")
    if workers == 1:
        return heuristic_clique(g, cores)
    seeds = seed_order(g, cores)
    parts = [seeds[i::workers] for i in range(workers)]
    with ThreadPoolExecutor(workers) as pool:
        found = list(pool.map(lambda s: sorted(_greedy_from_seeds(g, cores, s)), parts))
    best = min(found, key=lambda c: (-len(c), c))
    return Clique(tuple(best))
