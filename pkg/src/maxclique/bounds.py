"""Core numbers, greedy colorings and the clique upper bounds built on them.

For any graph, omega <= L <= K + 1, where K is the largest core number and L
is the number of colors a greedy coloring uses when vertices are taken in
smallest-last (reverse peeling) order.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .graph import NeighborhoodSubgraph, StaticGraph


@dataclass
class CoreDecomposition:
    core: list[int]
    order: list[int]      # peeling sequence; dead vertices are absent
    max_core: int

    def smallest_last(self) -> list[int]:
        """Reverse peeling order.  Greedy coloring in this order needs at
        most ``max_core + 1`` colors."""
        return self.order[::-1]


@dataclass
class Coloring:
    color: list[int]      # 1-based, 0 for vertices that were not colored
    num_colors: int


def _peel(deg: list[int], nbrs) -> tuple[list[int], list[int]]:
    """Batagelj-Zaversnik bucket peeling.

    ``deg[v] < 0`` marks a vertex as absent.  Bins start in ascending id
    order, which fixes the tie-breaking.  Returns (core, order).
    """
    n = len(deg)
    active = [v for v in range(n) if deg[v] >= 0]
    if not active:
        return [0] * n, []
    md = max(deg[v] for v in active)
    bin_ = [0] * (md + 1)
    for v in active:
        bin_[deg[v]] += 1
    start = 0
    for d in range(md + 1):
        bin_[d], start = start, start + bin_[d]
    pos = [0] * n
    vert = [0] * len(active)
    for v in active:
        p = bin_[deg[v]]
        pos[v] = p
        vert[p] = v
        bin_[deg[v]] += 1
    for d in range(md, 0, -1):
        bin_[d] = bin_[d - 1]
    bin_[0] = 0
    for i in range(len(vert)):
        v = vert[i]
        dv = deg[v]
        for u in nbrs(v):
            du = deg[u]
            if du > dv:
                pu = pos[u]
                pw = bin_[du]
                w = vert[pw]
                if u != w:
                    pos[u], pos[w] = pw, pu
                    vert[pu], vert[pw] = w, u
                bin_[du] += 1
                deg[u] = du - 1
    core = [d if d > 0 else 0 for d in deg]
    return core, vert


def core_numbers(g) -> CoreDecomposition:
    """Core number of every vertex, in time linear in the edge count.

    Accepts a StaticGraph (dead vertices are ignored and get core 0), a
    NeighborhoodSubgraph, or a plain list of adjacency lists.
    """
    if isinstance(g, StaticGraph):
        alive = g.alive.astype(bool)
        src = np.repeat(np.arange(g.n), g.degrees())
        live_edge = alive[src] & alive[g.indices]
        deg = np.bincount(src[live_edge], minlength=g.n)
        deg = np.where(alive, deg, -1).tolist()
        core, order = _peel(deg, g.neighbors)
    else:
        adj = g.adj if isinstance(g, NeighborhoodSubgraph) else g
        core, order = _peel([len(a) for a in adj], adj.__getitem__)
    return CoreDecomposition(core, order, max((core[v] for v in order), default=0))


def _adjacency(g):
    if isinstance(g, StaticGraph):
        return g.neighbors
    adj = g.adj if isinstance(g, NeighborhoodSubgraph) else g
    return adj.__getitem__


def greedy_color(g, order) -> Coloring:
    """First-fit coloring visiting vertices in ``order``."""
    nbrs = _adjacency(g)
    n = g.n if isinstance(g, StaticGraph) else len(g)
    color = [0] * n
    top = 0
    for v in order:
        used = {color[w] for w in nbrs(v)}
        c = 1
        while c in used:
            c += 1
        color[v] = c
        if c > top:
            top = c
    return Coloring(color, top)


def degree_order(g, vertices=None) -> list[int]:
    """Largest degree first, ties by ascending id."""
    nbrs = _adjacency(g)
    if vertices is None:
        vertices = range(g.n if isinstance(g, StaticGraph) else len(g))
    if isinstance(g, StaticGraph):
        alive = g._alive
        deg = {v: sum(1 for w in nbrs(v) if alive[w]) for v in vertices}
    else:
        deg = {v: len(nbrs(v)) for v in vertices}
    return sorted(deg, key=lambda v: (-deg[v], v))


def clique_upper_bound(g: StaticGraph, cores: CoreDecomposition | None = None) -> int:
    """min(L(G), K(G) + 1) over the alive part of ``g``."""
    if cores is None:
        cores = core_numbers(g)
    if not cores.order:
        return 0
    L = greedy_color(g, cores.smallest_last()).num_colors
    return min(L, cores.max_core + 1)


def neighborhood_bounds(g: StaticGraph, min_core: int = 0,
                        cores: CoreDecomposition | None = None) -> tuple[int, int]:
    """(max_v L(N_R(v)), max_v K(N_R(v)) + 1) over alive ``v``.

    Each neighborhood is colored in its own smallest-last order.
    """
    best_l = best_k = 0
    core = cores.core if cores is not None else None
    for v in g.alive_vertices().tolist():
        sub = g.reduced_neighbors(v, min_core, core)
        dec = core_numbers(sub)
        best_l = max(best_l, greedy_color(sub, dec.smallest_last()).num_colors)
        best_k = max(best_k, dec.max_core + 1)
    return best_l, best_k
