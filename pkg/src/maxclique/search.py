"""Exact maximum clique by branch and bound over vertex neighborhoods.

Outline of a run (``Solver.run``):

1. core numbers of the input graph and a heuristic clique H;
2. stop at once if |H| already meets min(L(G), K(G)+1);
3. drop every vertex with core number < |H| and rebuild the graph;
4. repeatedly take the alive vertex of smallest reduced degree, search its
   neighborhood (``initial_branch``), then delete it;
5. every ``rebuild_interval`` seconds (or once most vertices are dead)
   rebuild the graph from the survivors and recompute core numbers.

Whenever a larger clique is found every vertex whose core number falls
below the new size is deleted as well.
"""
from __future__ import annotations

import heapq
from bisect import bisect_left
import logging
import random
import sys
import threading
import time
from concurrent.futures import FIRST_COMPLETED, wait
from dataclasses import asdict, dataclass, field, fields

import numpy as np

from .bounds import Coloring, core_numbers, degree_order, greedy_color
from .graph import DENSE_THRESHOLD, DenseAdjacency, NeighborhoodSubgraph, StaticGraph, intersect_sorted
from .heuristic import Clique, heuristic_clique, heuristic_clique_parallel
from .parallel import RemovalChannel, SharedBound, broadcast_removals

log = logging.getLogger(__name__)


class SearchInvariantError(RuntimeError):
    """Internal consistency check failed; the run cannot be trusted."""


@dataclass
class SearchConfig:
    use_neighborhood_cores: bool = True
    rebuild_interval: float = 4.0          # seconds; math.inf disables the timer
    dense_threshold: int = DENSE_THRESHOLD
    workers: int = 1
    # also rebuild once this fraction of the current graph is dead (None: never)
    compact_dead_fraction: float | None = 0.75
    # testing hooks: random sleeps around tasks, lagged bound reads
    jitter_seed: int | None = None
    bound_lag: int = 0

    def __post_init__(self):
        if not self.rebuild_interval > 0:
            raise ValueError("rebuild_interval must be positive")
        if self.workers < 1:
            raise ValueError("workers must be >= 1")
        if self.dense_threshold < 0:
            raise ValueError("dense_threshold must be >= 0")


@dataclass
class SearchStats:
    initial_branches: int = 0
    branches: int = 0
    pruned_size: int = 0        # |N_R(u)| <= |H|
    pruned_core: int = 0        # neighborhood core bound
    pruned_color: int = 0       # neighborhood coloring bound
    pruned_recolor: int = 0     # |C'| + L(P') <= |H| inside branch
    core_removals: int = 0      # vertices deleted by the core rule mid-search
    compactions: int = 0
    improvements: int = 0

    def merge(self, other: SearchStats):
        for f in fields(self):
            setattr(self, f.name, getattr(self, f.name) + getattr(other, f.name))

    def as_dict(self):
        return asdict(self)


@dataclass
class SearchResult:
    clique: Clique
    heuristic: Clique
    max_core: int
    colors: int                 # L(G), greedy colors in smallest-last order
    upper_bound: int            # min(L(G), K(G) + 1)
    stats: SearchStats
    bound_history: list[int]
    timings: dict[str, float] = field(default_factory=dict)

    @property
    def size(self) -> int:
        return self.clique.size


class SearchContext:
    """What one neighborhood search needs: the graph snapshot and its core
    numbers, the shared incumbent, and a callback to report new cliques."""

    def __init__(self, graph: StaticGraph, cores: list[int], bound, config: SearchConfig,
                 stats: SearchStats | None = None, on_clique=None, depth_limit: int | None = None):
        self.graph = graph
        self.cores = cores
        self.bound = bound
        self.config = config
        self.stats = stats if stats is not None else SearchStats()
        self._on_clique = on_clique
        self.depth_limit = depth_limit if depth_limit is not None else graph.n + 1

    @property
    def lower_bound(self) -> int:
        return self.bound.size

    @property
    def best(self) -> Clique:
        return self.bound.best

    def found(self, members):
        """``members`` are ids of ``self.graph``."""
        self.stats.improvements += 1
        if self._on_clique is not None:
            self._on_clique(members)
        else:
            root = self.graph.orig_ids[list(members)].tolist()
            self.bound.try_install(Clique(tuple(sorted(root))))


# -- coloring helpers --------------------------------------------------------

def recolor(sub: NeighborhoodSubgraph, P) -> Coloring:
    """Greedy coloring of the subgraph induced by ``P``, largest degree
    (within ``P``) first."""
    Pset = set(P)
    deg = {v: sum(1 for w in sub.adj[v] if w in Pset) for v in P}
    order = sorted(P, key=lambda v: (-deg[v], v))
    color = [0] * len(sub)
    top = 0
    for v in order:
        used = {color[w] for w in sub.adj[v] if w in Pset}
        c = 1
        while c in used:
            c += 1
        color[v] = c
        top = max(top, c)
    return Coloring(color, top)


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def _recolor_bits(P: int, rows: list[int]) -> tuple[list[int], int]:
    """Same coloring as ``recolor`` on bit rows.  Returns the vertices sorted
    by color (ascending) and the number of colors."""
    verts = _bits(P)
    verts.sort(key=lambda v: (-(rows[v] & P).bit_count(), v))
    classes: list[int] = []
    groups: list[list[int]] = []
    for v in verts:
        rv = rows[v]
        for k, cls in enumerate(classes):
            if not rv & cls:
                classes[k] = cls | (1 << v)
                groups[k].append(v)
                break
        else:
            classes.append(1 << v)
            groups.append([v])
    return [v for grp in groups for v in grp], len(classes)


def _recolor_sets(P: list[int], adj: list[list[int]]) -> tuple[list[int], int]:
    Pset = set(P)
    nb = {v: Pset.intersection(adj[v]) for v in P}
    verts = sorted(P, key=lambda v: (-len(nb[v]), v))
    classes: list[set] = []
    groups: list[list[int]] = []
    for v in verts:
        av = nb[v]
        for k, cls in enumerate(classes):
            if av.isdisjoint(cls):
                cls.add(v)
                groups[k].append(v)
                break
        else:
            classes.append({v})
            groups.append([v])
    return [v for grp in groups for v in grp], len(classes)


def _by_color(order, coloring: Coloring) -> list[int]:
    return sorted(order, key=lambda v: coloring.color[v])


# -- branching ---------------------------------------------------------------

def _branch_dense(C: list[int], ranked: list[int], rows: list[int], ctx, sub):
    stats = ctx.stats
    stats.branches += 1
    if len(C) >= ctx.depth_limit:
        raise SearchInvariantError(f"branch depth {len(C)} exceeds degeneracy bound")
    bound = ctx.bound
    P = 0
    for v in ranked:
        P |= 1 << v
    nc = len(C) + 1
    while ranked and len(ranked) + len(C) > bound.size:
        u = ranked.pop()            # largest color
        P ^= 1 << u
        Pn = P & rows[u]
        if Pn:
            ranked2, L = _recolor_bits(Pn, rows)
            if nc + L > bound.size:
                C.append(u)
                _branch_dense(C, ranked2, rows, ctx, sub)
                C.pop()
            else:
                stats.pruned_recolor += 1
        elif nc > bound.size:
            ctx.found([sub.vertices[v] for v in C + [u]])


def _branch_sparse(C: list[int], ranked: list[int], adj: list[list[int]], ctx, sub):
    stats = ctx.stats
    stats.branches += 1
    if len(C) >= ctx.depth_limit:
        raise SearchInvariantError(f"branch depth {len(C)} exceeds degeneracy bound")
    bound = ctx.bound
    P = sorted(ranked)
    nc = len(C) + 1
    while ranked and len(ranked) + len(C) > bound.size:
        u = ranked.pop()
        del P[bisect_left(P, u)]
        Pn = intersect_sorted(P, adj[u])
        if Pn:
            ranked2, L = _recolor_sets(Pn, adj)
            if nc + L > bound.size:
                C.append(u)
                _branch_sparse(C, ranked2, adj, ctx, sub)
                C.pop()
            else:
                stats.pruned_recolor += 1
        elif nc > bound.size:
            ctx.found([sub.vertices[v] for v in C + [u]])


def branch(C: list[int], P: list[int], ctx: SearchContext, sub: NeighborhoodSubgraph,
           coloring: Coloring | None = None):
    """Search cliques C + Q with Q inside P (local ids of ``sub``).

    Every vertex of P must be adjacent to every vertex of C.  Candidates are
    taken largest color first; ``coloring`` defaults to ``recolor(sub, P)``.
    """
    if not P:
        return
    if coloring is None:
        coloring = recolor(sub, P)
    ranked = _by_color(P, coloring)
    if len(sub) <= ctx.config.dense_threshold:
        _branch_dense(list(C), ranked, DenseAdjacency.from_lists(sub.adj).rows, ctx, sub)
    else:
        _branch_sparse(list(C), ranked, sub.adj, ctx, sub)


def initial_branch(u: int, ctx: SearchContext):
    """Bound checks on the reduced neighborhood of ``u``, then ``branch``."""
    stats = ctx.stats
    stats.initial_branches += 1
    sub = ctx.graph.reduced_neighbors(u, ctx.lower_bound, ctx.cores)
    if len(sub) <= ctx.lower_bound:
        stats.pruned_size += 1
        return
    if ctx.config.use_neighborhood_cores:
        dec = core_numbers(sub)
        if dec.max_core + 1 <= ctx.lower_bound:
            stats.pruned_core += 1
            return
        # a clique of size |H|+1 here needs local core >= |H|
        lb = ctx.lower_bound
        order = [v for v in dec.smallest_last() if dec.core[v] >= lb]
    else:
        order = degree_order(sub)
    coloring = greedy_color(sub, order)
    if coloring.num_colors <= ctx.lower_bound:
        stats.pruned_color += 1
        return
    branch([], order, ctx, sub, coloring)


# -- driver ------------------------------------------------------------------

class _Snapshot:
    """One generation of the working graph plus its bookkeeping."""

    def __init__(self, graph: StaticGraph):
        self.graph = graph
        dec = core_numbers(graph)
        self.cores = dec.core
        self.max_core = dec.max_core
        self.by_core = np.argsort(np.asarray(self.cores, dtype=np.int64), kind="stable").tolist()
        self.prune_ptr = 0
        n = graph.n
        self.gone = bytearray(n)       # removal already reflected in deg
        self.claimed = bytearray(n)
        self.deg: list[int] = []
        self.heap: list[tuple[int, int]] = []


class Solver:
    """One maximum clique computation; ``run(pool)`` with a thread pool
    farms neighborhoods out to workers, ``run()`` does them inline."""

    def __init__(self, g: StaticGraph, config: SearchConfig | None = None):
        self.root = g
        self.config = config or SearchConfig()
        self.bound = SharedBound(lag=self.config.bound_lag)
        self.channel = RemovalChannel()
        self.stats = SearchStats()
        self._lock = threading.RLock()
        self._rng = random.Random(self.config.jitter_seed) if self.config.jitter_seed is not None else None
        self.snap: _Snapshot | None = None
        self.depth_limit = 0

    # .. bookkeeping (main thread unless noted) ..

    def _install(self, graph: StaticGraph):
        snap = _Snapshot(graph)
        self.snap = snap
        self._prune(snap, self.bound.true_size)
        snap.gone = bytearray((1 - snap.graph.alive).tobytes())
        self.channel.drain()
        g = snap.graph
        alive = g.alive.astype(bool)
        src = np.repeat(np.arange(g.n), g.degrees())
        live = alive[src] & alive[g.indices]
        snap.deg = np.bincount(src[live], minlength=g.n).tolist()
        snap.heap = [(snap.deg[v], v) for v in np.flatnonzero(alive).tolist()]
        heapq.heapify(snap.heap)
        log.debug("snapshot: n=%d alive=%d K=%d |H|=%d", g.n, g.alive_count,
                  snap.max_core, self.bound.true_size)

    def _prune(self, snap: _Snapshot, size: int):
        """Delete every vertex whose core number is below ``size``.  Safe to
        call from workers."""
        with self._lock:
            cores, order = snap.cores, snap.by_core
            i = snap.prune_ptr
            start = i
            while i < len(order) and cores[order[i]] < size:
                i += 1
            snap.prune_ptr = i
            if i > start:
                k = broadcast_removals(order[start:i], snap.graph, self.channel)
                return k
        return 0

    def _account(self, snap: _Snapshot, v: int):
        if snap.gone[v]:
            return
        snap.gone[v] = 1
        deg, gone, claimed, heap = snap.deg, snap.gone, snap.claimed, snap.heap
        for w in snap.graph.neighbors(v):
            if not gone[w]:
                deg[w] -= 1
                if not claimed[w]:
                    heapq.heappush(heap, (deg[w], w))

    def _drain(self, snap: _Snapshot):
        for v in self.channel.drain():
            self._account(snap, v)

    def _next(self, snap: _Snapshot) -> int | None:
        heap, deg = snap.heap, snap.deg
        alive = snap.graph._alive
        while heap:
            d, v = heapq.heappop(heap)
            if snap.gone[v] or snap.claimed[v] or not alive[v] or d != deg[v]:
                continue
            snap.claimed[v] = 1
            return v
        return None

    def _finish(self, snap: _Snapshot, u: int, stats: SearchStats):
        self.stats.merge(stats)
        with self._lock:
            snap.graph.remove_implicit(u)
        self._account(snap, u)

    def _want_compact(self, snap: _Snapshot, last: float) -> bool:
        g = snap.graph
        if g.alive_count == 0:
            return False
        if time.monotonic() - last >= self.config.rebuild_interval:
            return True
        frac = self.config.compact_dead_fraction
        return frac is not None and (g.n - g.alive_count) > frac * g.n

    def _compact(self, snap: _Snapshot):
        self._drain(snap)
        self.stats.compactions += 1
        self._install(snap.graph.compact())

    # .. worker side ..

    def _on_clique(self, snap: _Snapshot, members):
        root = snap.graph.orig_ids[list(members)].tolist()
        clique = Clique.checked(self.root, root)
        self._jitter()
        if self.bound.try_install(clique):
            removed = self._prune(snap, clique.size)
            with self._lock:
                self.stats.core_removals += removed

    def _jitter(self):
        if self._rng is not None:
            time.sleep(self._rng.random() * 2e-4)

    def _task(self, snap: _Snapshot, u: int) -> SearchStats:
        self._jitter()
        stats = SearchStats()
        ctx = SearchContext(snap.graph, snap.cores, self.bound, self.config, stats,
                            on_clique=lambda ms: self._on_clique(snap, ms),
                            depth_limit=self.depth_limit)
        initial_branch(u, ctx)
        return stats

    # .. main loop ..

    def run(self, pool=None) -> SearchResult:
        g = self.root
        timings = {}
        t0 = time.perf_counter()
        root_cores = core_numbers(g)
        timings["cores"] = time.perf_counter() - t0

        t0 = time.perf_counter()
        if self.config.workers > 1:
            H = heuristic_clique_parallel(g, root_cores, self.config.workers)
        else:
            H = heuristic_clique(g, root_cores)
        if H.size:
            self.bound.try_install(Clique.checked(g, H.members))
        timings["heuristic"] = time.perf_counter() - t0

        t0 = time.perf_counter()
        L = greedy_color(g, root_cores.smallest_last()).num_colors if root_cores.order else 0
        ub = min(L, root_cores.max_core + 1)
        self.depth_limit = root_cores.max_core + 1
        if self.depth_limit + 200 > sys.getrecursionlimit():
            sys.setrecursionlimit(self.depth_limit + 200)
        if H.size < ub:
            # explicit removal of every vertex that cannot beat H
            keep = g.alive.astype(bool) & (np.asarray(root_cores.core) >= H.size)
            self._install(g.compact(keep))
            self._search(pool)
        timings["search"] = time.perf_counter() - t0
        return SearchResult(self.bound.best, H, root_cores.max_core, L, ub, self.stats,
                            list(self.bound.history), timings)

    def _search(self, pool):
        last = time.monotonic()
        inflight: dict = {}
        while True:
            snap = self.snap
            self._drain(snap)
            if pool is None:
                u = self._next(snap)
                if u is None:
                    return
                self._finish(snap, u, self._task(snap, u))
            else:
                while len(inflight) < self.config.workers:
                    u = self._next(snap)
                    if u is None:
                        break
                    inflight[pool.submit(self._task, snap, u)] = u
                if not inflight:
                    return
                done, _ = wait(inflight, return_when=FIRST_COMPLETED)
                for fut in done:
                    self._finish(snap, inflight.pop(fut), fut.result())
            if self._want_compact(snap, last):
                # barrier: no task may straddle two snapshots
                for fut in wait(inflight).done:
                    self._finish(snap, inflight.pop(fut), fut.result())
                self._compact(snap)
                last = time.monotonic()


def solve(g: StaticGraph, config: SearchConfig | None = None) -> SearchResult:
    """Full run with statistics; uses worker threads when
    ``config.workers > 1``."""
    from .parallel import max_clique_parallel
    return max_clique_parallel(g, config or SearchConfig())


def max_clique(g: StaticGraph, config: SearchConfig | None = None) -> Clique:
    """A maximum clique of ``g``, in ``g``'s vertex ids."""
    return solve(g, config).clique
