"""Slow, independent reference answers for testing.

Nothing here touches the solver's code paths: graphs are read through
``edges()`` only and every structure is rebuilt from plain sets.  Each
oracle refuses inputs over its budget instead of guessing.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations


class OracleBudgetExceeded(ValueError):
    pass


@dataclass(frozen=True)
class OracleBudget:
    max_vertices: int = 40
    max_temporal_edges: int = 400


DEFAULT_BUDGET = OracleBudget()


def _adjsets(g) -> tuple[list[int], dict[int, set]]:
    verts = [v for v in range(g.n) if g.is_alive(v)]
    live = set(verts)
    adj = {v: set() for v in verts}
    for u, v in g.edges():
        if u in live and v in live:
            adj[u].add(v)
            adj[v].add(u)
    return verts, adj


def oracle_max_clique(g, budget: OracleBudget = DEFAULT_BUDGET) -> tuple[int, ...]:
    """Maximum clique via Bron-Kerbosch with Tomita pivoting."""
    verts, adj = _adjsets(g)
    if len(verts) > budget.max_vertices:
        raise OracleBudgetExceeded(f"{len(verts)} vertices > {budget.max_vertices}")
    best: list = []

    def expand(R, P, X):
        nonlocal best
        if not P and not X:
            if len(R) > len(best):
                best = list(R)
            return
        pivot = max(P | X, key=lambda u: len(adj[u] & P))
        for v in list(P - adj[pivot]):
            expand(R + [v], P & adj[v], X & adj[v])
            P.remove(v)
            X.add(v)

    if verts:
        expand([], set(verts), set())
    return tuple(sorted(best))


def oracle_max_clique_subsets(g, max_vertices: int = 20) -> int:
    """Size of the largest clique by scanning every vertex subset (bitsets)."""
    verts, adj = _adjsets(g)
    n = len(verts)
    if n > max_vertices:
        raise OracleBudgetExceeded(f"{n} vertices > {max_vertices}")
    idx = {v: i for i, v in enumerate(verts)}
    rows = [sum(1 << idx[w] for w in adj[v]) for v in verts]
    is_clique = bytearray(1 << n)
    is_clique[0] = 1
    best = 0
    for mask in range(1, 1 << n):
        low = (mask & -mask).bit_length() - 1
        rest = mask & (mask - 1)
        if is_clique[rest] and rows[low] & rest == rest:
            is_clique[mask] = 1
            best = max(best, bin(mask).count("1"))
    return best


def oracle_cores(g) -> list[int]:
    """Core numbers by repeatedly deleting a minimum-degree vertex and
    recording the running maximum of the degrees seen at deletion."""
    verts, adj = _adjsets(g)
    core = [0] * g.n
    left = {v: set(adj[v]) for v in verts}
    k = 0
    while left:
        v = min(left, key=lambda u: (len(left[u]), u))
        k = max(k, len(left[v]))
        core[v] = k
        for w in left[v]:
            left[w].discard(v)
        del left[v]
    return core


def earliest_arrival(edges, n: int, source: int, allow_equal: bool = False) -> list[float]:
    """Earliest time each vertex can be reached from ``source`` by a path
    of increasing edge times.  ``source`` gets -inf, unreachable +inf."""
    INF = float("inf")
    ea = [INF] * n
    ea[source] = -INF
    srt = sorted(edges, key=lambda e: e[2])
    i = 0
    while i < len(srt):
        j = i
        while j < len(srt) and srt[j][2] == srt[i][2]:
            j += 1
        group = srt[i:j]
        changed = True
        while changed:
            changed = False
            for u, v, t in group:
                ok = ea[u] <= t if allow_equal else ea[u] < t
                if ok and t < ea[v]:
                    ea[v] = t
                    changed = allow_equal
        i = j
    return ea


def oracle_reach(net, budget: OracleBudget = DEFAULT_BUDGET,
                 allow_equal: bool = False) -> set[tuple[int, int]]:
    """Every ordered pair (u, w) with a temporal path u -> w, self-pairs
    included."""
    if len(net.edges) > budget.max_temporal_edges:
        raise OracleBudgetExceeded(f"{len(net.edges)} temporal edges > {budget.max_temporal_edges}")
    out = set()
    for s in range(net.n):
        ea = earliest_arrival(net.edges, net.n, s, allow_equal)
        out.update((s, w) for w in range(net.n) if ea[w] != float("inf"))
    return out


def oracle_largest_mutual_set(net, allow_equal: bool = False) -> int:
    """Largest vertex set whose members pairwise reach each other, by
    trying every subset (n <= 16)."""
    if net.n > 16:
        raise OracleBudgetExceeded(f"{net.n} vertices > 16")
    reach = oracle_reach(net, OracleBudget(max_temporal_edges=10**9), allow_equal)
    best = min(net.n, 1)
    for k in range(net.n, 1, -1):
        for S in combinations(range(net.n), k):
            if all((a, b) in reach and (b, a) in reach for a, b in combinations(S, 2)):
                return k
    return best
