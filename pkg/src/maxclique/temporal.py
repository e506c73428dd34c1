"""Largest temporal strong component of a timestamped contact network.

u reaches w when a chain of contacts u -> ... -> w exists with strictly
increasing times.  A temporal strong component is a vertex set that reach
each other pairwise, so the largest one is a maximum clique of the graph
keeping only mutually-reaching pairs.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .graph import build
from .oracle import earliest_arrival
from .search import SearchConfig, SearchResult, solve


class ReachabilityTooLarge(MemoryError):
    def __init__(self, count: int, cap: int):
        super().__init__(f"reachability graph has at least {count} edges (cap {cap})")
        self.count = count
        self.cap = cap


@dataclass
class TemporalNetwork:
    n: int
    edges: list[tuple[int, int, float]] = field(default_factory=list)
    labels: list | None = None

    def ordered_edges(self) -> list[tuple[int, int, float]]:
        """Edges by time; equal times keep input order."""
        return sorted(self.edges, key=lambda e: e[2])

    def induced(self, members) -> TemporalNetwork:
        keep = set(members)
        return TemporalNetwork(self.n, [e for e in self.edges if e[0] in keep and e[1] in keep],
                               self.labels)

    def label_of(self, v: int):
        return self.labels[v] if self.labels is not None else v


class ReachabilityGraph:
    """Directed reachability relation stored as one bitset per source.

    ``rows[u]`` has bit ``w`` set iff u reaches w (bit u is always set).
    """

    def __init__(self, n: int, rows: list[int]):
        self.n = n
        self.rows = rows

    def __contains__(self, pair) -> bool:
        u, w = pair
        return bool(self.rows[u] >> w & 1)

    def successors(self, u: int) -> list[int]:
        r, out = self.rows[u], []
        while r:
            low = r & -r
            out.append(low.bit_length() - 1)
            r ^= low
        return out

    def pairs(self, loops: bool = True) -> set[tuple[int, int]]:
        return {(u, w) for u in range(self.n) for w in self.successors(u) if loops or u != w}

    @property
    def edge_count(self) -> int:
        """Directed edges, self-loops excluded."""
        return sum(r.bit_count() for r in self.rows) - self.n

    def reciprocal_edges(self) -> list[tuple[int, int]]:
        """Undirected pairs u < w that reach each other."""
        rows = self.rows
        out = []
        for u in range(self.n):
            for w in self.successors(u):
                if w > u and rows[w] >> u & 1:
                    out.append((u, w))
        return out


def reach(net: TemporalNetwork, allow_equal: bool = False,
          max_edges: int | None = None) -> ReachabilityGraph:
    """Build reachability backwards in time.

    Scanning contacts from latest to earliest, a contact (i, j, t) lets i
    reach everything j reaches using contacts after t.  Contacts sharing a
    timestamp are applied together from the pre-group state; with
    ``allow_equal`` they may also chain among themselves.
    """
    rows = [1 << v for v in range(net.n)]
    total = net.n
    edges = net.ordered_edges()
    k = len(edges)
    while k > 0:
        j = k - 1
        t = edges[j][2]
        while j > 0 and edges[j - 1][2] == t:
            j -= 1
        group = edges[j:k]
        k = j
        if allow_equal:
            changed = True
            while changed:
                changed = False
                for a, b, _ in group:
                    new = rows[a] | rows[b]
                    if new != rows[a]:
                        total += new.bit_count() - rows[a].bit_count()
                        rows[a] = new
                        changed = True
        else:
            updates = [(a, rows[b]) for a, b, _ in group]
            for a, r in updates:
                new = rows[a] | r
                if new != rows[a]:
                    total += new.bit_count() - rows[a].bit_count()
                    rows[a] = new
        if max_edges is not None and total - net.n > max_edges:
            raise ReachabilityTooLarge(total - net.n, max_edges)
    return ReachabilityGraph(net.n, rows)


@dataclass
class ComponentResult:
    members: tuple[int, ...]
    reach_vertices: int
    reach_edges: int            # directed, self-loops excluded
    reciprocal_edges: int       # undirected mutually-reaching pairs
    search: SearchResult | None
    subnetwork: TemporalNetwork

    @property
    def size(self) -> int:
        return len(self.members)


def max_tscc(net: TemporalNetwork, config: SearchConfig | None = None,
             allow_equal: bool = False, max_edges: int | None = None) -> ComponentResult:
    """Largest temporal strong component.  Components may overlap; only one
    largest is returned."""
    R = reach(net, allow_equal, max_edges)
    mutual = R.reciprocal_edges()
    if net.n == 0:
        return ComponentResult((), 0, 0, 0, None, TemporalNetwork(0, [], net.labels))
    g = build(mutual, n=net.n)
    res = solve(g, config)
    members = res.clique.members
    return ComponentResult(members, net.n, R.edge_count, len(mutual), res, net.induced(members))


def verify_component(net: TemporalNetwork, members, allow_equal: bool = False) -> bool:
    """True iff every ordered pair of ``members`` is joined by a temporal
    path (checked by forward earliest-arrival search)."""
    members = list(members)
    for s in members:
        ea = earliest_arrival(net.edges, net.n, s, allow_equal)
        if any(ea[w] == float("inf") for w in members):
            return False
    return True
