"""Compressed sparse undirected graphs with implicit vertex deletion.

Neighbor lists live in one contiguous ``indices`` array addressed by
``indptr`` (CSR layout).  Vertices are deleted by flipping an ``alive``
byte; adjacency is never edited in place.  ``compact`` builds a fresh
graph over the survivors when the dead weight gets large.
"""
from __future__ import annotations

from bisect import bisect_left
from typing import Iterable, Sequence

import numpy as np

DENSE_THRESHOLD = 1024


def intersect_sorted(a: Sequence[int], b: Sequence[int]) -> list[int]:
    """Sorted-merge intersection of two ascending integer sequences."""
    out = []
    i = j = 0
    na, nb = len(a), len(b)
    while i < na and j < nb:
        x, y = a[i], b[j]
        if x < y:
            i += 1
        elif y < x:
            j += 1
        else:
            out.append(x)
            i += 1
            j += 1
    return out


class StaticGraph:
    """Undirected simple graph in CSR form with an aliveness mask.

    ``orig_ids[v]`` is the id ``v`` had in the graph this one was
    (transitively) compacted from, so answers can always be reported in the
    input numbering.  ``labels`` optionally carries the user's vertex names
    indexed by original id.
    """

    def __init__(self, indptr, indices, orig_ids=None, labels=None):
        self.indptr = np.ascontiguousarray(indptr, dtype=np.int64)
        self.indices = np.ascontiguousarray(indices)
        self.n = len(self.indptr) - 1
        if orig_ids is None:
            orig_ids = np.arange(self.n, dtype=np.int64)
        self.orig_ids = np.asarray(orig_ids, dtype=np.int64)
        self.labels = labels
        self.alive = np.ones(self.n, dtype=np.uint8)
        self.alive_count = self.n
        # memoryviews give plain Python ints on scalar access, which is far
        # cheaper than numpy scalars inside the search loops
        self._ptr = memoryview(self.indptr)
        self._ind = memoryview(self.indices)
        self._alive = memoryview(self.alive)

    # -- basic queries -----------------------------------------------------

    @property
    def m(self) -> int:
        return len(self.indices) // 2

    def degree(self, v: int) -> int:
        return self._ptr[v + 1] - self._ptr[v]

    def degrees(self) -> np.ndarray:
        return np.diff(self.indptr)

    def neighbors(self, v: int) -> memoryview:
        return self._ind[self._ptr[v]:self._ptr[v + 1]]

    def has_edge(self, u: int, v: int) -> bool:
        ptr = self._ptr
        lo, hi = ptr[u], ptr[u + 1]
        lo2, hi2 = ptr[v], ptr[v + 1]
        if hi - lo > hi2 - lo2:
            lo, hi, v = lo2, hi2, u
        i = bisect_left(self._ind, v, lo, hi)
        return i < hi and self._ind[i] == v

    def is_alive(self, v: int) -> bool:
        return bool(self._alive[v])

    def alive_vertices(self) -> np.ndarray:
        return np.flatnonzero(self.alive)

    def edges(self) -> Iterable[tuple[int, int]]:
        """Each undirected edge once, as ``(u, v)`` with ``u < v``."""
        for u in range(self.n):
            for v in self.neighbors(u):
                if u < v:
                    yield u, v

    def label_of(self, v: int):
        """User-facing name of vertex ``v`` of *this* graph."""
        oid = int(self.orig_ids[v])
        return self.labels[oid] if self.labels is not None else oid

    # -- deletion ------------------------------------------------------------

    def remove_implicit(self, v: int) -> bool:
        """Mark ``v`` deleted.  Returns False if it already was."""
        if not self._alive[v]:
            return False
        self._alive[v] = 0
        self.alive_count -= 1
        return True

    def compact(self, keep=None) -> StaticGraph:
        """New graph over the alive vertices (or the ``keep`` mask),
        renumbered densely.

        Neighbor lists stay sorted because the renumbering is monotone.
        The old graph is left untouched so readers holding it can finish.
        """
        keep = self.alive.astype(bool) if keep is None else np.asarray(keep, dtype=bool)
        newid = np.cumsum(keep, dtype=np.int64) - 1
        src = np.repeat(np.arange(self.n, dtype=np.int64), self.degrees())
        mask = keep[src] & keep[self.indices]
        src = newid[src[mask]]
        dst = newid[self.indices[mask]].astype(self.indices.dtype)
        n_new = int(keep.sum())
        indptr = np.zeros(n_new + 1, dtype=np.int64)
        np.cumsum(np.bincount(src, minlength=n_new), out=indptr[1:])
        return StaticGraph(indptr, dst, self.orig_ids[keep], self.labels)

    # -- neighborhoods -------------------------------------------------------

    def reduced_neighbors(self, v: int, min_core: int = 0, cores=None,
                          removed=None) -> NeighborhoodSubgraph:
        """Induced subgraph on ``v`` plus its alive neighbors ``u`` with
        ``cores[u] >= min_core`` and ``u`` not in ``removed``."""
        alive = self._alive
        members = []
        for u in self.neighbors(v):
            if not alive[u]:
                continue
            if cores is not None and cores[u] < min_core:
                continue
            if removed is not None and u in removed:
                continue
            members.append(u)
        # local ids follow ascending global id; v is spliced in place
        pos = bisect_left(members, v)
        members.insert(pos, v)
        return NeighborhoodSubgraph.induced(self, members)

    def __repr__(self):
        return f"StaticGraph(n={self.n}, m={self.m}, alive={self.alive_count})"


def build(edges, n: int | None = None, wide_ids: bool = False,
          labels=None) -> StaticGraph:
    """Build a StaticGraph from undirected vertex pairs.

    Duplicates (in either orientation) and self-loops are dropped.  ``n``
    defaults to one past the largest id seen.
    """
    dtype = np.int64 if wide_ids else np.int32
    arr = np.asarray(list(edges) if not isinstance(edges, np.ndarray) else edges,
                     dtype=np.int64).reshape(-1, 2)
    if arr.size and arr.min() < 0:
        raise ValueError("vertex ids must be non-negative")
    top = int(arr.max()) + 1 if arr.size else 0
    n = top if n is None else n
    if top > n:
        raise ValueError(f"vertex id {top - 1} out of range for n={n}")
    if n > np.iinfo(dtype).max:
        raise ValueError(f"{n} vertices overflow the {np.dtype(dtype).itemsize * 8}-bit index width")
    arr = arr[arr[:, 0] != arr[:, 1]]
    # one int64 key per directed pair; sorting keys sorts rows then columns
    key = np.unique(np.concatenate([arr[:, 0] * n + arr[:, 1], arr[:, 1] * n + arr[:, 0]]))
    src, dst = np.divmod(key, n) if n else (key, key)
    indptr = np.zeros(n + 1, dtype=np.int64)
    np.cumsum(np.bincount(src, minlength=n), out=indptr[1:])
    return StaticGraph(indptr, dst.astype(dtype), labels=labels)


class NeighborhoodSubgraph:
    """Induced subgraph on a handful of vertices of a StaticGraph.

    ``vertices[i]`` is the parent id of local vertex ``i``; ``adj[i]`` is the
    sorted list of local neighbors.
    """

    __slots__ = ("vertices", "adj")

    def __init__(self, vertices, adj):
        self.vertices = vertices
        self.adj = adj

    @classmethod
    def induced(cls, g: StaticGraph, members: list[int]) -> NeighborhoodSubgraph:
        # members ascending and neighbor lists sorted, so each local list
        # comes out sorted too
        local = {u: i for i, u in enumerate(members)}
        get = local.get
        adj = []
        for u in members:
            row = [get(w) for w in g.neighbors(u)]
            adj.append([i for i in row if i is not None])
        return cls(members, adj)

    def __len__(self):
        return len(self.vertices)

    @property
    def edge_count(self) -> int:
        return sum(len(a) for a in self.adj) // 2

    def restrict(self, keep: list[int]) -> NeighborhoodSubgraph:
        """Induced subgraph on the local vertices ``keep`` (ascending)."""
        remap = {v: i for i, v in enumerate(keep)}
        adj = [[remap[w] for w in self.adj[v] if w in remap] for v in keep]
        return NeighborhoodSubgraph([self.vertices[v] for v in keep], adj)

    def dense(self) -> DenseAdjacency:
        return DenseAdjacency.from_lists(self.adj)


class DenseAdjacency:
    """Bit-matrix adjacency: row ``i`` is an int with bit ``j`` set iff i~j."""

    __slots__ = ("rows",)

    def __init__(self, rows: list[int]):
        self.rows = rows

    @classmethod
    def from_lists(cls, adj) -> DenseAdjacency:
        rows = []
        for nb in adj:
            r = 0
            for w in nb:
                r |= 1 << w
            rows.append(r)
        return cls(rows)

    def __len__(self):
        return len(self.rows)

    def has_edge(self, i: int, j: int) -> bool:
        return bool(self.rows[i] >> j & 1)

    def neighbors(self, i: int) -> list[int]:
        r = self.rows[i]
        out = []
        while r:
            low = r & -r
            out.append(low.bit_length() - 1)
            r ^= low
        return out
