"""Readers for edge lists, DIMACS .clq files and temporal contact lists, plus
the cleanup every static graph goes through before the solver sees it:
weights and self-loops dropped, restriction to the largest (strongly)
connected component, and for directed input only reciprocated pairs kept.
"""
from __future__ import annotations

import gzip
import logging
import warnings
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components

from .graph import StaticGraph, build
from .temporal import TemporalNetwork

log = logging.getLogger(__name__)


class ParseError(ValueError):
    def __init__(self, msg: str, line: int | None = None):
        super().__init__(f"line {line}: {msg}" if line is not None else msg)
        self.line = line


@dataclass
class RawEdgeList:
    n: int
    edges: list[tuple[int, int]] = field(default_factory=list)
    directed: bool = False
    labels: list[str] = field(default_factory=list)
    weights: list[float] | None = None


class _Labeler:
    def __init__(self):
        self.ids: dict[str, int] = {}
        self.labels: list[str] = []

    def __call__(self, tok: str) -> int:
        i = self.ids.get(tok)
        if i is None:
            i = self.ids[tok] = len(self.labels)
            self.labels.append(tok)
        return i


def _text(data) -> str:
    if isinstance(data, (bytes, bytearray)):
        if data[:2] == b"\x1f\x8b":
            data = gzip.decompress(data)
        return data.decode("utf-8")
    return data


def _records(text: str):
    for lineno, line in enumerate(text.splitlines(), 1):
        s = line.strip()
        if not s or s[0] in "#%":
            continue
        yield lineno, s.split()


def parse_edge_list(data, directed: bool = False) -> RawEdgeList:
    """``u v [weight]`` per line.  Labels become ids 0.. by first appearance."""
    lab = _Labeler()
    edges, weights = [], []
    for lineno, tok in _records(_text(data)):
        if len(tok) not in (2, 3):
            raise ParseError(f"expected 'u v [weight]', got {len(tok)} fields", lineno)
        w = 1.0
        if len(tok) == 3:
            try:
                w = float(tok[2])
            except ValueError:
                raise ParseError(f"bad weight {tok[2]!r}", lineno) from None
        edges.append((lab(tok[0]), lab(tok[1])))
        weights.append(w)
    return RawEdgeList(len(lab.labels), edges, directed, lab.labels, weights)


def parse_dimacs(data) -> RawEdgeList:
    """DIMACS clique format: ``p edge n m`` then ``e u v`` with 1-based ids."""
    n = m = None
    edges = []
    for lineno, tok in _records(_text(data)):
        kind = tok[0]
        if kind == "c":
            continue
        if kind == "p":
            if len(tok) < 4 or n is not None:
                raise ParseError("malformed or repeated 'p' line", lineno)
            try:
                n, m = int(tok[2]), int(tok[3])
            except ValueError:
                raise ParseError("non-integer size in 'p' line", lineno) from None
        elif kind == "e":
            if n is None:
                raise ParseError("'e' line before 'p' line", lineno)
            try:
                u, v = int(tok[1]), int(tok[2])
            except (ValueError, IndexError):
                raise ParseError("malformed 'e' line", lineno) from None
            if not (1 <= u <= n and 1 <= v <= n):
                raise ParseError(f"vertex id out of range 1..{n}", lineno)
            edges.append((u - 1, v - 1))
        else:
            raise ParseError(f"unknown line type {kind!r}", lineno)
    if n is None:
        raise ParseError("missing 'p edge n m' line")
    if len(edges) != m:
        warnings.warn(f"DIMACS header declares {m} edges, found {len(edges)}", stacklevel=2)
    return RawEdgeList(n, edges, False, [str(i + 1) for i in range(n)])


def parse_temporal(data) -> TemporalNetwork:
    """``u v t`` per line with real ``t``; self-contacts are dropped."""
    lab = _Labeler()
    edges = []
    for lineno, tok in _records(_text(data)):
        if len(tok) < 3:
            raise ParseError("expected 'u v t'", lineno)
        try:
            t = float(tok[2])
        except ValueError:
            raise ParseError(f"non-numeric time {tok[2]!r}", lineno) from None
        if tok[0] == tok[1]:
            continue
        edges.append((lab(tok[0]), lab(tok[1]), t))
    return TemporalNetwork(len(lab.labels), edges, lab.labels)


def format_edge_list(raw: RawEdgeList) -> str:
    return "".join(f"{raw.labels[u]} {raw.labels[v]}\n" for u, v in raw.edges)


def _largest(labels: np.ndarray, k: int) -> int:
    sizes = np.bincount(labels, minlength=k)
    cands = np.flatnonzero(sizes == sizes.max())
    # tie: the component holding the smallest vertex id
    first = {c: int(np.argmax(labels == c)) for c in cands.tolist()}
    return min(first, key=first.get)


def preprocess(raw: RawEdgeList) -> StaticGraph:
    n = raw.n
    if n == 0:
        warnings.warn("empty graph", stacklevel=2)
        return build([], n=0, labels=[])
    e = np.asarray(raw.edges, dtype=np.int64).reshape(-1, 2)
    e = e[e[:, 0] != e[:, 1]]
    A = coo_matrix((np.ones(len(e)), (e[:, 0], e[:, 1])), shape=(n, n)).tocsr()
    k, comp = connected_components(A, directed=raw.directed, connection="strong")
    c = _largest(comp, k)
    keep = np.flatnonzero(comp == c)
    newid = np.full(n, -1, dtype=np.int64)
    newid[keep] = np.arange(len(keep))
    inside = (newid[e[:, 0]] >= 0) & (newid[e[:, 1]] >= 0)
    e = newid[e[inside]]
    if raw.directed:
        fwd = {(int(u), int(v)) for u, v in e}
        e = np.array([(u, v) for u, v in fwd if u < v and (v, u) in fwd],
                     dtype=np.int64).reshape(-1, 2)
    labels = [raw.labels[i] for i in keep.tolist()] if raw.labels else None
    g = build(e, n=len(keep), labels=labels)
    if g.m == 0:
        warnings.warn("no edges left after preprocessing", stacklevel=2)
    log.info("preprocess: %d -> %d vertices, %d edges", n, g.n, g.m)
    return g


def sniff_format(path: str | Path, data: bytes) -> str:
    name = str(path).lower().removesuffix(".gz")
    if name.endswith((".clq", ".dimacs", ".col")):
        return "dimacs"
    for _, tok in _records(_text(data)):
        if tok[0] == "p" or (tok[0] == "c" and len(tok) not in (2, 3)):
            return "dimacs"
        return "edges"
    return "edges"


def read_graph(path, fmt: str = "auto", directed: bool = False) -> RawEdgeList:
    data = Path(path).read_bytes()
    if fmt == "auto":
        fmt = sniff_format(path, data)
    if fmt == "dimacs":
        return parse_dimacs(data)
    if fmt == "edges":
        return parse_edge_list(data, directed)
    raise ValueError(f"unsupported static graph format {fmt!r}")


def read_temporal(path) -> TemporalNetwork:
    return parse_temporal(Path(path).read_bytes())
