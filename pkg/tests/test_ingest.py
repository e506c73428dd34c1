import gzip
import random
import warnings

import pytest

from maxclique.ingest import (ParseError, RawEdgeList, format_edge_list, parse_dimacs,
                              parse_edge_list, parse_temporal, preprocess, read_graph,
                              read_temporal, sniff_format)


def test_edge_list_basic():
    raw = parse_edge_list(b"0 1\n1 2\n")
    assert raw.n == 3 and raw.edges == [(0, 1), (1, 2)]


def test_edge_list_comment_and_weight():
    raw = parse_edge_list(b"# c\na b 3.5\n% other\n")
    assert raw.edges == [(0, 1)] and raw.labels == ["a", "b"] and raw.weights == [3.5]


def test_edge_list_first_appearance_ids():
    raw = parse_edge_list("z y\ny x\n")
    assert raw.labels == ["z", "y", "x"] and raw.edges == [(0, 1), (1, 2)]


@pytest.mark.parametrize("text, line", [("0 1\n0\n", 2), ("0 1 2 3\n", 1), ("a b c\n", 1)])
def test_edge_list_errors_name_line(text, line):
    with pytest.raises(ParseError) as ei:
        parse_edge_list(text)
    assert ei.value.line == line and f"line {line}" in str(ei.value)


def test_edge_list_round_trip():
    rng = random.Random(0)
    lines = "".join(f"v{rng.randint(0, 20)} v{rng.randint(0, 20)}\n" for _ in range(50))
    a = parse_edge_list(lines)
    b = parse_edge_list(format_edge_list(a))
    assert (a.n, a.edges, a.labels) == (b.n, b.edges, b.labels)


def test_gzip_input():
    raw = parse_edge_list(gzip.compress(b"0 1\n1 2\n"))
    assert raw.n == 3


def test_parser_determinism():
    data = b"b a\nc a\nd b\n"
    g1, g2 = preprocess(parse_edge_list(data)), preprocess(parse_edge_list(data))
    assert list(g1.edges()) == list(g2.edges()) and g1.labels == g2.labels


def test_dimacs_triangle():
    g = preprocess(parse_dimacs("c hi\np edge 3 3\ne 1 2\ne 2 3\ne 1 3\n"))
    assert (g.n, g.m) == (3, 3)


def test_dimacs_duplicates_collapse():
    with pytest.warns(UserWarning):
        g = preprocess(parse_dimacs("p edge 2 1\ne 1 2\ne 2 1\ne 1 2\n"))
    assert g.m == 1


def test_dimacs_errors():
    with pytest.raises(ParseError, match="missing"):
        parse_dimacs("c nothing\n")
    with pytest.raises(ParseError) as ei:
        parse_dimacs("p edge 3 1\ne 1 4\n")
    assert ei.value.line == 2
    with pytest.raises(ParseError):
        parse_dimacs("e 1 2\np edge 2 1\n")
    with pytest.raises(ParseError):
        parse_dimacs("p edge 2 1\nx 1 2\n")


def test_dimacs_count_mismatch_warns():
    with pytest.warns(UserWarning, match="declares 5"):
        raw = parse_dimacs("p edge 3 5\ne 1 2\n")
    assert raw.n == 3 and raw.labels == ["1", "2", "3"]


def test_temporal_parse():
    net = parse_temporal(b"a b 1\nb c 2\n")
    assert net.n == 3 and len(net.edges) == 2


def test_temporal_self_contact_dropped():
    net = parse_temporal(b"a a 5\n")
    assert net.n == 0 and net.edges == []


def test_temporal_bad_time():
    with pytest.raises(ParseError) as ei:
        parse_temporal("a b 1\na b noon\n")
    assert ei.value.line == 2


def test_temporal_shuffle_invariance():
    lines = [f"{a} {b} {t}\n" for a, b, t in
             [("x", "y", 3), ("y", "z", 1), ("z", "x", 2), ("x", "z", 5)]]
    base = parse_temporal("".join(lines))
    key = lambda net: [(net.labels[u], net.labels[v], t) for u, v, t in net.ordered_edges()]
    rng = random.Random(1)
    for _ in range(5):
        rng.shuffle(lines)
        assert key(parse_temporal("".join(lines))) == key(base)


def test_directed_cycle_has_no_mutual_pairs():
    raw = RawEdgeList(3, [(0, 1), (1, 2), (2, 0)], directed=True, labels=list("abc"))
    with pytest.warns(UserWarning, match="no edges"):
        g = preprocess(raw)
    assert (g.n, g.m) == (3, 0)


def test_directed_mutual_path():
    raw = RawEdgeList(3, [(0, 1), (1, 0), (1, 2), (2, 1)], directed=True, labels=list("abc"))
    g = preprocess(raw)
    assert set(g.edges()) == {(0, 1), (1, 2)}


def test_undirected_keeps_largest_component_and_labels():
    raw = parse_edge_list("a b\nc d\nd e\ne e\n")
    g = preprocess(raw)
    assert [g.label_of(v) for v in range(g.n)] == ["c", "d", "e"] and g.m == 2


def test_empty_input_warns():
    with pytest.warns(UserWarning):
        g = preprocess(parse_edge_list(""))
    assert g.n == 0


def reach_set(adj, s):
    seen, stack = {s}, [s]
    while stack:
        for w in adj[stack.pop()]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return seen


@pytest.mark.parametrize("seed", range(30))
def test_directed_preprocess_matches_definition(seed):
    rng = random.Random(seed)
    n = rng.randint(2, 14)
    edges = [(rng.randrange(n), rng.randrange(n)) for _ in range(rng.randint(1, 3 * n))]
    fwd = {v: set() for v in range(n)}
    bwd = {v: set() for v in range(n)}
    for u, v in edges:
        fwd[u].add(v)
        bwd[v].add(u)
    # SCCs by forward/backward reachability
    sccs = {frozenset(reach_set(fwd, v) & reach_set(bwd, v)) for v in range(n)}
    best = min(sccs, key=lambda s: (-len(s), min(s)))
    es = set(edges)
    want = {(min(u, v), max(u, v)) for u, v in es if u != v and (v, u) in es and u in best and v in best}
    raw = RawEdgeList(n, edges, directed=True, labels=[str(i) for i in range(n)])
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        g = preprocess(raw)
    assert {int(g.label_of(v)) for v in range(g.n)} == set(best)
    got = {tuple(sorted((int(g.label_of(a)), int(g.label_of(b))))) for a, b in g.edges()}
    assert got == want


def test_sniff_and_read(tmp_path):
    p = tmp_path / "g.clq"
    p.write_text("p edge 2 1\ne 1 2\n")
    assert read_graph(p).n == 2
    q = tmp_path / "g.txt"
    q.write_text("c this looks like dimacs\np edge 2 1\ne 1 2\n")
    assert sniff_format(q, q.read_bytes()) == "dimacs"
    r = tmp_path / "g.edges.gz"
    r.write_bytes(gzip.compress(b"1 2\n"))
    assert read_graph(r).edges == [(0, 1)]
    with pytest.raises(ValueError):
        read_graph(r, fmt="bogus")
    t = tmp_path / "t.txt"
    t.write_text("a b 1.5\n")
    assert read_temporal(t).edges == [(0, 1, 1.5)]
