"""Graph and network generators shared by the test modules."""
import random
from itertools import combinations

from maxclique import build
from maxclique.temporal import TemporalNetwork

PROBS = [0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9]


def gnp(n, p, rng):
    return [(a, b) for a, b in combinations(range(n), 2) if rng.random() < p]


def random_graph(n, p, seed):
    return build(gnp(n, p, random.Random(seed)), n=n)


def complete(n, offset=0):
    return [(a + offset, b + offset) for a, b in combinations(range(n), 2)]


def cycle(n):
    return [(i, (i + 1) % n) for i in range(n)]


def star(leaves):
    return [(0, i) for i in range(1, leaves + 1)]


def petersen():
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return outer + spokes + inner


def complete_bipartite(a, b):
    return [(i, a + j) for i in range(a) for j in range(b)]


def clique_with_pendants(k, pendants):
    edges = complete(k)
    for j in range(pendants):
        edges.append((j % k, k + j))
    return edges


def random_suite(count=200, seed=2024, max_n=40):
    """(name, StaticGraph) pairs: n in 1..max_n, p cycling through PROBS."""
    rng = random.Random(seed)
    out = []
    for i in range(count):
        n = rng.randint(1, max_n)
        p = PROBS[i % len(PROBS)]
        out.append((f"gnp-{i}-n{n}-p{p}", build(gnp(n, p, rng), n=n)))
    return out


def structured_suite():
    specs = [
        ("K1", [], 1), ("K2", complete(2), None), ("K5", complete(5), None),
        ("K12", complete(12), None),
        ("K5+pendant", clique_with_pendants(5, 1), None),
        ("K8+6pendants", clique_with_pendants(8, 6), None),
        ("K4+K6 disjoint", complete(4) + complete(6, offset=4), None),
        ("C3", cycle(3), None), ("C4", cycle(4), None), ("C5", cycle(5), None),
        ("C7", cycle(7), None), ("C30", cycle(30), None),
        ("Petersen", petersen(), None),
        ("K3,3", complete_bipartite(3, 3), None), ("K5,7", complete_bipartite(5, 7), None),
        ("K1,9 star", star(9), None), ("path10", [(i, i + 1) for i in range(9)], None),
        ("empty5", [], 5),
        ("wheel8", cycle(7) + [(7, i) for i in range(7)], None),
        ("K12+fringe", fringe_clique(12, 20, seed=3), None),
    ]
    return [(name, build(e, n=n)) for name, e, n in specs]


def fringe_clique(k, fringe, seed=0, extra=1):
    """K_k plus ``fringe`` pendant-ish vertices, each attached to ``extra``
    clique vertices and sparsely to each other."""
    rng = random.Random(seed)
    edges = complete(k)
    for j in range(fringe):
        v = k + j
        for u in rng.sample(range(k), extra):
            edges.append((u, v))
        if j and rng.random() < 0.5:
            edges.append((v, v - 1))
    return edges


def random_temporal(n, m, rng, tmax=None):
    tmax = tmax or 2 * m
    edges = []
    for _ in range(m if n > 1 else 0):
        u, v = rng.sample(range(n), 2)
        edges.append((u, v, float(rng.randint(1, tmax))))
    return TemporalNetwork(n, edges)


# Timing records for three configs on ten problems; p9 unsolved by all.
PROFILE_FIXTURE = """problem,config,seconds
p1,A,1
p1,B,2
p1,C,4
p2,A,2
p2,B,1
p2,C,2
p3,A,3
p3,B,3
p3,C,DNF
p4,A,1
p4,B,4
p4,C,1
p5,A,DNF
p5,B,5
p5,C,10
p6,A,2
p6,B,2
p6,C,2
p7,A,8
p7,B,1
p7,C,2
p8,A,1
p8,B,1
p8,C,4
p9,A,DNF
p9,B,
p9,C,DNF
p10,A,5
p10,B,10
p10,C,5
"""

# Worked by hand: ratio lists
#   A: 1 2 1 1 - 1 8 1 - 1
#   B: 2 1 1 4 1 1 1 1 - 2
#   C: 4 2 - 1 2 1 2 4 - 1
# breakpoints are the distinct finite ratios {1, 2, 4, 8}.
PROFILE_EXPECTED = {
    "A": [(0.0, 0.6), (1.0, 0.7), (2.0, 0.7), (3.0, 0.8)],
    "B": [(0.0, 0.6), (1.0, 0.8), (2.0, 0.9), (3.0, 0.9)],
    "C": [(0.0, 0.3), (1.0, 0.6), (2.0, 0.8), (3.0, 0.8)],
}
