import math
import random
from itertools import combinations

import pytest

from maxclique import SearchConfig, build, core_numbers, max_clique, solve
from maxclique.bounds import greedy_color
from maxclique.graph import NeighborhoodSubgraph
from maxclique.heuristic import Clique
from maxclique.oracle import oracle_max_clique
from maxclique.parallel import SharedBound
from maxclique.search import (SearchContext, SearchInvariantError, _recolor_bits, _recolor_sets,
                              branch, initial_branch, recolor)
from helpers import clique_with_pendants, complete, gnp, petersen, star


def ctx_for(g, size=0, **cfg):
    bound = SharedBound()
    if size:
        bound.try_install(Clique(tuple(range(size))))
    return SearchContext(g, core_numbers(g).core, bound, SearchConfig(**cfg))


def sub_of(adj):
    return NeighborhoodSubgraph(list(range(len(adj))), adj)


def test_k5_plus_pendant():
    res = solve(build(clique_with_pendants(5, 1)))
    assert res.clique.members == (0, 1, 2, 3, 4)


def test_petersen_is_triangle_free():
    assert max_clique(build(petersen())).size == 2


def test_empty_graph():
    assert max_clique(build([])).size == 0
    assert max_clique(build([], n=3)).size == 1


@pytest.mark.parametrize("seed", range(40))
def test_random_graphs_match_oracle(seed):
    rng = random.Random(seed)
    n = rng.randint(1, 40)
    g = build(gnp(n, rng.choice([0.1, 0.3, 0.5, 0.7, 0.9]), rng), n=n)
    res = solve(g)
    Clique.checked(g, res.clique.members)
    assert res.size == len(oracle_max_clique(g))
    assert res.heuristic.size <= res.size <= res.upper_bound


def test_branch_on_triangle_finds_it():
    g = build(complete(3))
    ctx = ctx_for(g)
    sub = NeighborhoodSubgraph.induced(g, [0, 1, 2])
    branch([], [0, 1, 2], ctx, sub)
    assert ctx.best.size == 3


def test_branch_loop_guard_does_no_work():
    g = build(complete(3))
    ctx = ctx_for(g, size=3)
    sub = NeighborhoodSubgraph.induced(g, [0, 1, 2])
    branch([], [0, 1, 2], ctx, sub)
    assert ctx.stats.improvements == 0 and ctx.stats.pruned_recolor == 0


def test_initial_branch_k4_with_incumbent_4():
    g = build(complete(4))
    ctx = ctx_for(g, size=4)
    initial_branch(0, ctx)
    assert ctx.stats.branches == 0 and ctx.stats.pruned_size == 1


def test_initial_branch_k3_from_two():
    g = build(complete(3))
    ctx = ctx_for(g, size=2)
    initial_branch(0, ctx)
    assert ctx.best.size == 3


def test_initial_branch_star_center_pruned():
    g = build(star(5))
    for ncores in (True, False):
        ctx = ctx_for(g, size=2, use_neighborhood_cores=ncores)
        initial_branch(0, ctx)
        assert ctx.stats.branches == 0
        assert ctx.stats.pruned_size + ctx.stats.pruned_core + ctx.stats.pruned_color == 1


@pytest.mark.parametrize("seed", range(25))
def test_initial_branch_gates_are_sound(seed):
    """No gate may reject a neighborhood whose clique number beats |H|."""
    rng = random.Random(seed)
    g = build(gnp(16, 0.6, rng), n=16)
    w = len(oracle_max_clique(g))
    for ncores in (True, False):
        for v in range(16):
            local = len(oracle_max_clique(build(
                [(a, b) for a, b in g.edges() if a in nb(g, v) and b in nb(g, v)], n=16),
            ))
            for h in range(1, w + 1):
                ctx = ctx_for(g, size=h, use_neighborhood_cores=ncores)
                initial_branch(v, ctx)
                if local > h:
                    assert ctx.best.size == local


def nb(g, v):
    return {v} | {u for u in range(g.n) if g.has_edge(u, v)}


def test_recolor_clique_and_edgeless():
    assert recolor(sub_of([[1, 2], [0, 2], [0, 1]]), [0, 1, 2]).num_colors == 3
    assert recolor(sub_of([[], [], []]), [0, 1, 2]).num_colors == 1


@pytest.mark.parametrize("seed", range(20))
def test_recolor_variants_agree(seed):
    rng = random.Random(seed)
    n = rng.randint(1, 25)
    g = build(gnp(n, rng.random(), rng), n=n)
    sub = NeighborhoodSubgraph.induced(g, list(range(n)))
    P = sorted(rng.sample(range(n), rng.randint(1, n)))
    col = recolor(sub, P)
    for a, b in combinations(P, 2):
        if g.has_edge(a, b):
            assert col.color[a] != col.color[b]
    assert col.num_colors >= len(oracle_max_clique(build(
        [(a, b) for a, b in g.edges() if a in P and b in P], n=n)))
    rows = sub.dense().rows
    mask = sum(1 << v for v in P)
    order_b, L_b = _recolor_bits(mask, rows)
    order_s, L_s = _recolor_sets(P, sub.adj)
    assert L_b == L_s == col.num_colors
    assert order_b == order_s
    colors = [col.color[v] for v in order_b]
    assert sorted(order_b) == P and colors == sorted(colors)


@pytest.mark.parametrize("threshold", [0, 1024])
@pytest.mark.parametrize("seed", range(15))
def test_sparse_and_dense_paths_agree(threshold, seed):
    rng = random.Random(seed)
    n = rng.randint(5, 35)
    g = build(gnp(n, rng.choice([0.3, 0.6, 0.9]), rng), n=n)
    assert solve(g, SearchConfig(dense_threshold=threshold)).size == len(oracle_max_clique(g))


@pytest.mark.parametrize("interval", [1e-3, 4.0, math.inf])
def test_rebuild_interval_does_not_change_answer(interval):
    rng = random.Random(11)
    for _ in range(10):
        n = rng.randint(10, 40)
        g = build(gnp(n, 0.5, rng), n=n)
        cfg = SearchConfig(rebuild_interval=interval, compact_dead_fraction=None)
        assert solve(g, cfg).size == len(oracle_max_clique(g))


def test_tiny_rebuild_interval_compacts():
    g = build(gnp(300, 0.05, random.Random(2)), n=300)
    res = solve(g, SearchConfig(rebuild_interval=1e-6, compact_dead_fraction=None))
    assert res.stats.compactions > 0
    assert res.size == solve(g).size


def test_depth_guard_trips():
    g = build(complete(6))
    ctx = ctx_for(g)
    ctx.depth_limit = 2
    with pytest.raises(SearchInvariantError):
        branch([], list(range(6)), ctx, NeighborhoodSubgraph.induced(g, list(range(6))))


def test_config_validation():
    with pytest.raises(ValueError):
        SearchConfig(rebuild_interval=0)
    with pytest.raises(ValueError):
        SearchConfig(workers=0)
    with pytest.raises(ValueError):
        SearchConfig(dense_threshold=-1)


def test_results_in_root_ids_after_pruning():
    # big clique on high ids so core pruning renumbers everything
    edges = [(i, i + 1) for i in range(20)] + complete(6, offset=30)
    g = build(edges)
    res = solve(g)
    assert res.clique.members == tuple(range(30, 36))


def test_certify_fast_path_skips_search():
    res = solve(build(clique_with_pendants(10, 5)))
    assert res.stats.initial_branches == 0 and res.size == 10


def test_upper_bound_reported():
    g = build(petersen())
    res = solve(g)
    dec = core_numbers(g)
    L = greedy_color(g, dec.smallest_last()).num_colors
    assert (res.colors, res.max_core, res.upper_bound) == (L, 3, min(L, 4))
