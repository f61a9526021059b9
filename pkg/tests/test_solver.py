from __future__ import annotations

import json
import random

import numpy as np
import pytest

from sparseclique import (
    Clique,
    SolveConfig,
    brute_force_max_clique,
    build_graph,
    compute_cores,
    construct_first_cubis,
    construct_second_cubis,
    erdos_renyi,
    induced_subgraph,
    nodes_with_core_at_least,
    pre_prune,
    preferential_attachment,
    reference_bk_max_clique,
    solve,
    verify_clique,
)
from sparseclique.solver import assess_node, effective_topl
from util import all_maximum_cliques, complete_graph, k5_plus_pendant, mid_band_trap, two_triangles


# ---------------------------------------------------------------- pre-pruning


def test_pre_prune_k5_pendant():
    g = k5_plus_pendant()
    residual, heuristic, stats, back = pre_prune(g)
    assert len(heuristic) == 5
    assert verify_clique(g, heuristic)
    assert stats.heuristic_clique_size == 5
    # threshold is |M| = 5: only the attachment node keeps degree 5
    assert stats.pre_pruned_nodes == 5
    assert residual.node_count == 1


def test_pre_prune_complete_graph():
    # the heuristic already finds all of K6; nothing of degree >= 6 remains
    g = complete_graph(6)
    residual, heuristic, stats, _ = pre_prune(g)
    assert len(heuristic) == 6
    assert residual.node_count == 0
    assert solve(g).omega == 6


def test_pre_prune_empty_graph_errors():
    with pytest.raises(ValueError):
        pre_prune(build_graph([]))


def test_pre_prune_never_loses_the_optimum():
    for seed in range(60):
        rng = random.Random(seed)
        g = erdos_renyi(rng.randint(2, 24), rng.uniform(0.15, 0.6), seed=4000 + seed)
        residual, heuristic, _, _ = pre_prune(g)
        omega = len(brute_force_max_clique(g))
        omega_residual = (
            len(brute_force_max_clique(residual)) if residual.node_count else 0
        )
        assert max(len(heuristic), omega_residual) == omega


# ------------------------------------------------------- search-graph construction


def test_first_cubis_of_single_clique_is_whole_graph():
    g = complete_graph(4)
    d = compute_cores(g)
    sub, mapping = construct_first_cubis(g, d, 1, Clique(frozenset()))
    assert sub.node_count == 4
    assert sub.edge_count == 6


def test_first_cubis_topl_one_is_top_core():
    for seed in range(20):
        g = erdos_renyi(40, 0.25, seed=5000 + seed)
        d = compute_cores(g)
        sub, mapping = construct_first_cubis(g, d, 1, Clique(frozenset()))
        expected = sorted(nodes_with_core_at_least(d, d.ladder[0]))
        assert sorted(mapping.tolist()) == expected


def test_first_cubis_empty_ladder_errors():
    g = build_graph([])
    d = compute_cores(g)
    with pytest.raises(ValueError):
        construct_first_cubis(g, d, 1, Clique(frozenset()))


def test_effective_topl_clamps():
    assert effective_topl((9, 7, 4, 2), 3, 5) == 2  # ladder[2] = 4 < 5
    assert effective_topl((9, 7, 4, 2), 3, 3) == 3
    assert effective_topl((9, 7), 5, 1) == 2  # clamp to ladder length
    assert effective_topl((3,), 1, 10) == 1  # floor at 1 even if value too small


def test_second_cubis_absent_for_single_ladder_value():
    g = complete_graph(4)
    d = compute_cores(g)
    made = construct_second_cubis(g, d, 1, Clique(frozenset({0, 1, 2, 3})), SolveConfig())
    assert made is None


def test_second_cubis_respects_incumbent_bound():
    # bands whose core value + 1 cannot beat the incumbent are dropped
    g = k5_plus_pendant()
    d = compute_cores(g)  # ladder (4, 1)
    made = construct_second_cubis(g, d, 1, Clique(frozenset({0, 1, 2, 3, 4})), SolveConfig())
    assert made is None


# ---------------------------------------------------------------- assess_node


def _band_setup(g, topl=1):
    d = compute_cores(g)
    return d


def test_assess_node_keeps_clique_members():
    # K4 below a denser K6 band: every K4 member survives the saturation test
    edges = []
    edges += [(u, v) for u in range(6) for v in range(u + 1, 6)]  # K6 on 0..5
    edges += [(u, v) for u in (6, 7, 8, 9) for v in (6, 7, 8, 9) if u < v]  # K4
    g = build_graph(edges)
    d = compute_cores(g)
    assert d.ladder == (5, 3)
    omega1 = 3  # pretend the first search only found a triangle
    for i in (6, 7, 8, 9):
        keep, high = assess_node(g, d, i, omega1, band_top=3, neighbor_floor=3)
        assert keep
        assert high == frozenset()


def test_assess_node_rejects_thin_neighborhoods():
    # |N_i| < omega1 - 1 cannot reach the saturation threshold
    g = build_graph([(0, 1), (1, 2), (2, 0), (2, 3)])
    d = compute_cores(g)
    keep, high = assess_node(g, d, 3, omega1=3, band_top=1, neighbor_floor=1)
    assert not keep
    assert high == frozenset()


def test_assess_node_prunes_only_true_negatives():
    # discarded nodes never belong to any clique larger than omega1
    for seed in range(40):
        rng = random.Random(seed)
        g = erdos_renyi(30, rng.uniform(0.2, 0.5), seed=6000 + seed)
        d = compute_cores(g)
        if len(d.ladder) < 2:
            continue
        maxima = all_maximum_cliques(g)
        omega = len(next(iter(maxima)))
        omega1 = omega - 1
        if omega1 < 2:
            continue
        below = [c for c in d.ladder[1:] if c + 1 > omega1]
        if not below:
            continue
        band_top, floor = below[0], below[-1]
        in_bigger_clique = set()
        for c in maxima:
            in_bigger_clique.update(c)
        for i in np.flatnonzero((d.core_of >= floor) & (d.core_of <= band_top)).tolist():
            keep, _ = assess_node(g, d, i, omega1, band_top, floor)
            if not keep:
                assert i not in in_bigger_clique


def test_mid_band_trap_regression():
    # the neighbor filter must use the lowest viable band value, not each
    # node's own core number; this instance separates the two choices
    g = mid_band_trap()
    assert len(brute_force_max_clique(g)) == 4
    for further in (True, False):
        for strict in (True, False):
            cfg = SolveConfig(strict_bounds=strict, further_pruning=further)
            assert solve(g, cfg).omega == 4


# ---------------------------------------------------------------- end to end


def test_two_disjoint_triangles():
    assert solve(two_triangles()).omega == 3


def test_empty_graph_report():
    r = solve(build_graph([]), network="nil")
    assert r.omega == 0
    assert r.clique_labels == []
    assert not r.cubis1.present and not r.cubis2.present


def test_single_node():
    assert solve(build_graph([("a", "a")])).omega == 1


def test_exactness_er_suite():
    for i in range(250):
        rng = random.Random(i)
        n = rng.randint(2, 36)
        p = rng.uniform(0.05, 0.3)
        g = erdos_renyi(n, p, seed=7000 + i)
        expected = len(brute_force_max_clique(g))
        got = solve(g)
        assert got.omega == expected, f"ER instance {i} (n={n}, p={p:.2f})"
        assert verify_clique(g, Clique(frozenset(got.clique_nodes)))


def test_exactness_pa_suite():
    for i in range(60):
        rng = random.Random(i)
        n = rng.randint(5, 200)
        g = preferential_attachment(n, mean_degree=rng.uniform(2, 8), seed=8000 + i)
        expected = len(reference_bk_max_clique(g))
        assert solve(g).omega == expected, f"PA instance {i} (n={n})"


def test_further_pruning_is_answer_preserving():
    for i in range(80):
        rng = random.Random(i)
        g = erdos_renyi(rng.randint(4, 30), rng.uniform(0.1, 0.45), seed=9000 + i)
        a = solve(g, SolveConfig(further_pruning=True)).omega
        b = solve(g, SolveConfig(further_pruning=False)).omega
        assert a == b


def test_strict_and_inclusive_bounds_agree_on_omega():
    for i in range(80):
        rng = random.Random(i)
        g = erdos_renyi(rng.randint(4, 30), rng.uniform(0.1, 0.45), seed=10000 + i)
        a = solve(g, SolveConfig(strict_bounds=True)).omega
        b = solve(g, SolveConfig(strict_bounds=False)).omega
        assert a == b


def test_topl_does_not_change_answer():
    for i in range(40):
        rng = random.Random(i)
        g = erdos_renyi(rng.randint(6, 32), rng.uniform(0.15, 0.45), seed=11000 + i)
        omegas = {solve(g, SolveConfig(topl=t)).omega for t in (1, 2, 4, 8)}
        assert len(omegas) == 1


def test_early_termination_is_sound():
    # whenever the run stops before the second subgraph, nothing bigger hides
    # in the parts it never searched
    checked = 0
    for i in range(120):
        rng = random.Random(i)
        g = erdos_renyi(rng.randint(4, 30), rng.uniform(0.1, 0.5), seed=12000 + i)
        r = solve(g)
        if not r.cubis2.present:
            checked += 1
            assert r.omega == len(brute_force_max_clique(g))
    assert checked > 10


def test_report_integrity():
    for i in range(30):
        g = erdos_renyi(25, 0.3, seed=13000 + i)
        r = solve(g, network=f"g{i}")
        assert r.omega == len(r.clique_nodes) == len(r.clique_labels)
        assert verify_clique(g, Clique(frozenset(r.clique_nodes)))
        assert r.omega <= compute_cores(g).ladder[0] + 1
        doc = r.to_json_dict()
        assert json.loads(json.dumps(doc)) == doc


def test_repeated_solves_identical():
    g = erdos_renyi(30, 0.3, seed=14000)
    a = solve(g, network="x").to_json_dict()
    b = solve(g, network="x").to_json_dict()
    a["core_seconds"] = b["core_seconds"] = 0
    a["total_seconds"] = b["total_seconds"] = 0
    a["cubis1"] and a["cubis1"].update(seconds=0)
    b["cubis1"] and b["cubis1"].update(seconds=0)
    a["cubis2"] and a["cubis2"].update(seconds=0)
    b["cubis2"] and b["cubis2"].update(seconds=0)
    assert a == b


def test_solve_labels_are_original():
    g = build_graph([("x", "y"), ("y", "z"), ("z", "x"), ("z", "w")])
    r = solve(g)
    assert r.omega == 3
    assert set(r.clique_labels) == {"x", "y", "z"}


def test_terminates_before_any_search_when_cores_are_weak():
    # heuristic finds K11 around the top hub; survivors of the degree prune
    # are 21 mutually non-adjacent hub nodes, so the core ladder collapses to
    # (0,) and the run ends right after peeling, with no search stage at all
    edges = []
    hub = "h"
    k10 = [f"k{i}" for i in range(10)]
    for i, a in enumerate(k10):
        edges.append((hub, a))
        for b in k10[i + 1 :]:
            edges.append((a, b))
    edges += [(hub, f"hleaf{i}") for i in range(40)]
    for c in range(20):
        edges += [(f"c{c}", f"c{c}leaf{i}") for i in range(15)]
    g = build_graph(edges)
    r = solve(g)
    assert r.omega == 11
    assert r.prune.heuristic_clique_size == 11
    assert not r.cubis1.present and not r.cubis2.present
    assert r.prune.pre_pruned_nodes == g.node_count - 21
    assert len(brute_force_max_clique(g, guard=g.node_count)) == 11


def test_skips_second_stage_when_bands_cannot_compete():
    # the heuristic only sees a triangle (the top-degree node sits in one),
    # the first-stage search finds the K8, and the remaining core band (the
    # triangle, core 2) cannot host anything bigger, so stage two is skipped
    edges = []
    k8 = [f"k{i}" for i in range(8)]
    for i, a in enumerate(k8):
        edges.append((a, f"kleaf{i}"))
        for b in k8[i + 1 :]:
            edges.append((a, b))
    tri = ["t0", "t1", "t2"]
    edges += [("t0", "t1"), ("t1", "t2"), ("t2", "t0")]
    for t in tri:
        edges += [(t, f"{t}leaf{i}") for i in range(7)]
    g = build_graph(edges)
    r = solve(g)
    assert r.prune.heuristic_clique_size == 3
    assert r.cubis1.present
    assert (r.cubis1.nodes, r.cubis1.edges) == (8, 28)
    assert not r.cubis2.present
    assert r.omega == 8


def _structured_instance(rng: random.Random):
    # blocky graphs (cliques, dense bipartite/multipartite blobs, stars,
    # wheels, ER patches, sparse overlay) stress the band logic far harder
    # than plain ER: dense clique-poor regions sit above small true cliques
    import itertools

    edges: list[tuple[int, int]] = []
    offset = 0

    def fresh(k: int) -> list[int]:
        nonlocal offset
        ids = list(range(offset, offset + k))
        offset += k
        return ids

    for _ in range(rng.randint(1, 4)):
        kind = rng.choice(["clique", "bipartite", "er", "star", "wheel", "kpartite"])
        if kind == "clique":
            edges += list(itertools.combinations(fresh(rng.randint(2, 12)), 2))
        elif kind == "bipartite":
            a, b = fresh(rng.randint(2, 8)), fresh(rng.randint(2, 8))
            edges += [(u, v) for u in a for v in b if rng.random() < 0.9]
        elif kind == "er":
            ids, p = fresh(rng.randint(3, 25)), rng.uniform(0.1, 0.7)
            edges += [(u, v) for u, v in itertools.combinations(ids, 2) if rng.random() < p]
        elif kind == "star":
            ids = fresh(rng.randint(3, 15))
            edges += [(ids[0], v) for v in ids[1:]]
        elif kind == "wheel":
            ids = fresh(rng.randint(4, 10))
            hub, rim = ids[0], ids[1:]
            edges += [(hub, v) for v in rim]
            edges += [(rim[i], rim[(i + 1) % len(rim)]) for i in range(len(rim))]
        else:
            parts = [fresh(rng.randint(1, 4)) for _ in range(rng.randint(2, 5))]
            for pa, pb in itertools.combinations(parts, 2):
                edges += [(u, v) for u in pa for v in pb]
    n = offset
    for _ in range(rng.randint(0, n)):
        edges.append((rng.randrange(n), rng.randrange(n)))
    for v in range(n):
        edges.append((v, v))  # register isolated ids; loops are dropped
    return build_graph(edges)


def test_exactness_structured_instances():
    configs = [
        SolveConfig(topl=t, strict_bounds=s, further_pruning=f)
        for t in (1, 2)
        for s in (True, False)
        for f in (True, False)
    ]
    for i in range(400):
        rng = random.Random(1_000_000 + i)
        g = _structured_instance(rng)
        expected = len(reference_bk_max_clique(g))
        for cfg in configs:
            assert solve(g, cfg).omega == expected, f"instance {i}, {cfg}"
