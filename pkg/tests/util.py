"""Shared test helpers: independent oracles and small named graphs."""

from __future__ import annotations

import itertools

from sparseclique import Graph, build_graph


def naive_core_numbers(g: Graph) -> list[int]:
    """Fixpoint core oracle: for each k, repeatedly delete nodes with fewer
    than k alive neighbors; survivors of round k have core >= k."""
    n = g.node_count
    adj = [set(g.neighbors(v).tolist()) for v in range(n)]
    core = [0] * n
    for k in range(n + 2):
        alive = set(range(n))
        changed = True
        while changed:
            changed = False
            for v in sorted(alive):
                if len(adj[v] & alive) < k:
                    alive.discard(v)
                    changed = True
        for v in alive:
            core[v] = k
        if not alive:
            break
    return core


def all_maximum_cliques(g: Graph) -> list[frozenset[int]]:
    """Every clique of maximum size, by exhaustive enumeration (small n only)."""
    n = g.node_count
    if n == 0:
        return [frozenset()]
    adj = [set(g.neighbors(v).tolist()) for v in range(n)]
    best: list[list[int]] = [[0]]

    def extend(cur: list[int], cand: list[int]) -> None:
        if len(cur) > len(best[0]):
            best.clear()
            best.append(cur.copy())
        elif cur and len(cur) == len(best[0]) and cur != best[0]:
            best.append(cur.copy())
        for i, v in enumerate(cand):
            extend(cur + [v], [w for w in cand[i + 1 :] if w in adj[v]])

    extend([], list(range(n)))
    return [frozenset(c) for c in best]


def complete_graph(n: int) -> Graph:
    return build_graph(itertools.combinations(range(n), 2))


def path_graph(n: int) -> Graph:
    return build_graph((i, i + 1) for i in range(n - 1))


def star_graph(leaves: int) -> Graph:
    return build_graph(("c", i) for i in range(leaves))


def k5_plus_pendant() -> Graph:
    """K5 on 0..4 with a pendant node 5 attached to node 0."""
    edges = list(itertools.combinations(range(5), 2)) + [(0, 5)]
    return build_graph(edges)


def two_triangles() -> Graph:
    return build_graph([(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)])


def mid_band_trap() -> Graph:
    """Adversarial instance for the mid-band saturation filter.

    A complete bipartite K5,5 (nodes 0-9) forms a clique-poor top core band;
    the unique maximum clique is the K4 on 10-13, whose node 10 is lifted one
    core value above its clique-mates by an attached K4,4 (14-21); a star
    around 22 steers the pre-pruning heuristic toward a size-2 clique. A
    neighbor filter keyed on each node's own core number discards node 10 here
    and reports omega 3 instead of 4.
    """
    edges: list[tuple[int, int]] = []
    edges += [(u, v) for u in range(0, 5) for v in range(5, 10)]
    edges += list(itertools.combinations([10, 11, 12, 13], 2))
    edges += [(u, v) for u in range(14, 18) for v in range(18, 22)]
    edges += [(10, v) for v in range(18, 22)]
    edges += [(22, leaf) for leaf in range(23, 31)]
    return build_graph(edges)
