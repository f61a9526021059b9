"""Linear-time k-core decomposition by bucketed minimum-degree peeling."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .graph import Graph


@dataclass(frozen=True)
class CoreDecomposition:
    """Per-node core numbers plus the descending ladder of distinct values.

    ``ladder[0]`` is the degeneracy c_max; ``nodes_by_core[c]`` lists the nodes
    whose core number is exactly c. The ladder stores distinct values (not the
    per-node multiset): threshold tests like "core at least the t-th largest
    value" only depend on distinct values, and the buckets make core-guided
    subgraph construction proportional to the selected nodes.
    """

    core_of: np.ndarray
    ladder: tuple[int, ...]
    nodes_by_core: dict[int, np.ndarray]


def compute_cores(g: Graph) -> CoreDecomposition:
    """Core number of every node via bucket peeling (bin sort by degree).

    Repeatedly removes a minimum-degree node; the degree at removal time is
    its core number. Buckets keep the whole pass O(n + m). Ties at equal
    minimum degree break toward the lowest node id (core numbers are
    tie-independent; the fixed order just makes traces reproducible).
    """
    n = g.node_count
    if n == 0:
        return CoreDecomposition(np.zeros(0, dtype=np.int32), (), {})
    deg = g.degrees().astype(np.int64)
    order = np.argsort(deg, kind="stable")
    sorted_deg = deg[order]
    max_deg = int(sorted_deg[-1])
    # bin_ptr[d] = position in `vert` of the first node whose current degree is d
    bin_ptr = np.searchsorted(sorted_deg, np.arange(max_deg + 1), side="left").tolist()

    vert = order.tolist()
    pos = np.empty(n, dtype=np.int64)
    pos[order] = np.arange(n)
    pos = pos.tolist()
    degl = deg.tolist()
    core = [0] * n
    indptr = g.indptr.tolist()
    indices = g.indices

    for i in range(n):
        v = vert[i]
        cv = degl[v]
        core[v] = cv
        for w in indices[indptr[v] : indptr[v + 1]].tolist():
            dw = degl[w]
            if dw > cv:
                # swap w with the first node of its bucket, then shrink the bucket
                pw = pos[w]
                bs = bin_ptr[dw]
                u = vert[bs]
                if u != w:
                    vert[bs] = w
                    vert[pw] = u
                    pos[w] = bs
                    pos[u] = pw
                bin_ptr[dw] = bs + 1
                degl[w] = dw - 1

    core_arr = np.asarray(core, dtype=np.int32)
    distinct = np.unique(core_arr)[::-1]
    ladder = tuple(int(c) for c in distinct)
    nodes_by_core = {int(c): np.flatnonzero(core_arr == c) for c in ladder}
    return CoreDecomposition(core_arr, ladder, nodes_by_core)


def nodes_with_core_at_least(d: CoreDecomposition, c: int) -> set[int]:
    """Exactly the nodes whose core number is >= c (empty set above c_max)."""
    return set(np.flatnonzero(d.core_of >= c).tolist())


def clique_upper_bound(d: CoreDecomposition) -> int:
    """Upper bound on the maximum clique size: degeneracy plus one.

    Any clique inside a k-core has at most k + 1 nodes, so no clique can
    exceed c_max + 1. Returns 0 for an empty decomposition.
    """
    if not d.ladder:
        return 0
    return d.ladder[0] + 1
