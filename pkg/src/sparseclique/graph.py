"""Immutable simple undirected graph with CSR adjacency and subgraph extraction."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Hashable, Iterable, Sequence

import numpy as np

Label = Hashable


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph over dense node ids ``[0, n)``.

    Adjacency is CSR-style: ``indices[indptr[v]:indptr[v+1]]`` is the strictly
    increasing, duplicate-free neighbor list of ``v``. Sorted rows let set
    intersections run as linear merges, and arrays keep per-node state cheap on
    multi-million-node inputs. Instances are treated as immutable after
    construction; "pruning" always means building a new induced subgraph
    together with a back-mapping to the parent's ids.
    """

    indptr: np.ndarray
    indices: np.ndarray
    labels: tuple | None = None

    @property
    def node_count(self) -> int:
        return len(self.indptr) - 1

    @property
    def edge_count(self) -> int:
        return len(self.indices) // 2

    def check_node(self, v: int) -> None:
        if not 0 <= v < self.node_count:
            raise ValueError(f"unknown node id {v} (graph has {self.node_count} nodes)")

    def neighbors(self, v: int) -> np.ndarray:
        self.check_node(v)
        return self.indices[self.indptr[v] : self.indptr[v + 1]]

    def degrees(self) -> np.ndarray:
        return np.diff(self.indptr)

    def neighbor_sets(self) -> list[frozenset[int]]:
        """Per-node neighbor sets; convenient for search on small graphs."""
        ip = self.indptr
        idx = self.indices
        return [frozenset(idx[ip[v] : ip[v + 1]].tolist()) for v in range(self.node_count)]

    def label_of(self, v: int):
        return self.labels[v] if self.labels is not None else v

    def validate(self) -> None:
        """Assert structural invariants (symmetry, sortedness, no loops)."""
        n = self.node_count
        assert self.indptr[0] == 0 and self.indptr[-1] == len(self.indices)
        assert len(self.indices) % 2 == 0
        for v in range(n):
            row = self.neighbors(v)
            assert np.all(np.diff(row) > 0), f"row {v} not strictly increasing"
            assert v not in row, f"self-loop at {v}"
            for u in row.tolist():
                assert v in self.neighbors(u), f"edge ({v},{u}) not symmetric"


def _csr_from_pairs(n: int, us: np.ndarray, vs: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Symmetrize, sort, and deduplicate raw (u, v) pairs into CSR arrays."""
    if len(us) == 0:
        return np.zeros(n + 1, dtype=np.int64), np.zeros(0, dtype=np.int32)
    bu = np.concatenate([us, vs])
    bv = np.concatenate([vs, us])
    order = np.lexsort((bv, bu))
    bu = bu[order]
    bv = bv[order]
    keep = np.ones(len(bu), dtype=bool)
    keep[1:] = (bu[1:] != bu[:-1]) | (bv[1:] != bv[:-1])
    bu = bu[keep]
    bv = bv[keep]
    counts = np.bincount(bu, minlength=n)
    indptr = np.zeros(n + 1, dtype=np.int64)
    np.cumsum(counts, out=indptr[1:])
    return indptr, bv.astype(np.int32)


def from_edge_arrays(n: int, us, vs, labels: tuple | None = None) -> Graph:
    """Build a Graph from parallel endpoint arrays over ids already in [0, n).

    Self-loops are dropped and parallel edges collapsed. Fast path used by the
    file loaders and the synthetic generators.
    """
    us = np.asarray(us, dtype=np.int64)
    vs = np.asarray(vs, dtype=np.int64)
    nonloop = us != vs
    us = us[nonloop]
    vs = vs[nonloop]
    indptr, indices = _csr_from_pairs(n, us, vs)
    return Graph(indptr, indices, labels)


def build_graph(edge_pairs: Iterable[tuple[Label, Label]]) -> Graph:
    """Build a Graph from (label, label) pairs with arbitrary hashable labels.

    Labels are remapped to dense ids in first-appearance order (left endpoint
    before right); the original labels are retained. Self-loops are dropped
    (the node itself is still registered) and parallel edges collapsed.
    """
    ids: dict[Label, int] = {}
    us: list[int] = []
    vs: list[int] = []
    for a, b in edge_pairs:
        ia = ids.setdefault(a, len(ids))
        ib = ids.setdefault(b, len(ids))
        if ia != ib:
            us.append(ia)
            vs.append(ib)
    return from_edge_arrays(len(ids), us, vs, labels=tuple(ids))


def induced_subgraph(g: Graph, nodes: Sequence[int] | np.ndarray) -> tuple[Graph, np.ndarray]:
    """Induced subgraph over ``nodes`` plus the back-mapping to g's ids.

    The returned graph keeps exactly the requested nodes and every edge of g
    with both endpoints inside the set; ids are re-densified in ascending
    order of the original ids, so ``mapping[new_id] == old_id``.
    """
    nodes = np.unique(np.asarray(list(nodes) if isinstance(nodes, (set, frozenset)) else nodes, dtype=np.int64))
    k = len(nodes)
    if k and (nodes[0] < 0 or nodes[-1] >= g.node_count):
        bad = nodes[0] if nodes[0] < 0 else nodes[-1]
        raise ValueError(f"unknown node id {bad} (graph has {g.node_count} nodes)")
    lookup = np.full(g.node_count, -1, dtype=np.int64)
    lookup[nodes] = np.arange(k)
    starts = g.indptr[nodes]
    counts = (g.indptr[nodes + 1] - starts).astype(np.int64)
    total = int(counts.sum())
    if total:
        # flatten all adjacency slices of the kept nodes in one gather
        row_of = np.repeat(np.arange(k), counts)
        offsets = np.arange(total) - np.repeat(np.cumsum(counts) - counts, counts)
        nbrs = g.indices[np.repeat(starts, counts) + offsets]
        new_cols = lookup[nbrs]
        mask = new_cols >= 0
        row_of = row_of[mask]
        new_cols = new_cols[mask]
    else:
        row_of = np.zeros(0, dtype=np.int64)
        new_cols = np.zeros(0, dtype=np.int64)
    indptr = np.zeros(k + 1, dtype=np.int64)
    np.cumsum(np.bincount(row_of, minlength=k), out=indptr[1:])
    labels = tuple(g.labels[i] for i in nodes.tolist()) if g.labels is not None else None
    return Graph(indptr, new_cols.astype(np.int32), labels), nodes


def closed_neighborhood_subgraph(g: Graph, v: int) -> tuple[Graph, np.ndarray]:
    """Induced subgraph over ``{v} ∪ adj(v)`` plus the id back-mapping."""
    g.check_node(v)
    nodes = np.union1d(g.neighbors(v).astype(np.int64), [v])
    return induced_subgraph(g, nodes)


def degree(g: Graph, v: int) -> int:
    g.check_node(v)
    return int(g.indptr[v + 1] - g.indptr[v])
