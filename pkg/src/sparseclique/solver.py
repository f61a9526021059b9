"""Core-guided decomposition pipeline for exact maximum-clique solving.

The pipeline prunes peripheral nodes against a heuristic clique, then confines
the search to at most two small induced subgraphs chosen by core number: the
first over the top core-value band, the second over the mid band that could
still host something larger, shrunk further by a per-node saturation test.
Early exits fire whenever the incumbent provably dominates what remains.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

import numpy as np

from .cores import CoreDecomposition, compute_cores
from .graph import Graph, closed_neighborhood_subgraph, induced_subgraph
from .search import BoundMode, Clique, EMPTY_CLIQUE, search_max_clique, verify_clique


class InvariantError(RuntimeError):
    """A solver self-check failed; results must not be trusted."""


@dataclass(frozen=True)
class SolveConfig:
    topl: int = 1
    strict_bounds: bool = True
    further_pruning: bool = True
    oracle_guard: int = 40

    def __post_init__(self) -> None:
        if self.topl < 1:
            raise ValueError("topl must be >= 1")


@dataclass
class PruneStats:
    pre_pruned_nodes: int = 0
    heuristic_clique_size: int = 0


@dataclass
class CubisStats:
    nodes: int = 0
    edges: int = 0
    seconds: float = 0.0
    present: bool = False


@dataclass
class RunReport:
    network: str
    n: int
    m: int
    prune: PruneStats
    cubis1: CubisStats
    cubis2: CubisStats
    omega: int
    clique_nodes: tuple[int, ...]
    clique_labels: list
    core_seconds: float
    total_seconds: float
    config: SolveConfig

    def to_json_dict(self) -> dict:
        """Stable wire format; field names and order are part of the contract."""

        def cubis(c: CubisStats):
            if not c.present:
                return None
            return {"nodes": c.nodes, "edges": c.edges, "seconds": round(c.seconds, 3)}

        return {
            "network": self.network,
            "n": self.n,
            "m": self.m,
            "pre_pruned_nodes": self.prune.pre_pruned_nodes,
            "heuristic_clique_size": self.prune.heuristic_clique_size,
            "cubis1": cubis(self.cubis1),
            "cubis2": cubis(self.cubis2),
            "omega": self.omega,
            "clique": list(self.clique_labels),
            "core_seconds": round(self.core_seconds, 3),
            "total_seconds": round(self.total_seconds, 3),
            "config": {
                "topl": self.config.topl,
                "strict_bounds": self.config.strict_bounds,
                "further_pruning": self.config.further_pruning,
            },
        }


def pre_prune(g: Graph) -> tuple[Graph, Clique, PruneStats, np.ndarray]:
    """Remove peripheral nodes that cannot beat a heuristically found clique.

    Searches the closed neighborhood of the maximum-degree node (lowest id on
    ties) for its maximum clique M, then keeps only nodes of degree >= |M|:
    every member of a clique strictly larger than M has at least |M| neighbors,
    so nothing better is lost. Returns the residual graph, M mapped back to
    g's ids, the prune counts, and the node back-mapping.
    """
    if g.node_count == 0:
        raise ValueError("cannot pre-prune an empty graph")
    deg = g.degrees()
    hub = int(np.argmax(deg))
    gpre, pre_map = closed_neighborhood_subgraph(g, hub)
    center_local = int(np.searchsorted(pre_map, hub))
    seed = Clique(frozenset([center_local]))
    found = search_max_clique(gpre, seed, BoundMode.DEGREE)
    heuristic = Clique(frozenset(int(pre_map[v]) for v in found.members))
    keep = np.flatnonzero(deg >= len(heuristic))
    residual, back = induced_subgraph(g, keep)
    stats = PruneStats(
        pre_pruned_nodes=g.node_count - len(keep),
        heuristic_clique_size=len(heuristic),
    )
    return residual, heuristic, stats, back


def effective_topl(ladder: tuple[int, ...], topl: int, incumbent_size: int) -> int:
    """Clamp the requested band width so its lowest core value stays a valid
    clique bound: the largest t <= topl with ladder[t-1] >= incumbent size,
    falling back to 1 when even the top value is below it."""
    t = min(topl, len(ladder))
    while t > 1 and ladder[t - 1] < incumbent_size:
        t -= 1
    return max(t, 1)


def construct_first_cubis(
    gp: Graph, d: CoreDecomposition, topl: int, incumbent: Clique
) -> tuple[Graph, np.ndarray]:
    """Induced subgraph over the nodes in the top ``topl`` core-value bands.

    With topl=1 this is exactly the c_max-core. Returns the subgraph plus the
    node back-mapping into ``gp``.
    """
    if not d.ladder:
        raise ValueError("empty core ladder")
    t = effective_topl(d.ladder, topl, len(incumbent))
    threshold = d.ladder[t - 1]
    w = np.flatnonzero(d.core_of >= threshold)
    return induced_subgraph(gp, w)


class _LazyNeighborSets:
    """Neighbor sets materialized on demand; avoids touching the whole graph."""

    def __init__(self, g: Graph):
        self._g = g
        self._cache: dict[int, frozenset[int]] = {}

    def __getitem__(self, v: int) -> frozenset[int]:
        s = self._cache.get(v)
        if s is None:
            s = frozenset(self._g.neighbors(v).tolist())
            self._cache[v] = s
        return s


def assess_node(
    gp: Graph,
    d: CoreDecomposition,
    i: int,
    omega1: int,
    band_top: int,
    neighbor_floor: int,
    *,
    adjacency: _LazyNeighborSets | None = None,
    degrees: np.ndarray | None = None,
) -> tuple[bool, frozenset[int]]:
    """Cheap necessary-condition test: can mid-band node ``i`` sit in a clique
    strictly larger than ``omega1``?

    Collects N_i, the neighbors of i with core number >= ``neighbor_floor``
    (the smallest core value that can host such a clique), visits them in
    ascending degree order, and counts how many share at least omega1 - 1
    common neighbors with N_i (Sat) versus not (Unsat). Once Sat exceeds
    omega1 - 1 the node survives; once Unsat exceeds |N_i| - (omega1 - 1) the
    Sat threshold has become unreachable and the node is discarded, as it is
    when the scan ends without Sat crossing. Survivors also report their
    neighbors with core number above ``band_top``, which must follow them into
    the second search graph. The counters make membership order-independent;
    the ascending-degree order only helps the early stops fire sooner.
    """
    if adjacency is None:
        adjacency = _LazyNeighborSets(gp)
    if degrees is None:
        degrees = gp.degrees()
    nb = gp.neighbors(i)
    ni = nb[d.core_of[nb] >= neighbor_floor].tolist()
    ni_set = frozenset(ni)
    ni.sort(key=lambda j: (int(degrees[j]), j))

    sat = 0
    unsat = 0
    unsat_limit = len(ni) - (omega1 - 1)
    keep = False
    for j in ni:
        if len(ni_set & adjacency[j]) > omega1 - 2:
            sat += 1
            if sat > omega1 - 1:
                keep = True
                break
        else:
            unsat += 1
            if unsat > unsat_limit:
                break
    if not keep:
        return False, frozenset()
    high = nb[d.core_of[nb] > band_top]
    return True, frozenset(high.tolist())


def construct_second_cubis(
    gp: Graph,
    d: CoreDecomposition,
    topl: int,
    incumbent: Clique,
    cfg: SolveConfig,
) -> tuple[Graph, np.ndarray] | None:
    """Build the mid-band search graph, or None when no band can beat the
    incumbent.

    H holds the core values below the first band that still admit a larger
    clique (c + 1 > |incumbent|). Band nodes pass through assess_node unless
    further pruning is disabled, in which case the whole band plus its
    above-band neighbors is taken. The result is the induced subgraph over the
    kept nodes and the qualifying high-core neighbors of the kept band nodes.
    """
    msize = len(incumbent)
    below = d.ladder[topl:]
    h = [c for c in below if c + 1 > msize]
    if not h:
        return None
    band_top, floor = h[0], h[-1]
    core = d.core_of
    band = np.flatnonzero((core >= floor) & (core <= band_top))
    keep: set[int] = set()
    if cfg.further_pruning:
        adjacency = _LazyNeighborSets(gp)
        degrees = gp.degrees()
        for i in band.tolist():
            ok, high = assess_node(
                gp, d, i, msize, band_top, floor, adjacency=adjacency, degrees=degrees
            )
            if ok:
                keep.add(i)
                keep.update(high)
    else:
        keep.update(band.tolist())
        for i in band.tolist():
            nb = gp.neighbors(i)
            keep.update(nb[core[nb] > band_top].tolist())
    return induced_subgraph(gp, np.fromiter(keep, dtype=np.int64, count=len(keep)))


def _remap(members: frozenset[int], *maps: np.ndarray) -> frozenset[int]:
    out = members
    for m in maps:
        out = frozenset(int(m[v]) for v in out)
    return out


def solve(g: Graph, cfg: SolveConfig = SolveConfig(), network: str = "") -> RunReport:
    """Run the full pipeline and return the per-run report.

    Reported per-phase timings cover construction plus search of each small
    subgraph; core decomposition is timed separately and ingestion is not
    timed at all, matching how such runs are usually accounted.
    """

    def dominates(size: int, bound: int) -> bool:
        return size > bound if cfg.strict_bounds else size >= bound

    n, m = g.node_count, g.edge_count
    prune_stats = PruneStats()
    cubis1 = CubisStats()
    cubis2 = CubisStats()
    core_seconds = 0.0
    best = EMPTY_CLIQUE

    if n > 0:
        residual, best, prune_stats, back = pre_prune(g)
        if not dominates(len(best), residual.node_count):
            t0 = time.perf_counter()
            decomp = compute_cores(residual)
            core_seconds = time.perf_counter() - t0
            if not dominates(len(best), decomp.ladder[0] + 1):
                t1 = time.perf_counter()
                teff = effective_topl(decomp.ladder, cfg.topl, len(best))
                g1, map1 = construct_first_cubis(residual, decomp, teff, best)
                found = search_max_clique(
                    g1, best, BoundMode.CORE_NUMBER, cores=decomp.core_of[map1]
                )
                if len(found) > len(best):
                    best = Clique(_remap(found.members, map1, back))
                cubis1 = CubisStats(
                    g1.node_count, g1.edge_count, time.perf_counter() - t1, True
                )
                below = decomp.ladder[teff:]
                if below and not dominates(len(best), below[0] + 1):
                    t2 = time.perf_counter()
                    made = construct_second_cubis(residual, decomp, teff, best, cfg)
                    if made is not None:
                        g2, map2 = made
                        found = search_max_clique(
                            g2, best, BoundMode.CORE_NUMBER, cores=decomp.core_of[map2]
                        )
                        if len(found) > len(best):
                            best = Clique(_remap(found.members, map2, back))
                        cubis2 = CubisStats(
                            g2.node_count, g2.edge_count, time.perf_counter() - t2, True
                        )

    members = sorted(best.members)
    if members and not verify_clique(g, best):
        raise InvariantError("solver produced a non-clique; aborting")
    labels = [g.label_of(v) for v in members]
    return RunReport(
        network=network,
        n=n,
        m=m,
        prune=prune_stats,
        cubis1=cubis1,
        cubis2=cubis2,
        omega=len(best),
        clique_nodes=tuple(members),
        clique_labels=labels,
        core_seconds=core_seconds,
        total_seconds=cubis1.seconds + cubis2.seconds,
        config=cfg,
    )
