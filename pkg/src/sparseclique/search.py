"""Maximum-clique search: bound-pruned iterative Bron-Kerbosch plus oracles."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Iterator

import numpy as np

from .cores import CoreDecomposition
from .graph import Graph

BRUTE_FORCE_GUARD = 40


class BoundMode(Enum):
    """Which per-candidate upper bound drives the size prune.

    CORE_NUMBER uses precomputed core numbers (any clique through a node is at
    most its core number plus one). DEGREE falls back to the node's degree in
    the searched graph, for the pre-pruning phase where core numbers are not
    available yet.
    """

    CORE_NUMBER = "core_number"
    DEGREE = "degree"


@dataclass(frozen=True)
class Clique:
    """A node set certified pairwise-adjacent in the graph it was found in."""

    members: frozenset[int]

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[int]:
        return iter(sorted(self.members))


EMPTY_CLIQUE = Clique(frozenset())


def verify_clique(g: Graph, c: Clique | Iterable[int]) -> bool:
    """True iff every pair of members is adjacent in g."""
    members = sorted(c.members if isinstance(c, Clique) else c)
    for v in members:
        g.check_node(v)
    member_set = set(members)
    for v in members:
        hits = member_set.intersection(g.neighbors(v).tolist())
        if len(hits) != len(members) - 1:
            return False
    return True


def _pivot(candidates, degl: list[int]) -> int:
    # highest degree, lowest id on ties
    return max(candidates, key=lambda v: (degl[v], -v))


def search_max_clique(
    g: Graph,
    incumbent: Clique = EMPTY_CLIQUE,
    bound_mode: BoundMode = BoundMode.DEGREE,
    cores: CoreDecomposition | np.ndarray | None = None,
    *,
    _use_prunes: bool = True,
) -> Clique:
    """Iterative pivoting Bron-Kerbosch returning the largest clique of ``g``
    strictly bigger than the incumbent, or the incumbent itself if none exists.

    The walk keeps an explicit stack instead of recursing, so cliques of
    hundreds of nodes cannot hit the interpreter recursion limit. Per level it
    tracks U (every node adjacent to the whole current clique), A (the not yet
    processed subset of U) and P (the members of A outside the pivot's
    neighborhood, consumed in ascending id order). Two prunes cut branches:
    a candidate whose bound value plus one is below the incumbent size can be
    skipped outright, and a branch whose U-extension plus current depth cannot
    reach the incumbent size is abandoned. The incumbent is updated the moment
    the current clique strictly exceeds it.

    ``cores`` must be supplied (a CoreDecomposition aligned with g, or a plain
    per-node value array) iff ``bound_mode`` is CORE_NUMBER. ``_use_prunes``
    exists for harmlessness tests only.
    """
    n = g.node_count
    best_size = len(incumbent)
    if n == 0 or n <= best_size:
        return incumbent

    if bound_mode is BoundMode.CORE_NUMBER:
        if cores is None:
            raise ValueError("bound_mode=CORE_NUMBER requires core numbers")
        bound = getattr(cores, "core_of", cores)
        bound = np.asarray(bound).tolist()
        if len(bound) != n:
            raise ValueError("core numbers not aligned with graph nodes")
    else:
        bound = g.degrees().tolist()

    adj = g.neighbor_sets()
    degl = g.degrees().tolist()

    best: list[int] | None = None
    U = set(range(n))
    A = set(range(n))
    u = _pivot(U, degl)
    P = sorted(A - adj[u], reverse=True)  # list.pop() yields ascending ids
    Q: list[int | None] = [None]
    stack: list[tuple[set[int], set[int], list[int]]] = []

    while True:
        if P:
            q = P.pop()
            A.remove(q)
            if _use_prunes and bound[q] + 1 < best_size:
                continue
            Q[-1] = q
            uq = U & adj[q]
            if _use_prunes and len(uq) + len(Q) < best_size:
                continue
            if len(Q) > best_size:
                best_size = len(Q)
                best = list(Q)  # type: ignore[arg-type]
            aq = A & adj[q]
            if aq:
                stack.append((U, A, P))
                Q.append(None)
                U = uq
                A = aq
                u = _pivot(U, degl)
                P = sorted(aq - adj[u], reverse=True)
        else:
            Q.pop()
            if stack:
                U, A, P = stack.pop()
            else:
                break

    if best is None:
        return incumbent
    return Clique(frozenset(best))


def reference_bk_max_clique(g: Graph) -> Clique:
    """Recursive Bron-Kerbosch baseline: max-degree pivot, size cutoff only.

    No core-number prune; serves as an independent cross-check and as the
    benchmark opponent for runtime comparisons.
    """
    n = g.node_count
    if n == 0:
        return EMPTY_CLIQUE
    adj = g.neighbor_sets()
    degl = g.degrees().tolist()
    best: list[int] = []

    def expand(current: list[int], cand: set[int]) -> None:
        nonlocal best
        if len(current) + len(cand) <= len(best):
            return
        if not cand:
            return
        u = _pivot(cand, degl)
        for q in sorted(cand - adj[u]):
            cand.discard(q)
            current.append(q)
            if len(current) > len(best):
                best = current.copy()
            expand(current, cand & adj[q])
            current.pop()

    expand([], set(range(n)))
    return Clique(frozenset(best))


def brute_force_max_clique(g: Graph, guard: int = BRUTE_FORCE_GUARD) -> Clique:
    """Exhaustive enumeration of all cliques; the testing oracle.

    Refuses graphs above ``guard`` nodes: the point is an implementation so
    simple it is obviously correct, not one that scales.
    """
    n = g.node_count
    if n > guard:
        raise ValueError(f"brute force refused: {n} nodes exceeds guard {guard}")
    if n == 0:
        return EMPTY_CLIQUE
    adj = g.neighbor_sets()
    best: list[int] = [0]

    def extend(current: list[int], cand: list[int]) -> None:
        nonlocal best
        if len(current) > len(best):
            best = current.copy()
        for k, v in enumerate(cand):
            extend(current + [v], [w for w in cand[k + 1 :] if w in adj[v]])

    extend([], list(range(n)))
    return Clique(frozenset(best))
