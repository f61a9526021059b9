"""Seeded random-graph generators for tests and scaling runs."""

from __future__ import annotations

import random

from .graph import Graph, from_edge_arrays


def erdos_renyi(n: int, p: float, seed: int = 0) -> Graph:
    """G(n, p) with a fixed seed; intended for small oracle-checked instances."""
    rng = random.Random(seed)
    us: list[int] = []
    vs: list[int] = []
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                us.append(u)
                vs.append(v)
    return from_edge_arrays(n, us, vs)


def preferential_attachment(n: int, mean_degree: float = 8.0, seed: int = 0) -> Graph:
    """Growing network with degree-proportional attachment and a fixed seed.

    Each new node attaches to a uniform 1..k count of distinct existing nodes
    (k chosen so the mean degree lands near ``mean_degree``), picked from a
    degree-weighted pool. The varying attachment count spreads core numbers
    across many values, unlike the constant-attachment model whose core
    structure is flat.
    """
    rng = random.Random(seed)
    kmax = max(1, round(mean_degree) - 1)
    m0 = min(kmax + 1, n)
    us: list[int] = []
    vs: list[int] = []
    pool: list[int] = []
    for v in range(1, m0):
        us.append(v - 1)
        vs.append(v)
        pool.append(v - 1)
        pool.append(v)
    if n > 0 and not pool:
        pool.append(0)
    for v in range(m0, n):
        k = rng.randint(1, kmax)
        targets: set[int] = set()
        while len(targets) < min(k, v):
            targets.add(rng.choice(pool))
        for t in targets:
            us.append(v)
            vs.append(t)
            pool.append(v)
            pool.append(t)
    return from_edge_arrays(n, us, vs)
