"""FastAPI service wrapping the solver; the CLI shares its handler functions.

Loaded graphs are cached by path and modification time, so a long-running
service answers repeated solves (topL sweeps, config comparisons) on the same
network without re-parsing the file.
"""

from __future__ import annotations

import os
import time
from collections import OrderedDict

from fastapi import FastAPI, HTTPException

from . import bench as benchmod
from .cores import clique_upper_bound, compute_cores
from .graph import Graph
from .ingest import EdgeListSource, ParseError, load_graph
from .schemas import (
    BaselineModel,
    BenchRequest,
    BenchResponse,
    BenchRowModel,
    CoresRequest,
    CoresResponse,
    OracleRequest,
    OracleResponse,
    RunReportModel,
    SolveRequest,
)
from .search import brute_force_max_clique, reference_bk_max_clique
from .solver import InvariantError, SolveConfig, solve

_CACHE_SLOTS = 8
_graph_cache: OrderedDict[tuple[str, float, int], Graph] = OrderedDict()


def _load_cached(path: str, fmt: str | None) -> Graph:
    try:
        st = os.stat(path)
    except OSError as exc:
        raise FileNotFoundError(str(exc)) from exc
    key = (os.path.realpath(path), st.st_mtime, st.st_size)
    g = _graph_cache.get(key)
    if g is None:
        g = load_graph(EdgeListSource(path, fmt))
        _graph_cache[key] = g
        while len(_graph_cache) > _CACHE_SLOTS:
            _graph_cache.popitem(last=False)
    else:
        _graph_cache.move_to_end(key)
    return g


def handle_solve(req: SolveRequest) -> RunReportModel:
    g = _load_cached(req.path, req.format)
    cfg = SolveConfig(
        topl=req.topl,
        strict_bounds=req.strict_bounds,
        further_pruning=req.further_pruning,
    )
    report = solve(g, cfg, network=os.path.basename(req.path))
    baseline = None
    if req.baseline:
        t0 = time.perf_counter()
        ref = reference_bk_max_clique(g)
        baseline = BaselineModel(omega=len(ref), seconds=round(time.perf_counter() - t0, 3))
    return RunReportModel.from_report(report, baseline)


def handle_cores(req: CoresRequest) -> CoresResponse:
    g = _load_cached(req.path, req.format)
    d = compute_cores(g)
    counts = {c: len(d.nodes_by_core[c]) for c in d.ladder}
    return CoresResponse(
        n=g.node_count,
        m=g.edge_count,
        c_max=d.ladder[0] if d.ladder else 0,
        clique_upper_bound=clique_upper_bound(d),
        ladder=list(d.ladder),
        counts=counts,
    )


def handle_oracle(req: OracleRequest) -> OracleResponse:
    g = _load_cached(req.path, req.format)
    c = brute_force_max_clique(g, guard=req.guard)
    return OracleResponse(omega=len(c), clique=[g.label_of(v) for v in c])


def handle_bench(req: BenchRequest) -> BenchResponse:
    manifest = benchmod.load_manifest(req.manifest_path)
    cfg = SolveConfig(
        topl=req.topl if req.topl is not None else manifest.defaults.topl,
        strict_bounds=req.strict_bounds
        if req.strict_bounds is not None
        else manifest.defaults.strict_bounds,
        further_pruning=req.further_pruning
        if req.further_pruning is not None
        else manifest.defaults.further_pruning,
    )
    rows = benchmod.run_bench(manifest, sweep_topl=req.sweep_topl, config=cfg)
    models = []
    for row in rows:
        models.append(
            BenchRowModel(
                network=row.name,
                topl=row.topl,
                report=RunReportModel.from_report(row.report) if row.report else None,
                error=row.error,
                mismatches=row.mismatches,
            )
        )
    return BenchResponse(rows=models, exit_code=benchmod.exit_code(rows))


app = FastAPI(title="sparseclique", version="0.1.0")


def _wrap(fn, req):
    try:
        return fn(req)
    except FileNotFoundError as exc:
        raise HTTPException(status_code=404, detail=str(exc)) from exc
    except ParseError as exc:
        raise HTTPException(status_code=400, detail=str(exc)) from exc
    except InvariantError as exc:
        raise HTTPException(status_code=500, detail=str(exc)) from exc
    except ValueError as exc:
        raise HTTPException(status_code=400, detail=str(exc)) from exc
    except OSError as exc:
        raise HTTPException(status_code=404, detail=str(exc)) from exc


@app.get("/healthz")
def healthz() -> dict:
    return {"status": "ok"}


@app.post("/solve", response_model=RunReportModel, response_model_exclude_none=False)
def solve_endpoint(req: SolveRequest) -> RunReportModel:
    return _wrap(handle_solve, req)


@app.post("/cores", response_model=CoresResponse)
def cores_endpoint(req: CoresRequest) -> CoresResponse:
    return _wrap(handle_cores, req)


@app.post("/oracle", response_model=OracleResponse)
def oracle_endpoint(req: OracleRequest) -> OracleResponse:
    return _wrap(handle_oracle, req)


@app.post("/bench", response_model=BenchResponse)
def bench_endpoint(req: BenchRequest) -> BenchResponse:
    return _wrap(handle_bench, req)
