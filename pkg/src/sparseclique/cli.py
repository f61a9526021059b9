"""Command-line front end: a thin client over the service handler layer.

By default every subcommand runs in-process. With ``--server URL`` the same
request is POSTed to a running service instead, and the response is rendered
identically.

Exit codes: 0 all good, 1 usage or I/O failure, 2 golden-expectation mismatch,
3 internal invariant breach.
"""

from __future__ import annotations

import argparse
import json
import sys

from .bench import EXIT_INVARIANT, EXIT_IO, EXIT_OK
from .ingest import ParseError
from .schemas import (
    BenchRequest,
    BenchResponse,
    CoresRequest,
    CoresResponse,
    OracleRequest,
    OracleResponse,
    RunReportModel,
    SolveRequest,
)
from .solver import InvariantError


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sparseclique",
        description="Exact maximum-clique solver for large sparse graphs.",
    )
    parser.add_argument("--server", metavar="URL", help="send the request to a running service")
    sub = parser.add_subparsers(dest="command", required=True)

    p_solve = sub.add_parser("solve", help="find the maximum clique of one network")
    p_solve.add_argument("path")
    p_solve.add_argument("--topl", type=int, default=1)
    p_solve.add_argument("--format", choices=["edges", "mtx"], default=None)
    p_solve.add_argument("--json", action="store_true", help="emit a machine-readable report")
    p_solve.add_argument(
        "--inclusive-bounds",
        action="store_true",
        help="use >= instead of > in the early-termination comparisons",
    )
    p_solve.add_argument("--no-further-pruning", action="store_true")
    p_solve.add_argument(
        "--baseline",
        action="store_true",
        help="also run the plain Bron-Kerbosch baseline and report both times",
    )

    p_cores = sub.add_parser("cores", help="core decomposition summary")
    p_cores.add_argument("path")
    p_cores.add_argument("--format", choices=["edges", "mtx"], default=None)
    p_cores.add_argument("--json", action="store_true")

    p_oracle = sub.add_parser("oracle", help="brute-force omega for small fixtures")
    p_oracle.add_argument("path")
    p_oracle.add_argument("--format", choices=["edges", "mtx"], default=None)
    p_oracle.add_argument("--guard", type=int, default=40)
    p_oracle.add_argument("--json", action="store_true")

    p_bench = sub.add_parser("bench", help="run a manifest of networks")
    p_bench.add_argument("manifest")
    p_bench.add_argument("--sweep-topl", metavar="A,B,C", default=None)
    p_bench.add_argument("--topl", type=int, default=None)
    p_bench.add_argument("--inclusive-bounds", action="store_true")
    p_bench.add_argument("--no-further-pruning", action="store_true")
    fmt = p_bench.add_mutually_exclusive_group()
    fmt.add_argument("--csv", action="store_true")
    fmt.add_argument("--jsonl", action="store_true")

    p_serve = sub.add_parser("serve", help="run the HTTP service")
    p_serve.add_argument("--host", default="127.0.0.1")
    p_serve.add_argument("--port", type=int, default=8000)

    return parser


def _post(server: str, endpoint: str, payload: dict, response_model):
    import httpx

    resp = httpx.post(server.rstrip("/") + endpoint, json=payload, timeout=None)
    if resp.status_code >= 400:
        detail = resp.json().get("detail", resp.text) if resp.content else resp.text
        raise RuntimeError(f"server error {resp.status_code}: {detail}")
    return response_model.model_validate(resp.json())


def report_json(model: RunReportModel) -> str:
    doc = model.model_dump()
    if doc.get("baseline") is None:
        doc.pop("baseline", None)
    return json.dumps(doc, indent=2)


def _print_report(model: RunReportModel, as_json: bool) -> None:
    if as_json:
        print(report_json(model))
        return

    def cubis_line(c) -> str:
        if c is None:
            return "null"
        return f"{c.nodes} nodes / {c.edges} edges / {c.seconds:.3f} s"

    print(f"network: {model.network}")
    print(f"nodes: {model.n}  edges: {model.m}")
    print(
        f"pre-pruned: {model.pre_pruned_nodes} nodes"
        f" (heuristic clique {model.heuristic_clique_size})"
    )
    print(f"cubis-1: {cubis_line(model.cubis1)}")
    print(f"cubis-2: {cubis_line(model.cubis2)}")
    print(f"omega: {model.omega}")
    print(f"clique: {' '.join(str(x) for x in model.clique)}")
    print(f"core time: {model.core_seconds:.3f} s  search total: {model.total_seconds:.3f} s")
    if model.baseline is not None:
        print(
            f"baseline bron-kerbosch: omega {model.baseline.omega}"
            f" in {model.baseline.seconds:.3f} s"
        )


def _cmd_solve(args) -> int:
    req = SolveRequest(
        path=args.path,
        format=args.format,
        topl=args.topl,
        strict_bounds=not args.inclusive_bounds,
        further_pruning=not args.no_further_pruning,
        baseline=args.baseline,
    )
    if args.server:
        model = _post(args.server, "/solve", req.model_dump(), RunReportModel)
    else:
        from .service import handle_solve

        model = handle_solve(req)
    _print_report(model, args.json)
    return EXIT_OK


def _cmd_cores(args) -> int:
    req = CoresRequest(path=args.path, format=args.format)
    if args.server:
        model = _post(args.server, "/cores", req.model_dump(), CoresResponse)
    else:
        from .service import handle_cores

        model = handle_cores(req)
    if args.json:
        print(json.dumps(model.model_dump(), indent=2))
    else:
        print(f"nodes: {model.n}  edges: {model.m}")
        print(f"c_max: {model.c_max}  clique upper bound: {model.clique_upper_bound}")
        print(f"ladder: {' '.join(str(c) for c in model.ladder)}")
        for c in model.ladder:
            print(f"  core {c}: {model.counts[c]} nodes")
    return EXIT_OK


def _cmd_oracle(args) -> int:
    req = OracleRequest(path=args.path, format=args.format, guard=args.guard)
    if args.server:
        model = _post(args.server, "/oracle", req.model_dump(), OracleResponse)
    else:
        from .service import handle_oracle

        model = handle_oracle(req)
    if args.json:
        print(json.dumps(model.model_dump(), indent=2))
    else:
        print(f"omega: {model.omega}")
        print(f"clique: {' '.join(str(x) for x in model.clique)}")
    return EXIT_OK


def _cmd_bench(args) -> int:
    sweep = None
    if args.sweep_topl:
        try:
            sweep = [int(x) for x in args.sweep_topl.split(",") if x.strip()]
        except ValueError:
            print(f"invalid --sweep-topl value: {args.sweep_topl}", file=sys.stderr)
            return EXIT_IO
    req = BenchRequest(
        manifest_path=args.manifest,
        sweep_topl=sweep,
        topl=args.topl,
        strict_bounds=False if args.inclusive_bounds else None,
        further_pruning=False if args.no_further_pruning else None,
    )
    if args.server:
        model = _post(args.server, "/bench", req.model_dump(), BenchResponse)
        rows = _rows_from_models(model)
        code = model.exit_code
    else:
        from . import bench as benchmod
        from .solver import SolveConfig

        manifest = benchmod.load_manifest(args.manifest)
        cfg = SolveConfig(
            topl=args.topl if args.topl is not None else manifest.defaults.topl,
            strict_bounds=not args.inclusive_bounds and manifest.defaults.strict_bounds,
            further_pruning=not args.no_further_pruning and manifest.defaults.further_pruning,
        )
        rows = benchmod.run_bench(manifest, sweep_topl=sweep, config=cfg)
        code = benchmod.exit_code(rows)

    from . import bench as benchmod

    if args.csv:
        print(benchmod.rows_to_csv(rows))
    elif args.jsonl:
        print(benchmod.rows_to_jsonl(rows))
    else:
        print(benchmod.rows_to_table(rows))
    return code


def _rows_from_models(model: BenchResponse):
    # reshape HTTP rows into the local BenchRow form so one renderer serves both
    from .bench import BenchRow
    from .solver import CubisStats, PruneStats, RunReport, SolveConfig

    rows = []
    for m in model.rows:
        row = BenchRow(name=m.network, topl=m.topl, error=m.error, mismatches=m.mismatches)
        if m.report is not None:
            r = m.report
            row.report = RunReport(
                network=r.network,
                n=r.n,
                m=r.m,
                prune=PruneStats(r.pre_pruned_nodes, r.heuristic_clique_size),
                cubis1=CubisStats(r.cubis1.nodes, r.cubis1.edges, r.cubis1.seconds, True)
                if r.cubis1
                else CubisStats(),
                cubis2=CubisStats(r.cubis2.nodes, r.cubis2.edges, r.cubis2.seconds, True)
                if r.cubis2
                else CubisStats(),
                omega=r.omega,
                clique_nodes=(),
                clique_labels=list(r.clique),
                core_seconds=r.core_seconds,
                total_seconds=r.total_seconds,
                config=SolveConfig(
                    topl=r.config.topl,
                    strict_bounds=r.config.strict_bounds,
                    further_pruning=r.config.further_pruning,
                ),
            )
        rows.append(row)
    return rows


def _cmd_serve(args) -> int:
    import uvicorn

    uvicorn.run("sparseclique.service:app", host=args.host, port=args.port)
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    handlers = {
        "solve": _cmd_solve,
        "cores": _cmd_cores,
        "oracle": _cmd_oracle,
        "bench": _cmd_bench,
        "serve": _cmd_serve,
    }
    try:
        return handlers[args.command](args)
    except InvariantError as exc:
        print(f"internal invariant breach: {exc}", file=sys.stderr)
        return EXIT_INVARIANT
    except (OSError, ParseError, ValueError, RuntimeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
