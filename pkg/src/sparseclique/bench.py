"""Benchmark harness: run a manifest of networks and compare against goldens."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

from .ingest import EdgeListSource, load_graph
from .solver import RunReport, SolveConfig, solve

EXIT_OK = 0
EXIT_IO = 1
EXIT_MISMATCH = 2
EXIT_INVARIANT = 3


@dataclass
class ManifestEntry:
    name: str
    path: str
    format: str | None = None
    expected_omega: int | None = None
    expected_cubis1: tuple[int, int] | None = None


@dataclass
class BenchManifest:
    entries: list[ManifestEntry]
    defaults: SolveConfig = field(default_factory=SolveConfig)
    base_dir: Path = field(default_factory=Path)

    def resolve_path(self, entry: ManifestEntry) -> Path:
        p = Path(entry.path)
        return p if p.is_absolute() else self.base_dir / p


def load_manifest(path: str | Path) -> BenchManifest:
    """Parse a plain-JSON manifest; relative entry paths resolve against it."""
    path = Path(path)
    with open(path, "r", encoding="utf-8") as fh:
        doc = json.load(fh)
    if not isinstance(doc, dict) or "entries" not in doc:
        raise ValueError(f"{path}: manifest must be an object with an 'entries' list")
    entries = []
    seen_paths: set[str] = set()
    for i, raw in enumerate(doc["entries"]):
        try:
            entry = ManifestEntry(
                name=str(raw["name"]),
                path=str(raw["path"]),
                format=raw.get("format"),
                expected_omega=raw.get("expected_omega"),
                expected_cubis1=tuple(raw["expected_cubis1"])
                if raw.get("expected_cubis1") is not None
                else None,
            )
        except (KeyError, TypeError) as exc:
            raise ValueError(f"{path}: entry {i} malformed: {exc}") from None
        if entry.expected_omega is not None and entry.expected_omega < 0:
            raise ValueError(f"{path}: entry {entry.name}: negative expected_omega")
        if entry.path in seen_paths:
            raise ValueError(f"{path}: duplicate entry path {entry.path!r}")
        seen_paths.add(entry.path)
        entries.append(entry)
    defaults_raw = doc.get("defaults", {})
    defaults = SolveConfig(
        topl=defaults_raw.get("topl", 1),
        strict_bounds=defaults_raw.get("strict_bounds", True),
        further_pruning=defaults_raw.get("further_pruning", True),
    )
    return BenchManifest(entries=entries, defaults=defaults, base_dir=path.parent)


@dataclass
class BenchRow:
    name: str
    topl: int
    report: RunReport | None = None
    error: str | None = None
    mismatches: list[str] = field(default_factory=list)


def run_bench(
    manifest: BenchManifest,
    sweep_topl: list[int] | None = None,
    config: SolveConfig | None = None,
) -> list[BenchRow]:
    """Solve every manifest entry (optionally once per topL value) in order."""
    base_cfg = config or manifest.defaults
    topls = sweep_topl or [base_cfg.topl]
    rows: list[BenchRow] = []
    for entry in manifest.entries:
        path = manifest.resolve_path(entry)
        for topl in topls:
            row = BenchRow(name=entry.name, topl=topl)
            rows.append(row)
            try:
                g = load_graph(EdgeListSource(path, entry.format))
            except (OSError, ValueError) as exc:
                row.error = str(exc)
                continue
            cfg = SolveConfig(
                topl=topl,
                strict_bounds=base_cfg.strict_bounds,
                further_pruning=base_cfg.further_pruning,
            )
            row.report = solve(g, cfg, network=entry.name)
            _check_expectations(entry, row)
    return rows


def _check_expectations(entry: ManifestEntry, row: BenchRow) -> None:
    rep = row.report
    assert rep is not None
    if entry.expected_omega is not None and rep.omega != entry.expected_omega:
        row.mismatches.append(f"omega {rep.omega} != expected {entry.expected_omega}")
    if entry.expected_cubis1 is not None:
        got = (rep.cubis1.nodes, rep.cubis1.edges) if rep.cubis1.present else None
        want = entry.expected_cubis1
        if got != tuple(want):
            row.mismatches.append(f"cubis1 {got} != expected {tuple(want)}")


def exit_code(rows: list[BenchRow]) -> int:
    if any(r.mismatches for r in rows):
        return EXIT_MISMATCH
    if any(r.error for r in rows):
        return EXIT_IO
    return EXIT_OK


_COLUMNS = [
    "network",
    "topl",
    "n",
    "m",
    "pre_pruned_nodes",
    "heuristic_clique_size",
    "cubis1_nodes",
    "cubis1_edges",
    "cubis1_seconds",
    "cubis2_nodes",
    "cubis2_edges",
    "cubis2_seconds",
    "omega",
    "core_seconds",
    "total_seconds",
    "status",
]


def _row_values(row: BenchRow) -> list[str]:
    if row.report is None:
        return [row.name, str(row.topl)] + ["null"] * (len(_COLUMNS) - 3) + [
            f"error: {row.error}"
        ]
    r = row.report
    c1 = r.cubis1
    c2 = r.cubis2
    status = "ok" if not row.mismatches else "; ".join(row.mismatches)

    def cubis_cells(c):
        if not c.present:
            return ["null", "null", "null"]
        return [str(c.nodes), str(c.edges), f"{c.seconds:.3f}"]

    return [
        row.name,
        str(row.topl),
        str(r.n),
        str(r.m),
        str(r.prune.pre_pruned_nodes),
        str(r.prune.heuristic_clique_size),
        *cubis_cells(c1),
        *cubis_cells(c2),
        str(r.omega),
        f"{r.core_seconds:.3f}",
        f"{r.total_seconds:.3f}",
        status,
    ]


def rows_to_table(rows: list[BenchRow]) -> str:
    cells = [_COLUMNS] + [_row_values(r) for r in rows]
    widths = [max(len(row[i]) for row in cells) for i in range(len(_COLUMNS))]
    lines = ["  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip() for row in cells]
    return "\n".join(lines)


def rows_to_csv(rows: list[BenchRow]) -> str:
    lines = [",".join(_COLUMNS)]
    for r in rows:
        lines.append(",".join(v.replace(",", ";") for v in _row_values(r)))
    return "\n".join(lines)


def rows_to_jsonl(rows: list[BenchRow]) -> str:
    lines = []
    for row in rows:
        doc: dict = {"network": row.name, "topl": row.topl}
        if row.report is None:
            doc["error"] = row.error
        else:
            doc["report"] = row.report.to_json_dict()
            doc["mismatches"] = row.mismatches
        lines.append(json.dumps(doc))
    return "\n".join(lines)
