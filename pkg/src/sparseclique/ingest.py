"""Parsers for public-repository graph files (edge lists and Matrix Market)."""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .graph import Graph, from_edge_arrays

FORMAT_EDGE_LIST = "edge_list"
FORMAT_MATRIX_MARKET = "matrix_market"

_FORMAT_ALIASES = {
    "edges": FORMAT_EDGE_LIST,
    "edge_list": FORMAT_EDGE_LIST,
    "el": FORMAT_EDGE_LIST,
    "mtx": FORMAT_MATRIX_MARKET,
    "matrix_market": FORMAT_MATRIX_MARKET,
}


class ParseError(ValueError):
    """Malformed graph file; message carries path and line number."""


@dataclass
class EdgeListSource:
    path: str | Path
    format: str | None = None
    comment_prefixes: frozenset[str] = frozenset({"#", "%"})

    def resolved_format(self) -> str:
        if self.format is not None:
            try:
                return _FORMAT_ALIASES[self.format]
            except KeyError:
                raise ValueError(f"unknown graph format {self.format!r}") from None
        ext = os.path.splitext(str(self.path))[1].lower()
        return FORMAT_MATRIX_MARKET if ext == ".mtx" else FORMAT_EDGE_LIST


def load_graph(src: EdgeListSource | str | Path, format: str | None = None) -> Graph:
    """Load an undirected simple Graph from a file.

    Repository files are inconsistent (0-based, 1-based, arbitrary tokens,
    optional weight columns, directed listings), so labels are always remapped
    to dense ids in first-appearance order, weights are ignored, and edges are
    symmetrized. Loading the same file twice yields identical graphs.
    """
    if not isinstance(src, EdgeListSource):
        src = EdgeListSource(src, format)
    fmt = src.resolved_format()
    if fmt == FORMAT_MATRIX_MARKET:
        return _load_matrix_market(src)
    return _load_edge_list(src)


def _load_edge_list(src: EdgeListSource) -> Graph:
    ids: dict[str, int] = {}
    us: list[int] = []
    vs: list[int] = []
    skip = tuple(src.comment_prefixes)
    with open(src.path, "r", encoding="utf-8", errors="replace") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.strip()
            if not line or line.startswith(skip):
                continue
            parts = line.replace(",", " ").split()
            if len(parts) < 2:
                raise ParseError(f"{src.path}:{lineno}: expected 'u v', got {line!r}")
            a, b = parts[0], parts[1]
            ia = ids.setdefault(a, len(ids))
            ib = ids.setdefault(b, len(ids))
            if ia != ib:
                us.append(ia)
                vs.append(ib)
    return from_edge_arrays(len(ids), us, vs, labels=tuple(ids))


def _load_matrix_market(src: EdgeListSource) -> Graph:
    ids: dict[int, int] = {}
    us: list[int] = []
    vs: list[int] = []
    header_seen = False
    with open(src.path, "r", encoding="utf-8", errors="replace") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.strip()
            if not line or line.startswith("%"):
                continue  # banner and comments
            parts = line.split()
            if not header_seen:
                header_seen = True  # "rows cols nnz" size line, consumed
                continue
            if len(parts) < 2:
                raise ParseError(f"{src.path}:{lineno}: expected 'u v [w]', got {line!r}")
            try:
                a, b = int(parts[0]), int(parts[1])
            except ValueError:
                raise ParseError(
                    f"{src.path}:{lineno}: non-numeric node label in {line!r}"
                ) from None
            ia = ids.setdefault(a, len(ids))
            ib = ids.setdefault(b, len(ids))
            if ia != ib:
                us.append(ia)
                vs.append(ib)
    return from_edge_arrays(len(ids), us, vs, labels=tuple(ids))
