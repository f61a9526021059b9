"""Pydantic request/response models for the HTTP service and thin CLI client."""

from __future__ import annotations

from typing import Literal, Optional, Union

from pydantic import BaseModel, Field

from .solver import RunReport


class SolveRequest(BaseModel):
    path: str
    format: Optional[Literal["edges", "mtx"]] = None
    topl: int = Field(default=1, ge=1)
    strict_bounds: bool = True
    further_pruning: bool = True
    baseline: bool = False


class CubisModel(BaseModel):
    nodes: int
    edges: int
    seconds: float


class ConfigModel(BaseModel):
    topl: int
    strict_bounds: bool
    further_pruning: bool


class BaselineModel(BaseModel):
    omega: int
    seconds: float


class RunReportModel(BaseModel):
    network: str
    n: int
    m: int
    pre_pruned_nodes: int
    heuristic_clique_size: int
    cubis1: Optional[CubisModel]
    cubis2: Optional[CubisModel]
    omega: int
    clique: list[Union[int, str]]
    core_seconds: float
    total_seconds: float
    config: ConfigModel
    baseline: Optional[BaselineModel] = None

    @classmethod
    def from_report(cls, report: RunReport, baseline: BaselineModel | None = None):
        model = cls.model_validate(report.to_json_dict())
        model.baseline = baseline
        return model


class CoresRequest(BaseModel):
    path: str
    format: Optional[Literal["edges", "mtx"]] = None


class CoresResponse(BaseModel):
    n: int
    m: int
    c_max: int
    clique_upper_bound: int
    ladder: list[int]
    counts: dict[int, int]


class OracleRequest(BaseModel):
    path: str
    format: Optional[Literal["edges", "mtx"]] = None
    guard: int = Field(default=40, ge=1)


class OracleResponse(BaseModel):
    omega: int
    clique: list[Union[int, str]]


class BenchRowModel(BaseModel):
    network: str
    topl: int
    report: Optional[RunReportModel] = None
    error: Optional[str] = None
    mismatches: list[str] = Field(default_factory=list)


class BenchRequest(BaseModel):
    manifest_path: str
    sweep_topl: Optional[list[int]] = None
    topl: Optional[int] = None
    strict_bounds: Optional[bool] = None
    further_pruning: Optional[bool] = None


class BenchResponse(BaseModel):
    rows: list[BenchRowModel]
    exit_code: int
