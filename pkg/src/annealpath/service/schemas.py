"""Pydantic request/response models for the HTTP service.

Graphs travel as edge-list text (first line vertex count, then 'u v w'
lines); QUBO problems as the 'n start end' header plus 'i j value' lines.
"""

from __future__ import annotations

from pydantic import BaseModel, Field


class GraphPayload(BaseModel):
    graph: str = Field(description="edge-list text")


class GenerateRequest(BaseModel):
    model: str = Field(description="'ba' or 'er'")
    total_vertices: int
    seed: int
    n0: int | None = None
    n: int | None = None
    p: float | None = None
    reweight_seed: int | None = None


class GraphResponse(BaseModel):
    graph: str
    vertex_count: int
    edge_count: int
    graph_hash: str


class ReweightRequest(GraphPayload):
    seed: int


class DegreeHistogramResponse(BaseModel):
    entries: dict[int, float]
    sample_count: int


class PowerLawFitRequest(GraphPayload):
    exponent: float = 3.0


class PowerLawFitResponse(BaseModel):
    a: float
    b: float
    exponent: float
    residual: float


class Coefficients(BaseModel):
    alpha: float = 1.0
    beta: float = 1.0
    gamma_q: float = 2.0
    delta: float = 3.0


class BuildQuboRequest(GraphPayload):
    start: int
    end: int
    coefficients: Coefficients = Coefficients()


class QuboResponse(BaseModel):
    qubo: str = Field(description="'n start end' header plus 'i j value' lines")
    n: int
    start: int
    end: int


class EnergyRequest(BaseModel):
    qubo: str
    bits: list[int]


class EnergyResponse(BaseModel):
    energy: float


class IsingResponse(BaseModel):
    h: list[float]
    j: list[tuple[int, int, float]]
    offset: float


class SolveExactRequest(BaseModel):
    qubo: str
    top_k: int | None = None


class SampleSaRequest(BaseModel):
    qubo: str
    reads: int = 1000
    sweeps: int = 1000
    beta_start: float = 0.1
    beta_end: float = 10.0
    seed: int


class SampleRowModel(BaseModel):
    energy: float
    bitstring: str = Field(description="MSB = vertex 0")
    occurrences: int


class SampleTableResponse(BaseModel):
    rows: list[SampleRowModel]
    total_reads: int


class DecodeRequest(GraphPayload):
    bits: list[int]
    start: int
    end: int


class DecodeResponse(BaseModel):
    valid: bool
    vertices: list[int] | None = None
    total_weight: int | None = None
    failure_reason: str | None = None


class AnalyzeRequest(GraphPayload):
    start: int
    end: int
    coefficients: Coefficients = Coefficients()


class AnalyzeResponse(BaseModel):
    argmin_states: list[str]
    min_energy: float
    decodes_to_shortest_path: bool
    true_shortest_weight: int | None
    decoded_weight: int | None
    endpoints_connected: bool


class SweepRequest(GraphPayload):
    start: int
    end: int
    alphas: list[float] = [1.0]
    betas: list[float] = [1.0]
    gammas: list[float] = [2.0]
    deltas: list[float] = [3.0]


class SweepEntry(BaseModel):
    coefficients: Coefficients
    report: AnalyzeResponse


class SweepResponse(BaseModel):
    entries: list[SweepEntry]


class BaselineRequest(GraphPayload):
    source: int = 0


class BaselineResponse(BaseModel):
    distances: list[float | None] = Field(description="None marks unreachable")
    predecessors: list[int | None]
    wall_seconds: float


class MatrixResponse(BaseModel):
    n: int
    distances: list[list[float | None]]
    wall_seconds: float


class GapRequest(BaseModel):
    qubo: str
    grid_points: int = 201


class GapResponse(BaseModel):
    s_grid: list[float]
    gaps: list[float]
    min_gap: float
    min_gap_s: float
    tau_estimate: float | None
    degenerate: bool


class FeasibilityRequest(GraphPayload):
    rows: int = 16
    cols: int = 16
    shore: int = 4


class FeasibilityResponse(BaseModel):
    logical_vars: int
    required_qubits: int
    available_qubits: int
    fits: bool
    max_graph_degree: int
    degree_warning: bool


class BenchVerticesRequest(BaseModel):
    sizes: list[int]
    algorithms: list[str]
    seeds: list[int] = [0]
    graph_model: str = "ba"
    ba_n: int = 2
    er_p: float = 0.1
    sa_reads: int = 100
    sa_sweeps: int = 100


class BenchEdgesRequest(BaseModel):
    vertex_count: int
    probs: list[float]
    algorithms: list[str]
    seeds: list[int] = [0]
    sa_reads: int = 100
    sa_sweeps: int = 100


class BenchRecordModel(BaseModel):
    algorithm: str
    input_size: int
    probability: float | None
    seed: int
    graph_hash: str
    wall_seconds: float
    max_degree: int = 0
    edge_count: int = 0


class BenchResponse(BaseModel):
    records: list[BenchRecordModel]
    csv: str


class FitRequest(BaseModel):
    records: list[BenchRecordModel]
    models: list[str] = ["affine_log", "affine_invsqrt"]


class FitEntry(BaseModel):
    model: str
    a: float
    b: float
    sse: float


class FitResponse(BaseModel):
    fits: list[FitEntry]


class PlotRequest(BaseModel):
    series: dict[str, tuple[list[float], list[float]]]
    x_label: str = "x"
    y_label: str = "t (s)"


class PlotResponse(BaseModel):
    svg: str
