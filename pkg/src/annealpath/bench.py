"""Benchmark harness: size and edge-probability sweeps over the solvers and
classical baselines, runtime model fitting, and CSV/SVG emission."""

from __future__ import annotations


import time
from dataclasses import dataclass

import numpy as np

from . import baselines, solvers
from .graphs import Graph, generate_ba, generate_er, graph_hash
from .qubo import DEFAULT_COEFFS, build_qubo

BENCH_ALGORITHMS = (
    "dijkstra",
    "dijkstra_dense",
    "bellman_ford",
    "floyd_warshall",
    "minplus",
    "sa_sampler",
    "exact",
)

DEFAULT_SIZES = (10, 25, 50, 100, 150, 200, 250, 300, 350, 400, 450, 500, 550, 600)


class BenchError(ValueError):
    pass


@dataclass(frozen=True)
class BenchRecord:
    algorithm: str
    input_size: int
    probability: float | None
    seed: int
    graph_hash: str
    wall_seconds: float
    max_degree: int = 0
    edge_count: int = 0


@dataclass(frozen=True)
class FitResult:
    """Linear least-squares fit of wall time against a transformed regressor."""

    model: str  # affine | affine_log | affine_invsqrt
    a: float
    b: float
    sse: float


FIT_MODELS = ("affine", "affine_log", "affine_invsqrt")


def _transform(model: str, x: np.ndarray) -> np.ndarray:
    if model == "affine":
        return x
    if model == "affine_log":
        return np.log(x)
    if model == "affine_invsqrt":
        return 1.0 / np.sqrt(x)
    raise BenchError(f"unknown fit model {model!r}")


def fit_runtime(records, model: str, x_field: str = "auto") -> FitResult:
    """Fit t = a + b * f(x) in closed form; x is size or probability."""
    recs = list(records)
    if len(recs) < 3:
        raise BenchError("need at least 3 records to fit")
    if x_field == "auto":
        x_field = "probability" if recs[0].probability is not None else "input_size"
    x = np.array([getattr(r, x_field) for r in recs], dtype=np.float64)
    t = np.array([r.wall_seconds for r in recs], dtype=np.float64)
    if np.any(x <= 0):
        raise BenchError("fit regressor must be strictly positive")
    if np.all(x == x[0]):
        raise BenchError("degenerate regressor: all x equal")
    z = _transform(model, x)
    design = np.column_stack([np.ones_like(z), z])
    coef, *_ = np.linalg.lstsq(design, t, rcond=None)
    a, b = float(coef[0]), float(coef[1])
    sse = float(np.sum((a + b * z - t) ** 2))
    return FitResult(model, a, b, sse)


def _measure(algorithm: str, g: Graph, source: int, target: int, sa_params: dict) -> float:
    """Wall time of one algorithm run; QUBO construction is excluded."""
    if algorithm in ("dijkstra", "dijkstra_dense", "bellman_ford", "floyd_warshall", "minplus"):
        _, elapsed = baselines.timed_run(algorithm, g, source)
        return elapsed
    if algorithm == "sa_sampler":
        p = build_qubo(g, DEFAULT_COEFFS, source, target)
        t0 = time.perf_counter()
        solvers.sample_sa(
            p,
            reads=sa_params.get("reads", 100),
            sweeps=sa_params.get("sweeps", 100),
            seed=sa_params.get("seed", 0),
        )
        return time.perf_counter() - t0
    if algorithm == "exact":
        if g.vertex_count > solvers.EXACT_CAP:
            raise BenchError(f"exact solver capped at {solvers.EXACT_CAP} vertices")
        p = build_qubo(g, DEFAULT_COEFFS, source, target)
        t0 = time.perf_counter()
        solvers.solve_exact(p)
        return time.perf_counter() - t0
    raise BenchError(f"unknown algorithm {algorithm!r}")


def _make_graph(size: int, seed: int, graph_params: dict) -> Graph:
    model = graph_params.get("model", "ba")
    if model == "ba":
        n = graph_params.get("n", 2)
        n0 = graph_params.get("n0", max(n, 2))
        return generate_ba(n0, n, size, seed)
    if model == "er":
        return generate_er(size, graph_params.get("p", 0.1), seed)
    raise BenchError(f"unknown graph model {model!r}")


def bench_vertices(sizes, algorithms, graph_params=None, seeds=(0,), sa_params=None) -> list[BenchRecord]:
    """Time each algorithm on one shared graph per (size, seed)."""
    graph_params = graph_params or {}
    sa_params = sa_params or {}
    sizes = list(sizes)
    if sorted(sizes) != sizes or any(s <= 0 for s in sizes):
        raise BenchError("sizes must be positive and ascending")
    for a in algorithms:
        if a not in BENCH_ALGORITHMS:
            raise BenchError(f"unknown algorithm {a!r}")
    records: list[BenchRecord] = []
    for size in sizes:
        for seed in seeds:
            g = _make_graph(size, seed, graph_params)
            h = graph_hash(g)
            max_deg = int(g.degrees().max()) if g.edges else 0
            for algorithm in algorithms:
                elapsed = _measure(algorithm, g, 0, size - 1, {**sa_params, "seed": seed})
                records.append(
                    BenchRecord(algorithm, size, None, seed, h, elapsed, max_deg, len(g.edges))
                )
    return records


def bench_edge_probability(
    vertex_count: int, probs, algorithms, seeds=(0,), sa_params=None
) -> list[BenchRecord]:
    """Time each algorithm on ER graphs across an edge-probability sweep."""
    sa_params = sa_params or {}
    probs = list(probs)
    if any(not 0.0 < p <= 1.0 for p in probs):
        raise BenchError("probabilities must lie in (0, 1]")
    records: list[BenchRecord] = []
    for p in probs:
        for seed in seeds:
            g = generate_er(vertex_count, p, seed)
            h = graph_hash(g)
            max_deg = int(g.degrees().max()) if g.edges else 0
            for algorithm in algorithms:
                if algorithm not in BENCH_ALGORITHMS:
                    raise BenchError(f"unknown algorithm {algorithm!r}")
                elapsed = _measure(algorithm, g, 0, vertex_count - 1, {**sa_params, "seed": seed})
                records.append(
                    BenchRecord(algorithm, vertex_count, p, seed, h, elapsed, max_deg, len(g.edges))
                )
    return records


CSV_COLUMNS = "algorithm,input_size,probability,seed,graph_hash,wall_seconds"


def emit_records_csv(records) -> str:
    recs = list(records)
    if not recs:
        raise BenchError("no records to emit")
    lines = [CSV_COLUMNS]
    for r in recs:
        prob = "" if r.probability is None else f"{r.probability}"
        lines.append(f"{r.algorithm},{r.input_size},{prob},{r.seed},{r.graph_hash},{r.wall_seconds}")
    return "\n".join(lines) + "\n"


def parse_records_csv(text: str) -> list[BenchRecord]:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines or lines[0] != CSV_COLUMNS:
        raise BenchError("unrecognized records CSV header")
    records = []
    for ln in lines[1:]:
        alg, size, prob, seed, h, secs = ln.split(",")
        records.append(
            BenchRecord(alg, int(size), float(prob) if prob else None, int(seed), h, float(secs))
        )
    return records


def emit_table_csv(records) -> str:
    """Pivot: one row per input size, one wall-seconds column per algorithm.

    Times are averaged over seeds.
    """
    recs = list(records)
    if not recs:
        raise BenchError("no records to emit")
    algorithms = sorted({r.algorithm for r in recs})
    sizes = sorted({r.input_size for r in recs})
    lines = ["input_size," + ",".join(algorithms)]
    for size in sizes:
        cells = []
        for alg in algorithms:
            times = [r.wall_seconds for r in recs if r.algorithm == alg and r.input_size == size]
            cells.append(f"{sum(times) / len(times)}" if times else "")
        lines.append(f"{size}," + ",".join(cells))
    return "\n".join(lines) + "\n"


def emit_fits_csv(fits) -> str:
    fits = list(fits)
    if not fits:
        raise BenchError("no fits to emit")
    lines = ["model,a,b,sse"]
    lines += [f"{f.model},{f.a},{f.b},{f.sse}" for f in fits]
    return "\n".join(lines) + "\n"


def emit_svg(series: dict[str, tuple[list[float], list[float]]], x_label: str = "x", y_label: str = "t (s)") -> str:
    """Minimal deterministic line plot: one polyline per named series."""
    if not series:
        raise BenchError("no series to plot")
    width, height, margin = 640, 420, 60
    xs = [x for pts in series.values() for x in pts[0]]
    ys = [y for pts in series.values() for y in pts[1]]
    x_lo, x_hi = min(xs), max(xs)
    y_lo, y_hi = min(ys), max(ys)
    x_span = (x_hi - x_lo) or 1.0
    y_span = (y_hi - y_lo) or 1.0

    def px(x: float) -> float:
        return margin + (x - x_lo) / x_span * (width - 2 * margin)

    def py(y: float) -> float:
        return height - margin - (y - y_lo) / y_span * (height - 2 * margin)

    palette = ("#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b")
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}">',
        f'<rect width="{width}" height="{height}" fill="white"/>',
        f'<line x1="{margin}" y1="{height - margin}" x2="{width - margin}" y2="{height - margin}" stroke="black"/>',
        f'<line x1="{margin}" y1="{margin}" x2="{margin}" y2="{height - margin}" stroke="black"/>',
        f'<text x="{width / 2:.1f}" y="{height - margin / 3:.1f}" text-anchor="middle">{x_label}</text>',
        f'<text x="{margin / 3:.1f}" y="{height / 2:.1f}" text-anchor="middle" '
        f'transform="rotate(-90 {margin / 3:.1f} {height / 2:.1f})">{y_label}</text>',
    ]
    for k, (name, (sx, sy)) in enumerate(sorted(series.items())):
        color = palette[k % len(palette)]
        points = " ".join(f"{px(x):.2f},{py(y):.2f}" for x, y in sorted(zip(sx, sy)))
        parts.append(f'<polyline fill="none" stroke="{color}" points="{points}"/>')
        parts.append(
            f'<text x="{width - margin + 4}" y="{margin + 16 * k}" fill="{color}" font-size="11">{name}</text>'
        )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
