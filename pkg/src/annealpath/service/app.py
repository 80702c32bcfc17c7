"""FastAPI service exposing the solver toolkit over HTTP."""

from __future__ import annotations

import math

from fastapi import FastAPI, HTTPException

from .. import baselines, bench, graphs, qubo, solvers, spectrum
from ..chimera import ChimeraError, check_feasibility, chimera as build_chimera
from . import schemas as sc

app = FastAPI(
    title="annealpath",
    description="Shortest-path QUBO encoding, solvers, baselines, and benchmarks",
)


def _bad_request(exc: Exception) -> HTTPException:
    return HTTPException(status_code=422, detail=str(exc))


def _graph(text: str) -> graphs.Graph:
    try:
        return graphs.load_graph(text)
    except graphs.GraphError as exc:
        raise _bad_request(exc)


def _qubo(text: str) -> qubo.QuboProblem:
    try:
        return qubo.load_qubo(text)
    except qubo.QuboError as exc:
        raise _bad_request(exc)


def _graph_response(g: graphs.Graph) -> sc.GraphResponse:
    return sc.GraphResponse(
        graph=graphs.store_graph(g),
        vertex_count=g.vertex_count,
        edge_count=len(g.edges),
        graph_hash=graphs.graph_hash(g),
    )


def _coeffs(c: sc.Coefficients) -> qubo.CoefficientSet:
    try:
        return qubo.CoefficientSet(c.alpha, c.beta, c.gamma_q, c.delta)
    except qubo.QuboError as exc:
        raise _bad_request(exc)


def _table_response(table: solvers.SampleTable) -> sc.SampleTableResponse:
    rows = [
        sc.SampleRowModel(
            energy=r.energy,
            bitstring="".join(str(b) for b in r.bits),
            occurrences=r.occurrences,
        )
        for r in table.rows
    ]
    return sc.SampleTableResponse(rows=rows, total_reads=table.total_reads)


def _report_response(rep: solvers.ValidityReport) -> sc.AnalyzeResponse:
    return sc.AnalyzeResponse(
        argmin_states=["".join(str(b) for b in s) for s in rep.argmin_states],
        min_energy=rep.min_energy,
        decodes_to_shortest_path=rep.decodes_to_shortest_path,
        true_shortest_weight=rep.true_shortest_weight,
        decoded_weight=rep.decoded_weight,
        endpoints_connected=rep.endpoints_connected,
    )


@app.get("/health")
def health() -> dict:
    return {"status": "ok"}


@app.post("/graph/generate", response_model=sc.GraphResponse)
def generate(req: sc.GenerateRequest) -> sc.GraphResponse:
    try:
        if req.model == "ba":
            n = req.n if req.n is not None else 2
            n0 = req.n0 if req.n0 is not None else n
            g = graphs.generate_ba(n0, n, req.total_vertices, req.seed)
        elif req.model == "er":
            if req.p is None:
                raise graphs.GraphError("ER generation requires p")
            g = graphs.generate_er(req.total_vertices, req.p, req.seed)
        else:
            raise graphs.GraphError(f"unknown model {req.model!r}")
        if req.reweight_seed is not None:
            g = graphs.reweight(g, req.reweight_seed)
    except graphs.GraphError as exc:
        raise _bad_request(exc)
    return _graph_response(g)


@app.post("/graph/reweight", response_model=sc.GraphResponse)
def reweight_graph(req: sc.ReweightRequest) -> sc.GraphResponse:
    return _graph_response(graphs.reweight(_graph(req.graph), req.seed))


@app.post("/graph/degree-distribution", response_model=sc.DegreeHistogramResponse)
def degree_dist(req: sc.GraphPayload) -> sc.DegreeHistogramResponse:
    hist = graphs.degree_distribution(_graph(req.graph))
    return sc.DegreeHistogramResponse(entries=hist.entries, sample_count=hist.sample_count)


@app.post("/graph/power-law-fit", response_model=sc.PowerLawFitResponse)
def power_law_fit(req: sc.PowerLawFitRequest) -> sc.PowerLawFitResponse:
    hist = graphs.degree_distribution(_graph(req.graph))
    try:
        fit = graphs.fit_power_law(hist, exponent=req.exponent)
    except graphs.GraphError as exc:
        raise _bad_request(exc)
    return sc.PowerLawFitResponse(a=fit.a, b=fit.b, exponent=fit.exponent, residual=fit.residual)


@app.post("/qubo/build", response_model=sc.QuboResponse)
def build(req: sc.BuildQuboRequest) -> sc.QuboResponse:
    g = _graph(req.graph)
    try:
        p = qubo.build_qubo(g, _coeffs(req.coefficients), req.start, req.end)
    except qubo.QuboError as exc:
        raise _bad_request(exc)
    return sc.QuboResponse(qubo=qubo.store_qubo(p), n=p.n, start=p.start, end=p.end)


@app.post("/qubo/energy", response_model=sc.EnergyResponse)
def qubo_energy(req: sc.EnergyRequest) -> sc.EnergyResponse:
    p = _qubo(req.qubo)
    try:
        value = qubo.energy(p, req.bits)
    except qubo.QuboError as exc:
        raise _bad_request(exc)
    return sc.EnergyResponse(energy=value)


@app.post("/qubo/ising", response_model=sc.IsingResponse)
def to_ising(req: sc.SolveExactRequest) -> sc.IsingResponse:
    ising = qubo.to_ising(_qubo(req.qubo))
    return sc.IsingResponse(
        h=list(ising.h),
        j=[(i, k, v) for (i, k), v in sorted(ising.j.items())],
        offset=ising.offset,
    )


@app.post("/solve/exact", response_model=sc.SampleTableResponse)
def solve_exact(req: sc.SolveExactRequest) -> sc.SampleTableResponse:
    try:
        table = solvers.solve_exact(_qubo(req.qubo), top_k=req.top_k)
    except solvers.SolverError as exc:
        raise _bad_request(exc)
    return _table_response(table)


@app.post("/solve/sa", response_model=sc.SampleTableResponse)
def solve_sa(req: sc.SampleSaRequest) -> sc.SampleTableResponse:
    try:
        table = solvers.sample_sa(
            _qubo(req.qubo),
            reads=req.reads,
            sweeps=req.sweeps,
            beta_start=req.beta_start,
            beta_end=req.beta_end,
            seed=req.seed,
        )
    except solvers.SolverError as exc:
        raise _bad_request(exc)
    return _table_response(table)


@app.post("/path/decode", response_model=sc.DecodeResponse)
def decode(req: sc.DecodeRequest) -> sc.DecodeResponse:
    g = _graph(req.graph)
    if len(req.bits) != g.vertex_count:
        raise _bad_request(ValueError("bit vector length does not match vertex count"))
    res = solvers.decode_path(g, req.bits, req.start, req.end)
    return sc.DecodeResponse(
        valid=res.valid,
        vertices=list(res.vertices) if res.vertices else None,
        total_weight=res.total_weight,
        failure_reason=res.failure_reason.value if res.failure_reason else None,
    )


@app.post("/analyze", response_model=sc.AnalyzeResponse)
def analyze(req: sc.AnalyzeRequest) -> sc.AnalyzeResponse:
    g = _graph(req.graph)
    try:
        rep = solvers.analyze_formulation(g, _coeffs(req.coefficients), req.start, req.end)
    except (solvers.SolverError, qubo.QuboError) as exc:
        raise _bad_request(exc)
    return _report_response(rep)


@app.post("/analyze/sweep", response_model=sc.SweepResponse)
def sweep(req: sc.SweepRequest) -> sc.SweepResponse:
    g = _graph(req.graph)
    grid = solvers.coefficient_grid(req.alphas, req.betas, req.gammas, req.deltas)
    try:
        results = solvers.coefficient_sweep(g, grid, req.start, req.end)
    except (solvers.SolverError, qubo.QuboError) as exc:
        raise _bad_request(exc)
    entries = [
        sc.SweepEntry(
            coefficients=sc.Coefficients(
                alpha=c.alpha, beta=c.beta, gamma_q=c.gamma_q, delta=c.delta
            ),
            report=_report_response(rep),
        )
        for c, rep in results
    ]
    return sc.SweepResponse(entries=entries)


_SSSP = {"dijkstra", "dijkstra_dense", "bellman_ford"}
_APSP = {"floyd_warshall", "minplus"}


@app.post("/baseline/{algorithm}")
def baseline(algorithm: str, req: sc.BaselineRequest):
    g = _graph(req.graph)
    try:
        result, elapsed = baselines.timed_run(algorithm, g, req.source)
    except baselines.BaselineError as exc:
        raise _bad_request(exc)
    if algorithm in _SSSP:
        dist, pred = result
        return sc.BaselineResponse(
            distances=[None if math.isinf(d) else d for d in dist],
            predecessors=pred,
            wall_seconds=elapsed,
        )
    matrix = [[None if math.isinf(x) else float(x) for x in row] for row in result.d]
    return sc.MatrixResponse(n=result.n, distances=matrix, wall_seconds=elapsed)


@app.post("/spectrum/gap", response_model=sc.GapResponse)
def gap(req: sc.GapRequest) -> sc.GapResponse:
    try:
        profile = spectrum.gap_profile(_qubo(req.qubo), grid_points=req.grid_points)
    except spectrum.SpectrumError as exc:
        raise _bad_request(exc)
    return sc.GapResponse(
        s_grid=list(profile.s_grid),
        gaps=list(profile.gaps),
        min_gap=profile.min_gap,
        min_gap_s=profile.min_gap_s,
        tau_estimate=profile.tau_estimate,
        degenerate=profile.degenerate,
    )


@app.post("/chimera/feasibility", response_model=sc.FeasibilityResponse)
def feasibility(req: sc.FeasibilityRequest) -> sc.FeasibilityResponse:
    g = _graph(req.graph)
    try:
        topo = build_chimera(req.rows, req.cols, req.shore)
    except ChimeraError as exc:
        raise _bad_request(exc)
    rep = check_feasibility(g, topo)
    return sc.FeasibilityResponse(
        logical_vars=rep.logical_vars,
        required_qubits=rep.required_qubits,
        available_qubits=rep.available_qubits,
        fits=rep.fits,
        max_graph_degree=rep.max_graph_degree,
        degree_warning=rep.degree_warning,
    )


def _bench_response(records: list[bench.BenchRecord]) -> sc.BenchResponse:
    models = [sc.BenchRecordModel(**r.__dict__) for r in records]
    return sc.BenchResponse(records=models, csv=bench.emit_records_csv(records))


@app.post("/bench/vertices", response_model=sc.BenchResponse)
def bench_vertices(req: sc.BenchVerticesRequest) -> sc.BenchResponse:
    graph_params = {"model": req.graph_model, "n": req.ba_n, "p": req.er_p}
    try:
        records = bench.bench_vertices(
            req.sizes,
            req.algorithms,
            graph_params=graph_params,
            seeds=req.seeds,
            sa_params={"reads": req.sa_reads, "sweeps": req.sa_sweeps},
        )
    except bench.BenchError as exc:
        raise _bad_request(exc)
    return _bench_response(records)


@app.post("/bench/edges", response_model=sc.BenchResponse)
def bench_edges(req: sc.BenchEdgesRequest) -> sc.BenchResponse:
    try:
        records = bench.bench_edge_probability(
            req.vertex_count,
            req.probs,
            req.algorithms,
            seeds=req.seeds,
            sa_params={"reads": req.sa_reads, "sweeps": req.sa_sweeps},
        )
    except bench.BenchError as exc:
        raise _bad_request(exc)
    return _bench_response(records)


@app.post("/fit", response_model=sc.FitResponse)
def fit(req: sc.FitRequest) -> sc.FitResponse:
    records = [bench.BenchRecord(**m.model_dump()) for m in req.records]
    fits = []
    try:
        for model in req.models:
            f = bench.fit_runtime(records, model)
            fits.append(sc.FitEntry(model=f.model, a=f.a, b=f.b, sse=f.sse))
    except bench.BenchError as exc:
        raise _bad_request(exc)
    return sc.FitResponse(fits=fits)


@app.post("/plot", response_model=sc.PlotResponse)
def plot(req: sc.PlotRequest) -> sc.PlotResponse:
    try:
        svg = bench.emit_svg(req.series, x_label=req.x_label, y_label=req.y_label)
    except bench.BenchError as exc:
        raise _bad_request(exc)
    return sc.PlotResponse(svg=svg)
