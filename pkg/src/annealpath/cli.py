"""Command-line client for the annealpath service.

Every subcommand builds a request, sends it to the HTTP API, and renders
the response. By default the app is served in-process; pass --server to
talk to a running instance instead. All randomized commands require an
explicit --seed.
"""

from __future__ import annotations

import json
import sys

import click

from .bench import parse_records_csv


class _Client:
    """Thin POST wrapper over either a remote server or the in-process app."""

    def __init__(self, server: str | None):
        if server:
            import httpx

            self._client = httpx.Client(base_url=server, timeout=600.0)
        else:
            from fastapi.testclient import TestClient

            from .service import app

            self._client = TestClient(app)

    def post(self, path: str, payload: dict) -> dict:
        resp = self._client.post(path, json=payload)
        if resp.status_code != 200:
            try:
                detail = resp.json().get("detail", resp.text)
            except ValueError:
                detail = resp.text
            raise click.ClickException(f"{path}: {detail}")
        return resp.json()


def _write(text: str, out: str | None) -> None:
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _table_csv(data: dict) -> str:
    lines = ["energy,bitstring,occurrences"]
    lines += [f"{r['energy']},{r['bitstring']},{r['occurrences']}" for r in data["rows"]]
    return "\n".join(lines) + "\n"


def _floats(text: str) -> list[float]:
    return [float(x) for x in text.split(",") if x.strip()]


def _ints(text: str) -> list[int]:
    return [int(x) for x in text.split(",") if x.strip()]


@click.group()
@click.option("--server", default=None, help="Base URL of a running service; default runs in-process.")
@click.pass_context
def main(ctx, server):
    """Shortest-path QUBO toolkit."""
    ctx.obj = _Client(server)


@main.group()
def gen():
    """Generate random graphs."""


@gen.command("ba")
@click.option("--vertices", type=int, required=True)
@click.option("--n", type=int, default=2, show_default=True, help="Edges per new vertex.")
@click.option("--n0", type=int, default=None, help="Seed clique size (default: n).")
@click.option("--seed", type=int, required=True)
@click.option("--reweight-seed", type=int, default=None, help="Assign random weights from {1,2,3}.")
@click.option("--out", default=None)
@click.pass_obj
def gen_ba(client, vertices, n, n0, seed, reweight_seed, out):
    data = client.post(
        "/graph/generate",
        {
            "model": "ba",
            "total_vertices": vertices,
            "n": n,
            "n0": n0,
            "seed": seed,
            "reweight_seed": reweight_seed,
        },
    )
    _write(data["graph"], out)


@gen.command("er")
@click.option("--vertices", type=int, required=True)
@click.option("--p", type=float, required=True)
@click.option("--seed", type=int, required=True)
@click.option("--reweight-seed", type=int, default=None)
@click.option("--out", default=None)
@click.pass_obj
def gen_er(client, vertices, p, seed, reweight_seed, out):
    data = client.post(
        "/graph/generate",
        {
            "model": "er",
            "total_vertices": vertices,
            "p": p,
            "seed": seed,
            "reweight_seed": reweight_seed,
        },
    )
    _write(data["graph"], out)


@main.command()
@click.argument("graph_file", type=click.File())
@click.option("--seed", type=int, required=True)
@click.option("--out", default=None)
@click.pass_obj
def reweight(client, graph_file, seed, out):
    """Randomize edge weights over {1,2,3}."""
    data = client.post("/graph/reweight", {"graph": graph_file.read(), "seed": seed})
    _write(data["graph"], out)


def _coeff_options(fn):
    fn = click.option("--alpha", type=float, default=1.0, show_default=True)(fn)
    fn = click.option("--beta", type=float, default=1.0, show_default=True)(fn)
    fn = click.option("--gamma", type=float, default=2.0, show_default=True)(fn)
    fn = click.option("--delta", type=float, default=3.0, show_default=True)(fn)
    return fn


@main.command()
@click.argument("graph_file", type=click.File())
@click.option("--start", type=int, required=True)
@click.option("--end", type=int, required=True)
@_coeff_options
@click.option("--out", default=None)
@click.pass_obj
def build(client, graph_file, start, end, alpha, beta, gamma, delta, out):
    """Encode a start-end shortest-path QUBO."""
    data = client.post(
        "/qubo/build",
        {
            "graph": graph_file.read(),
            "start": start,
            "end": end,
            "coefficients": {"alpha": alpha, "beta": beta, "gamma_q": gamma, "delta": delta},
        },
    )
    _write(data["qubo"], out)


@main.group()
def solve():
    """Solve a QUBO problem."""


@solve.command("exact")
@click.argument("qubo_file", type=click.File())
@click.option("--top-k", type=int, default=None, help="Keep only the k lowest-energy states.")
@click.option("--out", default=None)
@click.pass_obj
def solve_exact_cmd(client, qubo_file, top_k, out):
    data = client.post("/solve/exact", {"qubo": qubo_file.read(), "top_k": top_k})
    _write(_table_csv(data), out)


@solve.command("sa")
@click.argument("qubo_file", type=click.File())
@click.option("--reads", type=int, default=1000, show_default=True)
@click.option("--sweeps", type=int, default=1000, show_default=True)
@click.option("--beta-start", type=float, default=0.1, show_default=True)
@click.option("--beta-end", type=float, default=10.0, show_default=True)
@click.option("--seed", type=int, required=True)
@click.option("--out", default=None)
@click.pass_obj
def solve_sa_cmd(client, qubo_file, reads, sweeps, beta_start, beta_end, seed, out):
    data = client.post(
        "/solve/sa",
        {
            "qubo": qubo_file.read(),
            "reads": reads,
            "sweeps": sweeps,
            "beta_start": beta_start,
            "beta_end": beta_end,
            "seed": seed,
        },
    )
    _write(_table_csv(data), out)


@main.command()
@click.argument("graph_file", type=click.File())
@click.option("--bits", required=True, help="Bitstring, MSB = vertex 0 (e.g. 10000011).")
@click.option("--start", type=int, required=True)
@click.option("--end", type=int, required=True)
@click.option("--out", default=None)
@click.pass_obj
def decode(client, graph_file, bits, start, end, out):
    """Decode a binary state into a path."""
    data = client.post(
        "/path/decode",
        {"graph": graph_file.read(), "bits": [int(b) for b in bits], "start": start, "end": end},
    )
    _write(json.dumps(data, indent=2) + "\n", out)


@main.command()
@click.argument("graph_file", type=click.File())
@click.option("--start", type=int, required=True)
@click.option("--end", type=int, required=True)
@_coeff_options
@click.option("--out", default=None)
@click.pass_obj
def analyze(client, graph_file, start, end, alpha, beta, gamma, delta, out):
    """Check whether the encoding's ground states are true shortest paths."""
    data = client.post(
        "/analyze",
        {
            "graph": graph_file.read(),
            "start": start,
            "end": end,
            "coefficients": {"alpha": alpha, "beta": beta, "gamma_q": gamma, "delta": delta},
        },
    )
    _write(json.dumps(data, indent=2) + "\n", out)


@main.command("sweep-coeffs")
@click.argument("graph_file", type=click.File())
@click.option("--start", type=int, required=True)
@click.option("--end", type=int, required=True)
@click.option("--alphas", default="1", show_default=True, help="Comma-separated values.")
@click.option("--betas", default="1", show_default=True)
@click.option("--gammas", default="2", show_default=True)
@click.option("--deltas", default="3", show_default=True)
@click.option("--out", default=None)
@click.pass_obj
def sweep_coeffs(client, graph_file, start, end, alphas, betas, gammas, deltas, out):
    """Grid-sweep the encoding coefficients and report validity per point."""
    data = client.post(
        "/analyze/sweep",
        {
            "graph": graph_file.read(),
            "start": start,
            "end": end,
            "alphas": _floats(alphas),
            "betas": _floats(betas),
            "gammas": _floats(gammas),
            "deltas": _floats(deltas),
        },
    )
    lines = ["alpha,beta,gamma,delta,min_energy,decodes_to_shortest_path"]
    for entry in data["entries"]:
        c = entry["coefficients"]
        r = entry["report"]
        lines.append(
            f"{c['alpha']},{c['beta']},{c['gamma_q']},{c['delta']},"
            f"{r['min_energy']},{r['decodes_to_shortest_path']}"
        )
    _write("\n".join(lines) + "\n", out)


_BASELINE_ALIASES = {
    "dijkstra": "dijkstra",
    "bellman": "bellman_ford",
    "floyd": "floyd_warshall",
    "minplus": "minplus",
}


@main.command()
@click.argument("algorithm", type=click.Choice(sorted(_BASELINE_ALIASES)))
@click.argument("graph_file", type=click.File())
@click.option("--source", type=int, default=0, show_default=True)
@click.option("--out", default=None)
@click.pass_obj
def baseline(client, algorithm, graph_file, source, out):
    """Run a classical shortest-path algorithm."""
    data = client.post(
        f"/baseline/{_BASELINE_ALIASES[algorithm]}",
        {"graph": graph_file.read(), "source": source},
    )
    if "distances" in data and data.get("predecessors") is not None:
        lines = ["vertex,distance,predecessor"]
        for v, (d, p) in enumerate(zip(data["distances"], data["predecessors"])):
            lines.append(f"{v},{'inf' if d is None else f'{d:g}'},{'' if p is None else p}")
        text = "\n".join(lines) + "\n"
    else:
        rows = data["distances"]
        text = "\n".join(
            ",".join("inf" if x is None else f"{x:g}" for x in row) for row in rows
        ) + "\n"
    _write(text, out)


@main.command()
@click.argument("qubo_file", type=click.File())
@click.option("--grid-points", type=int, default=201, show_default=True)
@click.option("--out", default=None)
@click.pass_obj
def gap(client, qubo_file, grid_points, out):
    """Spectral-gap profile along the anneal path."""
    data = client.post("/spectrum/gap", {"qubo": qubo_file.read(), "grid_points": grid_points})
    lines = ["s,gap"]
    lines += [f"{s},{g}" for s, g in zip(data["s_grid"], data["gaps"])]
    lines.append(f"min_gap,{data['min_gap']}")
    tau = data["tau_estimate"]
    lines.append(f"tau,{'' if tau is None else tau}")
    _write("\n".join(lines) + "\n", out)


@main.command()
@click.argument("graph_file", type=click.File())
@click.option("--rows", type=int, default=16, show_default=True)
@click.option("--cols", type=int, default=16, show_default=True)
@click.option("--shore", type=int, default=4, show_default=True)
@click.option("--out", default=None)
@click.pass_obj
def feas(client, graph_file, rows, cols, shore, out):
    """Chimera embedding feasibility (qubit budget and degree check)."""
    data = client.post(
        "/chimera/feasibility",
        {"graph": graph_file.read(), "rows": rows, "cols": cols, "shore": shore},
    )
    _write("".join(f"{k}={v}\n" for k, v in data.items()), out)


@main.group()
def bench():
    """Runtime benchmarks."""


@bench.command("vertices")
@click.option("--sizes", required=True, help="Comma-separated ascending vertex counts.")
@click.option("--algorithms", required=True, help="Comma-separated algorithm ids.")
@click.option("--seeds", default="0", show_default=True)
@click.option("--graph-model", type=click.Choice(["ba", "er"]), default="ba", show_default=True)
@click.option("--ba-n", type=int, default=2, show_default=True)
@click.option("--er-p", type=float, default=0.1, show_default=True)
@click.option("--sa-reads", type=int, default=100, show_default=True)
@click.option("--sa-sweeps", type=int, default=100, show_default=True)
@click.option("--out", default=None)
@click.pass_obj
def bench_vertices_cmd(client, sizes, algorithms, seeds, graph_model, ba_n, er_p, sa_reads, sa_sweeps, out):
    data = client.post(
        "/bench/vertices",
        {
            "sizes": _ints(sizes),
            "algorithms": algorithms.split(","),
            "seeds": _ints(seeds),
            "graph_model": graph_model,
            "ba_n": ba_n,
            "er_p": er_p,
            "sa_reads": sa_reads,
            "sa_sweeps": sa_sweeps,
        },
    )
    _write(data["csv"], out)


@bench.command("edges")
@click.option("--vertices", type=int, required=True)
@click.option("--probs", required=True, help="Comma-separated edge probabilities in (0,1].")
@click.option("--algorithms", required=True)
@click.option("--seeds", default="0", show_default=True)
@click.option("--sa-reads", type=int, default=100, show_default=True)
@click.option("--sa-sweeps", type=int, default=100, show_default=True)
@click.option("--out", default=None)
@click.pass_obj
def bench_edges_cmd(client, vertices, probs, algorithms, seeds, sa_reads, sa_sweeps, out):
    data = client.post(
        "/bench/edges",
        {
            "vertex_count": vertices,
            "probs": _floats(probs),
            "algorithms": algorithms.split(","),
            "seeds": _ints(seeds),
            "sa_reads": sa_reads,
            "sa_sweeps": sa_sweeps,
        },
    )
    _write(data["csv"], out)


@main.command()
@click.argument("records_file", type=click.File())
@click.option("--models", default="affine_log,affine_invsqrt", show_default=True)
@click.option("--out", default=None)
@click.pass_obj
def fit(client, records_file, models, out):
    """Fit runtime models to benchmark records."""
    records = parse_records_csv(records_file.read())
    data = client.post(
        "/fit",
        {"records": [r.__dict__ for r in records], "models": models.split(",")},
    )
    lines = ["model,a,b,sse"]
    lines += [f"{f['model']},{f['a']},{f['b']},{f['sse']}" for f in data["fits"]]
    _write("\n".join(lines) + "\n", out)


@main.command()
@click.argument("records_file", type=click.File())
@click.option("--x", "x_field", type=click.Choice(["input_size", "probability"]), default="input_size", show_default=True)
@click.option("--out", default=None)
@click.pass_obj
def plot(client, records_file, x_field, out):
    """Render benchmark records as an SVG line plot (one series per algorithm)."""
    records = parse_records_csv(records_file.read())
    series: dict[str, tuple[list[float], list[float]]] = {}
    for r in records:
        x = getattr(r, x_field)
        if x is None:
            raise click.ClickException(f"record for {r.algorithm} has no {x_field}")
        sx, sy = series.setdefault(r.algorithm, ([], []))
        sx.append(float(x))
        sy.append(r.wall_seconds)
    data = client.post("/plot", {"series": series, "x_label": x_field, "y_label": "t (s)"})
    _write(data["svg"], out)


@main.command()
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", type=int, default=8000, show_default=True)
def serve(host, port):
    """Run the HTTP service with uvicorn."""
    import uvicorn

    uvicorn.run("annealpath.service:app", host=host, port=port)


if __name__ == "__main__":
    main()
