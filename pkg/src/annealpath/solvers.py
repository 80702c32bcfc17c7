"""Exact enumeration, simulated-annealing sampling, path decoding, and
formulation validation for shortest-path QUBO problems."""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .baselines import dijkstra
from .graphs import Graph
from .qubo import (
    CoefficientSet,
    QuboProblem,
    all_state_energies,
    bits_of_index,
    build_qubo,
    energy,
)

EXACT_CAP = 24


class SolverError(ValueError):
    pass


@dataclass(frozen=True)
class SampleRow:
    energy: float
    bits: tuple[int, ...]
    occurrences: int


@dataclass(frozen=True)
class SampleTable:
    """Aggregated solver output, sorted by ascending energy then state."""

    rows: tuple[SampleRow, ...]
    total_reads: int

    def min_energy(self) -> float:
        return self.rows[0].energy

    def ground_states(self, tol: float = 1e-9) -> list[tuple[int, ...]]:
        e0 = self.min_energy()
        return [r.bits for r in self.rows if r.energy <= e0 + tol]

    def frequency(self, bits) -> float:
        target = tuple(int(b) for b in bits)
        occ = sum(r.occurrences for r in self.rows if r.bits == target)
        return occ / self.total_reads

    def to_csv(self) -> str:
        # bitstring written MSB = vertex 0
        lines = ["energy,bitstring,occurrences"]
        for r in self.rows:
            bitstring = "".join(str(b) for b in r.bits)
            lines.append(f"{r.energy},{bitstring},{r.occurrences}")
        return "\n".join(lines) + "\n"


def _make_table(counter: Counter, energies: dict[tuple[int, ...], float], total: int) -> SampleTable:
    rows = [SampleRow(energies[b], b, c) for b, c in counter.items()]
    rows.sort(key=lambda r: (r.energy, r.bits))
    return SampleTable(tuple(rows), total)


def solve_exact(p: QuboProblem, top_k: int | None = None) -> SampleTable:
    """Enumerate all 2^n states; optionally keep only the top_k lowest."""
    if p.n > EXACT_CAP:
        raise SolverError(f"n={p.n} exceeds exhaustive cap {EXACT_CAP}")
    energies = all_state_energies(p)
    size = energies.size
    if top_k is not None and top_k < size:
        part = np.argpartition(energies, top_k)[:top_k]
        indices = part
    else:
        indices = np.arange(size)
    rows = [SampleRow(float(energies[b]), bits_of_index(int(b), p.n), 1) for b in indices]
    rows.sort(key=lambda r: (r.energy, r.bits))
    return SampleTable(tuple(rows), len(rows))


def sample_sa(
    p: QuboProblem,
    reads: int = 1000,
    sweeps: int = 1000,
    beta_start: float = 0.1,
    beta_end: float = 10.0,
    seed: int = 0,
) -> SampleTable:
    """Independent single-flip Metropolis annealing chains.

    Each read draws its randomness from a dedicated stream seeded by
    (seed, read_index): the per-read results do not depend on execution
    order. A sweep is n flip proposals; the inverse temperature follows a
    geometric schedule from beta_start to beta_end across sweeps.
    """
    if reads < 1 or sweeps < 1:
        raise SolverError("reads and sweeps must be >= 1")
    if not (0 < beta_start < beta_end):
        raise SolverError("need 0 < beta_start < beta_end")

    n = p.n
    diag, off = p.dense()
    steps = sweeps * n
    if sweeps == 1:
        betas = np.full(1, beta_end)
    else:
        betas = beta_start * (beta_end / beta_start) ** (np.arange(sweeps) / (sweeps - 1))
    beta_per_step = np.repeat(betas, n)

    # Per-read streams, drawn in a fixed order: initial state, proposal
    # indices, acceptance uniforms.
    states = np.empty((reads, n), dtype=np.int64)
    proposals = np.empty((reads, steps), dtype=np.int64)
    uniforms = np.empty((reads, steps))
    for r in range(reads):
        rng = np.random.default_rng([seed, r])
        states[r] = rng.integers(0, 2, size=n)
        proposals[r] = rng.integers(0, n, size=steps)
        uniforms[r] = rng.random(steps)

    s = states.astype(np.float64)
    rows = np.arange(reads)
    for t in range(steps):
        i = proposals[:, t]
        local = np.einsum("rn,rn->r", off[i], s) + diag[i]
        de = (1.0 - 2.0 * s[rows, i]) * local
        accept = (de <= 0.0) | (uniforms[:, t] < np.exp(-beta_per_step[t] * np.minimum(de, 700.0)))
        flip = rows[accept]
        s[flip, i[accept]] = 1.0 - s[flip, i[accept]]

    finals = s.astype(np.int64)
    counter: Counter = Counter(tuple(int(b) for b in row) for row in finals)
    energies = {b: energy(p, b) for b in counter}
    return _make_table(counter, energies, reads)


class PathFailure(str, Enum):
    NOT_A_PATH = "not_a_path"
    ENDPOINTS_MISSING = "endpoints_missing"
    DISCONNECTED = "disconnected"
    BRANCHING = "branching"
    CYCLE = "cycle"


@dataclass(frozen=True)
class PathResult:
    valid: bool
    vertices: tuple[int, ...] | None = None
    total_weight: int | None = None
    failure_reason: PathFailure | None = None


def decode_path(g: Graph, bits, start: int, end: int) -> PathResult:
    """Interpret a binary state as a start-end path.

    Valid iff the subgraph induced by the selected vertices is a simple path
    whose two endpoints are exactly start and end.
    """
    s = [v for v, b in enumerate(bits) if b]
    selected = set(s)
    if start not in selected or end not in selected:
        return PathResult(False, failure_reason=PathFailure.ENDPOINTS_MISSING)

    induced = {v: [u for u in g.neighbors(v) if u in selected] for v in selected}
    degs = {v: len(nbrs) for v, nbrs in induced.items()}
    if any(d > 2 for d in degs.values()):
        return PathResult(False, failure_reason=PathFailure.BRANCHING)
    if all(d == 2 for d in degs.values()):
        return PathResult(False, failure_reason=PathFailure.CYCLE)

    if degs[start] != 1:
        # start cannot be an endpoint of the induced path
        return _classify_invalid(induced, selected)
    order = [start]
    prev = None
    cur = start
    while True:
        nxt = [u for u in induced[cur] if u != prev]
        if not nxt:
            break
        prev, cur = cur, nxt[0]
        order.append(cur)
    if cur == end and len(order) == len(selected):
        weight = sum(g.weight(a, b) for a, b in itertools.pairwise(order))
        return PathResult(True, tuple(order), weight, None)
    return _classify_invalid(induced, selected)


def _classify_invalid(induced: dict[int, list[int]], selected: set[int]) -> PathResult:
    # connected induced subgraph that is not a start-end path vs. fragments
    root = next(iter(selected))
    seen = {root}
    stack = [root]
    while stack:
        v = stack.pop()
        for u in induced[v]:
            if u not in seen:
                seen.add(u)
                stack.append(u)
    if len(seen) != len(selected):
        return PathResult(False, failure_reason=PathFailure.DISCONNECTED)
    return PathResult(False, failure_reason=PathFailure.NOT_A_PATH)


@dataclass(frozen=True)
class ValidityReport:
    """Does the encoding's exact ground state decode to a true shortest path?"""

    argmin_states: tuple[tuple[int, ...], ...]
    min_energy: float
    decodes_to_shortest_path: bool
    true_shortest_weight: int | None
    decoded_weight: int | None
    endpoints_connected: bool = True

    def to_text(self) -> str:
        lines = [
            f"min_energy={self.min_energy}",
            f"decodes_to_shortest_path={self.decodes_to_shortest_path}",
            f"true_shortest_weight={self.true_shortest_weight}",
            f"decoded_weight={self.decoded_weight}",
            f"endpoints_connected={self.endpoints_connected}",
            f"argmin_states={['|'.join(map(str, s)) for s in self.argmin_states]}",
        ]
        return "\n".join(lines) + "\n"


def analyze_formulation(g: Graph, c: CoefficientSet, start: int, end: int) -> ValidityReport:
    """Check, exhaustively, whether every energy minimum is a shortest path."""
    if g.vertex_count > EXACT_CAP:
        raise SolverError(f"vertex count {g.vertex_count} exceeds cap {EXACT_CAP}")
    dist, _ = dijkstra(g, start)
    true_weight = dist[end]
    p = build_qubo(g, c, start, end)
    table = solve_exact(p)
    argmins = tuple(table.ground_states())
    min_energy = table.min_energy()
    if true_weight == float("inf"):
        return ValidityReport(argmins, min_energy, False, None, None, endpoints_connected=False)

    decoded_weight = None
    ok = True
    for state in argmins:
        res = decode_path(g, state, start, end)
        if not res.valid or res.total_weight != true_weight:
            ok = False
            break
        decoded_weight = res.total_weight
    if not ok:
        decoded_weight = None
    return ValidityReport(argmins, min_energy, ok, int(true_weight), decoded_weight)


def coefficient_sweep(
    g: Graph, grid, start: int, end: int
) -> list[tuple[CoefficientSet, ValidityReport]]:
    """Run :func:`analyze_formulation` at every grid point."""
    points = list(grid)
    if not points:
        raise SolverError("empty coefficient grid")
    return [(c, analyze_formulation(g, c, start, end)) for c in points]


def coefficient_grid(alphas, betas, gammas, deltas) -> list[CoefficientSet]:
    """Cartesian product helper for sweeps."""
    return [
        CoefficientSet(a, b, gq, d)
        for a in alphas
        for b in betas
        for gq in gammas
        for d in deltas
    ]
