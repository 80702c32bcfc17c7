"""Undirected weighted graphs, random generators, and degree statistics.

Graphs are immutable: every mutating operation returns a new instance.
Edge weights are integers in {1, 2, 3}; weight 0 means "no edge" and is
never stored.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property

import numpy as np
from scipy.optimize import curve_fit

Edge = tuple[int, int, int]

MIN_WEIGHT = 1
MAX_WEIGHT = 3


class GraphError(ValueError):
    """Invalid graph construction or mutation."""


class GraphParseError(GraphError):
    """Edge-list text could not be parsed; carries the offending line number."""

    def __init__(self, line_no: int, message: str):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


@dataclass(frozen=True)
class Graph:
    """Undirected weighted graph with 0-indexed vertices.

    ``edges`` holds each pair once as (u, v, w) with u < v, sorted by (u, v).
    """

    vertex_count: int
    edges: tuple[Edge, ...]

    @staticmethod
    def from_edges(vertex_count: int, edges) -> "Graph":
        """Validate and canonicalize an edge iterable into a Graph."""
        if vertex_count <= 0:
            raise GraphError("vertex_count must be positive")
        seen: set[tuple[int, int]] = set()
        canon: list[Edge] = []
        for u, v, w in edges:
            _check_edge(vertex_count, u, v, w)
            key = (min(u, v), max(u, v))
            if key in seen:
                raise GraphError(f"duplicate edge {key}")
            seen.add(key)
            canon.append((key[0], key[1], int(w)))
        canon.sort()
        return Graph(vertex_count, tuple(canon))

    @staticmethod
    def empty(vertex_count: int) -> "Graph":
        return Graph.from_edges(vertex_count, [])

    @cached_property
    def _adjacency(self) -> dict[int, dict[int, int]]:
        adj: dict[int, dict[int, int]] = {v: {} for v in range(self.vertex_count)}
        for u, v, w in self.edges:
            adj[u][v] = w
            adj[v][u] = w
        return adj

    def neighbors(self, v: int) -> dict[int, int]:
        """Map neighbor -> edge weight."""
        return self._adjacency[v]

    def weight(self, u: int, v: int) -> int:
        """Edge weight, 0 if the pair is not connected."""
        return self._adjacency[u].get(v, 0)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adjacency[u]

    def degree(self, v: int) -> int:
        return len(self._adjacency[v])

    def degrees(self) -> np.ndarray:
        deg = np.zeros(self.vertex_count, dtype=np.int64)
        for u, v, _ in self.edges:
            deg[u] += 1
            deg[v] += 1
        return deg

    def adjacency_matrix(self) -> np.ndarray:
        """Dense symmetric weight matrix (0 = no edge)."""
        a = np.zeros((self.vertex_count, self.vertex_count), dtype=np.int64)
        for u, v, w in self.edges:
            a[u, v] = w
            a[v, u] = w
        return a


def _check_edge(vertex_count: int, u: int, v: int, w: int) -> None:
    if not (0 <= u < vertex_count and 0 <= v < vertex_count):
        raise GraphError(f"vertex out of range in edge ({u}, {v})")
    if u == v:
        raise GraphError(f"self-loop at vertex {u}")
    if not (MIN_WEIGHT <= w <= MAX_WEIGHT):
        raise GraphError(f"weight {w} outside {{1, 2, 3}}")


def add_edge(g: Graph, u: int, v: int, w: int) -> Graph:
    """Return a new graph with edge (u, v, w) added."""
    _check_edge(g.vertex_count, u, v, w)
    if g.has_edge(u, v):
        raise GraphError(f"duplicate edge ({u}, {v})")
    return Graph.from_edges(g.vertex_count, list(g.edges) + [(u, v, w)])


def generate_ba(n0: int, n: int, total_vertices: int, seed: int) -> Graph:
    """Barabási-Albert preferential-attachment graph, all weights 1.

    Starts from a complete graph on the first n0 vertices; each later vertex
    attaches n edges to n distinct existing vertices, chosen with probability
    proportional to current degree. Deterministic per seed.
    """
    if n <= 0 or n0 <= 0:
        raise GraphError("n and n0 must be positive")
    if n > n0:
        raise GraphError(f"n={n} exceeds seed size n0={n0}")
    if total_vertices < n0:
        raise GraphError(f"total_vertices={total_vertices} below n0={n0}")
    rng = np.random.default_rng(seed)
    edges: list[Edge] = [(i, j, 1) for i in range(n0) for j in range(i + 1, n0)]
    deg = np.zeros(total_vertices, dtype=np.float64)
    deg[:n0] = n0 - 1
    for v in range(n0, total_vertices):
        pool = deg[:v]
        targets: set[int] = set()
        while len(targets) < n:
            t = int(rng.choice(v, p=pool / pool.sum()))
            if t not in targets:
                targets.add(t)
        for t in sorted(targets):
            edges.append((t, v, 1))
            deg[t] += 1
        deg[v] = n
    return Graph.from_edges(total_vertices, edges)


def generate_er(total_vertices: int, p: float, seed: int) -> Graph:
    """Erdős-Rényi G(V, p) graph: each pair drawn independently, weights 1."""
    if not 0.0 <= p <= 1.0:
        raise GraphError(f"edge probability {p} outside [0, 1]")
    rng = np.random.default_rng(seed)
    iu, ju = np.triu_indices(total_vertices, k=1)
    mask = rng.random(iu.size) < p
    edges = [(int(u), int(v), 1) for u, v in zip(iu[mask], ju[mask])]
    return Graph.from_edges(total_vertices, edges)


def reweight(g: Graph, seed: int) -> Graph:
    """Assign each edge an independent uniform weight from {1, 2, 3}."""
    rng = np.random.default_rng(seed)
    weights = rng.integers(MIN_WEIGHT, MAX_WEIGHT + 1, size=len(g.edges))
    edges = [(u, v, int(w)) for (u, v, _), w in zip(g.edges, weights)]
    return Graph.from_edges(g.vertex_count, edges)


@dataclass(frozen=True)
class DegreeHistogram:
    """Empirical degree distribution: degree -> fraction of vertices."""

    entries: dict[int, float]
    sample_count: int

    def to_csv(self) -> str:
        lines = ["k,p"]
        lines += [f"{k},{p}" for k, p in sorted(self.entries.items())]
        return "\n".join(lines) + "\n"


def degree_distribution(g: Graph) -> DegreeHistogram:
    deg = g.degrees()
    values, counts = np.unique(deg, return_counts=True)
    entries = {int(k): int(c) / g.vertex_count for k, c in zip(values, counts)}
    return DegreeHistogram(entries, g.vertex_count)


@dataclass(frozen=True)
class PowerLawFit:
    """Parameters of a least-squares fit p(k) ~ 1 / (a*k + b)^exponent."""

    a: float
    b: float
    exponent: float
    residual: float

    def to_csv(self) -> str:
        return (
            "param,value\n"
            f"a,{self.a}\nb,{self.b}\nexponent,{self.exponent}\n"
            f"residual,{self.residual}\n"
        )


def fit_power_law(hist: DegreeHistogram, exponent: float = 3.0) -> PowerLawFit:
    """Fit p(k) ~ 1/(a*k + b)^exponent over nonzero histogram entries.

    Unweighted least squares in linear space. The initial guess comes from
    the exact linearization p^(-1/exponent) = a*k + b.
    """
    pts = sorted((k, p) for k, p in hist.entries.items() if p > 0)
    if len(pts) < 3:
        raise GraphError("power-law fit needs at least 3 distinct nonzero degrees")
    k = np.array([q[0] for q in pts], dtype=np.float64)
    p = np.array([q[1] for q in pts], dtype=np.float64)

    a0, b0 = np.polyfit(k, p ** (-1.0 / exponent), 1)

    def model(x, a, b):
        base = a * x + b
        return np.where(base > 1e-12, base, 1e-12) ** (-exponent)

    try:
        (a, b), _ = curve_fit(model, k, p, p0=(a0, b0), maxfev=20000)
    except RuntimeError:
        a, b = a0, b0
    residual = float(np.sum((model(k, a, b) - p) ** 2))
    return PowerLawFit(float(a), float(b), float(exponent), residual)


def store_graph(g: Graph) -> str:
    """Serialize to edge-list text: vertex count, then 'u v w' lines."""
    lines = [str(g.vertex_count)]
    lines += [f"{u} {v} {w}" for u, v, w in g.edges]
    return "\n".join(lines) + "\n"


def load_graph(text: str) -> Graph:
    """Parse the edge-list format produced by :func:`store_graph`."""
    lines = text.splitlines()
    if not lines or not lines[0].strip():
        raise GraphParseError(1, "missing vertex count")
    try:
        vertex_count = int(lines[0])
    except ValueError:
        raise GraphParseError(1, f"bad vertex count {lines[0]!r}") from None
    edges: list[Edge] = []
    seen: set[tuple[int, int]] = set()
    for line_no, line in enumerate(lines[1:], start=2):
        if not line.strip():
            continue
        parts = line.split()
        if len(parts) != 3:
            raise GraphParseError(line_no, f"expected 'u v w', got {line!r}")
        try:
            u, v, w = (int(x) for x in parts)
        except ValueError:
            raise GraphParseError(line_no, f"non-integer field in {line!r}") from None
        try:
            _check_edge(vertex_count, u, v, w)
        except GraphError as exc:
            raise GraphParseError(line_no, str(exc)) from None
        key = (min(u, v), max(u, v))
        if key in seen:
            raise GraphParseError(line_no, f"duplicate edge {key}")
        seen.add(key)
        edges.append((key[0], key[1], w))
    return Graph.from_edges(vertex_count, edges)


def graph_hash(g: Graph) -> str:
    """Short stable identifier of the canonical edge list."""
    import hashlib

    return hashlib.sha256(store_graph(g).encode()).hexdigest()[:16]


def is_connected(g: Graph) -> bool:
    """True if every vertex is reachable from vertex 0."""
    if g.vertex_count == 0:
        return True
    seen = {0}
    stack = [0]
    while stack:
        v = stack.pop()
        for u in g.neighbors(v):
            if u not in seen:
                seen.add(u)
                stack.append(u)
    return len(seen) == g.vertex_count


def edge_count_ba(n0: int, n: int, total_vertices: int) -> int:
    """Exact BA edge count: seed-clique edges plus n per grown vertex."""
    return math.comb(n0, 2) + n * (total_vertices - n0)
