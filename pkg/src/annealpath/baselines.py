"""Classical shortest-path algorithms used as oracles and benchmark opponents."""

from __future__ import annotations

import heapq
import math
import time
from dataclasses import dataclass

import numpy as np

from .graphs import Graph

INF = math.inf


class BaselineError(ValueError):
    pass


def dijkstra(g: Graph, source: int) -> tuple[list[float], list[int | None]]:
    """Binary-heap Dijkstra. Returns (distances, predecessors); unreachable = inf."""
    n = g.vertex_count
    if not 0 <= source < n:
        raise BaselineError(f"source {source} out of range")
    dist: list[float] = [INF] * n
    pred: list[int | None] = [None] * n
    dist[source] = 0.0
    heap = [(0.0, source)]
    while heap:
        d, v = heapq.heappop(heap)
        if d > dist[v]:
            continue
        for u, w in g.neighbors(v).items():
            nd = d + w
            if nd < dist[u]:
                dist[u] = nd
                pred[u] = v
                heapq.heappush(heap, (nd, u))
    return dist, pred


def dijkstra_dense(g: Graph, source: int) -> tuple[list[float], list[int | None]]:
    """Array-scan Dijkstra, the O(V^2) textbook variant."""
    n = g.vertex_count
    if not 0 <= source < n:
        raise BaselineError(f"source {source} out of range")
    dist: list[float] = [INF] * n
    pred: list[int | None] = [None] * n
    dist[source] = 0.0
    done = [False] * n
    for _ in range(n):
        v = -1
        best = INF
        for i in range(n):
            if not done[i] and dist[i] < best:
                best, v = dist[i], i
        if v < 0:
            break
        done[v] = True
        for u, w in g.neighbors(v).items():
            nd = dist[v] + w
            if nd < dist[u]:
                dist[u] = nd
                pred[u] = v
    return dist, pred


def bellman_ford(g: Graph, source: int) -> tuple[list[float], list[int | None]]:
    """Edge-relaxation shortest paths; weights are positive so no cycle check."""
    n = g.vertex_count
    if not 0 <= source < n:
        raise BaselineError(f"source {source} out of range")
    dist: list[float] = [INF] * n
    pred: list[int | None] = [None] * n
    dist[source] = 0.0
    for _ in range(n - 1):
        changed = False
        for u, v, w in g.edges:
            if dist[u] + w < dist[v]:
                dist[v] = dist[u] + w
                pred[v] = u
                changed = True
            if dist[v] + w < dist[u]:
                dist[u] = dist[v] + w
                pred[u] = v
                changed = True
        if not changed:
            break
    return dist, pred


@dataclass(frozen=True)
class DistanceMatrix:
    """All-pairs distances; inf marks unreachable pairs, zero diagonal."""

    n: int
    d: np.ndarray

    def to_csv(self) -> str:
        lines = []
        for row in self.d:
            lines.append(",".join("inf" if math.isinf(x) else f"{x:g}" for x in row))
        return "\n".join(lines) + "\n"


def weight_matrix(g: Graph) -> DistanceMatrix:
    """One-step distance matrix: edge weights, inf for non-edges, 0 diagonal."""
    n = g.vertex_count
    d = np.full((n, n), INF)
    np.fill_diagonal(d, 0.0)
    for u, v, w in g.edges:
        d[u, v] = w
        d[v, u] = w
    return DistanceMatrix(n, d)


def floyd_warshall(g: Graph) -> DistanceMatrix:
    d = weight_matrix(g).d.copy()
    n = g.vertex_count
    for k in range(n):
        np.minimum(d, d[:, k, None] + d[None, k, :], out=d)
    return DistanceMatrix(n, d)


def minplus_product(x: DistanceMatrix, y: DistanceMatrix) -> DistanceMatrix:
    """Tropical matrix product: out[i][j] = min_k x[i][k] + y[k][j]."""
    if x.n != y.n:
        raise BaselineError(f"dimension mismatch {x.n} vs {y.n}")
    n = x.n
    out = np.empty((n, n))
    for i in range(n):
        out[i] = np.min(x.d[i][:, None] + y.d, axis=0)
    return DistanceMatrix(n, out)


def apsp_minplus(g: Graph) -> DistanceMatrix:
    """All-pairs shortest paths via repeated min-plus squaring."""
    m = weight_matrix(g)
    steps = max(1, math.ceil(math.log2(max(2, g.vertex_count))))
    for _ in range(steps):
        m = minplus_product(m, m)
    return m


def reconstruct_path(pred: list[int | None], source: int, target: int) -> list[int] | None:
    """Walk predecessors back from target; None if unreachable."""
    if target == source:
        return [source]
    if pred[target] is None:
        return None
    path = [target]
    v = target
    while v != source:
        v = pred[v]
        if v is None:
            return None
        path.append(v)
    return path[::-1]


ALGORITHMS = {
    "dijkstra": dijkstra,
    "dijkstra_dense": dijkstra_dense,
    "bellman_ford": bellman_ford,
}


def timed_run(algorithm: str, g: Graph, source: int = 0):
    """Run a named algorithm and return (result, wall_seconds, monotonic)."""
    if algorithm in ALGORITHMS:
        fn = ALGORITHMS[algorithm]
        t0 = time.perf_counter()
        result = fn(g, source)
        elapsed = time.perf_counter() - t0
    elif algorithm == "floyd_warshall":
        t0 = time.perf_counter()
        result = floyd_warshall(g)
        elapsed = time.perf_counter() - t0
    elif algorithm == "minplus":
        t0 = time.perf_counter()
        result = apsp_minplus(g)
        elapsed = time.perf_counter() - t0
    else:
        raise BaselineError(f"unknown algorithm {algorithm!r}")
    return result, elapsed
