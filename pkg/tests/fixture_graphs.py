"""Shared test graphs.

G1: 8 vertices, 14 unit edges; the unique two-edge route from 0 to 7 runs
through vertex 6, and (0, 7) is not an edge. With default coefficients the
encoding has a single ground state at {0, 6, 7} with energy -6, and the
bare endpoint pair {0, 7} sits at -5.

G2: 8 vertices, 12 unit edges with an automorphism swapping vertices 1 and
2; the routes 0-1-7 and 0-2-7 are vertex-disjoint and are the exactly two
ground states, both at -6.
"""

from annealpath.graphs import Graph

G1_EDGES = [
    (0, 2), (0, 4), (0, 6), (6, 7), (2, 6), (4, 6), (1, 2),
    (1, 3), (3, 4), (1, 5), (3, 5), (4, 5), (2, 3), (5, 6),
]
G2_EDGES = [
    (0, 1), (1, 7), (0, 2), (2, 7), (0, 3), (3, 4),
    (4, 5), (5, 6), (6, 7), (1, 6), (2, 6), (3, 5),
]

START, END = 0, 7

G1_GROUND_STATE = (1, 0, 0, 0, 0, 0, 1, 1)
G2_GROUND_STATES = ((1, 0, 1, 0, 0, 0, 0, 1), (1, 1, 0, 0, 0, 0, 0, 1))


def fixture_g1() -> Graph:
    return Graph.from_edges(8, [(u, v, 1) for u, v in G1_EDGES])


def fixture_g2() -> Graph:
    return Graph.from_edges(8, [(u, v, 1) for u, v in G2_EDGES])


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1, 1) for i in range(n - 1)])


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, j, 1) for i in range(n) for j in range(i + 1, n)])
