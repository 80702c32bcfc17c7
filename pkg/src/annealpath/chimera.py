"""Chimera hardware-topology model and embedding feasibility checks.

Only feasibility arithmetic lives here (qubit budget 3 per logical
variable, degree warnings); actual minor embedding is out of scope.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import Graph

QUBITS_PER_VARIABLE = 3
DEGREE_WARNING_THRESHOLD = 5


class ChimeraError(ValueError):
    pass


@dataclass(frozen=True)
class ChimeraTopology:
    """Grid of K_{shore,shore} unit cells with aligned inter-cell couplers."""

    rows: int
    cols: int
    shore: int
    qubits: int
    couplers: tuple[tuple[int, int], ...]


def _qubit_index(r: int, c: int, side: int, k: int, cols: int, shore: int) -> int:
    return ((r * cols + c) * 2 + side) * shore + k


def chimera(rows: int, cols: int, shore: int = 4) -> ChimeraTopology:
    """Build a rows x cols Chimera graph with the given shore size.

    Within a cell, side-0 qubits couple to every side-1 qubit. Vertically
    adjacent cells link corresponding side-0 qubits; horizontally adjacent
    cells link corresponding side-1 qubits.
    """
    if rows <= 0 or cols <= 0 or shore <= 0:
        raise ChimeraError("rows, cols, and shore must be positive")
    couplers: list[tuple[int, int]] = []
    for r in range(rows):
        for c in range(cols):
            for a in range(shore):
                for b in range(shore):
                    couplers.append(
                        (
                            _qubit_index(r, c, 0, a, cols, shore),
                            _qubit_index(r, c, 1, b, cols, shore),
                        )
                    )
            if r + 1 < rows:
                for k in range(shore):
                    couplers.append(
                        (
                            _qubit_index(r, c, 0, k, cols, shore),
                            _qubit_index(r + 1, c, 0, k, cols, shore),
                        )
                    )
            if c + 1 < cols:
                for k in range(shore):
                    couplers.append(
                        (
                            _qubit_index(r, c, 1, k, cols, shore),
                            _qubit_index(r, c + 1, 1, k, cols, shore),
                        )
                    )
    couplers = [(min(a, b), max(a, b)) for a, b in couplers]
    couplers.sort()
    return ChimeraTopology(rows, cols, shore, rows * cols * 2 * shore, tuple(couplers))


def topology_edge_list(topo: ChimeraTopology) -> str:
    """Export the coupler graph in the shared edge-list text format."""
    lines = [str(topo.qubits)]
    lines += [f"{a} {b} 1" for a, b in topo.couplers]
    return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class FeasibilityReport:
    logical_vars: int
    required_qubits: int
    available_qubits: int
    fits: bool
    max_graph_degree: int
    degree_warning: bool

    def to_text(self) -> str:
        return (
            f"logical_vars={self.logical_vars}\n"
            f"required_qubits={self.required_qubits}\n"
            f"available_qubits={self.available_qubits}\n"
            f"fits={self.fits}\n"
            f"max_graph_degree={self.max_graph_degree}\n"
            f"degree_warning={self.degree_warning}\n"
        )


def check_feasibility(g: Graph, topo: ChimeraTopology) -> FeasibilityReport:
    """Apply the 3-qubits-per-vertex budget and the degree warning threshold."""
    required = QUBITS_PER_VARIABLE * g.vertex_count
    max_degree = int(max(g.degrees(), default=0)) if g.vertex_count else 0
    return FeasibilityReport(
        logical_vars=g.vertex_count,
        required_qubits=required,
        available_qubits=topo.qubits,
        fits=required <= topo.qubits,
        max_graph_degree=max_degree,
        degree_warning=max_degree > DEGREE_WARNING_THRESHOLD,
    )
