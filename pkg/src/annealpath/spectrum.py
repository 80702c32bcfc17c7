"""Exact small-n spectra of the interpolated annealing Hamiltonian.

H(s) = (1 - s) * H_mix + s * H_problem, with the transverse-field mixer
H_mix = -sum_i X_i and H_problem diagonal in the computational basis, its
entries being the QUBO energies. Basis convention: bit i of the basis
index is variable i.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.linalg import eigvalsh

from .qubo import QuboProblem, all_state_energies

SPECTRUM_CAP = 12
DEGENERACY_TOL = 1e-10


class SpectrumError(ValueError):
    pass


def build_problem_hamiltonian(p: QuboProblem) -> np.ndarray:
    """Diagonal of the problem Hamiltonian: one QUBO energy per basis state."""
    if p.n > SPECTRUM_CAP:
        raise SpectrumError(f"n={p.n} exceeds spectrum cap {SPECTRUM_CAP}")
    return all_state_energies(p)


def mixer_hamiltonian(n: int) -> np.ndarray:
    """Dense matrix of -sum_i X_i: entry (b, b xor 2^i) is -1."""
    size = 1 << n
    h = np.zeros((size, size))
    idx = np.arange(size)
    for i in range(n):
        h[idx, idx ^ (1 << i)] = -1.0
    return h


def hamiltonian_at(p: QuboProblem, s: float) -> np.ndarray:
    """Dense symmetric H(s) for s in [0, 1]."""
    if not 0.0 <= s <= 1.0:
        raise SpectrumError(f"s={s} outside [0, 1]")
    if p.n > SPECTRUM_CAP:
        raise SpectrumError(f"n={p.n} exceeds spectrum cap {SPECTRUM_CAP}")
    hp = np.diag(build_problem_hamiltonian(p))
    return (1.0 - s) * mixer_hamiltonian(p.n) + s * hp


@dataclass(frozen=True)
class GapProfile:
    """Spectral gap along the anneal path plus the annealing-time estimate."""

    s_grid: tuple[float, ...]
    gaps: tuple[float, ...]
    min_gap: float
    min_gap_s: float
    tau_estimate: float | None
    degenerate: bool

    def to_csv(self) -> str:
        lines = ["s,gap"]
        lines += [f"{s},{g}" for s, g in zip(self.s_grid, self.gaps)]
        lines.append(f"min_gap,{self.min_gap}")
        lines.append(f"tau,{'' if self.tau_estimate is None else self.tau_estimate}")
        return "\n".join(lines) + "\n"


def gap_profile(p: QuboProblem, grid_points: int = 201) -> GapProfile:
    """Two lowest eigenvalues of H(s) on a uniform grid over [0, 1].

    tau = ||H_problem - H_mix||_2 * trapezoid(1 / gap^2) unless the gap
    closes anywhere on the grid, in which case tau is omitted and the
    profile is flagged degenerate.
    """
    if grid_points < 2:
        raise SpectrumError("grid_points must be >= 2")
    if p.n > SPECTRUM_CAP:
        raise SpectrumError(f"n={p.n} exceeds spectrum cap {SPECTRUM_CAP}")

    hp_diag = build_problem_hamiltonian(p)
    hmix = mixer_hamiltonian(p.n)
    hp = np.diag(hp_diag)
    grid = np.linspace(0.0, 1.0, grid_points)
    gaps = np.empty(grid_points)
    for k, s in enumerate(grid):
        h = (1.0 - s) * hmix + s * hp
        lo = eigvalsh(h, subset_by_index=[0, 1]) if h.shape[0] > 2 else np.sort(eigvalsh(h))[:2]
        gaps[k] = lo[1] - lo[0]

    kmin = int(np.argmin(gaps))
    degenerate = bool(gaps[kmin] <= DEGENERACY_TOL)
    tau = None
    if not degenerate:
        norm = float(np.max(np.abs(eigvalsh(hp - hmix))))
        tau = float(norm * np.trapezoid(1.0 / gaps**2, grid))
    return GapProfile(
        tuple(float(s) for s in grid),
        tuple(float(g) for g in gaps),
        float(gaps[kmin]),
        float(grid[kmin]),
        tau,
        degenerate,
    )
