import numpy as np
import pytest

from annealpath.qubo import DEFAULT_COEFFS, QuboProblem, all_state_energies, build_qubo
from annealpath.solvers import solve_exact
from annealpath.spectrum import (
    SpectrumError,
    build_problem_hamiltonian,
    gap_profile,
    hamiltonian_at,
    mixer_hamiltonian,
)
from fixture_graphs import END, START, fixture_g1


def random_problem(n: int, seed: int) -> QuboProblem:
    rng = np.random.default_rng(seed)
    coeffs = {(i, j): float(rng.normal()) for i in range(n) for j in range(i, n)}
    return QuboProblem(n, coeffs, 0, n - 1)


class TestProblemHamiltonian:
    def test_single_variable(self):
        p = QuboProblem(1, {(0, 0): 1.0}, 0, 0)
        assert list(build_problem_hamiltonian(p)) == [0.0, 1.0]

    def test_g1_minimum(self):
        p = build_qubo(fixture_g1(), DEFAULT_COEFFS, START, END)
        assert build_problem_hamiltonian(p).min() == -6.0

    def test_matches_exact_solver(self):
        p = random_problem(6, seed=5)
        assert build_problem_hamiltonian(p).min() == pytest.approx(solve_exact(p).min_energy())

    def test_cap(self):
        with pytest.raises(SpectrumError):
            build_problem_hamiltonian(QuboProblem(13, {}, 0, 1))


class TestHamiltonianAt:
    def test_endpoint_is_diagonal(self):
        p = random_problem(4, seed=1)
        h1 = hamiltonian_at(p, 1.0)
        assert (h1 == np.diag(np.diag(h1))).all()
        assert np.allclose(np.sort(np.diag(h1)), np.sort(all_state_energies(p)))

    def test_mixer_single_qubit(self):
        p = QuboProblem(1, {(0, 0): 1.0}, 0, 0)
        eig = np.linalg.eigvalsh(hamiltonian_at(p, 0.0))
        assert np.allclose(eig, [-1.0, 1.0])

    def test_mixer_ground_energy_is_minus_n(self):
        for n in (2, 3, 4):
            eig = np.linalg.eigvalsh(mixer_hamiltonian(n))
            assert eig[0] == pytest.approx(-n)

    def test_symmetric(self):
        p = random_problem(5, seed=2)
        h = hamiltonian_at(p, 0.37)
        assert (h == h.T).all()

    def test_s_out_of_range(self):
        with pytest.raises(SpectrumError):
            hamiltonian_at(random_problem(3, 0), 1.5)


class TestGapProfile:
    def test_two_level_endpoints(self):
        p = QuboProblem(1, {(0, 0): 1.0}, 0, 0)
        profile = gap_profile(p, grid_points=201)
        assert profile.gaps[0] == pytest.approx(2.0, abs=1e-12)
        assert profile.gaps[-1] == pytest.approx(1.0, abs=1e-12)
        assert not profile.degenerate
        assert profile.tau_estimate is not None and profile.tau_estimate > 0

    def test_zero_problem_degenerate_at_endpoint(self):
        # H(s) = (1-s) * mixer: gap 2(1-s) closes at s = 1
        p = QuboProblem(2, {}, 0, 1)
        profile = gap_profile(p, grid_points=101)
        expected = 2 * (1 - np.asarray(profile.s_grid))
        assert np.allclose(profile.gaps, expected, atol=1e-9)
        assert profile.degenerate
        assert profile.tau_estimate is None

    def test_grid_refinement_stability(self):
        p = random_problem(6, seed=9)
        coarse = gap_profile(p, grid_points=201)
        fine = gap_profile(p, grid_points=401)
        assert abs(coarse.min_gap - fine.min_gap) < 1e-3

    def test_gap_at_one_matches_distinct_energies(self):
        p = build_qubo(fixture_g1(), DEFAULT_COEFFS, START, END)
        profile = gap_profile(p, grid_points=11)
        energies = np.unique(np.round(all_state_energies(p), 9))
        assert profile.gaps[-1] == pytest.approx(energies[1] - energies[0], abs=1e-9)

    def test_endpoints_included(self):
        profile = gap_profile(random_problem(3, 4), grid_points=21)
        assert profile.s_grid[0] == 0.0 and profile.s_grid[-1] == 1.0

    def test_min_gap_consistent(self):
        profile = gap_profile(random_problem(5, 11), grid_points=51)
        assert profile.min_gap == min(profile.gaps)
        idx = profile.gaps.index(profile.min_gap)
        assert profile.min_gap_s == profile.s_grid[idx]

    def test_csv_shape(self):
        profile = gap_profile(random_problem(3, 0), grid_points=5)
        lines = profile.to_csv().strip().split("\n")
        assert lines[0] == "s,gap"
        assert lines[-2].startswith("min_gap,") and lines[-1].startswith("tau,")

    def test_bad_grid(self):
        with pytest.raises(SpectrumError):
            gap_profile(random_problem(2, 0), grid_points=1)
