"""annealpath: shortest-path QUBO encoding, annealing samplers, classical
baselines, spectral-gap analysis, and benchmark tooling."""

from .graphs import (
    DegreeHistogram,
    Graph,
    GraphError,
    PowerLawFit,
    add_edge,
    degree_distribution,
    fit_power_law,
    generate_ba,
    generate_er,
    load_graph,
    reweight,
    store_graph,
)
from .qubo import (
    DEFAULT_COEFFS,
    CoefficientSet,
    IsingProblem,
    QuboProblem,
    build_qubo,
    energy,
    energy_closed_form,
    from_ising,
    to_ising,
)
from .solvers import (
    PathFailure,
    PathResult,
    SampleTable,
    ValidityReport,
    analyze_formulation,
    coefficient_sweep,
    decode_path,
    sample_sa,
    solve_exact,
)
from .baselines import (
    DistanceMatrix,
    apsp_minplus,
    bellman_ford,
    dijkstra,
    dijkstra_dense,
    floyd_warshall,
    minplus_product,
    timed_run,
)
from .spectrum import GapProfile, build_problem_hamiltonian, gap_profile, hamiltonian_at
from .chimera import ChimeraTopology, FeasibilityReport, check_feasibility, chimera
from .bench import (
    BenchRecord,
    FitResult,
    bench_edge_probability,
    bench_vertices,
    emit_records_csv,
    emit_svg,
    fit_runtime,
)

__version__ = "0.1.0"
