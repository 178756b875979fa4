"""Central tolerance table and pinned numerical conventions.

Every tolerance used by the library lives here; modules and tests import
from this table rather than hard-coding values.
"""

# Numerical tolerances (absolute unless noted otherwise).
TOLERANCES = {
    # linear algebra core
    "hermiticity": 1e-10,            # max |H - H^dag| accepted as Hermitian
    "eig_offdiag": 1e-12,            # Jacobi off-diagonal norm target (relative to scale)
    "eig_max_sweeps": 100,           # Jacobi sweep budget
    "eig_orthonormality": 1e-10,     # max |V^dag V - I|
    "eig_residual": 1e-10,           # |H v - w v| <= tol * (1 + |H|)
    "eig_reconstruction": 1e-9,      # max |V W V^dag - H|
    "eig_tie": 1e-13,                # eigenvalue gap treated as truly degenerate; a wider
                                     # window would let the lexicographic tie-break reorder
                                     # distinct near-zero Boltzmann weights non-monotonically
    "eig_phase_floor": 1e-12,        # first-nonzero threshold for phase normalization
    # states and unitaries
    "unitarity": 1e-10,
    "trace_one": 1e-10,
    "psd_floor": -1e-10,             # min eigenvalue accepted for a density matrix
    "passivity_offdiag": 1e-9,
    "passivity_population": 1e-10,
    "closed_vs_numeric_unitary": 1e-10,
    # metric cross-checks
    "spectral_vs_trace": 1e-8,
    "closed_vs_trace": 1e-6,
    "gibbs_closed_match": 1e-8,
    "partition_match": 1e-9,         # relative: |dZ| <= tol * (1 + |Z|)
    "efficiency_flag": 1e-9,         # eta > 1 + tol raises the contract warning
    # search / detection
    "golden_t": 1e-6,                # time refinement tolerance
    "threshold_x": 1e-4,             # threshold bisection tolerance
    "threshold_fraction": 0.01,      # "dropped to zero" = below this fraction of peak
    # model classification
    "classify_eq": 1e-12,
}

# Capacity reference state, pinned by the closed-form oracle (see tests):
# the computational basis state with both spins aligned with the +z field,
# index 0 under the (|00>,|01>,|10>,|11>) ordering with sigma_z = diag(+1,-1).
# The source labels this state "|11>"; the index-3 alternative fails the
# closed-form comparison by O(1).
UP_STATE_INDEX = 0

# Dense-matrix guard for the general-N chain builder.
MAX_CHAIN_SITES = 12

# Pure-python Jacobi is used up to this dimension; larger Hermitian problems
# fall back to LAPACK in the numpy backend (same Spectrum contract).
PY_JACOBI_DIM_LIMIT = 64

# Dense scan size used before golden-section refinement.
TIME_SCAN_POINTS = 512
