"""Two-spin Heisenberg quantum battery simulator.

Thermal initialization, cyclic unitary charging, ergotropy/capacity/coherence
metrics, and reproducible parameter sweeps with figure presets. Hot kernels
run on a compiled core when available (see `qbsim.backend`).
"""

from ._version import __version__
from .backend import NAME as backend_name
from .backend import available_backends
from .charger import ChargingUnitary, charging_hamiltonian, charging_unitary_closed, charging_unitary_numeric, evolve
from .errors import (ConvergenceFailure, DimensionGuard, DimensionMismatch, NonHermitian, NoThreshold,
                     NotDefined, QbsimError, RegimeError, SchemaError, UnclassifiedModel, UnknownFigure)
from .linalg import Spectrum, expm_hermitian, hermitian_eig, kron, trace_product
from .metrics import (CapacityMode, ClosedFormAux, ErgotropyBreakdown, average_power, capacity_closed_form,
                      capacity_numeric, closed_form_aux, efficiency, ergotropy_breakdown, ergotropy_closed_form,
                      ergotropy_spectral, ergotropy_trace, l1_coherence, peak_average_power, work)
from .model import (Axis, ModelClass, ModelParams, build_chain_hamiltonian, build_qb_hamiltonian,
                    classify_model, pauli)
from .presets import figure_description, figure_ids, figure_preset
from .report import DeviationReport
from .sweep import (EvalMode, Metric, SweepAxis, SweepConfig, SweepResult, ThresholdReport,
                    detect_threshold, evaluate_point, maximize_over_time, run_sweep)
from .thermal import (ThermalAuxiliaries, gibbs_closed_form, gibbs_state, is_passive,
                      partition_function, partition_function_closed, thermal_auxiliaries)

__all__ = [
    "__version__", "backend_name", "available_backends",
    "Axis", "ModelClass", "ModelParams", "pauli",
    "build_chain_hamiltonian", "build_qb_hamiltonian", "classify_model",
    "Spectrum", "hermitian_eig", "expm_hermitian", "kron", "trace_product",
    "ThermalAuxiliaries", "thermal_auxiliaries", "gibbs_state", "gibbs_closed_form",
    "partition_function", "partition_function_closed", "is_passive",
    "ChargingUnitary", "charging_hamiltonian", "charging_unitary_numeric",
    "charging_unitary_closed", "evolve",
    "CapacityMode", "ClosedFormAux", "ErgotropyBreakdown", "closed_form_aux",
    "ergotropy_spectral", "ergotropy_trace", "ergotropy_closed_form", "ergotropy_breakdown",
    "work", "average_power", "peak_average_power", "efficiency",
    "capacity_numeric", "capacity_closed_form", "l1_coherence",
    "Metric", "EvalMode", "SweepAxis", "SweepConfig", "SweepResult", "ThresholdReport",
    "run_sweep", "evaluate_point", "maximize_over_time", "detect_threshold",
    "figure_preset", "figure_ids", "figure_description",
    "DeviationReport",
    "QbsimError", "NonHermitian", "ConvergenceFailure", "DimensionMismatch", "DimensionGuard",
    "RegimeError", "NotDefined", "NoThreshold", "UnknownFigure", "UnclassifiedModel", "SchemaError",
]
