"""Adiabatic quantum search simulator: interpolating search Hamiltonians, their
spectra and minimum gaps, adiabatic runtimes under linear and locally adapted
schedules, Schrodinger propagation, entanglement traces, and the discrete
amplitude-amplification cross-check.
"""
from .entanglement import (
    EntanglementPoint,
    concurrence,
    concurrence_standard,
    entanglement_trace,
    entropy_from_eigenvalues,
    entropy_of_entanglement,
    reduced_eigenvalues,
)
from .evolution import (
    EvolutionSample,
    EvolutionTrace,
    default_steps,
    fidelity,
    ground_state_trace,
    propagate,
)
from .exceptions import (
    BadSubsetError,
    ConfigError,
    DimMismatchError,
    EmptyTraceError,
    GapTooSmallError,
    NonHermitianError,
    NumericalContractError,
    OutOfRangeError,
    StepTooCoarseError,
    WrongSizeError,
)
from .grover import GroverRun, grover_search, grover_step, optimal_iterations
from .hamiltonian import (
    AdiabaticCriterion,
    Schedule,
    SearchProblem,
    SpectralPoint,
    action_integral,
    adiabatic_t_min,
    build_h0,
    build_h1,
    dh_ds,
    hamiltonian_at,
    local_schedule,
    min_gap,
    spectrum_trace,
)
from .linalg import (
    DensityMatrix,
    EigenDecomposition,
    HermitianOp,
    QState,
    expectation,
    hermitian_eig,
    partial_trace,
    projector,
    tensor_product,
)
from .refine import golden_minimize, refine_maximum, refine_minimum

__version__ = "0.1.0"

__all__ = [
    "AdiabaticCriterion",
    "BadSubsetError",
    "ConfigError",
    "DensityMatrix",
    "DimMismatchError",
    "EigenDecomposition",
    "EmptyTraceError",
    "EntanglementPoint",
    "EvolutionSample",
    "EvolutionTrace",
    "GapTooSmallError",
    "GroverRun",
    "HermitianOp",
    "NonHermitianError",
    "NumericalContractError",
    "OutOfRangeError",
    "QState",
    "Schedule",
    "SearchProblem",
    "SpectralPoint",
    "StepTooCoarseError",
    "WrongSizeError",
    "action_integral",
    "adiabatic_t_min",
    "build_h0",
    "build_h1",
    "concurrence",
    "concurrence_standard",
    "default_steps",
    "dh_ds",
    "entanglement_trace",
    "entropy_from_eigenvalues",
    "entropy_of_entanglement",
    "expectation",
    "fidelity",
    "golden_minimize",
    "grover_search",
    "grover_step",
    "ground_state_trace",
    "hamiltonian_at",
    "hermitian_eig",
    "local_schedule",
    "min_gap",
    "optimal_iterations",
    "partial_trace",
    "projector",
    "propagate",
    "reduced_eigenvalues",
    "refine_maximum",
    "refine_minimum",
    "spectrum_trace",
    "tensor_product",
]
