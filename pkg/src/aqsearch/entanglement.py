"""Entanglement measures: two-qubit concurrence, reduced-density eigenvalues,
von Neumann entropy (base 2), and entanglement traces along an evolution.

Concurrence uses the convention C = |c0 c3 - c1 c2| with maximum 1/2; the
standard normalization (maximum 1) is exposed as concurrence_standard.
"""
from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass

import numpy as np

from .evolution import EvolutionTrace
from .exceptions import BadSubsetError, WrongSizeError
from .linalg import DensityMatrix, QState, partial_trace

_EIG_CUTOFF = 1e-15


@dataclass(frozen=True)
class EntanglementPoint:
    """Concurrence, single-qubit entropy (bits), and reduced eigenvalues at one s."""

    s: float
    concurrence: float
    entropy: float
    mu_plus: float
    mu_minus: float

    def __post_init__(self) -> None:
        if abs(self.mu_plus + self.mu_minus - 1.0) > 1e-10:
            raise ValueError("reduced eigenvalues must sum to 1")
        for mu in (self.mu_plus, self.mu_minus):
            if not -1e-12 <= mu <= 1.0 + 1e-12:
                raise ValueError("reduced eigenvalue outside [0, 1]")


def concurrence(state: QState) -> float:
    """C = |c0 c3 - c1 c2| for a two-qubit pure state (maximum 1/2)."""
    if state.n != 2:
        raise WrongSizeError("concurrence is defined for two-qubit states")
    c = state.amplitudes
    return float(abs(c[0] * c[3] - c[1] * c[2]))


def concurrence_standard(state: QState) -> float:
    """Standard pure-state concurrence 2|c0 c3 - c1 c2| (maximum 1)."""
    return 2.0 * concurrence(state)


def reduced_eigenvalues(state: QState) -> tuple[float, float]:
    """mu_pm = (1 +- sqrt(1 - 4 C^2)) / 2: eigenvalues of either reduced density matrix."""
    conc = concurrence(state)
    root = np.sqrt(max(0.0, 1.0 - 4.0 * conc * conc))
    return (1.0 + root) / 2.0, (1.0 - root) / 2.0


def entropy_of_entanglement(state: QState, cut: Sequence[int]) -> float:
    """Von Neumann entropy (bits) of the reduced density matrix on the cut qubits."""
    cut = list(cut)
    if len(cut) == 0 or len(cut) >= state.n:
        raise BadSubsetError("cut must be a nonempty proper subset of the qubits")
    rho = DensityMatrix(np.outer(state.amplitudes, state.amplitudes.conj()))
    reduced = partial_trace(rho, state.n, cut)
    return entropy_from_eigenvalues(np.linalg.eigvalsh(reduced.entries))


def entropy_from_eigenvalues(eigenvalues: np.ndarray) -> float:
    """-sum lam log2 lam with the 0 log 0 := 0 convention."""
    lam = np.asarray(eigenvalues, dtype=float)
    lam = lam[lam > _EIG_CUTOFF]
    return float(-np.sum(lam * np.log2(lam))) + 0.0


def entanglement_trace(evolution: EvolutionTrace) -> list[EntanglementPoint]:
    """EntanglementPoint per sample of a two-qubit evolution trace."""
    points = []
    for sample in evolution.samples:
        if sample.state.n != 2:
            raise WrongSizeError("entanglement traces need two-qubit states")
        mu_plus, mu_minus = reduced_eigenvalues(sample.state)
        points.append(EntanglementPoint(
            s=sample.s,
            concurrence=concurrence(sample.state),
            entropy=entropy_of_entanglement(sample.state, (0,)),
            mu_plus=mu_plus,
            mu_minus=mu_minus,
        ))
    return points
