"""Discrete amplitude-amplification iteration used as a cross-check for the
continuous-time runtime results.

One iteration = sign flip on the marked index followed by inversion about the
problem's reference state. Starting from that reference state the success
probability after k iterations is sin^2((2k+1) theta) with sin theta = |<m|ref>|.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .exceptions import DimMismatchError
from .hamiltonian import SearchProblem
from .linalg import QState


@dataclass(frozen=True)
class GroverRun:
    """Success probability after each iteration count k = 0 .. k_max."""

    N: int
    marked: int
    iterations: list[tuple[int, float]]


def grover_step(problem: SearchProblem, state: QState) -> QState:
    """Apply one iteration: oracle sign flip, then inversion about the reference state."""
    if state.n != problem.n:
        raise DimMismatchError("state size does not match the problem")
    psi = state.amplitudes.copy()
    psi[problem.marked] = -psi[problem.marked]
    ref = problem.initial.amplitudes
    psi = 2.0 * np.vdot(ref, psi) * ref - psi
    return QState(n=state.n, amplitudes=psi)


def optimal_iterations(N: int) -> int:
    """Iteration count closest to the success-probability peak (pi/4 sqrt(N) scale)."""
    if N < 2:
        raise ValueError("need N >= 2")
    theta = math.asin(1.0 / math.sqrt(N))
    return max(1, int(round(math.pi / (4.0 * theta) - 0.5)))


def grover_search(problem: SearchProblem, k_max: int) -> GroverRun:
    """Run k_max iterations from the problem's reference state, recording each step."""
    if k_max < 1:
        raise ValueError("need k_max >= 1")
    state = problem.initial
    iterations = [(0, float(abs(state.amplitudes[problem.marked]) ** 2))]
    for k in range(1, k_max + 1):
        state = grover_step(problem, state)
        iterations.append((k, float(abs(state.amplitudes[problem.marked]) ** 2)))
    return GroverRun(N=2 ** problem.n, marked=problem.marked, iterations=iterations)
