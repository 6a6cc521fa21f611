"""Search-problem Hamiltonians H(s) = f(s)H0 + g(s)H1, their spectra and gaps,
the adiabatic runtime criterion, local-adiabatic schedule construction, and the
oracle-term action integral.

H0 = I - |psi0><psi0| has the initial state as its ground state; H1 = I - |m><m|
has the marked basis state as its ground state.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
import scipy.linalg
from scipy.integrate import cumulative_simpson, simpson
from scipy.interpolate import PchipInterpolator

from .exceptions import EmptyTraceError, GapTooSmallError, OutOfRangeError
from .linalg import HermitianOp, QState, hermitian_eig
from .refine import refine_maximum, refine_minimum

BOUNDARY_TOL = 1e-12
MONOTONE_GRID = 1001
DEGENERACY_TOL = 1e-10
GAP_FLOOR = 1e-12
TABULATED_DIFF_STEP = 1e-6
# full eigendecomposition is faster than a subset solve below this dimension
_SUBSET_DIM = 256


@dataclass(frozen=True)
class SearchProblem:
    """n qubits, one marked basis index, and the initial state |psi0>."""

    n: int
    marked: int = 0
    initial: QState | None = None

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError("qubit count must be >= 1")
        if not 0 <= self.marked < 2**self.n:
            raise ValueError("marked index out of range")
        initial = self.initial if self.initial is not None else QState.uniform(self.n)
        if initial.n != self.n:
            raise ValueError("initial state qubit count does not match the problem")
        if abs(initial.amplitudes[self.marked]) == 0.0:
            raise ValueError("initial state must overlap the marked state")
        object.__setattr__(self, "initial", initial)

    @property
    def dim(self) -> int:
        return 2**self.n


@dataclass(frozen=True)
class Schedule:
    """Interpolation pair (f, g) on s in [0, 1] with f(0)=1, f(1)=0, g(0)=0, g(1)=1.

    kind "linear" is f = 1-s, g = s. Kinds "local" and "tabulated" carry a monotone
    table s(t/T) and evaluate f = 1 - s(tau), g = s(tau) through a monotone cubic
    interpolant of the samples.
    """

    kind: str
    samples: tuple[np.ndarray, np.ndarray] | None = None
    total_time: float | None = None

    def __post_init__(self) -> None:
        if self.kind not in ("linear", "local", "tabulated"):
            raise ValueError(f"unknown schedule kind {self.kind!r}")
        if self.kind == "linear":
            if self.samples is not None:
                raise ValueError("linear schedules carry no samples")
        else:
            if self.samples is None:
                raise ValueError(f"{self.kind} schedules need a samples table")
            tau, s = (np.asarray(col, dtype=float) for col in self.samples)
            if tau.shape != s.shape or tau.size < 2:
                raise ValueError("samples must be two equal-length columns")
            object.__setattr__(self, "samples", (tau, s))
            object.__setattr__(self, "_s_of_tau", PchipInterpolator(tau, s))
        self._validate_boundaries_and_monotonicity()

    def _validate_boundaries_and_monotonicity(self) -> None:
        for value, target, name in (
            (self.f(0.0), 1.0, "f(0)"),
            (self.f(1.0), 0.0, "f(1)"),
            (self.g(0.0), 0.0, "g(0)"),
            (self.g(1.0), 1.0, "g(1)"),
        ):
            if abs(float(value) - target) > BOUNDARY_TOL:
                raise ValueError(f"schedule boundary violated: {name} = {float(value)!r}")
        grid = np.linspace(0.0, 1.0, MONOTONE_GRID)
        if np.any(np.diff(self.f(grid)) > BOUNDARY_TOL):
            raise ValueError("f must be non-increasing")
        if np.any(np.diff(self.g(grid)) < -BOUNDARY_TOL):
            raise ValueError("g must be non-decreasing")

    @classmethod
    def linear(cls) -> "Schedule":
        return cls(kind="linear")

    @classmethod
    def from_table(cls, tau: np.ndarray, s: np.ndarray, kind: str = "tabulated",
                   total_time: float | None = None) -> "Schedule":
        return cls(kind=kind, samples=(np.asarray(tau), np.asarray(s)), total_time=total_time)

    def g(self, s):
        if self.kind == "linear":
            return np.asarray(s, dtype=float) if np.ndim(s) else float(s)
        return self._s_of_tau(s)  # type: ignore[attr-defined]

    def f(self, s):
        return 1.0 - self.g(s)

    def g_prime(self, s: float) -> float:
        if self.kind == "linear":
            return 1.0
        h = TABULATED_DIFF_STEP
        lo, hi = max(0.0, s - h), min(1.0, s + h)
        return float((self.g(hi) - self.g(lo)) / (hi - lo))

    def f_prime(self, s: float) -> float:
        return -self.g_prime(s)


@dataclass(frozen=True)
class SpectralPoint:
    """Instantaneous eigenvalues, gap E1-E0, and adiabatic matrix element at one s."""

    s: float
    energies: np.ndarray
    gap: float
    matrix_element: float

    def __post_init__(self) -> None:
        if self.gap < 0:
            raise ValueError("gap must be non-negative")


@dataclass(frozen=True)
class AdiabaticCriterion:
    """Accuracy parameter and evaluation grid for the runtime criterion; hbar = 1."""

    epsilon: float = 0.1
    grid_points: int = 1024
    hbar: float = 1.0

    def __post_init__(self) -> None:
        if not 0 < self.epsilon < 1:
            raise ValueError("epsilon must lie in (0, 1)")
        if self.grid_points < 64:
            raise ValueError("grid_points must be >= 64")


def _h0_h1(problem: SearchProblem) -> tuple[np.ndarray, np.ndarray]:
    psi = problem.initial.amplitudes
    h0 = np.eye(problem.dim, dtype=complex) - np.outer(psi, psi.conj())
    h1 = np.eye(problem.dim, dtype=complex)
    h1[problem.marked, problem.marked] = 0.0
    return h0, h1


def build_h0(problem: SearchProblem) -> HermitianOp:
    """I - |psi0><psi0|: the initial state is the unique ground state at energy 0."""
    return HermitianOp(_h0_h1(problem)[0])


def build_h1(problem: SearchProblem) -> HermitianOp:
    """I - |m><m|: the marked state is the unique ground state at energy 0."""
    return HermitianOp(_h0_h1(problem)[1])


def _check_s(s: float) -> float:
    s = float(s)
    if not 0.0 <= s <= 1.0:
        raise OutOfRangeError(f"s = {s!r} outside [0, 1]")
    return s


def hamiltonian_at(problem: SearchProblem, schedule: Schedule, s: float) -> HermitianOp:
    """f(s) H0 + g(s) H1."""
    s = _check_s(s)
    h0, h1 = _h0_h1(problem)
    return HermitianOp(float(schedule.f(s)) * h0 + float(schedule.g(s)) * h1)


def dh_ds(problem: SearchProblem, schedule: Schedule, s: float) -> HermitianOp:
    """f'(s) H0 + g'(s) H1 (central difference for tabulated schedules)."""
    s = _check_s(s)
    h0, h1 = _h0_h1(problem)
    return HermitianOp(schedule.f_prime(s) * h0 + schedule.g_prime(s) * h1)


def _lowest_two(matrix: np.ndarray) -> tuple[float, float, np.ndarray]:
    """(E0, E1, ground vector) without computing the full eigenvector set at large dim."""
    if matrix.shape[0] < _SUBSET_DIM:
        w, v = np.linalg.eigh(matrix)
        return float(w[0]), float(w[1]), v[:, 0]
    w, v = scipy.linalg.eigh(matrix, subset_by_index=[0, 1])
    return float(w[0]), float(w[1]), v[:, 0]


def _gap_and_matrix_element(problem: SearchProblem, schedule: Schedule, s: float) -> tuple[float, float]:
    """Gap and |<E1|dH/ds|E0>| at s, via the residual of dH/ds|E0> off the ground line.

    For these rank-2 interpolations dH/ds maps the ground state into span{|E0>, |E1>},
    so the off-|E0> residual norm equals the level-projected matrix element, including
    at the degenerate endpoints where a single excited eigenvector is not well defined.
    """
    h0, h1 = _h0_h1(problem)
    f, g = float(schedule.f(s)), float(schedule.g(s))
    e0, e1, v0 = _lowest_two(f * h0 + g * h1)
    d = schedule.f_prime(s) * h0 + schedule.g_prime(s) * h1
    resid = d @ v0
    resid -= v0 * np.vdot(v0, resid)
    return e1 - e0, float(np.linalg.norm(resid))


def spectrum_trace(problem: SearchProblem, schedule: Schedule, grid_points: int) -> list[SpectralPoint]:
    """SpectralPoint at each node of the uniform grid s_k = k/(grid_points-1)."""
    if grid_points < 2:
        raise ValueError("grid_points must be >= 2")
    h0, h1 = _h0_h1(problem)
    points = []
    for s in np.linspace(0.0, 1.0, grid_points):
        f, g = float(schedule.f(s)), float(schedule.g(s))
        dec = hermitian_eig(HermitianOp(f * h0 + g * h1))
        w, v = dec.eigenvalues, dec.eigenvectors
        d = schedule.f_prime(s) * h0 + schedule.g_prime(s) * h1
        # project dH/ds |E0> onto the full first-excited level (degeneracy-safe)
        level = np.where(np.abs(w[1:] - w[1]) <= DEGENERACY_TOL)[0] + 1
        me = float(np.linalg.norm(v[:, level].conj().T @ (d @ v[:, 0])))
        points.append(SpectralPoint(float(s), w, float(w[1] - w[0]), me))
    return points


def min_gap(trace: list[SpectralPoint], gap_fn=None) -> tuple[float, float]:
    """(s*, g_min): grid minimum refined by golden-section search plus a parabolic polish.

    gap_fn evaluates the gap off-grid; without it the trace's monotone cubic
    interpolant is searched instead.
    """
    if not trace:
        raise EmptyTraceError("min_gap needs a nonempty trace")
    svals = np.array([p.s for p in trace])
    gaps = np.array([p.gap for p in trace])
    k = int(np.argmin(gaps))
    if len(trace) == 1:
        return float(svals[0]), float(gaps[0])
    if gap_fn is None:
        if len(trace) >= 4:
            interp = PchipInterpolator(svals, gaps)
            gap_fn = lambda s: float(interp(s))
        else:
            return float(svals[k]), float(gaps[k])
    lo = svals[max(k - 1, 0)]
    hi = svals[min(k + 1, len(trace) - 1)]
    s_star, g_min = refine_minimum(gap_fn, float(lo), float(hi))
    if gaps[k] < g_min:
        return float(svals[k]), float(gaps[k])
    return s_star, g_min


def adiabatic_t_min(problem: SearchProblem, schedule: Schedule, crit: AdiabaticCriterion) -> float:
    """Minimum runtime for which the adiabatic criterion holds with equality.

    Analytic schedules use max_s |<E1|dH/ds|E0>| / (epsilon * g_min^2). Tabulated
    schedules (whose rate already follows the gap) use the pointwise criterion
    max_s me(s) / (epsilon * gap(s)^2); applied to a local schedule this recovers
    the time its construction integrated. Extrema are refined off-grid.
    """
    grid = np.linspace(0.0, 1.0, crit.grid_points)
    pairs = [_gap_and_matrix_element(problem, schedule, s) for s in grid]
    gaps = np.array([p[0] for p in pairs])
    mes = np.array([p[1] for p in pairs])

    if schedule.kind == "linear":
        def gap_at(s: float) -> float:
            return _gap_and_matrix_element(problem, schedule, s)[0]

        def me_at(s: float) -> float:
            return _gap_and_matrix_element(problem, schedule, s)[1]

        k = int(np.argmin(gaps))
        lo, hi = grid[max(k - 1, 0)], grid[min(k + 1, len(grid) - 1)]
        _, g_min = refine_minimum(gap_at, float(lo), float(hi))
        g_min = min(g_min, float(gaps[k]))
        k = int(np.argmax(mes))
        lo, hi = grid[max(k - 1, 0)], grid[min(k + 1, len(grid) - 1)]
        _, me_max = refine_maximum(me_at, float(lo), float(hi))
        me_max = max(me_max, float(mes[k]))
        if g_min < GAP_FLOOR:
            raise GapTooSmallError(f"minimum gap {g_min!r} below resolvable threshold")
        return me_max / (crit.epsilon * g_min**2)

    ratios = mes / (crit.epsilon * gaps**2)

    def ratio_at(s: float) -> float:
        gap, me = _gap_and_matrix_element(problem, schedule, s)
        if gap < GAP_FLOOR:
            raise GapTooSmallError(f"gap {gap!r} below resolvable threshold")
        return me / (crit.epsilon * gap**2)

    k = int(np.argmax(ratios))
    lo, hi = grid[max(k - 1, 0)], grid[min(k + 1, len(grid) - 1)]
    _, best = refine_maximum(ratio_at, float(lo), float(hi))
    return max(best, float(ratios[k]))


def local_schedule(problem: SearchProblem, crit: AdiabaticCriterion,
                   grid_points: int | None = None) -> Schedule:
    """Reparametrize the linear path so the adiabatic criterion holds pointwise.

    Integrates dt/ds = me(s) / (epsilon * gap(s)^2) along the linear interpolation,
    then returns the tabulated s(t/T) with T the total integrated time.
    """
    pts = grid_points if grid_points is not None else crit.grid_points
    if pts < 2:
        raise ValueError("grid_points must be >= 2")
    grid = np.linspace(0.0, 1.0, pts)
    linear = Schedule.linear()
    pairs = [_gap_and_matrix_element(problem, linear, s) for s in grid]
    gaps = np.array([p[0] for p in pairs])
    mes = np.array([p[1] for p in pairs])
    if gaps.min() < GAP_FLOOR:
        raise GapTooSmallError(f"minimum gap {gaps.min()!r} below resolvable threshold")
    rate = mes / (crit.epsilon * gaps**2)
    t_of_s = cumulative_simpson(rate, x=grid, initial=0.0)
    total = float(t_of_s[-1])
    if total <= 0.0:
        raise ValueError("criterion integrand vanishes along the path; no schedule to build")
    tau = t_of_s / total
    keep = np.concatenate(([True], np.diff(tau) > 0))
    return Schedule.from_table(tau[keep], grid[keep], kind="local", total_time=total)


def action_integral(schedule, T: float, nodes: int = 2049) -> float:
    """Integral of g over physical time [0, T] by composite Simpson quadrature."""
    if T <= 0:
        raise ValueError("T must be positive")
    if nodes < 1025:
        raise ValueError("need at least 1025 quadrature nodes")
    times = np.linspace(0.0, T, nodes)
    g = np.asarray(schedule.g(times / T), dtype=float)
    return float(simpson(g, x=times))
