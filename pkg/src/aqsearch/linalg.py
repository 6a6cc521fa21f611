"""Dense complex linear algebra kernel: states, Hermitian operators, eigendecomposition,
tensor products, projectors, and partial traces.

Basis convention is big-endian: basis index b encodes |b_{n-1} ... b_0> and qubit 0
is the most significant bit, so for two qubits the index reads |q0 q1>.
"""
from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass

import numpy as np

from .exceptions import BadSubsetError, DimMismatchError, NonHermitianError

HERMITIAN_TOL = 1e-12
NORM_TOL = 1e-12
TRACE_TOL = 1e-12
EIGENVALUE_FLOOR = -1e-12


@dataclass(frozen=True)
class QState:
    """Normalized amplitude vector over the computational basis of n qubits."""

    n: int
    amplitudes: np.ndarray

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError("qubit count must be >= 1")
        amps = np.asarray(self.amplitudes, dtype=complex).reshape(-1)
        if amps.shape[0] != 2**self.n:
            raise ValueError(f"expected {2**self.n} amplitudes, got {amps.shape[0]}")
        if abs(np.linalg.norm(amps) - 1.0) > NORM_TOL:
            raise ValueError("state is not normalized")
        object.__setattr__(self, "amplitudes", amps)

    @property
    def dim(self) -> int:
        return 2**self.n

    @classmethod
    def from_amplitudes(cls, amplitudes: Sequence[complex]) -> "QState":
        amps = np.asarray(amplitudes, dtype=complex).reshape(-1)
        n = int(round(np.log2(amps.shape[0])))
        if 2**n != amps.shape[0]:
            raise ValueError("amplitude count must be a power of two")
        return cls(n, amps)

    @classmethod
    def uniform(cls, n: int) -> "QState":
        dim = 2**n
        return cls(n, np.full(dim, 1 / np.sqrt(dim), dtype=complex))

    @classmethod
    def basis(cls, n: int, index: int) -> "QState":
        dim = 2**n
        if not 0 <= index < dim:
            raise ValueError("basis index out of range")
        amps = np.zeros(dim, dtype=complex)
        amps[index] = 1.0
        return cls(n, amps)

    @classmethod
    def bell(cls) -> "QState":
        """(|00> + |11>) / sqrt(2)."""
        return cls(2, np.array([1, 0, 0, 1], dtype=complex) / np.sqrt(2))


@dataclass(frozen=True)
class HermitianOp:
    """Dense complex Hermitian matrix."""

    entries: np.ndarray

    def __post_init__(self) -> None:
        mat = np.asarray(self.entries, dtype=complex)
        if mat.ndim != 2 or mat.shape[0] != mat.shape[1]:
            raise ValueError("operator must be a square matrix")
        if not np.all(np.abs(mat - mat.conj().T) <= HERMITIAN_TOL):
            raise NonHermitianError("matrix is not Hermitian within tolerance")
        object.__setattr__(self, "entries", mat)

    @property
    def dim(self) -> int:
        return self.entries.shape[0]


@dataclass(frozen=True)
class DensityMatrix:
    """Hermitian, unit-trace, positive-semidefinite matrix."""

    entries: np.ndarray

    def __post_init__(self) -> None:
        mat = np.asarray(self.entries, dtype=complex)
        if mat.ndim != 2 or mat.shape[0] != mat.shape[1]:
            raise ValueError("density matrix must be square")
        if not np.all(np.abs(mat - mat.conj().T) <= HERMITIAN_TOL):
            raise NonHermitianError("density matrix is not Hermitian within tolerance")
        if abs(mat.trace().real - 1.0) > TRACE_TOL or abs(mat.trace().imag) > TRACE_TOL:
            raise ValueError("density matrix trace must be 1")
        if np.linalg.eigvalsh(mat).min() < EIGENVALUE_FLOOR:
            raise ValueError("density matrix has a negative eigenvalue")
        object.__setattr__(self, "entries", mat)

    @property
    def dim(self) -> int:
        return self.entries.shape[0]


@dataclass(frozen=True)
class EigenDecomposition:
    """Ascending eigenvalues with orthonormal, gauge-fixed eigenvector columns."""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray


def _fix_gauge(vectors: np.ndarray) -> np.ndarray:
    """Rotate each column so its first component of largest magnitude is real and >= 0."""
    out = np.array(vectors, dtype=complex)
    for k in range(out.shape[1]):
        col = out[:, k]
        pivot = col[int(np.argmax(np.abs(col)))]
        if abs(pivot) > 0:
            out[:, k] = col * (pivot.conjugate() / abs(pivot))
    return out


def tensor_product(a: QState, b: QState) -> QState:
    """Composite state with amplitudes c_{i*dim(b)+j} = a_i * b_j."""
    return QState(a.n + b.n, np.kron(a.amplitudes, b.amplitudes))


def projector(psi: QState) -> HermitianOp:
    """Rank-1 projector |psi><psi|."""
    return HermitianOp(np.outer(psi.amplitudes, psi.amplitudes.conj()))


def hermitian_eig(H: HermitianOp | np.ndarray) -> EigenDecomposition:
    """Full eigendecomposition with ascending eigenvalues and deterministic gauge."""
    if not isinstance(H, HermitianOp):
        H = HermitianOp(np.asarray(H))
    w, V = np.linalg.eigh(H.entries)
    return EigenDecomposition(w, _fix_gauge(V))


def _validate_subset(n: int, keep: Sequence[int]) -> list[int]:
    kept = list(keep)
    if len(kept) == 0 or len(kept) >= n:
        raise BadSubsetError("keep must be a nonempty proper subset of the qubits")
    if len(set(kept)) != len(kept) or any(q < 0 or q >= n for q in kept):
        raise BadSubsetError("keep contains repeated or out-of-range qubit indices")
    return kept


def partial_trace(rho: DensityMatrix | np.ndarray, n: int, keep: Sequence[int]) -> DensityMatrix:
    """Trace out all qubits not in keep; result axes follow the order given in keep."""
    kept = _validate_subset(n, keep)
    mat = rho.entries if isinstance(rho, DensityMatrix) else np.asarray(rho, dtype=complex)
    if mat.shape != (2**n, 2**n):
        raise DimMismatchError("density matrix dimension does not match qubit count")
    traced = [q for q in range(n) if q not in kept]
    tens = mat.reshape([2] * (2 * n))
    perm = kept + traced + [n + q for q in kept] + [n + q for q in traced]
    dk, dt = 2 ** len(kept), 2 ** len(traced)
    tens = tens.transpose(perm).reshape(dk, dt, dk, dt)
    return DensityMatrix(np.einsum("aibi->ab", tens))


def expectation(H: HermitianOp, psi: QState) -> float:
    """<psi|H|psi>; the (tolerance-level) imaginary part is discarded."""
    if H.dim != psi.dim:
        raise DimMismatchError("operator and state dimensions differ")
    value = np.vdot(psi.amplitudes, H.entries @ psi.amplitudes)
    return float(value.real)
