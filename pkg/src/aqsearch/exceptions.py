"""Error types raised by the simulator's input and contract checks."""
from __future__ import annotations


class ConfigError(Exception):
    """Invalid experiment configuration. The CLI maps this to exit code 2."""


class NumericalContractError(Exception):
    """A numerical guarantee was violated at runtime. The CLI maps this to exit code 3."""


class NonHermitianError(ValueError):
    """Matrix fails the Hermitian symmetry check."""


class BadSubsetError(ValueError):
    """Qubit subset is empty, full, out of range, or repeated."""


class DimMismatchError(ValueError):
    """Operands have incompatible dimensions."""


class OutOfRangeError(ValueError):
    """Normalized time argument lies outside [0, 1]."""


class EmptyTraceError(ValueError):
    """An operation requiring samples was given an empty trace."""


class WrongSizeError(ValueError):
    """State has the wrong qubit count for a two-qubit measure."""


class GapTooSmallError(NumericalContractError):
    """Spectral gap fell below the resolvable threshold."""


class StepTooCoarseError(NumericalContractError):
    """Propagation norm drift exceeded the allowed bound."""
