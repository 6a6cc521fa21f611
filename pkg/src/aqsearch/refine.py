"""Derivative-free refinement of a smooth extremum inside a bracket.

Golden-section narrows the bracket to ~1e-8; a single parabolic fit then polishes
the location to ~1e-12 for quadratic-bottom extrema, which plain golden-section
cannot resolve once function differences fall below floating-point noise.
"""
from __future__ import annotations

from collections.abc import Callable

_INVPHI = 0.6180339887498949


def golden_minimize(fn: Callable[[float], float], lo: float, hi: float, tol: float = 1e-8) -> float:
    a, b = float(lo), float(hi)
    c, d = b - _INVPHI * (b - a), a + _INVPHI * (b - a)
    fc, fd = fn(c), fn(d)
    while (b - a) > tol:
        if fc < fd:
            b, d, fd = d, c, fc
            c = b - _INVPHI * (b - a)
            fc = fn(c)
        else:
            a, c, fc = c, d, fd
            d = a + _INVPHI * (b - a)
            fd = fn(d)
    return 0.5 * (a + b)


def refine_minimum(
    fn: Callable[[float], float],
    lo: float,
    hi: float,
    tol: float = 1e-8,
    polish_step: float = 1e-4,
) -> tuple[float, float]:
    """Minimum location and value on [lo, hi]; accepts the polish only if it helps."""
    x = golden_minimize(fn, lo, hi, tol)
    h = min(polish_step, x - lo, hi - x)
    if h > 0:
        f0, fm, fp = fn(x), fn(x - h), fn(x + h)
        curvature = fm - 2 * f0 + fp
        if curvature > 0:
            x_polished = x - h * (fp - fm) / (2 * curvature)
            if lo <= x_polished <= hi and fn(x_polished) <= f0:
                x = x_polished
    return x, fn(x)


def refine_maximum(
    fn: Callable[[float], float],
    lo: float,
    hi: float,
    tol: float = 1e-8,
    polish_step: float = 1e-4,
) -> tuple[float, float]:
    x, neg = refine_minimum(lambda s: -fn(s), lo, hi, tol, polish_step)
    return x, -neg
