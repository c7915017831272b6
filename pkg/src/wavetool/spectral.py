"""Frequency-domain verification.

Everything here evaluates 2π-periodic transfer functions (symbols) of finite
filters on frequency grids: the perfect-reconstruction identity, the
closed-form symbols of elevated filters, truncated Fourier transforms of
scaling functions, Riesz-bound profiles and orthonormality deviation.
"""

from dataclasses import dataclass

import numpy as np

from . import backend
from .filters import Filter, FilterBank, derive_highpass

GAMMA_LEVELS = 24  # dyadic factors kept in the truncated product for Φ̂
GAMMA_SHIFTS = 64  # lattice window |k| <= shifts in the periodized energy
NON_RIESZ_FLOOR = 1e-4


@dataclass(frozen=True)
class TrigSymbol:
    """Evaluation view of a filter as m(w) = sum_k c_k exp(-ikw)."""

    filter: Filter

    def __call__(self, w):
        return eval_symbol(self.filter, w)


@dataclass(frozen=True)
class RieszProfile:
    """Sampled periodized energy of a scaling function with its extrema.

    ``values[i]`` approximates sum_k |Φ̂(grid[i] + 2kπ)|²; ``lower``/``upper``
    are the grid min/max, numerical stand-ins for the Riesz-basis constants.
    """

    grid: np.ndarray
    values: np.ndarray
    lower: float
    upper: float
    non_riesz: bool


def eval_symbol(f: Filter, w):
    """Transfer function value(s) at frequency ``w`` (scalar or array)."""
    w_arr = np.atleast_1d(np.asarray(w, dtype=np.float64))
    out = backend.eval_symbol_grid(f.coeffs, f.offset, w_arr)
    return out[0] if np.isscalar(w) or np.asarray(w).ndim == 0 else out


def difference_symbol(s: int, w):
    """(1 - exp(-iw))^s, the symbol of the s-fold backward difference."""
    return (1.0 - np.exp(-1j * np.asarray(w, dtype=np.float64))) ** s


def elevated_lowpass_symbol(m0, s: int, w):
    """Symbol of the order-``s`` elevated primal filter.

    Equals 2^-s S(2w)/S(w) m0(w) with S the difference symbol, evaluated in
    the equivalent division-free form ((1 + exp(-iw))/2)^s * m0(w), which also
    defines the removable-singularity values at the zeros of S.
    """
    if isinstance(m0, Filter):
        m0 = TrigSymbol(m0)
    w = np.asarray(w, dtype=np.float64)
    return ((1.0 + np.exp(-1j * w)) / 2.0) ** s * m0(w)


def frequency_grid(gridsize: int) -> np.ndarray:
    return np.arange(gridsize) * (2.0 * np.pi / gridsize)


def pr_residual(bank: FilterBank, gridsize: int = 1024) -> float:
    """Max deviation of m0(w) conj(md(w)) + m0(w+π) conj(md(w+π)) from 1.

    Zero (to rounding) exactly when the translates of the two scaling
    functions are biorthogonal; equivalent to 2 sum_k h_k hd_{k-2n} = δ_n.
    """
    w = frequency_grid(gridsize)
    m0 = backend.eval_symbol_grid(bank.primal.coeffs, bank.primal.offset, w)
    m0p = backend.eval_symbol_grid(bank.primal.coeffs, bank.primal.offset, w + np.pi)
    d0 = backend.eval_symbol_grid(bank.dual.coeffs, bank.dual.offset, w)
    d0p = backend.eval_symbol_grid(bank.dual.coeffs, bank.dual.offset, w + np.pi)
    return float(np.max(np.abs(m0 * np.conj(d0) + m0p * np.conj(d0p) - 1.0)))


def scaling_fourier(f: Filter, w, levels: int = GAMMA_LEVELS):
    """Truncated product prod_{j=1..levels} m(w / 2^j).

    Approximates the Fourier transform of the scaling function of a
    normalized filter (exact value 1 at w = 0).
    """
    w_arr = np.atleast_1d(np.asarray(w, dtype=np.float64))
    acc = np.ones(w_arr.shape, dtype=np.complex128)
    for j in range(1, levels + 1):
        acc *= backend.eval_symbol_grid(f.coeffs, f.offset, w_arr / 2.0**j)
    return acc[0] if np.isscalar(w) or np.asarray(w).ndim == 0 else acc


def riesz_profile(
    f: Filter,
    gridsize: int = 1024,
    levels: int = GAMMA_LEVELS,
    shifts: int = GAMMA_SHIFTS,
) -> RieszProfile:
    """Periodized energy sum_{|k|<=shifts} |Φ̂(w + 2kπ)|² on a frequency grid.

    The profile is flagged ``non_riesz`` when the grid minimum falls below
    1e-4 (translates numerically fail the lower Riesz bound) or when the
    filter is a single tap, whose point-mass "scaling function" makes the
    lattice sum diverge with the window instead of converging.
    """
    grid = frequency_grid(gridsize)
    values = backend.riesz_values(f.coeffs, grid, levels, shifts)
    lower = float(values.min())
    upper = float(values.max())
    non_riesz = lower < NON_RIESZ_FLOOR or len(f) == 1
    return RieszProfile(grid, values, lower, upper, non_riesz)


def orthonormality_deviation(f: Filter, gridsize: int = 1024) -> float:
    """Max deviation of |m(w)|² + |m(w+π)|² from 1.

    Zero for orthonormal filters; elevation always pushes it above zero (the
    elevated family is never orthonormal).
    """
    w = frequency_grid(gridsize)
    m = backend.eval_symbol_grid(f.coeffs, f.offset, w)
    mp = backend.eval_symbol_grid(f.coeffs, f.offset, w + np.pi)
    return float(np.max(np.abs(np.abs(m) ** 2 + np.abs(mp) ** 2 - 1.0)))


def elevation_symbol_residuals(
    original: FilterBank, elevated: FilterBank, s: int, gridsize: int = 1024
) -> dict[str, float]:
    """Grid residuals of the four closed-form transfer-function identities
    tying an elevated bank to its origin.

    With S the difference symbol, m the original symbols and P the elevated
    ones, the identities are checked in multiplied-through form (no division,
    exact at the removable singularities):

    - lowpass_primal:   2^s S(w) P0(w)        = S(2w) m0(w)
    - lowpass_dual:     conj(S(2w)) Pd0(w)    = 2^s conj(S(w)) md0(w)
    - highpass_primal:  S(w) P1(w)            = 2^s m1(w)
    - highpass_dual:    Pd1(w)                = 2^-s conj(S(w)) md1(w)
    """
    w = frequency_grid(gridsize)
    S = difference_symbol(s, w)
    S2 = difference_symbol(s, 2.0 * w)
    m0 = eval_symbol(original.primal, w)
    md0 = eval_symbol(original.dual, w)
    m1, md1 = (eval_symbol(g, w) for g in derive_highpass(original))
    P0 = eval_symbol(elevated.primal, w)
    Pd0 = eval_symbol(elevated.dual, w)
    P1, Pd1 = (eval_symbol(g, w) for g in derive_highpass(elevated))
    two_s = 2.0**s
    return {
        "lowpass_primal": float(np.max(np.abs(two_s * S * P0 - S2 * m0))),
        "lowpass_dual": float(
            np.max(np.abs(np.conj(S2) * Pd0 - two_s * np.conj(S) * md0))
        ),
        "highpass_primal": float(np.max(np.abs(S * P1 - two_s * m1))),
        "highpass_dual": float(np.max(np.abs(Pd1 - np.conj(S) * md1 / two_s))),
    }
