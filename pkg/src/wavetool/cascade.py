"""Time-domain realization on dyadic grids.

Scaling functions are produced by fixed-grid refinement iteration starting
from the unit box on the left end of the filter support; wavelets by one
high-pass refinement step on the converged samples. The unit-window moving
integral realizes one elevation step directly in the sample domain, which
gives an independent cross-check of the filter-domain construction.

All integrals are trapezoid sums. Sampled functions are compactly supported
and treated as zero off their grid, so the plain mass functional reduces to
step * sum(values).
"""

from dataclasses import dataclass
from math import comb, factorial

import numpy as np

from . import backend
from .errors import NoConvergence, UnsupportedFilter
from .filters import Filter, FilterBank, binomial_elevate_primal, derive_highpass, support

CASCADE_TOL = 1e-10
CASCADE_ITERATIONS = 12


@dataclass(frozen=True)
class SampledFunction:
    """Values on a uniform grid ``origin + i*step``; zero off the grid."""

    origin: float
    step: float
    values: np.ndarray

    def __post_init__(self):
        v = np.array(self.values, dtype=np.float64)
        if v.ndim != 1 or v.shape[0] < 2:
            raise ValueError("values must hold at least two samples")
        if not (self.step > 0 and np.all(np.isfinite(v))):
            raise ValueError("step must be positive and values finite")
        v.setflags(write=False)
        object.__setattr__(self, "values", v)

    def __len__(self):
        return self.values.shape[0]

    def grid(self) -> np.ndarray:
        return self.origin + self.step * np.arange(len(self))

    def support(self) -> tuple[float, float]:
        return (self.origin, self.origin + self.step * (len(self) - 1))

    def mass(self) -> float:
        """Whole-line trapezoid integral (= step * sum for zero-padded data)."""
        return float(self.step * self.values.sum())


def cascade_scaling(
    f: Filter,
    J: int,
    iterations: int = CASCADE_ITERATIONS,
    tol: float = CASCADE_TOL,
    check_convergence: bool = True,
) -> SampledFunction:
    """Refinement iteration for the scaling function of a normalized filter.

    Iterates phi <- 2 sum_k h_k phi(2x - k) on the grid of step 2^-J covering
    exactly the filter support, starting from the indicator of [offset,
    offset+1). Stops when the successive sup-distance drops below ``tol`` or
    after ``iterations`` rounds, whichever comes first.

    ``check_convergence=False`` suppresses the divergence error and returns
    the final iterate as-is; with ``iterations=J`` that is the exact
    resolution-J sampling of the J-times-refined box, the canonical
    finite-resolution picture of limits that exist only as rough L2 objects
    or distributions.

    Raises
    ------
    UnsupportedFilter
        For single-tap filters (point-mass limit, nothing to sample).
    NoConvergence
        When the sup-distance fails to decrease over the final three rounds
        while still above ``tol``.
    """
    if len(f) < 2:
        raise UnsupportedFilter("cannot cascade a single-tap filter")
    if J < 1:
        raise ValueError("resolution J must be >= 1")
    if not f.is_normalized:
        raise ValueError(f"filter taps must sum to 1, got {f.mass!r}")
    a, b = support(f)
    stride = 2**J
    n = (b - a) * stride + 1
    v = np.zeros(n, dtype=np.float64)
    v[:stride] = 1.0
    dists = []
    for _ in range(iterations):
        new = backend.refine_step(f.coeffs, v, stride, n)
        d = float(np.max(np.abs(new - v)))
        v = new
        dists.append(d)
        if d < tol:
            break
    else:
        if (
            check_convergence
            and len(dists) >= 3
            and dists[-1] >= dists[-2] >= dists[-3]
            and dists[-1] > tol
        ):
            raise NoConvergence(
                f"sup-distance stuck at {dists[-3:]} after {iterations} rounds"
            )
    return SampledFunction(float(a), 2.0**-J, v)


def cascade_wavelet(
    bank: FilterBank,
    side: str = "primal",
    J: int = 8,
    iterations: int = CASCADE_ITERATIONS,
    check_convergence: bool = True,
) -> SampledFunction:
    """One high-pass refinement step on the converged scaling samples:
    psi(x) = 2 sum_n g_n phi(2x - n), with g from :func:`derive_highpass`.

    The samples have zero mass (one vanishing moment) by construction.
    """
    g_primal, g_dual = derive_highpass(bank)
    if side == "primal":
        flt, mask = bank.primal, g_primal
    elif side == "dual":
        flt, mask = bank.dual, g_dual
    else:
        raise ValueError("side must be 'primal' or 'dual'")
    phi = cascade_scaling(flt, J, iterations, check_convergence=check_convergence)
    a, b = support(flt)
    n0, n1 = support(mask)
    # twice the width is integral even when the half-integer endpoints are not
    width2 = (b - a) + (n1 - n0)
    n_out = width2 * 2 ** (J - 1) + 1
    values = backend.refine_step(mask.coeffs, phi.values, 2**J, n_out)
    return SampledFunction((a + n0) / 2.0, 2.0**-J, values)


def moving_integral(f: SampledFunction) -> SampledFunction:
    """Integral over the trailing unit window: (Tf)(x) = int_{x-1}^x f.

    Computed as differences of the cumulative trapezoid sum, so the error is
    O(step^2) wherever f is smooth (first order at jump discontinuities).
    The support grows by 1 on the right.
    """
    stride = int(round(1.0 / f.step))
    if abs(stride * f.step - 1.0) > 1e-9 or stride < 1:
        raise ValueError("step must be an integer fraction of the unit window")
    v = f.values
    cum = np.zeros(len(v), dtype=np.float64)
    np.cumsum((v[1:] + v[:-1]) * (f.step / 2.0), out=cum[1:])
    upper = np.concatenate([cum, np.full(stride, cum[-1])])
    lower = np.concatenate([np.zeros(stride), cum])
    return SampledFunction(f.origin, f.step, upper - lower)


def elevation_consistency(
    f: Filter, s: int, J: int, iterations: int = CASCADE_ITERATIONS
) -> float:
    """Sup-distance between the two realizations of an order-``s`` elevation:
    cascading the binomially elevated filter versus applying the moving
    integral ``s`` times to the cascaded original."""
    direct = cascade_scaling(binomial_elevate_primal(f, s), J, iterations)
    stepped = cascade_scaling(f, J, iterations)
    for _ in range(s):
        stepped = moving_integral(stepped)
    if len(direct) != len(stepped) or direct.origin != stepped.origin:
        raise AssertionError("grid mismatch between elevation paths")
    return float(np.max(np.abs(direct.values - stepped.values)))


def fit_cumulative_integral(
    target: SampledFunction, source: SampledFunction
) -> tuple[float, float]:
    """Least-squares fit target ~ c * cumulative_integral(source).

    Both inputs must share the grid step, with origins an integer number of
    steps apart. Returns (c, relative sup residual). The cumulative integral
    is extended by zero to the left and by its final value to the right.
    """
    if abs(target.step - source.step) > 1e-12 * source.step:
        raise ValueError("grid steps differ")
    step = source.step
    shift_f = (target.origin - source.origin) / step
    shift = int(round(shift_f))
    if abs(shift_f - shift) > 1e-6:
        raise ValueError("grid origins are not an integer number of steps apart")

    cum = np.zeros(len(source), dtype=np.float64)
    np.cumsum((source.values[1:] + source.values[:-1]) * (step / 2.0), out=cum[1:])

    lo = min(0, shift)
    hi = max(len(source) - 1, shift + len(target) - 1)
    idx = np.arange(lo, hi + 1)
    u = np.where(idx < 0, 0.0, cum[np.clip(idx, 0, len(cum) - 1)])
    t = np.zeros(idx.shape[0], dtype=np.float64)
    t[shift - lo : shift - lo + len(target)] = target.values

    uu = float(u @ u)
    if uu == 0.0:
        raise ValueError("source has identically zero cumulative integral")
    c = float(t @ u) / uu
    residual = float(np.max(np.abs(t - c * u)) / np.max(np.abs(t)))
    return c, residual


def bspline_reference(order: int, J: int) -> SampledFunction:
    """Cardinal B-spline of the given order on [0, order], sampled at 2^-J.

    Exact piecewise-polynomial evaluation,
    B_m(x) = 1/(m-1)! * sum_k (-1)^k C(m,k) (x-k)_+^(m-1);
    order 1 is the unit box (left-closed, matching the cascade start).
    """
    if order < 1:
        raise ValueError("order must be >= 1")
    step = 2.0**-J
    n = order * 2**J + 1
    if order == 1:
        v = np.ones(n, dtype=np.float64)
        v[-1] = 0.0
        return SampledFunction(0.0, step, v)
    x = step * np.arange(n)
    v = np.zeros(n, dtype=np.float64)
    for k in range(order + 1):
        v += (-1.0) ** k * comb(order, k) * np.maximum(x - k, 0.0) ** (order - 1)
    v /= factorial(order - 1)
    return SampledFunction(0.0, step, v)
