"""Finite filter algebra for biorthogonal filter banks.

A low-pass filter is stored as a finite tap sequence with an integer offset
(the index of the first tap) and the convention that taps sum to 1, so the
transfer function equals 1 at frequency zero. Elevation by order ``s``
convolves the primal filter with the scaled binomial row 2^-s * C(s, .) and
deconvolves the dual filter by the same row; both directions are exact
polynomial arithmetic and are implemented tap-by-tap so that divisibility
failures are caught per round.
"""

import warnings
from dataclasses import dataclass
from math import comb
from typing import NamedTuple, Optional

import numpy as np

from .errors import (
    DegenerateDualWarning,
    InvalidBank,
    NotDivisible,
    TooShort,
    ZeroMass,
)

NORMALIZATION_TOL = 1e-12
DIVISIBILITY_TOL = 1e-9
SYMMETRY_TOL = 1e-10


@dataclass(frozen=True, eq=False)
class Filter:
    """Finite real tap sequence ``coeffs`` starting at integer index ``offset``.

    Construction trims exact zeros from both ends (canonical form); an
    all-zero sequence is rejected. Instances are immutable values.
    """

    offset: int
    coeffs: np.ndarray

    def __post_init__(self):
        c = np.array(self.coeffs, dtype=np.float64)
        if c.ndim != 1 or c.size == 0:
            raise ValueError("coeffs must be a nonempty 1-d sequence")
        if not np.all(np.isfinite(c)):
            raise ValueError("coeffs must be finite")
        nz = np.nonzero(c)[0]
        if nz.size == 0:
            raise ValueError("filter has no nonzero coefficients")
        lead = int(nz[0])
        c = c[lead : int(nz[-1]) + 1]
        c.setflags(write=False)
        object.__setattr__(self, "offset", int(self.offset) + lead)
        object.__setattr__(self, "coeffs", c)

    def __len__(self):
        return self.coeffs.shape[0]

    def __eq__(self, other):
        if not isinstance(other, Filter):
            return NotImplemented
        return self.offset == other.offset and np.array_equal(self.coeffs, other.coeffs)

    __hash__ = None

    @property
    def mass(self) -> float:
        """Sum of the taps (transfer-function value at frequency zero)."""
        return float(self.coeffs.sum())

    @property
    def is_normalized(self) -> bool:
        return abs(self.mass - 1.0) <= NORMALIZATION_TOL

    def shifted(self, n: int) -> "Filter":
        """Same taps translated by ``n`` indices."""
        return Filter(self.offset + int(n), self.coeffs)


class Symmetry(NamedTuple):
    kind: str  # "symmetric" | "antisymmetric" | "none"
    center: Optional[float]


@dataclass(frozen=True)
class FilterBank:
    """A primal/dual low-pass pair; the discrete form of a biorthogonal
    scaling-function pair. ``validate()`` enforces the pair invariants
    (normalization of both filters and the perfect-reconstruction identity).
    """

    name: str
    primal: Filter
    dual: Filter

    def validate(self, gridsize: int = 1024, pr_tol: float = 1e-9) -> "FilterBank":
        from .spectral import pr_residual

        for side, f in (("primal", self.primal), ("dual", self.dual)):
            if not f.is_normalized:
                raise InvalidBank(
                    f"{self.name}: {side} filter taps sum to {f.mass!r}, not 1"
                )
        res = pr_residual(self, gridsize)
        if not res < pr_tol:
            raise InvalidBank(
                f"{self.name}: perfect-reconstruction residual {res:.3e} >= {pr_tol:g}"
            )
        return self


def normalize(f: Filter) -> Filter:
    """Rescale so the taps sum to 1.

    Raises
    ------
    ZeroMass
        If the tap sum is below 1e-14 in magnitude.
    """
    s = f.mass
    if abs(s) < 1e-14:
        raise ZeroMass(f"tap sum {s!r} too close to zero to normalize")
    return Filter(f.offset, f.coeffs / s)


def binomial_row(s: int) -> np.ndarray:
    """Pascal row C(s, 0..s) scaled by 2^-s; the unit-average mask of order s."""
    return np.array([comb(s, l) for l in range(s + 1)], dtype=np.float64) / 2.0**s


def binomial_elevate_primal(h: Filter, s: int) -> Filter:
    """Convolve with the order-``s`` binomial averaging mask.

    Output keeps the offset, gains ``s`` taps on the right, and preserves the
    tap sum exactly (the mask itself sums to 1).
    """
    _check_order(s)
    if s == 0:
        return h
    return Filter(h.offset, np.convolve(h.coeffs, binomial_row(s)))


def binomial_reduce_dual(hd: Filter, s: int) -> Filter:
    """Deconvolve the order-``s`` binomial mask: the inverse of elevation.

    Performs ``s`` rounds of forward-substitution synthetic division of the
    tap polynomial by (1+z), each followed by doubling, so the result ``H``
    satisfies sum_l C(s,l) H_{k-l} = 2^s hd_k exactly. The offset is kept and
    the length shrinks by ``s``.

    Raises
    ------
    NotDivisible
        When a round leaves a remainder above 1e-9 times the largest current
        tap, i.e. the symbol lacks a zero of order ``s`` at z = -1.
    TooShort
        When a round would leave no taps at all.
    """
    _check_order(s)
    cur = hd.coeffs
    for _ in range(s):
        scale = np.abs(cur).max()
        if cur.shape[0] == 1:
            # dividing a constant by (1+z): quotient empty, remainder = constant
            if abs(cur[0]) > DIVISIBILITY_TOL * scale:
                raise NotDivisible(
                    f"no zero at z=-1: remainder {cur[0]!r} after exhausting taps"
                )
            raise TooShort(f"reduction by {s} leaves an empty filter")
        q = np.empty(cur.shape[0] - 1, dtype=np.float64)
        q[0] = cur[0]
        for i in range(1, q.shape[0]):
            q[i] = cur[i] - q[i - 1]
        rem = cur[-1] - q[-1]
        if abs(rem) > DIVISIBILITY_TOL * scale:
            raise NotDivisible(
                f"division by (1+z) leaves remainder {rem!r} "
                f"(tolerance {DIVISIBILITY_TOL:g} * {scale!r})"
            )
        cur = 2.0 * q
    return Filter(hd.offset, cur)


def elevate(bank: FilterBank, s: int) -> FilterBank:
    """Elevate a bank by order ``s``: binomial convolution on the primal,
    binomial deconvolution on the dual.

    The reduced dual is translated by ``s`` indices; that is where the
    averaging mask's phase ends up, and it is what keeps the pair
    perfect-reconstruction (the primal grows on the right, so its center
    moves by s/2, and the dual center must follow).

    Emits :class:`DegenerateDualWarning` when the dual shrinks to one tap.
    """
    _check_order(s)
    if s == 0:
        return bank
    bank.validate()
    mult = root_multiplicity(bank.dual, -1)
    if mult < s:
        raise NotDivisible(
            f"dual multiplicity {mult} at z=-1 is below elevation order {s}"
        )
    primal = binomial_elevate_primal(bank.primal, s)
    dual = binomial_reduce_dual(bank.dual, s).shifted(s)
    if len(dual) == 1:
        warnings.warn(
            f"{bank.name}: elevation by {s} reduces the dual to a point mass",
            DegenerateDualWarning,
            stacklevel=2,
        )
    return FilterBank(f"elevate({bank.name},{s})", primal, dual).validate()


def elevate_orthonormal(h: Filter, s: int) -> FilterBank:
    """Elevate starting from a single orthonormal filter (dual = primal)."""
    bank = FilterBank(f"orthonormal+{s}", h, h).validate()
    return elevate(bank, s)


def derive_highpass(bank: FilterBank) -> tuple[Filter, Filter]:
    """High-pass pair by alternating flip: g_n = (-1)^n dual_{1-n} and
    g̃_n = (-1)^n primal_{1-n}.

    Both have zero tap sum whenever the flipped filter has a zero at z = -1
    (always true for non-degenerate banks).
    """
    return _alternating_flip(bank.dual), _alternating_flip(bank.primal)


def _alternating_flip(f: Filter) -> Filter:
    n0 = 1 - (f.offset + len(f) - 1)
    rev = f.coeffs[::-1]
    signs = np.where((np.arange(len(f)) + n0) % 2 == 0, 1.0, -1.0)
    return Filter(n0, signs * rev)


def root_multiplicity(f: Filter, point: int, tol: float = DIVISIBILITY_TOL) -> int:
    """Order of the tap polynomial's zero at z = ``point`` (+1 or -1).

    Counts trial synthetic divisions whose remainder stays below
    ``tol * max |tap|`` of the current polynomial; the input is not modified.
    At z=-1 this counts smoothness (averaging) factors, at z=+1 the vanishing
    moments of a high-pass filter.
    """
    if point not in (-1, 1):
        raise ValueError("point must be -1 or +1")
    cur = f.coeffs
    m = 0
    while cur.shape[0] > 1:
        scale = np.abs(cur).max()
        q = np.empty(cur.shape[0] - 1, dtype=np.float64)
        q[-1] = cur[-1]
        for i in range(cur.shape[0] - 2, 0, -1):
            q[i - 1] = cur[i] + point * q[i]
        rem = cur[0] + point * q[0]
        if abs(rem) > tol * scale:
            break
        cur = q
        m += 1
    return m


def support(f: Filter) -> tuple[int, int]:
    """Index span (first, last) of the taps; under the two-scale relation the
    associated scaling function is supported on exactly this interval."""
    return (f.offset, f.offset + len(f) - 1)


def symmetry_type(f: Filter, tol: float = SYMMETRY_TOL) -> Symmetry:
    """Detect c_k = ±c_{C-k} about an integer or half-integer center."""
    rev = f.coeffs[::-1]
    center = f.offset + (len(f) - 1) / 2.0
    if np.max(np.abs(f.coeffs - rev)) <= tol:
        return Symmetry("symmetric", center)
    if np.max(np.abs(f.coeffs + rev)) <= tol:
        return Symmetry("antisymmetric", center)
    return Symmetry("none", None)


def _check_order(s: int) -> None:
    if not isinstance(s, (int, np.integer)) or s < 0:
        raise ValueError(f"elevation order must be a non-negative integer, got {s!r}")
