"""Elevation of biorthogonal wavelet filter banks.

Builds new filter banks from old ones by binomial convolution of the primal
low-pass filter and binomial deconvolution of the dual, trading vanishing
moments for regularity between the two sides, and verifies the advertised
properties numerically: perfect reconstruction, supports, zero
multiplicities, Riesz bounds, parity, and the sample-domain integral
identities.
"""

from .backend import BACKEND
from .cascade import (
    SampledFunction,
    bspline_reference,
    cascade_scaling,
    cascade_wavelet,
    elevation_consistency,
    fit_cumulative_integral,
    moving_integral,
)
from .errors import (
    BadParity,
    DegenerateDualWarning,
    InvalidBank,
    NoConvergence,
    NotDivisible,
    TooShort,
    UnknownOrder,
    UnsupportedFilter,
    WaveToolError,
    ZeroMass,
)
from .families import (
    builtin_banks,
    cdf_spline,
    daubechies,
    family_names,
    filter_equivalent,
    from_spec,
    haar,
)
from .filters import (
    Filter,
    FilterBank,
    Symmetry,
    binomial_elevate_primal,
    binomial_reduce_dual,
    binomial_row,
    derive_highpass,
    elevate,
    elevate_orthonormal,
    normalize,
    root_multiplicity,
    support,
    symmetry_type,
)
from .spectral import (
    RieszProfile,
    TrigSymbol,
    difference_symbol,
    elevated_lowpass_symbol,
    elevation_symbol_residuals,
    eval_symbol,
    orthonormality_deviation,
    pr_residual,
    riesz_profile,
    scaling_fourier,
)

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "BadParity",
    "DegenerateDualWarning",
    "Filter",
    "FilterBank",
    "InvalidBank",
    "NoConvergence",
    "NotDivisible",
    "RieszProfile",
    "SampledFunction",
    "Symmetry",
    "TooShort",
    "TrigSymbol",
    "UnknownOrder",
    "UnsupportedFilter",
    "WaveToolError",
    "ZeroMass",
    "binomial_elevate_primal",
    "binomial_reduce_dual",
    "binomial_row",
    "bspline_reference",
    "builtin_banks",
    "cascade_scaling",
    "cascade_wavelet",
    "cdf_spline",
    "daubechies",
    "derive_highpass",
    "difference_symbol",
    "elevate",
    "elevate_orthonormal",
    "elevated_lowpass_symbol",
    "elevation_consistency",
    "elevation_symbol_residuals",
    "eval_symbol",
    "family_names",
    "filter_equivalent",
    "fit_cumulative_integral",
    "from_spec",
    "haar",
    "moving_integral",
    "normalize",
    "orthonormality_deviation",
    "pr_residual",
    "riesz_profile",
    "root_multiplicity",
    "scaling_fourier",
    "support",
    "symmetry_type",
]
