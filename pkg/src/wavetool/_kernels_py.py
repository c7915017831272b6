"""Numpy implementations of the hot kernels.

Same contract as the compiled extension in ``_fastkernels.pyx``; the
:mod:`wavetool.backend` module picks whichever is importable. Keep the two
files in sync (``tests/test_kernels.py`` cross-checks them).
"""

import numpy as np

BACKEND = "python"


def eval_symbol_grid(coeffs, offset, freqs):
    """Evaluate m(w) = sum_t c_t exp(-i (offset+t) w) for an array of w.

    Horner recurrence in z = exp(-iw), vectorized over the frequency grid.
    """
    coeffs = np.asarray(coeffs, dtype=np.float64)
    freqs = np.asarray(freqs, dtype=np.float64)
    z = np.exp(-1j * freqs)
    acc = np.full(freqs.shape, coeffs[-1], dtype=np.complex128)
    for c in coeffs[-2::-1]:
        acc *= z
        acc += c
    if offset:
        acc *= np.exp(-1j * offset * freqs)
    return acc


def refine_step(coeffs, values, stride, n_out):
    """Dyadic refinement: out[i] = 2 * sum_t c_t * values[2*i - t*stride].

    Out-of-range sample indices contribute zero. ``stride`` is the number of
    grid points per unit shift (2**J).
    """
    coeffs = np.asarray(coeffs, dtype=np.float64)
    values = np.asarray(values, dtype=np.float64)
    n_in = values.shape[0]
    out = np.zeros(n_out, dtype=np.float64)
    for t, c in enumerate(coeffs):
        d = t * stride
        i_lo = (d + 1) // 2
        i_hi = min(n_out - 1, (n_in - 1 + d) // 2)
        if i_hi < i_lo:
            continue
        out[i_lo : i_hi + 1] += (2.0 * c) * values[2 * i_lo - d : 2 * i_hi - d + 1 : 2]
    return out


def riesz_values(coeffs, freqs, levels, shifts):
    """Lattice sums sum_{|k|<=shifts} |prod_{j=1..levels} m((w+2kπ)/2^j)|^2.

    Filter translation only contributes a phase per factor, so no offset is
    taken; the result depends on |m| alone.
    """
    coeffs = np.asarray(coeffs, dtype=np.float64)
    freqs = np.asarray(freqs, dtype=np.float64)
    k = np.arange(-shifts, shifts + 1, dtype=np.float64)
    big = (freqs[:, None] + 2.0 * np.pi * k[None, :]).ravel()
    acc = np.ones(big.shape, dtype=np.complex128)
    for j in range(1, levels + 1):
        acc *= eval_symbol_grid(coeffs, 0, big / 2.0**j)
    mags = np.abs(acc) ** 2
    return mags.reshape(freqs.shape[0], k.shape[0]).sum(axis=1)
