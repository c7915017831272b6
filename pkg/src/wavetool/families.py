"""Built-in filter banks: Haar, biorthogonal spline pairs, Daubechies.

The spline pair with orders (N, Ñ) has primal symbol cos^N(w/2) (with the
e^{-iw/2} phase absorbed per factor so taps sit at integer indices) and dual
symbol cos^Ñ(w/2) * sum_{n<q} C(q-1+n, n) sin^{2n}(w/2) with q = (N+Ñ)/2.
The dual is translated so both centers coincide, which is what the
perfect-reconstruction identity pins down. Daubechies coefficients ship as a
bundled table validated at load time.
"""

from functools import lru_cache
from importlib import resources
from math import comb
from typing import Optional

import numpy as np

from .errors import BadParity, InvalidBank, UnknownOrder
from .filters import Filter, FilterBank, root_multiplicity


def haar() -> FilterBank:
    """Two-tap averaging pair; primal = dual = [1/2, 1/2] at offset 0."""
    box = Filter(0, [0.5, 0.5])
    return FilterBank("haar", box, box)


def cdf_spline(n: int, nt: int) -> FilterBank:
    """Biorthogonal spline bank of primal order ``n`` and dual order ``nt``.

    Requires n + nt even (otherwise the half-sample phases cannot both be
    moved to integer offsets). The primal has a zero of order ``n`` at z=-1,
    the dual of order ``nt``.
    """
    if n < 1 or nt < 1:
        raise ValueError("spline orders must be >= 1")
    if (n + nt) % 2:
        raise BadParity(f"spline orders must have even sum, got ({n},{nt})")
    q = (n + nt) // 2

    primal = Filter(0, np.array([comb(n, j) for j in range(n + 1)], float) / 2.0**n)

    # sum_{m<q} C(q-1+m, m) sin^{2m}(w/2) as taps on indices -(q-1)..q-1,
    # using sin^2(w/2) = -(1-z)^2 / (4z)
    corr = np.zeros(2 * q - 1, dtype=np.float64)
    for m in range(q):
        row = np.array([comb(2 * m, j) for j in range(2 * m + 1)], dtype=np.float64)
        row *= (-1.0) ** np.arange(2 * m + 1)  # (1-z)^{2m}
        row *= comb(q - 1 + m, m) * (-0.25) ** m
        corr[q - 1 - m : q + m] += row
    dual_taps = np.convolve(
        np.array([comb(nt, j) for j in range(nt + 1)], float) / 2.0**nt, corr
    )
    dual = Filter(-(q - 1) + (n - nt) // 2, dual_taps)

    return FilterBank(f"cdf_spline({n},{nt})", primal, dual).validate()


@lru_cache(maxsize=None)
def _daubechies_table() -> dict[int, Filter]:
    table = {}
    text = resources.files("wavetool.data").joinpath("daubechies.txt").read_text()
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        name, offset, *taps = line.split()
        p = int(name.removeprefix("daubechies"))
        table[p] = Filter(int(offset), [float(t) for t in taps])
    return table


def daubechies(p: int) -> FilterBank:
    """Orthonormal bank (dual = primal) with ``p`` high-pass vanishing
    moments, 2p taps, from the bundled table.

    The table is never trusted blindly: the bank must pass the
    perfect-reconstruction check and show zero multiplicity exactly ``p``
    at z=-1, or loading fails.
    """
    table = _daubechies_table()
    if p not in table:
        raise UnknownOrder(f"no bundled coefficients for order {p} (have {sorted(table)})")
    h = table[p]
    bank = FilterBank(f"daubechies({p})", h, h).validate()
    mult = root_multiplicity(h, -1)
    if mult != p:
        raise InvalidBank(
            f"daubechies({p}): bundled data has multiplicity {mult} at z=-1"
        )
    return bank


def filter_equivalent(a: Filter, b: Filter) -> Optional[int]:
    """Integer shift n with a.shifted(n) == b within 1e-10, or None."""
    if len(a) != len(b):
        return None
    if np.max(np.abs(a.coeffs - b.coeffs)) > 1e-10:
        return None
    return b.offset - a.offset


def family_names() -> list[str]:
    """Family specs shown by the CLI list command."""
    return [
        "haar",
        "cdf_spline(2,2)",
        "cdf_spline(3,1)",
        "cdf_spline(4,4)",
        "daubechies(2)",
        "daubechies(3)",
        "daubechies(4)",
    ]


def builtin_banks() -> list[FilterBank]:
    return [
        haar(),
        cdf_spline(2, 2),
        cdf_spline(3, 1),
        cdf_spline(4, 4),
        daubechies(2),
        daubechies(3),
        daubechies(4),
    ]


def from_spec(text: str) -> FilterBank:
    """Build a bank from a short spec string: ``haar``, ``cdf:N,M``, ``db:P``."""
    text = text.strip()
    if text == "haar":
        return haar()
    if text.startswith("cdf:"):
        try:
            n, nt = (int(part) for part in text[4:].split(","))
        except ValueError:
            raise ValueError(f"bad spline spec {text!r}, expected cdf:N,M") from None
        return cdf_spline(n, nt)
    if text.startswith("db:"):
        try:
            p = int(text[3:])
        except ValueError:
            raise ValueError(f"bad order in {text!r}, expected db:P") from None
        return daubechies(p)
    raise ValueError(f"unknown family spec {text!r}")
