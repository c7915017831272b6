"""Kernel backend selection.

The compiled extension is preferred when present; setting the environment
variable ``WAVETOOL_PURE=1`` before import forces the numpy fallback (used by
the benchmark and by tests that cross-check the two implementations).
"""

import os

if os.environ.get("WAVETOOL_PURE"):
    from . import _kernels_py as _impl
else:
    try:
        from . import _fastkernels as _impl  # type: ignore[attr-defined]
    except ImportError:
        from . import _kernels_py as _impl

BACKEND = _impl.BACKEND
eval_symbol_grid = _impl.eval_symbol_grid
refine_step = _impl.refine_step
riesz_values = _impl.riesz_values
