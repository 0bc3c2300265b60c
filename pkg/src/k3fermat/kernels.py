"""Kernel backend selection.

The compiled extension is used when built; set K3FERMAT_PURE=1 to force
the pure-Python fallback (useful for timing comparisons and debugging).
"""

import os

if os.environ.get("K3FERMAT_PURE") == "1":
    from . import _kernels_py as _impl
else:
    try:
        from . import _kernels as _impl  # type: ignore[attr-defined]
    except ImportError:
        from . import _kernels_py as _impl

jacobi_counts = _impl.jacobi_counts
chi_cubic_sum = _impl.chi_cubic_sum
fermat_affine = _impl.fermat_affine


def backend_name():
    return "pure" if _impl.__name__.endswith("_kernels_py") else "compiled"
