"""Backend selection for the hot loops.

The compiled extension is preferred; set ``FRACSCHROD_PURE_PYTHON=1`` to force
the pure-Python implementation.  ``BACKEND`` names the active one.
"""

import importlib
import os

__all__ = [
    "BACKEND",
    "backend",
    "available_backends",
    "sturm_count",
    "bisect_eigenvalues",
    "tridiag_shifted_solve",
    "toeplitz_lower_apply",
]

_MODULES = {"cython": "fracschrod._kernels", "python": "fracschrod._pykernels"}


def backend(name):
    """Return the kernel module for ``name`` ('cython' or 'python')."""
    return importlib.import_module(_MODULES[name])


def available_backends():
    names = []
    for name in _MODULES:
        try:
            backend(name)
        except ImportError:
            continue
        names.append(name)
    return names


def _select():
    if os.environ.get("FRACSCHROD_PURE_PYTHON", "").strip() not in ("", "0"):
        return "python", backend("python")
    try:
        return "cython", backend("cython")
    except ImportError:
        return "python", backend("python")


BACKEND, _impl = _select()

sturm_count = _impl.sturm_count
bisect_eigenvalues = _impl.bisect_eigenvalues
tridiag_shifted_solve = _impl.tridiag_shifted_solve
toeplitz_lower_apply = _impl.toeplitz_lower_apply
