"""Backend dispatch for the hot numerical kernels.

The environment variable ``ORTHO_BACKEND`` selects the implementation:

* ``auto`` (default) -- numba when importable, else pure numpy;
* ``numba``          -- require the compiled kernels;
* ``numpy``          -- force the pure-numpy fallback.

Both backends expose the same functions with identical semantics; the
benchmark in ``benchmarks/bench_backends.py`` compares them.
"""

from __future__ import annotations

import os
import warnings

from . import numpy_backend
from .numpy_backend import KIND_PSUM, KIND_SUP, KIND_QUAD  # noqa: F401

_choice = os.environ.get("ORTHO_BACKEND", "auto").strip().lower()
if _choice not in ("auto", "numba", "numpy"):
    warnings.warn(f"ignoring unknown ORTHO_BACKEND={_choice!r}; using 'auto'")
    _choice = "auto"

if _choice == "numpy":
    _impl = numpy_backend
    BACKEND = "numpy"
else:
    try:
        from . import numba_backend as _impl
        BACKEND = "numba"
    except ImportError:
        if _choice == "numba":
            raise
        _impl = numpy_backend
        BACKEND = "numpy"

hh_integral_batch = _impl.hh_integral_batch
beta_min_batch = _impl.beta_min_batch


def backend_name() -> str:
    return BACKEND


def get_backend(name: str):
    """Fetch a backend module by name (used by tests and benchmarks)."""
    if name == "numpy":
        return numpy_backend
    if name == "numba":
        from . import numba_backend
        return numba_backend
    raise ValueError(f"unknown backend {name!r}")
