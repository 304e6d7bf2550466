"""Hot-kernel backend selection.

The compiled extension (Cython) is preferred; the numpy fallback keeps the
package functional without a compiler. Set DOCDETECT_KERNELS=python to force
the fallback, e.g. to compare backends.
"""
from __future__ import annotations

import os

from . import _pykernels

try:
    from . import _ckernels  # type: ignore[attr-defined]
except ImportError:  # extension not built
    _ckernels = None

if os.environ.get("DOCDETECT_KERNELS", "").lower() == "python" or _ckernels is None:
    _impl = _pykernels
else:
    _impl = _ckernels

BACKEND: str = _impl.NAME

label_components = _impl.label_components
component_stats = _impl.component_stats
component_max = _impl.component_max
splat_gaussians = _impl.splat_gaussians
levenshtein = _impl.levenshtein


def available_backends() -> list[str]:
    names = ["python"]
    if _ckernels is not None:
        names.insert(0, "cython")
    return names


def get_backend(name: str):
    """Return the kernel module for `name` ("cython" or "python")."""
    if name == "python":
        return _pykernels
    if name == "cython":
        if _ckernels is None:
            raise ValueError("compiled kernel backend is not available")
        return _ckernels
    raise ValueError(f"unknown kernel backend {name!r}")
