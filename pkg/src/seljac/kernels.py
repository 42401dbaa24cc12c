"""Kernel selection: compiled extension when built, pure Python otherwise.

`BACKEND` names the active implementation ("compiled" or "pure-python");
both expose the same functions with identical outputs.
"""
from __future__ import annotations

try:
    from . import _speedups as _impl  # type: ignore[attr-defined]
except ImportError:  # pragma: no cover - depends on the build environment
    from . import _kernels_py as _impl

BACKEND: str = _impl.BACKEND
multiplier_scan = _impl.multiplier_scan
feasibility_counts = _impl.feasibility_counts
