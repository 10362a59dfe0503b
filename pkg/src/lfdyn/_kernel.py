"""Selects between the compiled and pure-Python kernels.

The compiled kernel (lfdyn._ckernel, built by setup.py) is preferred when
importable. LFDYN_KERNEL=pure or =c forces a choice for callers that pass
"auto"; an explicit kernel argument wins over the environment.
"""

from __future__ import annotations

import os

from . import _pykernel

_impls = {"pure": _pykernel}
try:
    from . import _ckernel  # type: ignore[attr-defined]

    _impls["c"] = _ckernel
except ImportError:
    pass


def available() -> list[str]:
    """Kernel names usable on this install ("pure" always; "c" if built)."""
    return sorted(_impls)


def resolve(name: str = "auto"):
    """The kernel module for a name; "auto" honors LFDYN_KERNEL."""
    if name in (None, "", "auto"):
        name = os.environ.get("LFDYN_KERNEL", "").strip().lower() or "auto"
        if name == "auto":
            name = "c" if "c" in _impls else "pure"
    if name not in _impls:
        raise ValueError(f"unknown kernel {name!r}; available: {available()}")
    return _impls[name]
