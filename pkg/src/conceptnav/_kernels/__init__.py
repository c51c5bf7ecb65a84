"""Kernel backend selection.

The compiled extension is preferred when present; the pure-Python module is
the fallback. Set ``CONCEPTNAV_KERNELS=pure`` (or ``native``) to force one.
"""

from __future__ import annotations

import os

from . import pure

_requested = os.environ.get("CONCEPTNAV_KERNELS", "").strip().lower()

if _requested == "pure":
    _impl = pure
else:
    try:
        from . import _native as _impl  # type: ignore[no-redef]
    except ImportError:
        if _requested == "native":
            raise ImportError(
                "CONCEPTNAV_KERNELS=native but the compiled extension is "
                "not available; rebuild the package or unset the variable"
            ) from None
        _impl = pure

BACKEND: str = _impl.BACKEND
solve_assignment = _impl.solve_assignment
solve_eikonal = _impl.solve_eikonal


def available_backends() -> list[str]:
    backends = ["pure"]
    try:
        from . import _native  # noqa: F401
    except ImportError:
        pass
    else:
        backends.append("native")
    return backends


def get_backend(name: str):
    """Return the kernel module for ``name`` ('pure' or 'native')."""
    if name == "pure":
        return pure
    if name == "native":
        from . import _native

        return _native
    raise ValueError(f"unknown kernel backend: {name!r}")
