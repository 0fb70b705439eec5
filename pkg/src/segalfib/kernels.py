"""Backend selection for the hot loops.

The compiled extension is used when it imports; otherwise (or when
``SEGALFIB_PURE_PYTHON=1``) the pure-Python twin is used.
"""

from __future__ import annotations

import os
from contextlib import contextmanager

from . import _pykernels

try:
    if os.environ.get("SEGALFIB_PURE_PYTHON", "") not in ("", "0"):
        raise ImportError("pure Python requested")
    from . import _kernels as _ckernels
except ImportError:
    _ckernels = None

_BACKENDS = {"python": _pykernels}
if _ckernels is not None:
    _BACKENDS["compiled"] = _ckernels

_active = _BACKENDS["compiled"] if _ckernels is not None else _pykernels


def available_backends() -> list[str]:
    return sorted(_BACKENDS)


def backend_name() -> str:
    return "compiled" if _active is _ckernels and _ckernels is not None else "python"


def set_backend(name: str) -> None:
    global _active
    try:
        _active = _BACKENDS[name]
    except KeyError:
        raise ValueError(f"backend {name!r} unavailable; have {available_backends()}") from None


@contextmanager
def use_backend(name: str):
    previous = backend_name()
    set_backend(name)
    try:
        yield
    finally:
        set_backend(previous)


def enumerate_maps(*args, **kwargs):
    return _active.enumerate_maps(*args, **kwargs)


def components(n, src, tgt):
    return _active.components(n, src, tgt)
