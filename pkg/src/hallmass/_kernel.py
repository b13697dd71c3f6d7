"""Kernel selection.

Uses the compiled ``_ckernel`` when it was built, the pure-Python kernel
otherwise.  Setting ``HALLMASS_PURE_PYTHON=1`` forces the fallback;
:func:`set_backend` switches at runtime (tests and benchmarks).
"""
import os

from hallmass import _pykernel

try:
    from hallmass import _ckernel
except ImportError:
    _ckernel = None

BACKEND = None
conv = inverse = divide_binomial = None


def available_backends():
    return ["python"] + (["cython"] if _ckernel is not None else [])


def set_backend(name: str) -> str:
    """Route all series arithmetic through ``name``; returns the previous one."""
    global BACKEND, conv, inverse, divide_binomial
    if name == "cython" and _ckernel is None:
        raise ImportError("compiled kernel is not built")
    if name not in ("python", "cython"):
        raise ValueError(f"unknown backend {name!r}")
    mod = _ckernel if name == "cython" else _pykernel
    previous = BACKEND
    BACKEND = name
    conv, inverse, divide_binomial = mod.conv, mod.inverse, mod.divide_binomial
    return previous


set_backend("python" if os.environ.get("HALLMASS_PURE_PYTHON") or _ckernel is None else "cython")
