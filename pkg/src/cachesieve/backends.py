"""Kernel backend selection.

The compiled extension is used when it was built; otherwise the numpy
fallback takes over. Set ``CACHESIEVE_BACKEND=python`` (or ``compiled`` /
``auto``) before import to override, or call :func:`select` /
:func:`use` at runtime.
"""

from __future__ import annotations

import os
from contextlib import contextmanager

from . import _kernels_py

_BACKENDS = {"python": _kernels_py}
try:
    from . import _kernels  # built by setup.py; absent on pure installs
except ImportError:
    pass
else:
    _BACKENDS["compiled"] = _kernels


def available() -> tuple[str, ...]:
    return tuple(sorted(_BACKENDS))


def resolve(backend: str | None = "auto"):
    """Return the kernel module for a backend name ('auto' prefers compiled)."""
    if backend in (None, "", "auto"):
        return _BACKENDS.get("compiled", _kernels_py)
    try:
        return _BACKENDS[backend]
    except KeyError:
        raise ValueError(
            f"unknown kernel backend {backend!r}; available: {available()}"
        ) from None


_active = resolve(os.environ.get("CACHESIEVE_BACKEND", "auto"))


def get():
    """The active kernel module."""
    return _active


def name() -> str:
    """Name of the active backend ('compiled' or 'python')."""
    return "compiled" if _active is _BACKENDS.get("compiled") else "python"


def select(backend: str) -> None:
    """Switch the process-wide kernel backend."""
    global _active
    _active = resolve(backend)


@contextmanager
def use(backend: str):
    """Temporarily switch backends (tests and comparison benchmarks)."""
    global _active
    previous = _active
    _active = resolve(backend)
    try:
        yield _active
    finally:
        _active = previous
