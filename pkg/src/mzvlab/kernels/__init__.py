"""Backend selection for the nested-sum kernels.

Two interchangeable implementations exist: a numba @njit backend and a pure
numpy fallback.  The environment variable MZVLAB_BACKEND picks one ("numba"
or "numpy"); when unset, numba is used if importable, numpy otherwise.  The
choice is resolved lazily on first kernel call so importing the package never
triggers JIT compilation.
"""

from __future__ import annotations

import importlib
import os
from typing import Iterable

import numpy as np

__all__ = [
    "KERNEL_NAMES",
    "get_backend",
    "active_backend_name",
    "as_ks",
    "zeta_partial",
    "zeta_level_sums",
    "star_partial",
    "c1_table",
    "c2_table",
    "a1_table",
    "kawashima_f_eval",
]

KERNEL_NAMES = (
    "zeta_partial",
    "zeta_level_sums",
    "star_partial",
    "c1_table",
    "c2_table",
    "a1_table",
    "kawashima_f_eval",
)

_MODULES = {"numpy": "mzvlab.kernels.numpy_backend", "numba": "mzvlab.kernels.numba_backend"}
_loaded: dict[str, object] = {}
_active: list = []  # one-element cache of (name, module)


def get_backend(name: str):
    """Import and return the named backend module ("numpy" or "numba")."""
    name = name.lower()
    if name not in _MODULES:
        raise ValueError(f"unknown backend {name!r}; expected 'numpy' or 'numba'")
    mod = _loaded.get(name)
    if mod is None:
        mod = importlib.import_module(_MODULES[name])
        _loaded[name] = mod
    return mod


def _resolve():
    if _active:
        return _active[0]
    env = os.environ.get("MZVLAB_BACKEND", "").strip().lower()
    if env:
        pair = (env, get_backend(env))
    else:
        try:
            pair = ("numba", get_backend("numba"))
        except ImportError:
            pair = ("numpy", get_backend("numpy"))
    _active.append(pair)
    return pair


def active_backend_name() -> str:
    return _resolve()[0]


def as_ks(k: Iterable[int]) -> np.ndarray:
    """Index parts as the int64 array the kernels expect."""
    arr = np.asarray(tuple(k), dtype=np.int64)
    if arr.ndim != 1 or arr.size == 0:
        raise ValueError("kernel index must be a nonempty flat sequence")
    if arr.min() < 1:
        raise ValueError("kernel index parts must be >= 1")
    return arr


def zeta_partial(ks, n):
    return _resolve()[1].zeta_partial(ks, n)


def zeta_level_sums(ks, n):
    return _resolve()[1].zeta_level_sums(ks, n)


def star_partial(ks, n):
    return _resolve()[1].star_partial(ks, n)


def c1_table(ks, m):
    return _resolve()[1].c1_table(ks, m)


def c2_table(ks, m):
    return _resolve()[1].c2_table(ks, m)


def a1_table(ks, m):
    return _resolve()[1].a1_table(ks, m)


def kawashima_f_eval(ks, z, m):
    return _resolve()[1].kawashima_f_eval(ks, z, m)
