"""Built-in periodic test functions with exact derivatives of any order."""

from functools import lru_cache

import numpy as np
import sympy as sp

__all__ = ["BUILTIN", "derivatives", "sample"]

_t = sp.Symbol("t", real=True)

BUILTIN = {
    "exp_sin": sp.exp(sp.sin(_t)),
    "inv_2_plus_cos": 1 / (2 + sp.cos(_t)),
    "cos3_plus_sin": sp.cos(3 * _t) + sp.sin(_t),
}


@lru_cache(maxsize=None)
def _derivative(name: str, order: int):
    expr = BUILTIN[name]
    return sp.lambdify(_t, sp.diff(expr, _t, order) if order else expr, "numpy")


def derivatives(name: str, p: int) -> list:
    """Vectorized callables ``[f, f', ..., f^(p)]`` for a builtin function."""
    if name not in BUILTIN:
        raise KeyError(f"unknown function {name!r}; choose from {sorted(BUILTIN)}")
    return [_wrap(_derivative(name, m)) for m in range(p + 1)]


def _wrap(f):
    def g(t):
        t = np.asarray(t, dtype=float)
        return np.broadcast_to(np.asarray(f(t), dtype=float), t.shape).copy()

    return g


def sample(name: str, p: int, grid):
    from .spectral import HermiteSamples

    return HermiteSamples.from_function(grid, derivatives(name, p))
