"""Dense collocation reference for the Hermite interpolant.

Every interpolation condition is imposed literally at every node and the
resulting square system is solved by LU with partial pivoting.  Nothing here
uses the aliasing rule or the per-harmonic decomposition; only the list of
frequencies is shared with the fast path.
"""

import numpy as np

from .core import (
    MODES,
    HermiteTrigPoly,
    SingularSystemError,
    _validate_p,
    check_centered,
    hermite_frequencies,
)
from .grid import nodes
from .spectral import HermiteSamples

__all__ = ["collocation_matrix", "collocation_solve"]

DENSE_COND_LIMIT = 1e13


def collocation_matrix(grid, p, freqs):
    """Rows: conditions (order m, node j).  Columns: const, cos, sin, means 1..p."""
    t = nodes(grid)
    w = np.asarray(freqs, dtype=float)
    F = len(w)
    N = grid.N
    M = np.zeros(((p + 1) * N, 1 + 2 * F + p))
    for m in range(p + 1):
        rows = slice(m * N, (m + 1) * N)
        arg = np.outer(t, w) + m * np.pi / 2
        M[rows, 1:F + 1] = w**m * np.cos(arg)
        M[rows, F + 1:2 * F + 1] = w**m * np.sin(arg)
        if m == 0:
            M[rows, 0] = 1.0
        else:
            M[rows, 2 * F + m] = 1.0
    return M


def collocation_solve(samples: HermiteSamples, mode: str = "strict") -> HermiteTrigPoly:
    """Solve all N(p+1) interpolation conditions as one dense system."""
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}, got {mode!r}")
    grid, p = samples.grid, samples.p
    _validate_p(p)
    if mode == "strict":
        check_centered(samples.rows)
    freqs = hermite_frequencies(p, grid)
    M = collocation_matrix(grid, p, freqs)
    rhs = samples.rows.reshape(-1)

    scale = float(max(freqs.max(), 1)) ** -np.repeat(np.arange(p + 1, dtype=float), grid.N)
    Ms = M * scale[:, None]
    col = 1.0 / np.abs(Ms).max(axis=0)
    Ms *= col
    cond = np.linalg.cond(Ms)
    if not np.isfinite(cond) or cond > DENSE_COND_LIMIT:
        raise SingularSystemError(f"dense collocation system is singular (condition {cond:.3g})")
    x = np.linalg.solve(Ms, rhs * scale) * col

    F = len(freqs)
    means = np.concatenate([[0.0], x[2 * F + 1:]])
    if mode == "strict":
        means = np.zeros(p + 1)
    return HermiteTrigPoly(grid, p, mode, x[0], freqs, x[1:F + 1], x[F + 1:2 * F + 1], means)
