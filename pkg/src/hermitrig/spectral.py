"""Ordinary trigonometric interpolation of sample rows, and row centering.

A row of N values on a grid is interpolated by the degree-n polynomial

    A0/2 + sum_{k=1}^{n} (A_k cos kt + B_k sin kt)

whose coefficients are discrete Fourier sums over the nodes.
"""

from dataclasses import dataclass, field

import numpy as np

from .grid import GridSpec, nodes

__all__ = [
    "HermiteSamples",
    "FourierLayer",
    "MeanReport",
    "trig_interp_coeffs",
    "center_rows",
    "layers_from_rows",
]


@dataclass(frozen=True)
class HermiteSamples:
    """Function and derivative values at the nodes of a grid.

    ``rows[m, j]`` holds the m-th derivative at node j (0-based), so the
    table has shape ``(p + 1, N)``.
    """

    grid: GridSpec
    rows: np.ndarray = field(repr=False)

    def __post_init__(self):
        rows = np.array(self.rows, dtype=float, copy=True)
        if rows.ndim == 1:
            rows = rows[np.newaxis, :]
        if rows.ndim != 2 or rows.shape[0] < 1:
            raise ValueError("sample rows must form a (p+1) x N matrix")
        if rows.shape[1] != self.grid.N:
            raise ValueError(
                f"each sample row must have N = {self.grid.N} entries, got {rows.shape[1]}"
            )
        if not np.all(np.isfinite(rows)):
            raise ValueError("sample rows contain non-finite values")
        rows.flags.writeable = False
        object.__setattr__(self, "rows", rows)

    @property
    def p(self) -> int:
        return self.rows.shape[0] - 1

    @classmethod
    def from_function(cls, grid, derivatives):
        """Sample a list of callables ``[f, f', ..., f^(p)]`` at the grid nodes."""
        t = nodes(grid)
        return cls(grid, np.array([np.broadcast_to(d(t), t.shape) for d in derivatives]))


@dataclass(frozen=True)
class FourierLayer:
    """Coefficients of the trigonometric interpolant of one sample row."""

    order: int
    A0: float
    A: np.ndarray
    B: np.ndarray

    def __call__(self, t):
        t = np.asarray(t, dtype=float)
        k = np.arange(1, len(self.A) + 1)
        kt = np.multiply.outer(t, k)
        return self.A0 / 2 + np.cos(kt) @ self.A + np.sin(kt) @ self.B


@dataclass(frozen=True)
class MeanReport:
    """Grid means of every row and the rows with derivative means removed."""

    means: np.ndarray
    centered_rows: np.ndarray


def trig_interp_coeffs(row, grid: GridSpec, order: int = 0, method: str = "direct") -> FourierLayer:
    """Coefficients of the degree-n trigonometric interpolant of ``row``.

    Parameters
    ----------
    row : array_like, shape (N,)
        Values at the grid nodes.
    grid : GridSpec
    order : int
        Derivative order the row belongs to; stored on the layer.
    method : {"direct", "fft"}
        ``"direct"`` evaluates the O(N^2) sums and is the reference path.
        ``"fft"`` uses a real FFT of odd length and rotates the phase for
        the shifted grid.

    Returns
    -------
    FourierLayer
    """
    row = np.asarray(row, dtype=float)
    N, n = grid.N, grid.n
    if row.shape != (N,):
        raise ValueError(f"row must have N = {N} entries, got shape {row.shape}")

    if method == "direct":
        t = nodes(grid)
        k = np.arange(1, n + 1)
        kt = np.multiply.outer(k, t)
        A = (2.0 / N) * (np.cos(kt) @ row)
        B = (2.0 / N) * (np.sin(kt) @ row)
        A0 = (2.0 / N) * row.sum()
    elif method == "fft":
        c = np.fft.rfft(row)[: n + 1] * (2.0 / N)
        if grid.family == 1:
            c = c * np.exp(-1j * np.pi * np.arange(n + 1) / N)
        A0 = c[0].real
        A = c[1:].real
        B = -c[1:].imag
    else:
        raise ValueError(f"unknown transform method {method!r}")
    return FourierLayer(order, float(A0), A, B)


def center_rows(samples: HermiteSamples) -> MeanReport:
    """Remove the grid mean from every derivative row (orders 1..p).

    Row 0 is left alone; its mean is carried by the constant term.
    """
    rows = samples.rows
    means = rows.mean(axis=1)
    centered = rows.copy()
    centered[1:] -= means[1:, np.newaxis]
    return MeanReport(means, centered)


def layers_from_rows(rows, grid: GridSpec, method: str = "direct"):
    return [trig_interp_coeffs(r, grid, order=m, method=method) for m, r in enumerate(rows)]
