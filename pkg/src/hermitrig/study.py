"""Residual tables and convergence studies."""

import time
from dataclasses import dataclass

import numpy as np

from .core import build_hermite
from .evaluate import evaluate_many
from .functions import derivatives
from .grid import make_grid
from .spectral import HermiteSamples

__all__ = [
    "node_residuals",
    "normalized_residual",
    "coefficient_gap",
    "ConvergenceRow",
    "convergence_study",
    "FINE_POINTS",
]

FINE_POINTS = 2048


def node_residuals(poly, samples: HermiteSamples) -> np.ndarray:
    """Max absolute node residual for each derivative order 0..p."""
    t = samples.grid.nodes()
    return np.array(
        [np.abs(evaluate_many(poly, t, m) - samples.rows[m]).max() for m in range(samples.p + 1)]
    )


def normalized_residual(poly, samples: HermiteSamples) -> float:
    """Largest node residual over all orders, divided by the largest sample magnitude."""
    scale = max(np.abs(samples.rows).max(), np.finfo(float).tiny)
    return float(node_residuals(poly, samples).max() / scale)


def coefficient_gap(a, b) -> float:
    if not np.array_equal(a.freqs, b.freqs):
        raise ValueError("polynomials use different frequency sets")
    return float(
        max(
            abs(a.const_term - b.const_term),
            np.abs(a.cos - b.cos).max(initial=0.0),
            np.abs(a.sin - b.sin).max(initial=0.0),
            np.abs(a.mean_terms - b.mean_terms).max(initial=0.0),
        )
    )


@dataclass(frozen=True)
class ConvergenceRow:
    function: str
    p: int
    family: int
    n: int
    node_residuals: tuple
    fine_error: float
    seconds: float


def convergence_study(name: str, p: int, family: int, ns, mode: str = "paper",
                      fine_points: int = FINE_POINTS) -> list:
    """Build the interpolant of a builtin function for each n and measure errors.

    The fine-grid error is the largest order-0 deviation from the exact
    function on ``fine_points`` uniform points of [0, 2*pi).
    """
    derivs = derivatives(name, p)
    t_fine = 2 * np.pi * np.arange(fine_points) / fine_points
    exact = derivs[0](t_fine)
    out = []
    for n in sorted(ns):
        grid = make_grid(family, n)
        samples = HermiteSamples.from_function(grid, derivs)
        start = time.perf_counter()
        poly = build_hermite(samples, mode)
        elapsed = time.perf_counter() - start
        err = float(np.abs(evaluate_many(poly, t_fine, 0) - exact).max())
        out.append(ConvergenceRow(name, p, family, n, tuple(node_residuals(poly, samples)), err,
                                  elapsed))
    return out
