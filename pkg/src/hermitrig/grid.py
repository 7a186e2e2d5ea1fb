"""Uniform grids on [0, 2*pi) with an odd number of nodes.

Two families are supported:

    family 0:  t_j = 2*pi*(j - 1) / N
    family 1:  t_j = pi*(2*j - 1) / N        (family 0 shifted by pi/N)

with j = 1..N and N = 2n + 1.  Nodes are stored 0-based.
"""

from dataclasses import dataclass

import numpy as np

__all__ = ["GridSpec", "make_grid", "nodes"]


@dataclass(frozen=True)
class GridSpec:
    """One of the two uniform grid families.

    Parameters
    ----------
    family : int
        0 for the grid starting at t = 0, 1 for the half-step shifted grid.
    n : int
        Highest base harmonic; the grid has ``N = 2n + 1`` nodes.
    """

    family: int
    n: int

    def __post_init__(self):
        if not _is_int(self.family) or self.family not in (0, 1):
            raise ValueError(f"grid family must be 0 or 1, got {self.family!r}")
        if not _is_int(self.n) or self.n < 1:
            raise ValueError(f"n must be a positive integer, got {self.n!r}")
        object.__setattr__(self, "family", int(self.family))
        object.__setattr__(self, "n", int(self.n))

    @property
    def N(self) -> int:
        return 2 * self.n + 1

    @property
    def spacing(self) -> float:
        return 2.0 * np.pi / self.N

    def nodes(self) -> np.ndarray:
        return nodes(self)


def make_grid(family: int, n: int) -> GridSpec:
    return GridSpec(family, n)


def _is_int(x) -> bool:
    return isinstance(x, (int, np.integer)) and not isinstance(x, bool)


def nodes(grid: GridSpec) -> np.ndarray:
    """Grid nodes, computed from the closed formula (no accumulation)."""
    N = grid.N
    j = np.arange(1, N + 1, dtype=float)
    if grid.family == 0:
        return 2.0 * np.pi * (j - 1.0) / N
    return np.pi * (2.0 * j - 1.0) / N
