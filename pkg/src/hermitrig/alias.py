"""Sign rules for frequencies that alias onto a base harmonic at grid nodes.

On an N-node grid the frequencies ``i*N + k`` and ``i*N - k`` take the same
node values as frequency ``k`` up to a sign:

    cos(w t_j) = sigma_cos * cos(k t_j)
    sin(w t_j) = sigma_sin * sin(k t_j)

For family 0, ``i*N*t_j`` is a multiple of 2*pi.  For family 1 it is an odd
multiple of ``i*pi``, which contributes ``(-1)**i`` to both signs.  The minus
branch additionally flips the sine.
"""

import enum
from dataclasses import dataclass

import numpy as np

from .grid import GridSpec, nodes

__all__ = ["Branch", "AliasSign", "FrequencyTag", "alias_sign", "verify_alias"]


class Branch(str, enum.Enum):
    BASE = "base"
    MINUS = "minus"
    PLUS = "plus"


@dataclass(frozen=True)
class AliasSign:
    sigma_cos: int
    sigma_sin: int

    def __post_init__(self):
        if self.sigma_cos not in (-1, 1) or self.sigma_sin not in (-1, 1):
            raise ValueError("alias signs must be +1 or -1")


@dataclass(frozen=True)
class FrequencyTag:
    """A frequency ``omega`` together with how it folds onto ``base_k``.

    ``omega = block_i*N + base_k`` (plus), ``block_i*N - base_k`` (minus), or
    ``base_k`` with ``block_i = 0`` (base).
    """

    omega: int
    base_k: int
    block_i: int
    branch: Branch
    N: int

    def __post_init__(self):
        branch = Branch(self.branch)
        object.__setattr__(self, "branch", branch)
        if self.N < 3 or self.N % 2 == 0:
            raise ValueError(f"N must be odd (N = 2n+1), got {self.N}")
        n = (self.N - 1) // 2
        if not 1 <= self.base_k <= n:
            raise ValueError(f"base harmonic k={self.base_k} outside 1..{n}")
        if self.block_i < 0:
            raise ValueError("block index must be nonnegative")
        if branch is Branch.BASE and self.block_i != 0:
            raise ValueError("the base branch requires block index 0")
        if branch is not Branch.BASE and self.block_i == 0:
            raise ValueError("plus/minus branches require block index >= 1")
        expected = _omega(self.N, self.base_k, self.block_i, branch)
        if self.omega != expected:
            raise ValueError(
                f"frequency {self.omega} is inconsistent with k={self.base_k}, "
                f"i={self.block_i}, branch={branch.value} (expected {expected})"
            )

    @classmethod
    def make(cls, N: int, k: int, i: int, branch) -> "FrequencyTag":
        branch = Branch(branch)
        return cls(_omega(N, k, i, branch), k, i, branch, N)


def _omega(N, k, i, branch):
    if branch is Branch.BASE:
        return k
    if branch is Branch.PLUS:
        return i * N + k
    return i * N - k


def alias_sign(family: int, block_i: int, branch) -> AliasSign:
    """Signs relating ``cos/sin((i*N +- k) t_j)`` to ``cos/sin(k t_j)``.

    Closed-form rule; does not evaluate trigonometric functions.

    Examples
    --------
    >>> alias_sign(0, 1, "minus")
    AliasSign(sigma_cos=1, sigma_sin=-1)
    >>> alias_sign(1, 1, "minus")
    AliasSign(sigma_cos=-1, sigma_sin=1)
    """
    branch = Branch(branch)
    if family not in (0, 1):
        raise ValueError(f"grid family must be 0 or 1, got {family!r}")
    if block_i < 0:
        raise ValueError("block index must be nonnegative")
    if branch is Branch.BASE:
        if block_i != 0:
            raise ValueError("the base branch requires block index 0")
        return AliasSign(1, 1)
    shift = -1 if (family == 1 and block_i % 2 == 1) else 1
    if branch is Branch.PLUS:
        return AliasSign(shift, shift)
    return AliasSign(shift, -shift)


def verify_alias(grid: GridSpec, k: int, tag: FrequencyTag) -> float:
    """Largest node residual of the aliasing identity for ``tag`` on ``grid``."""
    if tag.N != grid.N:
        raise ValueError(f"tag was built for N={tag.N}, grid has N={grid.N}")
    if tag.base_k != k:
        raise ValueError(f"tag belongs to base harmonic {tag.base_k}, not {k}")
    t = nodes(grid)
    s = alias_sign(grid.family, tag.block_i, tag.branch)
    rc = np.abs(np.cos(tag.omega * t) - s.sigma_cos * np.cos(k * t))
    rs = np.abs(np.sin(tag.omega * t) - s.sigma_sin * np.sin(k * t))
    return float(max(rc.max(), rs.max()))
