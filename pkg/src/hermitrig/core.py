"""Hermite trigonometric interpolation by per-harmonic linear systems.

The interpolant for derivative order p on an N = 2n + 1 node grid uses, for
every base harmonic k = 1..n, the p + 1 frequencies

    odd p = 2q - 1:   k, (iN - k, iN + k) for i = 1..q-1, qN - k
    even p = 2q:      k, (iN - k, iN + k) for i = 1..q

Because each of these frequencies aliases onto k at the nodes, matching the
m-th derivative at the nodes decouples into one (p+1) x (p+1) system per k for
the cosine coefficients and one for the sine coefficients.  The right-hand
sides are the ordinary interpolation coefficients of the derivative rows.
"""

import logging
from dataclasses import dataclass, field

import numpy as np

from .alias import Branch, FrequencyTag, alias_sign
from .grid import GridSpec
from .spectral import FourierLayer, HermiteSamples, center_rows, layers_from_rows

__all__ = [
    "MAX_ORDER",
    "COND_LIMIT",
    "MODES",
    "SingularSystemError",
    "NonCenteredError",
    "HermiteTrigPoly",
    "HarmonicSystem",
    "frequency_set",
    "hermite_frequencies",
    "assemble_system",
    "solve_harmonic",
    "build_hermite",
    "closed_form_p1",
    "closed_form_p2",
    "check_centered",
]

log = logging.getLogger(__name__)

MAX_ORDER = 8
# condition limit for the row-equilibrated per-harmonic matrices
COND_LIMIT = 1e12
MODES = ("strict", "paper")
CENTER_TOL = 1e-10


class SingularSystemError(ArithmeticError):
    """A per-harmonic or collocation system could not be solved reliably."""


class NonCenteredError(ValueError):
    """Strict mode received derivative rows with a nonzero grid mean."""


@dataclass(frozen=True)
class HermiteTrigPoly:
    """A trigonometric polynomial with per-order constant offsets.

    Attributes
    ----------
    grid : GridSpec
    p : int
        Highest interpolated derivative order.
    mode : str
        ``"strict"`` or ``"paper"``.
    const_term : float
        Constant term ``a_0 / 2``.
    freqs : ndarray of int
        Ascending frequencies, shared by the cosine and sine coefficients.
    cos, sin : ndarray
        Coefficients aligned with ``freqs``.
    mean_terms : ndarray, shape (p + 1,)
        Constant added when evaluating derivative order m; ``mean_terms[0]``
        is always 0.
    """

    grid: GridSpec
    p: int
    mode: str
    const_term: float
    freqs: np.ndarray = field(repr=False)
    cos: np.ndarray = field(repr=False)
    sin: np.ndarray = field(repr=False)
    mean_terms: np.ndarray = field(repr=False)

    def __post_init__(self):
        freqs = np.asarray(self.freqs, dtype=np.int64)
        cos = np.asarray(self.cos, dtype=float)
        sin = np.asarray(self.sin, dtype=float)
        if not freqs.shape == cos.shape == sin.shape:
            raise ValueError("freqs, cos and sin must have the same length")
        order = np.argsort(freqs, kind="stable")
        for name, arr in (("freqs", freqs), ("cos", cos), ("sin", sin)):
            arr = arr[order]
            arr.flags.writeable = False
            object.__setattr__(self, name, arr)
        means = np.array(self.mean_terms, dtype=float)
        if means.shape != (self.p + 1,):
            raise ValueError(f"mean_terms must have p+1 = {self.p + 1} entries")
        means.flags.writeable = False
        object.__setattr__(self, "mean_terms", means)
        object.__setattr__(self, "const_term", float(self.const_term))
        if self.mode not in MODES:
            raise ValueError(f"mode must be one of {MODES}, got {self.mode!r}")

    @property
    def cos_coeffs(self) -> dict:
        return {int(w): float(a) for w, a in zip(self.freqs, self.cos)}

    @property
    def sin_coeffs(self) -> dict:
        return {int(w): float(b) for w, b in zip(self.freqs, self.sin)}

    def __call__(self, t, order: int = 0):
        from .evaluate import evaluate_many

        return evaluate_many(self, t, order)


@dataclass(frozen=True)
class HarmonicSystem:
    base_k: int
    family: str
    matrix: np.ndarray
    rhs: np.ndarray
    freq_order: tuple


def frequency_set(p: int, N: int, k: int) -> list:
    """The p + 1 frequencies attached to base harmonic ``k``, ascending.

    Examples
    --------
    >>> [t.omega for t in frequency_set(3, 5, 1)]
    [1, 4, 6, 9]
    """
    if p < 0:
        raise ValueError("p must be nonnegative")
    if N < 3 or N % 2 == 0:
        raise ValueError(f"N must be odd (N = 2n+1), got {N}")
    n = (N - 1) // 2
    if not 1 <= k <= n:
        raise ValueError(f"base harmonic k={k} outside 1..{n}")
    tags = [FrequencyTag.make(N, k, 0, Branch.BASE)]
    q, even_p = divmod(p + 1, 2)
    # odd p = 2q - 1 truncates block q to its minus branch
    full_blocks = q if even_p else q - 1
    for i in range(1, full_blocks + 1):
        tags.append(FrequencyTag.make(N, k, i, Branch.MINUS))
        tags.append(FrequencyTag.make(N, k, i, Branch.PLUS))
    if not even_p:
        tags.append(FrequencyTag.make(N, k, q, Branch.MINUS))
    return tags


def hermite_frequencies(p: int, grid: GridSpec) -> np.ndarray:
    """All frequencies of the Hermite ansatz, ascending."""
    w = [t.omega for k in range(1, grid.n + 1) for t in frequency_set(p, grid.N, k)]
    return np.sort(np.array(w, dtype=np.int64))


def _entry(family, m, omega, sign):
    # m-th derivative of cos/sin(w t) is w^m cos/sin(w t + m pi/2)
    power = float(omega) ** m
    half, odd = divmod(m, 2)
    parity = -1.0 if half % 2 else 1.0
    if family == "cosine":
        if odd:
            return -parity * power * sign.sigma_sin
        return parity * power * sign.sigma_cos
    if odd:
        return parity * power * sign.sigma_cos
    return parity * power * sign.sigma_sin


def assemble_system(grid: GridSpec, p: int, k: int, family: str, layers) -> HarmonicSystem:
    """Collect the node conditions of every order for one harmonic and family.

    Row m equates the ``cos kt`` or ``sin kt`` component of the m-th
    derivative of the ansatz with the matching coefficient of the m-th
    derivative row's interpolant.
    """
    if family not in ("cosine", "sine"):
        raise ValueError(f"family must be 'cosine' or 'sine', got {family!r}")
    if len(layers) != p + 1:
        raise ValueError(f"need p+1 = {p + 1} Fourier layers, got {len(layers)}")
    tags = tuple(frequency_set(p, grid.N, k))
    matrix = np.empty((p + 1, p + 1))
    rhs = np.empty(p + 1)
    for m in range(p + 1):
        for c, tag in enumerate(tags):
            sign = alias_sign(grid.family, tag.block_i, tag.branch)
            matrix[m, c] = _entry(family, m, tag.omega, sign)
        use_A = (family == "cosine") == (m % 2 == 0)
        rhs[m] = layers[m].A[k - 1] if use_A else layers[m].B[k - 1]
    return HarmonicSystem(k, family, matrix, rhs, tags)


def solve_harmonic(system: HarmonicSystem, return_cond: bool = False):
    """Solve one per-harmonic system with row equilibration.

    Row m is divided by ``w_max**m`` so every entry lies in [-1, 1]; this
    leaves the solution unchanged and keeps the condition number moderate.

    Raises
    ------
    SingularSystemError
        If the equilibrated matrix is singular or its condition number
        exceeds ``COND_LIMIT``.
    """
    M = np.asarray(system.matrix, dtype=float)
    rhs = np.asarray(system.rhs, dtype=float)
    w_max = float(max(t.omega for t in system.freq_order)) if system.freq_order else 1.0
    scale = w_max ** -np.arange(M.shape[0], dtype=float)
    Ms = M * scale[:, np.newaxis]
    rs = rhs * scale
    cond = np.linalg.cond(Ms)
    if not np.isfinite(cond) or cond > COND_LIMIT:
        raise SingularSystemError(
            f"harmonic system for k={system.base_k} ({system.family}) is singular "
            f"or ill-conditioned (condition estimate {cond:.3g})"
        )
    x = np.linalg.solve(Ms, rs)
    return (x, cond) if return_cond else x


def check_centered(rows) -> None:
    rows = np.asarray(rows, dtype=float)
    for m in range(1, rows.shape[0]):
        mu = rows[m].mean()
        if abs(mu) > CENTER_TOL * (1.0 + np.abs(rows[m]).max()):
            raise NonCenteredError(
                f"derivative row {m} has grid mean {mu:.6g}; strict mode needs centered "
                "derivative rows (use mode='paper' to absorb the means)"
            )


def _validate_p(p):
    if p > MAX_ORDER:
        raise ValueError(f"derivative order p={p} exceeds the supported maximum {MAX_ORDER}")


def build_hermite(samples: HermiteSamples, mode: str = "strict", method: str = "direct",
                  verbose: bool = False) -> HermiteTrigPoly:
    """Build the Hermite trigonometric interpolant of ``samples``.

    Parameters
    ----------
    samples : HermiteSamples
        Function and derivative values at the grid nodes.
    mode : {"strict", "paper"}
        ``"strict"`` rejects derivative rows whose grid mean is not zero.
        ``"paper"`` removes the means and returns them as ``mean_terms``,
        which are added back when evaluating that derivative order.
    method : {"direct", "fft"}
        Transform used for the interpolation coefficients.
    verbose : bool
        Log the largest condition estimate of the per-harmonic systems.

    Returns
    -------
    HermiteTrigPoly
    """
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}, got {mode!r}")
    grid, p = samples.grid, samples.p
    _validate_p(p)
    report = center_rows(samples)
    if mode == "strict":
        check_centered(samples.rows)
        means = np.zeros(p + 1)
    else:
        means = np.concatenate([[0.0], report.means[1:]])
    layers = layers_from_rows(report.centered_rows, grid, method=method)

    freqs, cos, sin = [], [], []
    worst = 0.0
    for k in range(1, grid.n + 1):
        for family, out in (("cosine", cos), ("sine", sin)):
            system = assemble_system(grid, p, k, family, layers)
            x, cond = solve_harmonic(system, return_cond=True)
            worst = max(worst, cond)
            out.extend(x)
        freqs.extend(t.omega for t in system.freq_order)
    if verbose:
        log.info("largest per-harmonic condition estimate: %.3g", worst)
    return HermiteTrigPoly(grid, p, mode, layers[0].A0 / 2, freqs, cos, sin, means)


def _closed_form_poly(grid, p, A00, per_k):
    freqs, cos, sin = [], [], []
    for omegas, a, b in per_k:
        freqs.extend(omegas)
        cos.extend(a)
        sin.extend(b)
    return HermiteTrigPoly(grid, p, "strict", A00 / 2, freqs, cos, sin, np.zeros(p + 1))


def closed_form_p1(layers, grid: GridSpec) -> HermiteTrigPoly:
    """Explicit coefficients for first-derivative data.

    Frequencies k and N - k; ``layers`` are the interpolation coefficients
    of the function row and the centered derivative row.
    """
    if len(layers) != 2:
        raise ValueError("closed_form_p1 needs exactly two layers")
    N = grid.N
    s = 1.0 if grid.family == 0 else -1.0
    L0, L1 = layers
    per_k = []
    for k in range(1, grid.n + 1):
        A0k, B0k = L0.A[k - 1], L0.B[k - 1]
        A1k, B1k = L1.A[k - 1], L1.B[k - 1]
        a = [((N - k) * A0k - B1k) / N, s * (k * A0k + B1k) / N]
        b = [((N - k) * B0k + A1k) / N, s * (A1k - k * B0k) / N]
        per_k.append(([k, N - k], a, b))
    return _closed_form_poly(grid, 1, L0.A0, per_k)


def closed_form_p2(layers, grid: GridSpec) -> HermiteTrigPoly:
    """Explicit coefficients for data up to the second derivative.

    Frequencies k, N - k and N + k.
    """
    if len(layers) != 3:
        raise ValueError("closed_form_p2 needs exactly three layers")
    N = grid.N
    N2 = float(N * N)
    L0, L1, L2 = layers
    per_k = []
    for k in range(1, grid.n + 1):
        A0, B0 = L0.A[k - 1], L0.B[k - 1]
        A1, B1 = L1.A[k - 1], L1.B[k - 1]
        A2, B2 = L2.A[k - 1], L2.B[k - 1]
        ak = (A0 * (N2 - k * k) - 2 * k * B1 + A2) / N2
        bk = (B0 * (N2 - k * k) + 2 * k * A1 + B2) / N2
        if grid.family == 0:
            a_minus = (A0 * (k * N + k * k) + B1 * (N + 2 * k) - A2) / (2 * N2)
            b_minus = (-B0 * (k * N + k * k) + A1 * (N + 2 * k) + B2) / (2 * N2)
            a_plus = (A0 * (k * k - k * N) + B1 * (2 * k - N) - A2) / (2 * N2)
            b_plus = (B0 * (k * k - k * N) + A1 * (N - 2 * k) - B2) / (2 * N2)
        else:
            a_minus = (-A0 * (k * N + k * k) - B1 * (N + 2 * k) + A2) / (2 * N2)
            b_minus = (B0 * (k * N + k * k) - A1 * (N + 2 * k) - B2) / (2 * N2)
            a_plus = (A0 * (k * N - k * k) + B1 * (N - 2 * k) + A2) / (2 * N2)
            b_plus = (B0 * (k * N - k * k) - A1 * (N - 2 * k) + B2) / (2 * N2)
        per_k.append(([k, N - k, N + k], [ak, a_minus, a_plus], [bk, b_minus, b_plus]))
    return _closed_form_poly(grid, 2, L0.A0, per_k)
