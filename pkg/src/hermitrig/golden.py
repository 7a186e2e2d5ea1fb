"""Worked examples as executable checks.

Each case records where its expected value came from: a closed-form
coefficient formula, a hand calculation, or an independent oracle (direct
summation, dense collocation, exact symbolic solve).  ``golden_suite`` runs
them all and reports one line per case.
"""

from dataclasses import dataclass, field, replace

import numpy as np

from .alias import alias_sign
from .core import (
    HarmonicSystem,
    assemble_system,
    build_hermite,
    closed_form_p1,
    closed_form_p2,
    frequency_set,
    solve_harmonic,
)
from .grid import make_grid
from .io import poly_from_json, poly_to_json
from .oracle import collocation_solve
from .spectral import FourierLayer, HermiteSamples, trig_interp_coeffs
from .study import convergence_study, node_residuals

__all__ = ["GoldenCase", "GoldenSummary", "CASES", "golden_suite"]


@dataclass(frozen=True)
class GoldenCase:
    ident: str
    provenance: str
    compute: object = field(repr=False)
    expected: tuple
    tol: float = 1e-12

    def run(self):
        got = np.asarray(self.compute(), dtype=float).ravel()
        want = np.asarray(self.expected, dtype=float).ravel()
        if got.shape != want.shape:
            return False, np.inf
        err = float(np.abs(got - want).max(initial=0.0))
        return err <= self.tol, err


@dataclass
class GoldenSummary:
    results: list

    @property
    def ok(self):
        return all(r[1] for r in self.results)

    def failures(self):
        return [r for r in self.results if not r[1]]

    def lines(self):
        out = [
            f"{'PASS' if ok else 'FAIL'}  {ident:<34} err={err:.2e}  [{prov}]"
            for ident, ok, err, prov in self.results
        ]
        out.append(f"{sum(r[1] for r in self.results)}/{len(self.results)} golden checks passed")
        return out


def _layer(order, n, A=None, B=None, A0=0.0):
    A = np.zeros(n) if A is None else np.asarray(A, dtype=float)
    B = np.zeros(n) if B is None else np.asarray(B, dtype=float)
    return FourierLayer(order, A0, A, B)


def _cos_samples(family, n, p):
    grid = make_grid(family, n)
    t = grid.nodes()
    ladder = [np.cos(t), -np.sin(t), -np.cos(t), np.sin(t)]
    return HermiteSamples(grid, np.array([ladder[m % 4] for m in range(p + 1)]))


def _layer_coeffs(fn, n):
    L = trig_interp_coeffs(fn(make_grid(0, n).nodes()), make_grid(0, n))
    return np.concatenate([[L.A0], L.A, L.B])


def _signs(*args):
    s = alias_sign(*args)
    return s.sigma_cos, s.sigma_sin


def _omegas(p, N, k):
    return [t.omega for t in frequency_set(p, N, k)]


def _system(family, p, k, fam, n=1):
    layers = [_layer(m, n) for m in range(p + 1)]
    return assemble_system(make_grid(family, n), p, k, fam, layers).matrix


def _solve(matrix, rhs):
    return solve_harmonic(HarmonicSystem(1, "cosine", np.array(matrix, float), np.array(rhs, float), ()))


def _p1_coeffs(A0k=0.0, B0k=0.0, A1k=0.0, B1k=0.0):
    grid = make_grid(0, 1)
    poly = closed_form_p1([_layer(0, 1, [A0k], [B0k]), _layer(1, 1, [A1k], [B1k])], grid)
    return np.concatenate([poly.cos, poly.sin])


def _p2_cos_case():
    grid = make_grid(0, 1)
    layers = [_layer(0, 1, [1.0]), _layer(1, 1, None, [-1.0]), _layer(2, 1, [-1.0])]
    return closed_form_p2(layers, grid).cos


def _poly_vector(poly):
    return np.concatenate([[poly.const_term], poly.cos, poly.sin])


def _file_cos_entry():
    poly = poly_from_json(poly_to_json(build_hermite(_cos_samples(0, 1, 1), "strict")))
    big = [(int(w), float(a)) for w, a in zip(poly.freqs, poly.cos) if abs(a) > 1e-14]
    small = max(np.abs(poly.sin).max(), abs(poly.const_term))
    return [big[0][0], big[0][1], len(big), small]


def _verify_cos():
    s = _cos_samples(0, 1, 1)
    return [node_residuals(build_hermite(s), s).max(), node_residuals(collocation_solve(s), s).max()]


def _reproduce_cos3():
    return [max(r.fine_error for r in convergence_study("cos3_plus_sin", 1, 0, [3, 4, 5]))]


_SPECTRAL = "oracle: direct summation over the nodes"
_CLOSED = "closed-form coefficient formula"

CASES = [
    GoldenCase("trig_interp_coeffs/cos_t", _SPECTRAL,
               lambda: _layer_coeffs(np.cos, 2), [0, 1, 0, 0, 0]),
    GoldenCase("trig_interp_coeffs/sin_2t", _SPECTRAL,
               lambda: _layer_coeffs(lambda t: np.sin(2 * t), 2), [0, 0, 0, 0, 1]),
    GoldenCase("alias_sign/I0_i1_minus", "node identity sin((N-k)t) = -sin(kt)",
               lambda: _signs(0, 1, "minus"), [1, -1], 0),
    GoldenCase("alias_sign/I0_i2_plus", "oracle: angle addition, i*N*t_j multiple of 2pi",
               lambda: _signs(0, 2, "plus"), [1, 1], 0),
    GoldenCase("alias_sign/I1_i1_minus", "oracle: angle addition, N*t_j odd multiple of pi",
               lambda: _signs(1, 1, "minus"), [-1, 1], 0),
    GoldenCase("frequency_set/p1_N3_k1", "first-derivative ansatz: k, N-k",
               lambda: _omegas(1, 3, 1), [1, 2], 0),
    GoldenCase("frequency_set/p2_N5_k2", "second-derivative ansatz: k, N-k, N+k",
               lambda: _omegas(2, 5, 2), [2, 3, 7], 0),
    GoldenCase("frequency_set/p3_N5_k1", "odd-order ansatz with q=2",
               lambda: _omegas(3, 5, 1), [1, 4, 6, 9], 0),
    GoldenCase("assemble_system/I0_p1_cosine", "hand-derived first-derivative cosine pair",
               lambda: _system(0, 1, 1, "cosine"), [[1, 1], [-1, 2]], 0),
    GoldenCase("assemble_system/I0_p1_sine", "hand-derived first-derivative sine pair",
               lambda: _system(0, 1, 1, "sine"), [[1, -1], [1, 2]], 0),
    GoldenCase("assemble_system/I0_p2_cosine", "oracle: exact symbolic solve reproduces closed form",
               lambda: _system(0, 2, 1, "cosine"), [[1, 1, 1], [-1, 2, -4], [-1, -4, -16]], 0),
    GoldenCase("solve_harmonic/cos_t", "hand solve",
               lambda: _solve([[1, 1], [-1, 2]], [1, -1]), [1, 0]),
    GoldenCase("solve_harmonic/closed_form", _CLOSED,
               lambda: _solve([[1, 1], [-1, 2]], [1, 0]), [2 / 3, 1 / 3]),
    GoldenCase("build_hermite/cos_t_p1", "closed form with A01=1, B11=-1",
               lambda: _poly_vector(build_hermite(_cos_samples(0, 1, 1), "strict")),
               [0, 1, 0, 0, 0]),
    GoldenCase("closed_form_p1/a", _CLOSED, lambda: _p1_coeffs(A0k=1.0)[:2], [2 / 3, 1 / 3]),
    GoldenCase("closed_form_p1/b", _CLOSED, lambda: _p1_coeffs(A0k=1.0)[2:], [0, 0]),
    GoldenCase("closed_form_p2/I0_cos_t", _CLOSED, _p2_cos_case, [1, 0, 0]),
    GoldenCase("collocation_solve/cos_t_p1", "oracle: dense collocation",
               lambda: _poly_vector(collocation_solve(_cos_samples(0, 1, 1), "strict")),
               [0, 1, 0, 0, 0], 1e-12),
    GoldenCase("cmd_build/cos_t_single_entry", "build_hermite example",
               _file_cos_entry, [1, 1, 1, 0], 1e-14),
    GoldenCase("cmd_verify/cos_t_residuals", "interpolation conditions",
               _verify_cos, [0, 0], 1e-12),
    GoldenCase("cmd_convergence/cos3t_plus_sin", "exact reproduction inside the frequency set",
               _reproduce_cos3, [0], 1e-10),
]


def golden_suite(cases=None, perturb=None) -> GoldenSummary:
    """Run golden cases.

    ``perturb`` maps a case identifier to an additive offset on its expected
    value; used to check that the suite notices a wrong value.
    """
    cases = CASES if cases is None else cases
    results = []
    for case in cases:
        if perturb and case.ident in perturb:
            case = replace(case, expected=tuple(np.asarray(case.expected, float).ravel()
                                                + perturb[case.ident]))
        ok, err = case.run()
        results.append((case.ident, ok, err, case.provenance))
    return GoldenSummary(results)
