"""Point evaluation of Hermite trigonometric polynomials and their derivatives."""

import numpy as np

__all__ = ["evaluate", "evaluate_many"]

TWO_PI = 2.0 * np.pi


def evaluate_many(poly, ts, order: int = 0) -> np.ndarray:
    """Evaluate derivative ``order`` of ``poly`` at every point of ``ts``.

    The m-th derivative of ``a cos(wt) + b sin(wt)`` is
    ``w**m (a cos(wt + m pi/2) + b sin(wt + m pi/2))``.  The constant term
    only contributes at order 0 and ``mean_terms[m]`` is added for
    ``m <= p``; nothing is added beyond p.
    """
    if order < 0:
        raise ValueError("derivative order must be nonnegative")
    ts = np.asarray(ts, dtype=float)
    shape = ts.shape
    t = np.mod(ts.ravel(), TWO_PI)
    w = poly.freqs.astype(float)
    c, s = _shifted(np.multiply.outer(t, w), order)
    weights = w**order
    out = c @ (poly.cos * weights) + s @ (poly.sin * weights)
    if order == 0:
        out = out + poly.const_term
    if order <= poly.p:
        out = out + poly.mean_terms[order]
    return out.reshape(shape)


def _shifted(theta, order):
    # cos/sin(theta + order*pi/2) via exact quarter-turn identities
    c, s = np.cos(theta), np.sin(theta)
    r = order % 4
    if r == 1:
        return -s, c
    if r == 2:
        return -c, -s
    if r == 3:
        return s, -c
    return c, s


def evaluate(poly, t: float, order: int = 0) -> float:
    return float(evaluate_many(poly, np.array([t]), order)[0])
