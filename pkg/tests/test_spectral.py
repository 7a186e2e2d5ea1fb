import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from hypothesis.extra.numpy import arrays

from hermitrig import HermiteSamples, center_rows, make_grid, trig_interp_coeffs


def direct_sums(row, t, n):
    """Textbook loops, kept independent of the vectorized implementation."""
    N = len(t)
    A0 = 2 / N * sum(row)
    A = [2 / N * sum(r * np.cos(k * tj) for r, tj in zip(row, t)) for k in range(1, n + 1)]
    B = [2 / N * sum(r * np.sin(k * tj) for r, tj in zip(row, t)) for k in range(1, n + 1)]
    return A0, np.array(A), np.array(B)


def test_constant_row():
    g = make_grid(1, 3)
    L = trig_interp_coeffs(np.full(g.N, 2.5), g)
    assert L.A0 == pytest.approx(5.0)
    np.testing.assert_allclose(L.A, 0, atol=1e-14)
    np.testing.assert_allclose(L.B, 0, atol=1e-14)


def test_cos_t_on_five_nodes():
    g = make_grid(0, 2)
    t = g.nodes()
    A0, A, B = direct_sums(np.cos(t), t, 2)
    np.testing.assert_allclose([A0, *A, *B], [0, 1, 0, 0, 0], atol=1e-15)
    L = trig_interp_coeffs(np.cos(t), g)
    np.testing.assert_allclose([L.A0, *L.A, *L.B], [0, 1, 0, 0, 0], atol=1e-15)


def test_sin_2t_on_five_nodes():
    g = make_grid(0, 2)
    L = trig_interp_coeffs(np.sin(2 * g.nodes()), g)
    np.testing.assert_allclose([L.A0, *L.A, *L.B], [0, 0, 0, 0, 1], atol=1e-15)


def test_length_mismatch():
    with pytest.raises(ValueError):
        trig_interp_coeffs(np.zeros(4), make_grid(0, 2))


@pytest.mark.parametrize("family", [0, 1])
@pytest.mark.parametrize("n", [1, 2, 7, 16])
def test_matches_loop_oracle_and_fft(rng, family, n):
    g = make_grid(family, n)
    row = rng.normal(size=g.N)
    A0, A, B = direct_sums(row, g.nodes(), n)
    for method in ("direct", "fft"):
        L = trig_interp_coeffs(row, g, method=method)
        np.testing.assert_allclose(L.A0, A0, atol=1e-13)
        np.testing.assert_allclose(L.A, A, atol=1e-13)
        np.testing.assert_allclose(L.B, B, atol=1e-13)


rows_strategy = st.integers(0, 1).flatmap(
    lambda fam: st.integers(1, 12).flatmap(
        lambda n: st.tuples(st.just(make_grid(fam, n)),
                            arrays(float, 2 * n + 1, elements=st.floats(-1e3, 1e3)))))


@given(rows_strategy)
def test_interpolation_property(case):
    g, row = case
    L = trig_interp_coeffs(row, g)
    scale = max(1.0, np.abs(row).max())
    assert np.abs(L(g.nodes()) - row).max() <= 1e-10 * scale


@given(rows_strategy)
def test_parseval(case):
    g, row = case
    L = trig_interp_coeffs(row, g)
    energy = (L.A0**2 / 2 + np.sum(L.A**2 + L.B**2)) * g.N / 2
    assert energy == pytest.approx(np.sum(row**2), rel=1e-9, abs=1e-9)


@settings(max_examples=50)
@given(rows_strategy, st.floats(-10, 10), st.floats(-10, 10))
def test_linearity(case, alpha, beta):
    g, u = case
    v = np.roll(u, 1) - 0.5
    Lu, Lv = trig_interp_coeffs(u, g), trig_interp_coeffs(v, g)
    Lw = trig_interp_coeffs(alpha * u + beta * v, g)
    tol = 1e-12 * (1 + abs(alpha) + abs(beta)) * max(1.0, np.abs(u).max())
    np.testing.assert_allclose(Lw.A, alpha * Lu.A + beta * Lv.A, atol=tol)
    np.testing.assert_allclose(Lw.B, alpha * Lu.B + beta * Lv.B, atol=tol)
    assert abs(Lw.A0 - (alpha * Lu.A0 + beta * Lv.A0)) <= tol


def test_center_rows_examples():
    g = make_grid(0, 1)
    rep = center_rows(HermiteSamples(g, [[5, 6, 7], [1, 1, 1], [3, -1, 1]]))
    np.testing.assert_allclose(rep.means, [6, 1, 1])
    np.testing.assert_allclose(rep.centered_rows, [[5, 6, 7], [0, 0, 0], [2, -2, 0]])


def test_center_rows_identity_when_centered():
    g = make_grid(1, 1)
    rows = np.array([[1.0, 2, 3], [1, -2, 1]])
    rep = center_rows(HermiteSamples(g, rows))
    assert rep.means[1] == 0
    np.testing.assert_array_equal(rep.centered_rows, rows)


def test_centered_rows_have_zero_mean(rng):
    s = HermiteSamples(make_grid(0, 6), rng.normal(3, 1, (4, 13)))
    rep = center_rows(s)
    np.testing.assert_allclose(rep.centered_rows[1:].sum(axis=1), 0, atol=1e-12)
    np.testing.assert_array_equal(rep.centered_rows[0], s.rows[0])


def test_samples_validation():
    g = make_grid(0, 1)
    with pytest.raises(ValueError):
        HermiteSamples(g, [[1, 2], [3, 4]])
    with pytest.raises(ValueError):
        HermiteSamples(g, [[1, 2, np.nan]])
    assert HermiteSamples(g, [1, 2, 3]).p == 0
