import numpy as np
import pytest

from hermitrig import HermiteSamples, make_grid


@pytest.fixture
def rng():
    return np.random.default_rng(20261018)


def random_samples(rng, family, n, p, centered=True):
    grid = make_grid(family, n)
    rows = rng.uniform(-1, 1, (p + 1, grid.N))
    if centered:
        rows[1:] -= rows[1:].mean(axis=1, keepdims=True)
    return HermiteSamples(grid, rows)


def cos_t_samples(family=0, n=1, p=1):
    grid = make_grid(family, n)
    t = grid.nodes()
    ladder = [np.cos(t), -np.sin(t), -np.cos(t), np.sin(t)]
    return HermiteSamples(grid, np.array([ladder[m % 4] for m in range(p + 1)]))


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for num in sorted(RESULTS):
            terminalreporter.write_line(RESULTS[num])
