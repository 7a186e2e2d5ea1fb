"""Hermite trigonometric interpolation on uniform periodic grids.

Given a function and its first p derivatives at the N = 2n + 1 nodes of a
uniform grid on [0, 2*pi), build a trigonometric polynomial whose value and
first p derivatives match the data at every node.  The coefficients come from
ordinary discrete Fourier coefficients of each data row plus one small linear
solve per harmonic.
"""

__version__ = "0.1.0"

from .alias import AliasSign, Branch, FrequencyTag, alias_sign, verify_alias
from .core import (
    HarmonicSystem,
    HermiteTrigPoly,
    NonCenteredError,
    SingularSystemError,
    assemble_system,
    build_hermite,
    closed_form_p1,
    closed_form_p2,
    frequency_set,
    hermite_frequencies,
    solve_harmonic,
)
from .evaluate import evaluate, evaluate_many
from .grid import GridSpec, make_grid, nodes
from .oracle import collocation_solve
from .spectral import FourierLayer, HermiteSamples, MeanReport, center_rows, trig_interp_coeffs

__all__ = [
    "AliasSign",
    "Branch",
    "FrequencyTag",
    "alias_sign",
    "verify_alias",
    "HarmonicSystem",
    "HermiteTrigPoly",
    "NonCenteredError",
    "SingularSystemError",
    "assemble_system",
    "build_hermite",
    "closed_form_p1",
    "closed_form_p2",
    "frequency_set",
    "hermite_frequencies",
    "solve_harmonic",
    "evaluate",
    "evaluate_many",
    "GridSpec",
    "make_grid",
    "nodes",
    "collocation_solve",
    "FourierLayer",
    "HermiteSamples",
    "MeanReport",
    "center_rows",
    "trig_interp_coeffs",
]
