import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from hermitrig import AliasSign, Branch, FrequencyTag, alias_sign, make_grid, verify_alias


@pytest.mark.parametrize("family, i, branch, expected", [
    (0, 1, "minus", (1, -1)),
    (0, 2, "plus", (1, 1)),
    (0, 0, "base", (1, 1)),
    (1, 1, "minus", (-1, 1)),
    (1, 1, "plus", (-1, -1)),
    (1, 2, "minus", (1, -1)),
    (1, 0, "base", (1, 1)),
])
def test_sign_table(family, i, branch, expected):
    assert alias_sign(family, i, branch) == AliasSign(*expected)


def test_base_requires_block_zero():
    with pytest.raises(ValueError):
        alias_sign(0, 1, Branch.BASE)


def test_sign_values_checked():
    with pytest.raises(ValueError):
        AliasSign(0, 1)


def test_verify_examples():
    assert verify_alias(make_grid(0, 2), 1, FrequencyTag.make(5, 1, 1, "minus")) <= 1e-12
    tag = FrequencyTag(7, 2, 1, Branch.PLUS, 5)
    assert verify_alias(make_grid(1, 2), 2, tag) <= 1e-12


def test_mistagged_frequency_rejected():
    with pytest.raises(ValueError, match="inconsistent"):
        FrequencyTag(3, 1, 1, Branch.MINUS, 5)


def test_wrong_sign_is_detected_numerically():
    # the verifier must notice if the rule were wrong: compare against the opposite sign
    g = make_grid(1, 3)
    t = g.nodes()
    # 8 = N + 1 on family 1 has sigma_cos = -1, so +1 must be visibly wrong
    assert np.abs(np.cos(8 * t) - np.cos(t)).max() > 0.1
    assert verify_alias(g, 1, FrequencyTag.make(7, 1, 1, "plus")) <= 1e-12  # tag omega = 8


@settings(max_examples=1000, deadline=None)
@given(st.integers(0, 1), st.integers(1, 20), st.integers(0, 4),
       st.sampled_from(list(Branch)), st.data())
def test_aliasing_identity_random(family, n, i, branch, data):
    if branch is Branch.BASE:
        i = 0
    elif i == 0:
        i = 1
    k = data.draw(st.integers(1, n))
    g = make_grid(family, n)
    assert verify_alias(g, k, FrequencyTag.make(g.N, k, i, branch)) <= 1e-12


@pytest.mark.parametrize("i", range(1, 6))
def test_plus_minus_differ_only_in_sine(i):
    for family in (0, 1):
        plus, minus = alias_sign(family, i, "plus"), alias_sign(family, i, "minus")
        assert plus.sigma_cos == minus.sigma_cos
        assert plus.sigma_sin == -minus.sigma_sin
    s = (-1) ** i
    assert alias_sign(1, i, "plus").sigma_cos * s == 1
