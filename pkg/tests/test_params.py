import math
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from homred.params import admissible_L_range, admissible_r_max, constants, theorem_params


def test_constants_d4():
    k = constants(4)
    assert (k.alpha, k.beta, k.tau, k.lam, k.h0) == (4, 65536, 33, 524288, 625)
    assert math.isclose(k.log2_gamma, 524288 * math.log2(5), rel_tol=1e-9)


def test_constants_d1():
    k = constants(1)
    assert (k.beta, k.tau, k.lam) == (256, 3, 512)


@given(st.integers(1, 50))
def test_log2_gamma_definition(d):
    k = constants(d)
    assert math.isclose(k.log2_gamma, k.lam * 2.321928094887362, rel_tol=1e-9)


@given(st.integers(1, 40))
def test_constants_monotone(d):
    a, b = constants(d), constants(d + 1)
    assert a.beta < b.beta and a.tau < b.tau and a.lam < b.lam


def test_c_formula():
    k = constants(4, q=0.5, D=2.0)
    assert math.isclose(k.c, 0.5 / (8 * 2.0 * k.log2_gamma))


def test_L_range_examples():
    assert admissible_L_range(544, 4) is None
    assert admissible_L_range(2176, 4) == (33, 60)
    assert admissible_L_range(1, 2) is None


@given(st.integers(1, 10**6), st.integers(2, 6))
def test_L_range_is_exact(n, d):
    rng = admissible_L_range(n, d)
    hi_exact = Fraction(n * (d * d - 1), 2 * d * d * (d * d + 1))
    if rng is None:
        assert math.floor(hi_exact) < 2 * d * d + 1
    else:
        assert rng[0] == 2 * d * d + 1 and rng[1] == math.floor(hi_exact)


def test_r_max_examples():
    assert admissible_r_max(2 * 524288 - 1, 4) == 0
    assert admissible_r_max(4 * 2 * 524288, 4) == 2


@given(st.integers(1, 10**9), st.integers(1, 4))
def test_r_max_is_floor_sqrt(n, d):
    r = admissible_r_max(n, d)
    lam = constants(d).lam
    assert 2 * lam * r * r <= n
    assert 2 * lam * (r + 1) ** 2 > n


def test_theorem_params_r_equals_one():
    lg = constants(4).log2_gamma
    tp = theorem_params(1000, 1.0, 0.1, 4 * lg)
    assert math.isclose(tp.r, 1.0)
    assert math.isclose(tp.n_prime, 500.0)


def test_small_h_branch_flag():
    tp = theorem_params(100, 1.0, 0.1, 20.0)
    assert tp.checks["small_h_branch"] == (tp.c * math.log2(625) < 0.1)
    assert tp.checks["small_h_branch"]


@given(st.floats(2, 1e7), st.floats(1, 8), st.integers(1, 10**9))
def test_h_bound_flag_definition(log2_h, D, n):
    tp = theorem_params(n, D, 1.0, log2_h)
    assert tp.checks["h_bound"] == (math.log2(25) + 2 * tp.r * tp.log2_gamma <= log2_h + 1e-9)
    assert tp.checks["running_time_identity"]


def test_h_bound_agrees_with_exact_evaluation():
    # small magnitudes: compare 25 * h^(1/(2D)) <= h exactly via integer powers
    for h in (625, 626, 10**4, 2**40):
        for D in (1, 2):
            tp = theorem_params(10**6, float(D), 1.0, math.log2(h))
            exact = 25 ** (2 * D) * h <= h ** (2 * D)
            assert tp.checks["h_bound_via_D"] == exact


def test_theorem_params_validation():
    with pytest.raises(ValueError):
        theorem_params(10, 0.5, 1.0, 10.0)
    with pytest.raises(ValueError):
        theorem_params(10, 1.0, 1.0, 1.0)
