import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from cydegen.periodfit import (
    DegenerateDesign,
    PeriodSample,
    agm,
    elliptic_k,
    elliptic_k_complement,
    fit_asymptotics,
    legendre_l2,
    legendre_periods,
    legendre_samples,
    samples_from_csv,
    samples_to_csv,
)

from oracles import agm_by_quadrature, legendre_half_periods_by_quadrature


def test_agm_known_values():
    assert agm(1, 1) == 1
    assert abs(agm(1, 0.5) - 0.72839551552345) < 1e-13
    # Gauss's constant
    assert abs(1 / agm(1, math.sqrt(2)).real - 0.8346268416740732) < 1e-15


@pytest.mark.parametrize("b", [0.01, 0.3, 0.5, 0.9, 2.0, 17.0])
def test_agm_against_quadrature(b):
    assert abs(agm(1, b).real - agm_by_quadrature(b)) < 1e-12 * max(1, b)


@settings(max_examples=50, deadline=None)
@given(st.floats(1e-6, 1e6), st.floats(1e-6, 1e6))
def test_agm_symmetric_homogeneous(a, b):
    m = agm(a, b).real
    assert math.isclose(m, agm(b, a).real, rel_tol=1e-13)
    assert math.isclose(3 * m, agm(3 * a, 3 * b).real, rel_tol=1e-13)
    assert min(a, b) * (1 - 1e-13) <= m <= max(a, b) * (1 + 1e-13)


def test_agm_rejects_zero():
    with pytest.raises(ValueError):
        agm(0, 1)


def test_elliptic_k():
    assert math.isclose(elliptic_k(0), math.pi / 2)
    assert math.isclose(elliptic_k(0.5), 1.8540746773013719, rel_tol=1e-14)
    assert math.isclose(elliptic_k_complement(0.5), elliptic_k(0.5), rel_tol=1e-14)
    with pytest.raises(ValueError):
        elliptic_k(1)


@pytest.mark.parametrize("s", [1e-8, 1e-4, 0.01, 0.2, 0.45])
def test_periods_against_quadrature(s):
    w1, w2 = legendre_periods(s)
    a, b = legendre_half_periods_by_quadrature(s)
    assert math.isclose(w1.real, 2 * a, rel_tol=1e-11) and w1.imag == 0
    assert math.isclose(w2.imag, 2 * b, rel_tol=1e-11) and w2.real == 0


def test_out_of_range():
    with pytest.raises(ValueError):
        legendre_l2(0.6)
    with pytest.raises(ValueError):
        legendre_l2(0.0)
    with pytest.raises(ValueError):
        legendre_samples(1e-3, 1e-6, 10)


def test_norm_grows_like_log():
    samples = legendre_samples(1e-14, 0.4, 30)
    norms = [p.l2_norm for p in samples]
    assert all(x > y for x, y in zip(norms, norms[1:]))
    p = legendre_l2(1e-12)
    assert math.isclose(p.l2_norm, 8 * math.pi * math.log(16 / 1e-12), rel_tol=1e-10)


def test_reparametrising_s_by_its_square():
    # log|s^2|^2 = 2 log|s|^2, so alpha halves and beta is unchanged
    s_values = np.geomspace(1e-6, 1e-1, 20)
    data = _synthetic(0.5, 1.0, 2.0, s_values)
    squared = [(s * s, v) for s, v in data]
    res = fit_asymptotics(squared)
    assert abs(res.alpha_hat - 0.25) <= 1e-9
    assert abs(res.beta_hat - 1.0) <= 1e-9


def _synthetic(alpha, beta, const, s_values, extra=()):
    out = []
    for s in s_values:
        L = math.log(s * s)
        v = alpha * L - beta * math.log(abs(L)) + const + sum(g / L ** (k + 1) for k, g in enumerate(extra))
        out.append((s, v))
    return out


@settings(max_examples=40, deadline=None)
@given(st.floats(-2, 2), st.floats(-3, 3), st.floats(-10, 10), st.floats(-5, 5))
def test_exact_recovery_in_span(alpha, beta, const, g):
    s_values = np.geomspace(1e-12, 1e-1, 20)
    res = fit_asymptotics(_synthetic(alpha, beta, const, s_values, (g,)))
    assert abs(res.alpha_hat - alpha) <= 1e-9
    assert abs(res.beta_hat - beta) <= 1e-9
    assert abs(res.const_hat - const) <= 1e-9
    assert res.residual_norm < 1e-8


def test_exact_recovery_bare_model():
    s_values = np.geomspace(1e-12, 1e-1, 20)
    res = fit_asymptotics(_synthetic(0.25, 1.0, 3.0, s_values), correction_terms=0)
    assert abs(res.alpha_hat - 0.25) <= 1e-9 and abs(res.beta_hat - 1) <= 1e-9
    assert res.correction == ()


def test_degenerate_designs():
    with pytest.raises(DegenerateDesign):
        fit_asymptotics([(1e-3, 1.0)] * 3)
    with pytest.raises(DegenerateDesign):
        fit_asymptotics([(1e-3, 1.0)] * 10)
    with pytest.raises(ValueError):
        fit_asymptotics(_synthetic(0, 1, 0, np.geomspace(1e-6, 1e-2, 10)), correction_terms=-1)


def test_legendre_fit_with_tail_column():
    samples = legendre_samples(1e-12, 1e-3, 40)
    res = fit_asymptotics([(p.s, p.neglog) for p in samples])
    assert abs(res.alpha_hat) <= 0.02
    assert abs(res.beta_hat - 1) <= 0.1


def test_bare_fit_is_biased_on_legendre_data():
    # without a 1/log|s| column the O(1/log) tail pulls beta far from 1
    samples = legendre_samples(1e-12, 1e-3, 40)
    res = fit_asymptotics([(p.s, p.neglog) for p in samples], correction_terms=0)
    assert 0.6 < res.beta_hat < 0.8


def test_csv_round_trip():
    samples = legendre_samples(1e-8, 1e-2, 6)
    text = samples_to_csv(samples)
    assert text.splitlines()[0] == "s,l2_norm,neglog"
    assert samples_from_csv(text) == [(p.s, p.neglog) for p in samples]


def test_csv_recomputes_neglog():
    text = "s,l2_norm,neglog\n0.001,2.0,\n"
    assert samples_from_csv(text) == [(0.001, -math.log(2.0))]
    with pytest.raises(ValueError):
        samples_from_csv("")


def test_period_sample():
    assert PeriodSample(0.1, 1.0).neglog == 0
