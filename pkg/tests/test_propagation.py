import math

import numpy as np
import pytest
from scipy import integrate, stats

from poisson_sinr import ParameterError, ShadowingParams, pathloss_gain, sample_shadowing, shadowing_pdf
from poisson_sinr.propagation import A_CONST


def log_space_integral(params, lo_sigmas=-12.0, hi_sigmas=12.0, upper=None):
    """Integrate the pdf over s = exp(t), t spanning +-12 log-std around the median."""
    centre = A_CONST * params.mean_dB
    width = A_CONST * params.sigma_dB
    t_hi = centre + hi_sigmas * width if upper is None else math.log(upper)
    value, _ = integrate.quad(lambda t: shadowing_pdf(math.exp(t), params) * math.exp(t),
                              centre + lo_sigmas * width, t_hi, epsabs=1e-12, epsrel=1e-12,
                              limit=200)
    return value


def test_a_const():
    assert ShadowingParams(6.0).a_const == math.log(10) / 10


def test_pathloss_examples():
    assert pathloss_gain(1.0, 3.7, 3.2) == 3.7
    assert pathloss_gain(10.0, 1.0, 2.0) == pytest.approx(0.01, rel=1e-15)
    assert pathloss_gain(200.0, 1.0, 3.5) == pytest.approx(math.exp(-3.5 * math.log(200.0)), rel=1e-13)


def test_pathloss_rejects_zero_distance():
    with pytest.raises(ValueError):
        pathloss_gain(0.0, 1.0, 3.0)


def test_pathloss_monotone():
    r = np.linspace(1.01, 500, 1000)
    assert np.all(np.diff(pathloss_gain(r, 1.0, 3.0)) < 0)
    etas = np.linspace(2.1, 5, 50)
    assert np.all(np.diff([pathloss_gain(7.0, 1.0, e) for e in etas]) < 0)


def test_shadowing_sigma_zero_is_exactly_one(rng):
    assert sample_shadowing(0.0, rng) == 1.0
    assert np.all(sample_shadowing(0.0, rng, size=10) == 1.0)


def test_shadowing_moments(rng):
    y = sample_shadowing(6.0, rng, size=1_000_000)
    xi = 10 * np.log10(y)
    assert np.all(y > 0)
    assert abs(np.median(xi)) < 0.05
    assert xi.std() == pytest.approx(6.0, rel=0.01)


def test_shadowing_mean_is_lognormal_mean(rng):
    sigma = 6.0
    y = sample_shadowing(sigma, rng, size=10_000_000)
    assert y.mean() == pytest.approx(math.exp((A_CONST * sigma) ** 2 / 2), rel=0.02)


@pytest.mark.parametrize("sigma", [1.0, 3.0, 6.0, 8.0, 10.0])
def test_pdf_normalised(sigma):
    params = ShadowingParams(sigma, mean_dB=-87.3)
    assert log_space_integral(params) == pytest.approx(1.0, abs=1e-6)


def test_pdf_median():
    params = ShadowingParams(6.0, mean_dB=-40.0)
    median = math.exp(A_CONST * params.mean_dB)
    assert log_space_integral(params, upper=median) == pytest.approx(0.5, abs=1e-6)


def test_pdf_concentrates_as_sigma_vanishes():
    params = ShadowingParams(0.01, mean_dB=3.0)
    median = math.exp(A_CONST * params.mean_dB)
    mass, _ = integrate.quad(shadowing_pdf, 0.99 * median, 1.01 * median, args=(params,),
                             points=[median])
    assert mass > 0.9999


def test_printed_sqrt_pi_normalisation_would_integrate_to_sqrt2():
    # same exponent with a sqrt(pi) prefactor carries an extra sqrt(2)
    a, s = A_CONST, 6.0
    printed = lambda t: math.exp(-(t / (math.sqrt(2) * a * s)) ** 2) / (a * s * math.sqrt(math.pi))
    value, _ = integrate.quad(printed, -20 * a * s, 20 * a * s)
    assert value == pytest.approx(math.sqrt(2), rel=1e-9)


def test_pdf_domain_errors():
    with pytest.raises(ValueError):
        shadowing_pdf(0.0, ShadowingParams(6.0))
    with pytest.raises(ParameterError):
        shadowing_pdf(1.0, ShadowingParams(0.0))
    with pytest.raises(ParameterError):
        ShadowingParams(-1.0)


def test_pdf_agrees_with_sampler(rng):
    r, K, P, eta, sigma = 120.0, 1e-3, 2.0, 3.4, 6.0
    params = ShadowingParams.from_link(r, K, P, eta, sigma)
    mean_power = K * P * r ** (-eta)
    assert params.mean_dB == pytest.approx(10 * math.log10(mean_power))
    samples = mean_power * sample_shadowing(sigma, rng, size=1_000_000)
    # reference CDF from the pdf alone, by cumulative trapezoid on a fine log grid
    centre, width = A_CONST * params.mean_dB, A_CONST * sigma
    t = np.linspace(centre - 10 * width, centre + 10 * width, 400_001)
    dens = shadowing_pdf(np.exp(t), params) * np.exp(t)
    cum = integrate.cumulative_trapezoid(dens, t, initial=0.0)
    ref_cdf = lambda s: np.interp(np.log(s), t, cum)
    assert stats.kstest(samples, ref_cdf).pvalue > 0.01
