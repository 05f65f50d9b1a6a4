import math

import numpy as np
import pytest

from hyphor.special import lobachevsky, lobachevsky_integral, reduce_argument

rng = np.random.default_rng(20240521)


def test_quadrature_oracle_maximum():
    # the global maximum sits at pi/6
    assert lobachevsky(math.pi / 6) == pytest.approx(0.5074708, abs=5e-8)
    assert lobachevsky(math.pi / 6) == pytest.approx(lobachevsky_integral(math.pi / 6), abs=1e-12)


def test_zeros():
    assert abs(lobachevsky(math.pi / 2)) < 1e-15
    assert lobachevsky(0.0) == 0.0
    assert abs(lobachevsky(math.pi)) < 1e-15


def test_oddness():
    xs = rng.uniform(-10, 10, 1000)
    assert max(abs(lobachevsky(-x) + lobachevsky(x)) for x in xs) < 1e-13


def test_periodicity():
    xs = rng.uniform(-10, 10, 1000)
    assert max(abs(lobachevsky(x + math.pi) - lobachevsky(x)) for x in xs) < 1e-12


def test_distribution_relation():
    th = rng.uniform(0, math.pi / 2, 1000)
    err = [abs(0.5 * lobachevsky(2 * t) - lobachevsky(t) - lobachevsky(t + math.pi / 2)) for t in th]
    assert max(err) < 1e-12


@pytest.mark.filterwarnings("ignore::scipy.integrate.IntegrationWarning")
def test_against_quadrature():
    xs = np.linspace(0, math.pi, 52)[1:-1]
    assert max(abs(lobachevsky(x) - lobachevsky_integral(x)) for x in xs) < 1e-11


def test_near_zero():
    # L(x) = x - x log(2x) + O(x^3)
    for x in (1e-8, 1e-5):
        assert lobachevsky(x) == pytest.approx(x - x * math.log(2 * x), rel=1e-9)


def test_deterministic():
    assert lobachevsky(1.234) == lobachevsky(1.234)


def test_reduce_argument_range():
    for x in rng.uniform(-50, 50, 200):
        r = reduce_argument(x)
        assert -math.pi / 2 <= r < math.pi / 2


@pytest.mark.parametrize("bad", [math.inf, -math.inf, math.nan])
def test_non_finite(bad):
    with pytest.raises(ValueError):
        lobachevsky(bad)
