"""Lobachevsky function.

``L(x) = -int_0^x log|2 sin t| dt = Cl_2(2x) / 2`` is odd and
pi-periodic. After reduction to ``[-pi/2, pi/2)`` it is evaluated from
the Clausen expansion about zero,

    Cl_2(t) = t - t log|t| + sum_k zeta(2k) / (k (2k + 1)) * t (t / 2pi)^(2k),

whose ratio ``(t / 2pi)^2 <= 1/4`` on the reduced range gives double
precision with a few dozen terms.
"""

import math

import numpy as np
from scipy.special import zeta

TOLERANCE = 1e-14

_K = np.arange(1, 31)
# coefficients of x^(2k) after substituting t = 2x: (t / 2pi)^(2k) = (x / pi)^(2k)
_COEF = zeta(2.0 * _K) / (_K * (2 * _K + 1)) / np.pi ** (2 * _K)


def reduce_argument(x):
    """Representative of ``x`` modulo pi in ``[-pi/2, pi/2)``."""
    r = math.fmod(x + math.pi / 2, math.pi)
    if r < 0:
        r += math.pi
    return r - math.pi / 2


def _reduced(x):
    if x == 0.0:
        return 0.0
    t = 2.0 * x
    x2 = x * x
    # Horner in x^2, highest order first
    acc = 0.0
    for c in _COEF[::-1]:
        acc = acc * x2 + c
    acc *= x2
    return 0.5 * (t - t * math.log(abs(t)) + t * acc)


def lobachevsky(x):
    """Lobachevsky function of a real argument (radians).

    Accurate to about 1e-15 absolute. Oddness holds exactly: the
    reduction commutes with negation except at the ``-pi/2`` endpoint,
    where the value is zero.
    """
    x = float(x)
    if not math.isfinite(x):
        raise ValueError("Lobachevsky function needs a finite argument, got {}".format(x))
    if x < 0:
        return -_reduced(reduce_argument(-x))
    return _reduced(reduce_argument(x))


def lobachevsky_integral(x, epsabs=1e-13):
    """Direct quadrature of the defining integral; slow, used for cross-checks."""
    from scipy.integrate import quad

    def integrand(t):
        s = abs(2.0 * math.sin(t))
        return -math.log(s) if s > 0 else 0.0

    # split at the logarithmic singularities k*pi so quad sees them as endpoints
    lo, hi, sign = (0.0, x, 1.0) if x >= 0 else (x, 0.0, -1.0)
    breaks = [lo]
    k = math.floor(lo / math.pi) + 1
    while k * math.pi < hi:
        breaks.append(k * math.pi)
        k += 1
    breaks.append(hi)
    total = 0.0
    for a, b in zip(breaks[:-1], breaks[1:]):
        val, _ = quad(integrand, a, b, epsabs=epsabs, epsrel=0.0, limit=200)
        total += val
    return sign * total
