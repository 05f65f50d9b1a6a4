"""Scalar maximisation: a uniform grid scan refined by golden-section search."""

import math
from dataclasses import dataclass

import numpy as np

INV_PHI = (math.sqrt(5.0) - 1.0) / 2.0


@dataclass(frozen=True)
class Maximizer1D:
    lo: float
    hi: float
    grid_points: int = 2000
    refine_tol: float = 1e-10

    def __post_init__(self):
        if not self.lo < self.hi:
            raise ValueError("need lo < hi, got [{}, {}]".format(self.lo, self.hi))
        if self.grid_points < 100:
            raise ValueError("grid_points must be >= 100")
        if not self.refine_tol > 0:
            raise ValueError("refine_tol must be positive")


class EvaluationError(RuntimeError):
    """Wraps a failure of the objective with the offending abscissa."""

    def __init__(self, x, cause):
        super().__init__("objective failed at x = {!r}: {}".format(x, cause))
        self.x = x


def _call(f, x):
    try:
        return float(f(x))
    except Exception as exc:  # noqa: BLE001 - re-raised with context
        raise EvaluationError(x, exc) from exc


def golden_section(f, a, b, tol):
    """Maximise a unimodal ``f`` on ``[a, b]``; returns ``(x, f(x))``."""
    a, b = min(a, b), max(a, b)
    c = b - INV_PHI * (b - a)
    d = a + INV_PHI * (b - a)
    fc = _call(f, c)
    fd = _call(f, d)
    while b - a > tol:
        if fc >= fd:
            b, d, fd = d, c, fc
            c = b - INV_PHI * (b - a)
            fc = _call(f, c)
        else:
            a, c, fc = c, d, fd
            d = a + INV_PHI * (b - a)
            fd = _call(f, d)
    x = 0.5 * (a + b)
    return x, _call(f, x)


def maximize(f, m, phase=0.0):
    """Grid scan of ``f`` on ``[m.lo, m.hi]`` then golden-section around the best cell.

    ``phase`` in ``[0, 1)`` shifts the interior grid nodes by that
    fraction of a cell (the end points are always evaluated). The best of
    the refined point and the grid nodes is returned; ties go to the
    smaller abscissa.
    """
    step = (m.hi - m.lo) / (m.grid_points - 1)
    xs = np.linspace(m.lo, m.hi, m.grid_points) + step * phase
    xs = np.unique(np.clip(np.concatenate([[m.lo], xs, [m.hi]]), m.lo, m.hi))
    fs = np.array([_call(f, x) for x in xs])
    i = int(np.argmax(fs))  # first occurrence: smaller x on ties
    lo = xs[max(i - 1, 0)]
    hi = xs[min(i + 1, len(xs) - 1)]
    x_ref, f_ref = golden_section(f, lo, hi, m.refine_tol)
    if f_ref > fs[i]:
        return x_ref, f_ref
    return float(xs[i]), float(fs[i])


@dataclass(frozen=True)
class POptResult:
    p_interval: tuple
    p_opt: float
    delta_max: float

    @property
    def exceeds_bf_bound(self):
        return self.delta_max > BOROCZKY_FLORIAN

    def as_dict(self):
        return {
            "p_interval": [float(v) for v in self.p_interval],
            "delta_max": float(self.delta_max),
            "exceeds_bf_bound": bool(self.exceeds_bf_bound),
        }


BOROCZKY_FLORIAN = 0.85328
P_RANGE = (6.01, 6.99)


def find_p_opt(grid_points=1000, refine_tol=1e-6, phase=0.0):
    """Best real ``p`` for the non-extendable [p, 3, 6] packings, ``6 < p < 7``.

    Returns the 0.01-wide cell (aligned to multiples of 0.01) that holds
    the argmax, the argmax itself and the density there.
    """
    from .packing3d import optimize_family_36

    m = Maximizer1D(*P_RANGE, grid_points=grid_points, refine_tol=refine_tol)
    p_opt, delta = maximize(lambda p: optimize_family_36(p).delta, m, phase=phase)
    lo = math.floor(p_opt * 100.0 + 1e-9) / 100.0
    return POptResult((round(lo, 2), round(lo + 0.01, 2)), p_opt, delta)
