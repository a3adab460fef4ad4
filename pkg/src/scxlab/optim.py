"""Scalar maximisation helpers shared by the exponent computations.

The objectives maximised here (Hoeffding-type envelopes over a Renyi
order) are concave on the open unit interval, which licenses plain
golden-section search.  Endpoint limits are always handled by the
callers, which compare the interior maximum against closed-form
boundary values.
"""

import math

import numpy as np

_INV_GOLDEN = (math.sqrt(5.0) - 1.0) / 2.0


def golden_max(f, lo, hi, iters=200):
    """Golden-section maximisation of ``f`` on ``[lo, hi]``.

    Parameters
    ----------
    f : callable
        Scalar function; assumed unimodal (concave) on the interval.
    lo, hi : float
        Search interval endpoints, ``lo < hi``.
    iters : int
        Number of interval reductions.

    Returns
    -------
    (float, float)
        Argmax estimate and the function value there.
    """
    if not lo < hi:
        raise ValueError("empty search interval")
    x1 = hi - _INV_GOLDEN * (hi - lo)
    x2 = lo + _INV_GOLDEN * (hi - lo)
    f1, f2 = f(x1), f(x2)
    for _ in range(iters):
        if f1 < f2:
            lo, x1, f1 = x1, x2, f2
            x2 = lo + _INV_GOLDEN * (hi - lo)
            f2 = f(x2)
        else:
            hi, x2, f2 = x2, x1, f1
            x1 = hi - _INV_GOLDEN * (hi - lo)
            f1 = f(x1)
    x = 0.5 * (lo + hi)
    return x, f(x)


def scan_then_golden(f, lo, hi, samples=400, iters=120):
    """Coarse scan followed by golden-section refinement around the best cell.

    Robust for objectives that are smooth but not certified unimodal over
    a wide interval (e.g. suprema over large Renyi orders).
    """
    xs = np.linspace(lo, hi, samples)
    vals = np.array([f(x) for x in xs])
    k = int(np.argmax(vals))
    a = xs[max(k - 1, 0)]
    b = xs[min(k + 1, samples - 1)]
    if a == b:
        return xs[k], float(vals[k])
    x, fx = golden_max(f, a, b, iters=iters)
    if fx < vals[k]:
        return float(xs[k]), float(vals[k])
    return x, fx
