"""Scalar search helpers: golden-section minimization and predicate bisection."""

import math

INVPHI = (math.sqrt(5.0) - 1.0) / 2.0


def golden_min(f, lo, hi, tol=1e-9):
    """Golden-section minimum of f on [lo, hi].

    Shrinks the bracket until it is narrower than tol and returns
    (x, f(x)) at the bracket midpoint. Assumes f is unimodal on the
    bracket; callers provide one tight enough for that to hold.
    """
    a, b = float(lo), float(hi)
    if not b > a:
        raise ValueError(f"need lo < hi, got [{lo}, {hi}]")
    c = b - INVPHI * (b - a)
    d = a + INVPHI * (b - a)
    fc, fd = f(c), f(d)
    while (b - a) > tol:
        if fc <= fd:
            b, d, fd = d, c, fc
            c = b - INVPHI * (b - a)
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + INVPHI * (b - a)
            fd = f(d)
    x = 0.5 * (a + b)
    return x, f(x)


def bisect_boundary(pred, x_false, x_true, tol=1e-6):
    """Locate a flip of a boolean predicate between two points.

    pred(x_false) must be False and pred(x_true) True; the two may be in
    either order on the axis. Returns the midpoint of the final bracket,
    which is within tol of the flip.
    """
    x_false, x_true = float(x_false), float(x_true)
    while abs(x_true - x_false) > tol:
        mid = 0.5 * (x_false + x_true)
        if pred(mid):
            x_true = mid
        else:
            x_false = mid
    return 0.5 * (x_false + x_true)
