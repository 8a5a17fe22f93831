"""Shared nonlinear least-squares machinery.

All solvers in this package stack their equations as real residual vectors
and run damped least squares (Levenberg-Marquardt) from many random starts
with a seeded generator, so identical inputs give identical solution lists.
"""
from __future__ import annotations

import numpy as np
from scipy.optimize import least_squares


def lm_minimize(fun, x0, max_nfev=20000):
    """Levenberg-Marquardt on a stacked real residual; returns (x, max_abs_resid)."""
    out = least_squares(fun, x0, method="lm", xtol=5e-16, ftol=5e-16, gtol=5e-16, max_nfev=max_nfev)
    return out.x, float(np.abs(out.fun).max())


def wrap_angles(x):
    """Map angles to (-pi, pi]."""
    x = np.asarray(x, dtype=float)
    return -((-x + np.pi) % (2 * np.pi) - np.pi)


def angle_dist(a, b):
    """Max geodesic distance between two phase vectors."""
    d = np.abs(wrap_angles(np.asarray(a) - np.asarray(b)))
    return float(d.max()) if d.size else 0.0


def complex_close(u, v, tol):
    return float(np.abs(np.asarray(u) - np.asarray(v)).max()) <= tol
