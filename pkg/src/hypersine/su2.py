"""The countable hypergroup with stride-two convolution

    d[k] * d[n] = sum over l = |k-n|, |k-n|+2, .., k+n of
                  (l+1) / ((k+1)(n+1)) * d[l]

and its hyperbolic exponential family

    phi(n, lam) = sinh((n+1) lam) / ((n+1) sinh(lam)),   phi(n, 0) = 1.

The lambda-derivative of phi is a phi(.,lam)-sine function; for lam = 0 the
sine functions of the exponential m == 1 are the additive multiples of
n (n+2).  Residuals are reported relative because phi grows like
exp(n lam) / (n + 1).
"""

from __future__ import annotations

import cmath
import math

import numpy as np

from . import dual
from .core import FiniteMeasure, Hypergroup, TabulatedFunction, _scan

SMALL_SINH_TOL = 1e-6   # below this |sinh lam| the series evaluation is used


class Su2Hypergroup(Hypergroup):
    """Hypergroup on the nonnegative integers with the weighted stride-two
    convolution above; element 0 is the identity."""

    identity = 0
    commutative = True

    def convolve(self, k, n):
        k, n = int(k), int(n)
        if k < 0 or n < 0:
            raise ValueError(f"elements must be >= 0, got {k}, {n}")
        ls = range(abs(k - n), k + n + 1, 2)
        denom = (k + 1) * (n + 1)
        return FiniteMeasure((l, (l + 1) / denom) for l in ls)


def phi(n, lam):
    """phi(n, lam); lam may be complex or a DualScalar.

    Near zeros of sinh (|sinh lam| < 1e-6) the quotient is replaced by the
    even series in mu = lam - i k pi through degree six, exact up to
    O((n mu)^8); the shift contributes a sign (-1)^(k n).
    """
    if n < 0:
        raise ValueError(f"element must be >= 0, got {n}")
    s = dual.sinh(lam)
    if abs(dual.value_of(s)) >= SMALL_SINH_TOL:
        return dual.sinh((n + 1) * lam) / ((n + 1) * s)
    k = round(dual.value_of(lam).imag / math.pi)
    mu = lam - complex(0.0, k * math.pi)
    sign = -1.0 if (k * n) % 2 else 1.0
    big = (n + 1) * mu
    num = 1.0 + big * big * (1.0 / 6.0 + big * big * (1.0 / 120.0 + big * big / 5040.0))
    small = mu * mu
    den = 1.0 + small * (1.0 / 6.0 + small * (1.0 / 120.0 + small / 5040.0))
    return sign * num / den


def dphi(n, lam):
    """Derivative of phi(n, .) at lam, computed with dual numbers."""
    return dual.deriv_of(phi(n, dual.DualScalar(lam, 1.0)))


def phi_values(n_max, lam):
    """Array of phi(n, lam) for n = 0..n_max."""
    lam = complex(lam)
    if abs(cmath.sinh(lam)) >= SMALL_SINH_TOL:
        ns = np.arange(n_max + 1)
        return np.sinh((ns + 1) * lam) / ((ns + 1) * cmath.sinh(lam))
    return np.array([phi(n, lam) for n in range(n_max + 1)])


def dphi_values(n_max, lam):
    """Array of the lambda-derivatives of phi for n = 0..n_max."""
    return np.array([dphi(n, lam) for n in range(n_max + 1)])


def phi_fn(n_max, lam):
    return TabulatedFunction(phi_values(n_max, lam))


def dphi_fn(n_max, lam):
    return TabulatedFunction(dphi_values(n_max, lam))


def additive_fn(c):
    """The additive functions n -> c n (n+2); these are the sine functions
    for the constant exponential m == 1 (the lam = 0 member of the family)."""
    def f(n):
        return c * n * (n + 2)
    return f


def recurrence_residual(f, m, n_max):
    """Residual of the three-point recurrence characterizing sine functions:

        (n+3) f(n+2) - 2 (n+2) cosh(lam) f(n+1) + (n+1) f(n)
            = 2 f(1) (n+2) m(n+1),

    for n = 0..n_max-2, together with its substituted form in
    g(n) = (n+1) f(n).  cosh(lam) is read off as m(1).  The witness is the
    n attaining the worst residual; relative scaling uses all four terms.
    """
    if n_max < 2:
        raise ValueError(f"n_max must be >= 2, got {n_max}")
    ch = m(1)
    f1 = f(1)
    g = [(n + 1) * f(n) for n in range(n_max + 1)]

    def gen():
        for n in range(n_max - 1):
            t_up = (n + 3) * f(n + 2)
            t_mid = 2 * (n + 2) * ch * f(n + 1)
            t_dn = (n + 1) * f(n)
            rhs = 2 * f1 * (n + 2) * m(n + 1)
            r1 = abs(t_up - t_mid + t_dn - rhs)
            r2 = abs(g[n + 2] - 2 * ch * g[n + 1] + g[n] - rhs)
            err = max(r1, r2)
            scale = 1.0 + abs(t_up) + abs(t_mid) + abs(t_dn) + abs(rhs)
            yield err, err / scale, n
    return _scan(gen())


def propagate_sine(lam, f1, n_max):
    """Forward solve of the recurrence above from f(0) = 0, f(1) = f1.

    For lam != 0 the result must coincide with (f1 / sinh lam) * dphi(., lam),
    since the derivative of phi(1, .) is sinh; this propagation is the
    independent route used to certify that claim.
    """
    lam = complex(lam)
    ch = cmath.cosh(lam)
    out = np.zeros(n_max + 1, dtype=complex)
    if n_max >= 1:
        out[1] = f1
    mvals = phi_values(n_max, lam)
    for n in range(n_max - 1):
        out[n + 2] = (2 * (n + 2) * ch * out[n + 1] - (n + 1) * out[n]
                      + 2 * f1 * (n + 2) * mvals[n + 1]) / (n + 3)
    return out
