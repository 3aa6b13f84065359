"""Polynomial hypergroups on the nonnegative integers.

A three-term recurrence x*P_n = a_n P_(n+1) + b_n P_n + c_n P_(n-1) with
P_0 = 1, P_1 = (x - b_0)/a_0 and a_n + b_n + c_n = 1 (so P_n(1) = 1) defines
a sequence of polynomials.  When every product P_n * P_k expands in the basis
with nonnegative coefficients, those coefficients are the convolution weights
of a hypergroup on the degrees.  The exponentials are n -> P_n(lam) and the
sine functions are n -> c * P_n'(lam), evaluated here with dual numbers.
"""

from __future__ import annotations

import json
from fractions import Fraction

import numpy as np

from .dual import DualScalar, value_of, deriv_of
from .core import (FiniteMeasure, Hypergroup, NotHypergroupError,
                   TabulatedFunction, TheoremViolationError)

NEGATIVE_COEFF_TOL = 1e-10   # below this a linearization weight is an error
DROP_COEFF_TOL = 1e-13       # floating-point zeros created by cancellation


class ThreeTermRecurrence:
    """Recurrence data (a_n, b_n, c_n) with the P_n(1) = 1 normalization.

    Coefficients are callables of n; built-ins return Fractions so exact
    linearization is available.  ``max_order`` bounds the usable degree for
    recurrences loaded from finite coefficient lists.
    """

    def __init__(self, a, b, c, name="", max_order=None):
        self.a = a
        self.b = b
        self.c = c
        self.name = name
        self.max_order = max_order
        self._validate()

    def _validate(self):
        top = 64 if self.max_order is None else min(self.max_order, 64)
        if float(self.a(0)) <= 0:
            raise NotHypergroupError(f"a_0 = {self.a(0)} must be positive")
        if abs(float(self.a(0)) + float(self.b(0)) - 1.0) > 1e-12:
            raise NotHypergroupError("a_0 + b_0 must equal 1")
        for n in range(1, top + 1):
            an, bn, cn = float(self.a(n)), float(self.b(n)), float(self.c(n))
            if an <= 0 or cn <= 0:
                raise NotHypergroupError(
                    f"a_{n} and c_{n} must be positive, got {an}, {cn}")
            if abs(an + bn + cn - 1.0) > 1e-12:
                raise NotHypergroupError(
                    f"a_{n} + b_{n} + c_{n} must equal 1, got {an + bn + cn}")

    def check_order(self, n):
        if self.max_order is not None and n > self.max_order:
            raise ValueError(
                f"recurrence {self.name!r} only defined up to order "
                f"{self.max_order}, requested {n}")

    def __repr__(self):
        return f"<ThreeTermRecurrence {self.name!r}>"


def chebyshev_recurrence():
    """First-kind Chebyshev polynomials: x*T_n = (T_(n+1) + T_(n-1))/2."""
    half = Fraction(1, 2)
    return ThreeTermRecurrence(
        a=lambda n: Fraction(1) if n == 0 else half,
        b=lambda n: Fraction(0),
        c=lambda n: half,
        name="chebyshev")


def legendre_recurrence():
    """Legendre polynomials: x*P_n = ((n+1) P_(n+1) + n P_(n-1)) / (2n+1)."""
    return ThreeTermRecurrence(
        a=lambda n: Fraction(n + 1, 2 * n + 1),
        b=lambda n: Fraction(0),
        c=lambda n: Fraction(n, 2 * n + 1),
        name="legendre")


def recurrence_from_lists(a, b, c, name=""):
    """Recurrence from finite coefficient lists indexed by n."""
    order = min(len(a), len(b), len(c)) - 1
    if order < 1:
        raise ValueError("coefficient lists must cover n = 0 and n = 1")
    av, bv, cv = list(map(float, a)), list(map(float, b)), list(map(float, c))
    return ThreeTermRecurrence(
        a=lambda n: av[n], b=lambda n: bv[n], c=lambda n: cv[n],
        name=name, max_order=order)


def recurrence_from_file(path):
    """Load a recurrence from JSON {"name", "a", "b", "c"[, "closed_form"]}."""
    with open(path, "r", encoding="utf-8") as fh:
        data = json.load(fh)
    try:
        return recurrence_from_lists(
            data["a"], data["b"], data["c"], name=data.get("name", ""))
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed recurrence file {path!r}: {exc}") from exc


BUILTIN_RECURRENCES = {
    "chebyshev": chebyshev_recurrence,
    "legendre": legendre_recurrence,
}


def eval_P(rec, n, lam):
    """P_n(lam) by the forward recurrence; lam may be complex or DualScalar."""
    if n < 0:
        raise ValueError(f"degree must be >= 0, got {n}")
    rec.check_order(n)
    if n == 0:
        return 1.0 + 0.0 * lam
    p_prev = 1.0 + 0.0 * lam
    p_cur = (lam - rec.b(0)) / rec.a(0)
    for m in range(1, n):
        p_next = ((lam - rec.b(m)) * p_cur - rec.c(m) * p_prev) / rec.a(m)
        p_prev, p_cur = p_cur, p_next
    return p_cur


def eval_P_with_derivative(rec, n, lam):
    """(P_n(lam), P_n'(lam)) via dual-number evaluation."""
    out = eval_P(rec, n, DualScalar(lam, 1.0))
    return value_of(out), deriv_of(out)


def exp_values(rec, n_max, lam):
    """Array of P_n(lam) for n = 0..n_max."""
    rec.check_order(n_max)
    out = np.empty(n_max + 1, dtype=complex)
    out[0] = 1.0
    if n_max >= 1:
        p_prev, p_cur = 1.0 + 0j, complex(lam - rec.b(0)) / float(rec.a(0))
        out[1] = p_cur
        for m in range(1, n_max):
            p_next = ((lam - rec.b(m)) * p_cur - rec.c(m) * p_prev) / rec.a(m)
            out[m + 1] = complex(p_next)
            p_prev, p_cur = p_cur, p_next
    return out


def sine_values(rec, n_max, lam, c=1.0):
    """Array of c * P_n'(lam) for n = 0..n_max, by dual numbers."""
    rec.check_order(n_max)
    out = np.empty(n_max + 1, dtype=complex)
    d = DualScalar(lam, 1.0)
    p_prev = DualScalar(1.0, 0.0)
    out[0] = 0.0
    if n_max >= 1:
        p_cur = (d - rec.b(0)) / rec.a(0)
        out[1] = c * p_cur.deriv
        for m in range(1, n_max):
            p_next = ((d - rec.b(m)) * p_cur - rec.c(m) * p_prev) / rec.a(m)
            out[m + 1] = c * p_next.deriv
            p_prev, p_cur = p_cur, p_next
    return out


def exp_fn(rec, lam, n_max=256):
    """Exponential n -> P_n(lam) as a tabulated function."""
    return TabulatedFunction(exp_values(rec, n_max, lam))


def sine_fn(rec, c, lam, n_max=256):
    """Sine function n -> c * P_n'(lam) as a tabulated function."""
    return TabulatedFunction(sine_values(rec, n_max, lam, c))


def _multiply_by_x(vec, a_arr, b_arr, c_arr):
    """Expansion of x * (sum_l vec[l] P_l) in the P basis, length len+1."""
    ln = len(vec)
    out = np.zeros(ln + 1, dtype=vec.dtype)
    out[1:] += a_arr[:ln] * vec
    out[:ln] += b_arr[:ln] * vec
    if ln > 1:
        out[:ln - 1] += c_arr[1:ln] * vec[1:]
    return out


def linearize(rec, n, k, exact=False):
    """Convolution measure of degrees n and k: the coefficients of
    P_n * P_k = sum_l w_l P_l, computed by repeated basis reduction.

    With ``exact=True`` the reduction runs in rational arithmetic (intended
    as an oracle for n + k <= 32).  A coefficient below -1e-10 means the
    recurrence does not define a hypergroup and raises NotHypergroupError.
    """
    n, k = int(n), int(k)
    if n < 0 or k < 0:
        raise ValueError(f"degrees must be >= 0, got {n}, {k}")
    if n > k:
        n, k = k, n
    rec.check_order(n + k)
    if exact:
        coeffs = _linearize_exact(rec, n, k)
        pairs = [(l, float(w)) for l, w in enumerate(coeffs) if w != 0]
        if any(w < 0 for _, w in pairs):
            raise NotHypergroupError(
                f"negative linearization coefficient at ({n}, {k})")
        return FiniteMeasure(pairs, tol=NEGATIVE_COEFF_TOL)
    top = n + k + 1
    a_arr = np.array([float(rec.a(i)) for i in range(top)])
    b_arr = np.array([float(rec.b(i)) for i in range(top)])
    c_arr = np.array([float(rec.c(i)) for i in range(top)])
    prev = np.zeros(k + 1)
    prev[k] = 1.0
    if n == 0:
        cur = prev
    else:
        cur = (_multiply_by_x(prev, a_arr, b_arr, c_arr) - b_arr[0] * _pad(prev)) / a_arr[0]
    for m in range(1, n):
        nxt = (_multiply_by_x(cur, a_arr, b_arr, c_arr)
               - b_arr[m] * _pad(cur) - c_arr[m] * _pad(_pad(prev))) / a_arr[m]
        prev, cur = cur, nxt
    if cur.min() < -NEGATIVE_COEFF_TOL:
        raise NotHypergroupError(
            f"negative linearization coefficient {cur.min():g} at ({n}, {k})")
    pairs = [(l, w) for l, w in enumerate(cur) if abs(w) > DROP_COEFF_TOL]
    return FiniteMeasure(pairs, tol=NEGATIVE_COEFF_TOL)


def _pad(vec):
    """Pad a coefficient vector by one zero so shapes line up in reduction."""
    out = np.zeros(len(vec) + 1, dtype=vec.dtype)
    out[:len(vec)] = vec
    return out


def _linearize_exact(rec, n, k):
    def a(i):
        return Fraction(rec.a(i))

    def b(i):
        return Fraction(rec.b(i))

    def c(i):
        return Fraction(rec.c(i))

    def mul_x(vec):
        out = [Fraction(0)] * (len(vec) + 1)
        for l, v in enumerate(vec):
            if v == 0:
                continue
            out[l + 1] += a(l) * v
            out[l] += b(l) * v
            if l >= 1:
                out[l - 1] += c(l) * v
        return out

    def minus(u, v, scale):
        out = list(u)
        for i, vi in enumerate(v):
            out[i] -= scale * vi
        return out

    prev = [Fraction(0)] * (k + 1)
    prev[k] = Fraction(1)
    if n == 0:
        return prev
    cur = [w / a(0) for w in minus(mul_x(prev), prev, b(0))]
    for m in range(1, n):
        nxt = minus(minus(mul_x(cur), cur, b(m)), prev, c(m))
        nxt = [w / a(m) for w in nxt]
        prev, cur = cur, nxt
    return cur


class PolynomialHypergroup(Hypergroup):
    """Hypergroup on degrees with convolution given by linearization."""

    def __init__(self, rec):
        self.rec = rec
        self.identity = 0
        self.commutative = True
        self._cache = {}

    def convolve(self, n, k):
        key = (min(n, k), max(n, k))
        mu = self._cache.get(key)
        if mu is None:
            mu = linearize(self.rec, *key)
            self._cache[key] = mu
        return mu

    def build_table(self, n_max):
        """Precompute all convolutions with n, k <= n_max."""
        for n in range(n_max + 1):
            for k in range(n, n_max + 1):
                self.convolve(n, k)


def reconstruct_sine(rec, lam, f1, n_max, rtol=1e-9):
    """Propagate the sine equation against degree one upward from
    f(0) = 0, f(1) = f1 and compare with the derivative formula.

    The step solves f(n*1) = f(n) P_1(lam) + f1 P_n(lam) for f(n+1), with
    f(n*1) expanded through linearize(n, 1).  The result must match
    f1 * a_0 * P_n'(lam) (the unique sine function with that value at 1);
    a mismatch beyond rtol raises TheoremViolationError.
    """
    rec.check_order(n_max)
    m1 = complex(eval_P(rec, 1, lam))
    p_vals = exp_values(rec, n_max, lam)
    f = np.zeros(n_max + 1, dtype=complex)
    f[1] = f1
    for n in range(1, n_max):
        mu = linearize(rec, n, 1)
        rhs = f[n] * m1 + f1 * p_vals[n]
        partial = sum(w * f[l] for l, w in mu if l <= n)
        w_top = mu.weight(n + 1)
        f[n + 1] = (rhs - partial) / w_top
    expected = sine_values(rec, n_max, lam, float(rec.a(0))) * f1
    err = np.abs(f - expected)
    scale = 1.0 + np.abs(expected)
    worst = int(np.argmax(err / scale))
    if err[worst] / scale[worst] > rtol:
        raise TheoremViolationError(
            f"reconstructed value {f[worst]} at n={worst} is not "
            f"{expected[worst]} (relative error {err[worst] / scale[worst]:g})")
    return TabulatedFunction(f)
