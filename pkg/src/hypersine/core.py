"""Hypergroups whose point-mass convolutions are finitely supported probability
measures, together with residual checkers for the exponential equation
m(x*y) = m(x)m(y) and the sine equation f(x*y) = f(x)m(y) + f(y)m(x).

``x*y`` always denotes integration against the convolution measure of the two
point masses, so f(x*y) is integrate(f, convolve(x, y)).
"""

from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np

WEIGHT_TOL = 1e-12          # construction tolerance for probability weights
VERIFY_WEIGHT_TOL = 1e-9    # tolerance used by verification suites
DEFAULT_SUPPORT_CAP = 100_000


class EvaluationError(Exception):
    """A function could not be evaluated on a support element."""


class SupportCapError(Exception):
    """Convolution-power support grew past the configured cap."""


class NotHypergroupError(Exception):
    """Structure data fails the hypergroup axioms (weights, identity row)."""


class TheoremViolationError(Exception):
    """A certified identity failed beyond tolerance; carries the witness."""


class FiniteMeasure:
    """Finitely supported measure; by default a probability measure.

    Duplicate elements are merged on construction.  Weights must be real,
    >= -tol, and sum to 1 within tol unless ``normalized=False``.
    """

    __slots__ = ("_elements", "_weights")

    def __init__(self, pairs, tol=WEIGHT_TOL, normalized=True):
        acc = {}
        for el, w in pairs:
            acc[el] = acc.get(el, 0.0) + float(w)
        for el, w in acc.items():
            if w < -tol:
                raise NotHypergroupError(
                    f"negative weight {w!r} at element {el!r}")
        if normalized:
            total = sum(acc.values())
            if abs(total - 1.0) > max(tol, tol * len(acc)):
                raise NotHypergroupError(
                    f"weights sum to {total!r}, expected 1")
        self._elements = tuple(acc.keys())
        self._weights = tuple(acc.values())

    @classmethod
    def point(cls, el):
        return cls(((el, 1.0),))

    @property
    def support(self):
        return self._elements

    @property
    def weights(self):
        return self._weights

    def items(self):
        return tuple(zip(self._elements, self._weights))

    def weight(self, el):
        for e, w in zip(self._elements, self._weights):
            if e == el:
                return w
        return 0.0

    def __len__(self):
        return len(self._elements)

    def __iter__(self):
        return iter(self.items())

    def __repr__(self):
        body = " + ".join(f"{w:.6g}*d[{el!r}]" for el, w in self.items())
        return f"<FiniteMeasure {body}>"

    def allclose(self, other, tol=WEIGHT_TOL):
        """True if both measures give every element the same weight within tol."""
        keys = set(self._elements) | set(other.support)
        return all(abs(self.weight(k) - other.weight(k)) <= tol for k in keys)


def integrate(f, mu):
    """Integral of ``f`` against a finite measure.

    Raises EvaluationError naming the offending element if ``f`` cannot be
    evaluated somewhere on the support.
    """
    total = 0.0
    for el, w in mu:
        try:
            v = f(el)
        except Exception as exc:
            raise EvaluationError(
                f"integrand undefined at support element {el!r}: {exc}"
            ) from exc
        total = total + w * v
    return total


def mix(weighted_measures, normalized=True):
    """Convex/linear combination sum_i alpha_i * mu_i as a FiniteMeasure."""
    acc = {}
    for alpha, mu in weighted_measures:
        for el, w in mu:
            acc[el] = acc.get(el, 0.0) + alpha * w
    return FiniteMeasure(acc.items(), normalized=normalized)


class TabulatedFunction:
    """Function on {0, .., len(values)-1} backed by an array of values."""

    __slots__ = ("values",)

    def __init__(self, values):
        self.values = np.asarray(values)

    def __call__(self, n):
        idx = int(n)
        if idx < 0 or idx >= len(self.values):
            raise IndexError(f"element {n!r} outside tabulated range")
        return complex(self.values[idx])

    def __len__(self):
        return len(self.values)


class Hypergroup:
    """Base class: a ground set with identity and point-mass convolution.

    Subclasses implement ``convolve(x, y) -> FiniteMeasure``.  The identity
    must satisfy convolve(o, x) = convolve(x, o) = point mass at x.
    """

    identity = None
    commutative = True

    def convolve(self, x, y):
        raise NotImplementedError

    def involution(self, x):
        return x


class FiniteHypergroup(Hypergroup):
    """Hypergroup on {0, .., N-1} given by a convolution tensor c[i][j][l].

    Element 0 is the identity.  Each row c[i][j][:] must be a probability
    vector and the identity rows must be exact point masses.
    """

    def __init__(self, tensor, name="", tol=WEIGHT_TOL):
        tensor = np.asarray(tensor, dtype=float)
        if tensor.ndim != 3 or len(set(tensor.shape)) != 1:
            raise NotHypergroupError(f"tensor shape {tensor.shape} is not (N, N, N)")
        n = tensor.shape[0]
        if (tensor < -tol).any():
            raise NotHypergroupError("negative convolution weight in tensor")
        sums = tensor.sum(axis=2)
        if np.abs(sums - 1.0).max() > max(tol, tol * n):
            raise NotHypergroupError("convolution rows do not sum to 1")
        eye = np.eye(n)
        if not (np.array_equal(tensor[0], eye) and np.array_equal(tensor[:, 0], eye)):
            raise NotHypergroupError("identity rows are not exact point masses")
        self.tensor = tensor
        self.size = n
        self.name = name
        self.identity = 0
        self.commutative = bool(np.allclose(tensor, tensor.transpose(1, 0, 2)))
        self._measures = {}

    def convolve(self, i, j):
        key = (int(i), int(j))
        if not (0 <= key[0] < self.size and 0 <= key[1] < self.size):
            raise ValueError(f"elements {key} outside range 0..{self.size - 1}")
        mu = self._measures.get(key)
        if mu is None:
            row = self.tensor[key]
            mu = FiniteMeasure(
                ((l, row[l]) for l in range(self.size) if row[l] != 0.0))
            self._measures[key] = mu
        return mu

    def elements(self):
        return range(self.size)

    def all_pairs(self):
        return [(i, j) for i in range((self.size)) for j in range(self.size)]


def two_point_hypergroup(theta):
    """Two-element hypergroup where the non-identity squared is
    theta*d[0] + (1-theta)*d[1].  Requires 0 < theta <= 1."""
    if not 0.0 < theta <= 1.0:
        raise ValueError(f"theta must be in (0, 1], got {theta!r}")
    tensor = [
        [[1.0, 0.0], [0.0, 1.0]],
        [[0.0, 1.0], [theta, 1.0 - theta]],
    ]
    return FiniteHypergroup(tensor, name=f"two-point(theta={theta:g})")


def s3_conjugacy_hypergroup():
    """Three-element hypergroup of normalized conjugacy-class sums of the
    symmetric group on three letters: identity, transpositions, 3-cycles.

    Its middle exponential takes the value 0 on the transposition class.
    """
    third = 1.0 / 3.0
    tensor = [
        [[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]],
        [[0.0, 1.0, 0.0], [third, 0.0, 2 * third], [0.0, 1.0, 0.0]],
        [[0.0, 0.0, 1.0], [0.0, 1.0, 0.0], [0.5, 0.0, 0.5]],
    ]
    return FiniteHypergroup(tensor, name="s3-conjugacy")


@dataclass(frozen=True)
class ResidualReport:
    """Worst-case residual over a sample set.

    max_rel is the residual divided by 1 + (sum of magnitudes of the
    identity's right-hand terms at that sample).  witness is the sample at
    which max_abs was attained.
    """

    max_abs: float
    max_rel: float
    witness: object
    samples: int

    def within(self, tol, relative=False):
        return (self.max_rel if relative else self.max_abs) <= tol


def _scan(residuals):
    """residuals: iterable of (abs_err, rel_err, witness)."""
    max_abs = -1.0
    max_rel = 0.0
    witness = None
    count = 0
    for a, r, w in residuals:
        count += 1
        if r > max_rel:
            max_rel = r
        if a > max_abs:
            max_abs = a
            witness = w
    if count == 0:
        raise ValueError("empty sample set")
    return ResidualReport(max_abs, max_rel, witness, count)


def sine_residual(hg, f, m, pairs):
    """Residual of f(x*y) = f(x)m(y) + f(y)m(x) over the given pairs."""
    def gen():
        for x, y in pairs:
            lhs = integrate(f, hg.convolve(x, y))
            t1 = f(x) * m(y)
            t2 = f(y) * m(x)
            err = abs(lhs - t1 - t2)
            yield err, err / (1.0 + abs(t1) + abs(t2)), (x, y)
    return _scan(gen())


def exp_residual(hg, m, pairs):
    """Residual of m(x*y) = m(x)m(y) over the given pairs."""
    def gen():
        for x, y in pairs:
            lhs = integrate(m, hg.convolve(x, y))
            rhs = m(x) * m(y)
            err = abs(lhs - rhs)
            yield err, err / (1.0 + abs(rhs)), (x, y)
    return _scan(gen())


def convolve_power(hg, y, n, cap=DEFAULT_SUPPORT_CAP):
    """n-th convolution power of the point mass at y (n >= 1)."""
    if n < 1:
        raise ValueError(f"power must be >= 1, got {n!r}")
    mu = FiniteMeasure.point(y)
    for _ in range(n - 1):
        mu = mix((w, hg.convolve(el, y)) for el, w in mu)
        if len(mu) > cap:
            raise SupportCapError(
                f"support grew past cap {cap} while raising {y!r} to power {n}")
    return mu


def power_identity_check(hg, f, m, x, y, n_max, cap=DEFAULT_SUPPORT_CAP):
    """Residual of f(x*y^n) = f(x)m(y)^n + n f(y)m(x)m(y)^(n-1) for n <= n_max.

    The witness in the report is the exponent n attaining the worst residual.
    """
    if n_max < 1:
        raise ValueError(f"n_max must be >= 1, got {n_max!r}")
    my, mx, fx, fy = m(y), m(x), f(x), f(y)

    def gen():
        mu = FiniteMeasure.point(y)
        for n in range(1, n_max + 1):
            if n > 1:
                mu = mix((w, hg.convolve(el, y)) for el, w in mu)
                if len(mu) > cap:
                    raise SupportCapError(
                        f"support grew past cap {cap} at power {n}")
            shifted = mix((w, hg.convolve(x, el)) for el, w in mu)
            lhs = integrate(f, shifted)
            t1 = fx * my ** n
            t2 = n * fy * mx * my ** (n - 1)
            err = abs(lhs - t1 - t2)
            yield err, err / (1.0 + abs(t1) + abs(t2)), n
    return _scan(gen())


def sine_space(hg, m, exp_tol=VERIFY_WEIGHT_TOL):
    """Basis of the space of m-sine functions of a finite hypergroup.

    Solves the N^2-by-N linear system
        sum_l c[i][j][l] f(l) - m(j) f(i) - m(i) f(j) = 0
    by singular value decomposition; the rank cutoff is
    max(N^2, N) * machine epsilon * largest singular value.

    ``m`` must pass exp_residual at ``exp_tol`` over all pairs, otherwise a
    ValueError is raised.  Returns a list of TabulatedFunction basis elements.
    """
    n = hg.size
    if callable(m):
        m_vals = np.asarray([complex(m(i)) for i in range(n)])
    else:
        m_vals = np.asarray([complex(v) for v in m])
    if len(m_vals) != n:
        raise ValueError(f"m has {len(m_vals)} values, hypergroup has {n}")
    m_fn = TabulatedFunction(m_vals)
    rep = exp_residual(hg, m_fn, hg.all_pairs())
    if rep.max_abs > exp_tol:
        raise ValueError(
            f"m is not an exponential at tolerance {exp_tol:g}: "
            f"residual {rep.max_abs:g} at pair {rep.witness}")
    rows = []
    for i in range(n):
        for j in range(n):
            row = hg.tensor[i, j].astype(complex).copy()
            row[i] -= m_vals[j]
            row[j] -= m_vals[i]
            rows.append(row)
    a = np.asarray(rows)
    _, s, vh = np.linalg.svd(a)
    cutoff = max(a.shape) * np.finfo(float).eps * (s[0] if len(s) else 0.0)
    rank = int((s > cutoff).sum())
    basis = [TabulatedFunction(vec.conj()) for vec in vh[rank:]]
    for fb in basis:
        check = sine_residual(hg, fb, m_fn, hg.all_pairs())
        if check.max_abs > max(exp_tol, 10 * cutoff * n):
            raise RuntimeError(
                f"solver returned a non-solution: residual {check.max_abs:g}")
    return basis


def compact_vanishing_check(hg, m, basis, tol=1e-10):
    """True if f(y) * m(y) vanishes within tol for every basis f and element y."""
    m_fn = m if callable(m) else TabulatedFunction(m)
    return all(
        abs(f(y) * m_fn(y)) <= tol
        for f in basis for y in hg.elements())


def exponentials(hg, tol=VERIFY_WEIGHT_TOL):
    """Validated exponentials of a finite hypergroup.

    Candidates are eigenvectors of the generator transition matrix
    T[j, l] = c[1][j][l] (an exponential m satisfies T m = m(1) m),
    normalized to m(0) = 1 and filtered by exp_residual.  For built-in
    structures the generator has simple spectrum and this is exhaustive.
    """
    if hg.size == 1:
        return [np.ones(1)]
    t = hg.tensor[1]
    eigvals, eigvecs = np.linalg.eig(t)
    found = []
    idx = sorted(range(len(eigvals)),
                 key=lambda i: (-eigvals[i].real, -eigvals[i].imag))
    for i in idx:
        vec = eigvecs[:, i]
        if abs(vec[0]) < 1e-12 * np.linalg.norm(vec):
            continue
        m = vec / vec[0]
        if np.abs(m.imag).max() < 1e-12:
            m = m.real.astype(complex)
        rep = exp_residual(hg, TabulatedFunction(m), hg.all_pairs())
        if rep.max_abs > tol:
            continue
        if any(np.allclose(m, other, atol=1e-9) for other in found):
            continue
        found.append(m)
    return found


def load_finite_hypergroup(path):
    """Load a finite hypergroup from JSON {"size", "tensor", "name"}."""
    with open(path, "r", encoding="utf-8") as fh:
        data = json.load(fh)
    try:
        size = data["size"]
        tensor = data["tensor"]
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed hypergroup spec {path!r}: {exc}") from exc
    tensor = np.asarray(tensor, dtype=float)
    if tensor.shape != (size, size, size):
        raise ValueError(
            f"tensor shape {tensor.shape} does not match size {size}")
    return FiniteHypergroup(tensor, name=data.get("name", ""))


def dump_finite_hypergroup(hg, path):
    """Write a finite hypergroup as JSON {"size", "tensor", "name"}."""
    data = {"size": hg.size, "tensor": hg.tensor.tolist(), "name": hg.name}
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(data, fh, indent=2, sort_keys=True)
        fh.write("\n")
