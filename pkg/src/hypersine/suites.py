"""Named verification suites and deterministic report serialization.

Each suite runs a fixed list of residual checks at pinned tolerances and
returns a SuiteReport.  Serialized reports contain one row per check with
the columns (suite, max_abs, max_rel, witness, samples, pass); given the
same configuration and seed the JSON output is byte identical apart from
the wall_time field.
"""

from __future__ import annotations

import cmath
import csv
import io
import json
import math
import time
from dataclasses import dataclass, field

import numpy as np

from . import coset, su2
from .core import (TabulatedFunction, _scan, compact_vanishing_check,
                   exp_residual, exponentials, power_identity_check,
                   s3_conjugacy_hypergroup, sine_residual, sine_space,
                   two_point_hypergroup)
from .dual import DualScalar, central_difference, deriv_of
from .multipoly import ProductPolyHypergroup
from .polyhg import (PolynomialHypergroup, TheoremViolationError,
                     chebyshev_recurrence, eval_P, exp_fn, exp_values,
                     legendre_recurrence, reconstruct_sine,
                     recurrence_from_file, sine_fn, sine_values)
from . import sturm as sturm_mod

SUITE_NAMES = ("compact", "polyone", "su2", "sinsev", "sturm", "coset")


@dataclass
class SuiteConfig:
    seed: int = 0
    tol: float = 1e-9            # probability-weight verification tolerance
    lambdas: tuple = ()          # per-suite defaults when empty
    n_max: int = 0               # per-suite default when 0
    x_max: float = 5.0
    h: float = 1e-3
    thetas: tuple = (0.1, 0.25, 0.5, 0.9)
    alpha: float = 0.5
    samples: int = 1000
    rec_file: str = ""

    def __post_init__(self):
        if self.tol <= 0:
            raise ValueError(f"tolerance must be positive, got {self.tol}")
        if self.samples < 1:
            raise ValueError(f"sample count must be >= 1, got {self.samples}")
        if self.h <= 0 or self.x_max <= 0:
            raise ValueError("x_max and h must be positive")


@dataclass
class CheckResult:
    name: str
    max_abs: float
    max_rel: float
    witness: object
    samples: int
    passed: bool

    def row(self):
        return {
            "suite": self.name,
            "max_abs": float(self.max_abs),
            "max_rel": float(self.max_rel),
            "witness": jsonable(self.witness),
            "samples": int(self.samples),
            "pass": bool(self.passed),
        }


@dataclass
class SuiteReport:
    suite: str
    checks: list = field(default_factory=list)
    wall_time: float = 0.0

    @property
    def passed(self):
        return all(c.passed for c in self.checks)

    def to_json(self):
        doc = {
            "suite": self.suite,
            "pass": self.passed,
            "wall_time": self.wall_time,
            "checks": [c.row() for c in self.checks],
        }
        return json.dumps(doc, sort_keys=True, indent=2) + "\n"

    def to_csv(self):
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["suite", "max_abs", "max_rel", "witness",
                         "samples", "pass"])
        for c in self.checks:
            row = c.row()
            writer.writerow([
                row["suite"], repr(row["max_abs"]), repr(row["max_rel"]),
                json.dumps(row["witness"], sort_keys=True), row["samples"],
                row["pass"],
            ])
        return buf.getvalue()


def jsonable(obj):
    """Witnesses contain ints, floats, complex numbers, and tuples; map them
    to JSON-stable values."""
    if obj is None or isinstance(obj, (bool, int, str)):
        return obj
    if isinstance(obj, float):
        return obj
    if isinstance(obj, np.bool_):
        return bool(obj)
    if isinstance(obj, complex):
        return repr(obj)
    if isinstance(obj, (tuple, list)):
        return [jsonable(v) for v in obj]
    if isinstance(obj, (np.integer,)):
        return int(obj)
    if isinstance(obj, (np.floating,)):
        return float(obj)
    if isinstance(obj, (np.complexfloating,)):
        return repr(complex(obj))
    return repr(obj)


def _fmt_lam(lam):
    lam = complex(lam)
    if lam.imag == 0:
        return f"{lam.real:g}"
    return f"{lam.real:g}{lam.imag:+g}j"


def _residual_check(name, report, tol, relative=False):
    value = report.max_rel if relative else report.max_abs
    return CheckResult(name, report.max_abs, report.max_rel, report.witness,
                       report.samples, value <= tol)


def _bool_check(name, ok, samples=1, witness=None):
    return CheckResult(name, 0.0 if ok else 1.0, 0.0 if ok else 1.0,
                       witness, samples, bool(ok))


def _pairs_grid(n_max):
    return [(n, k) for n in range(n_max + 1) for k in range(n_max + 1)]


# ---------------------------------------------------------------- compact

def run_compact(cfg):
    checks = []
    for theta in cfg.thetas:
        tag = f"compact:theta={theta:g}"
        hg = two_point_hypergroup(theta)
        m1 = TabulatedFunction([1.0, -theta])
        rep = exp_residual(hg, m1, hg.all_pairs())
        checks.append(_residual_check(f"{tag}:exp", rep, 4 * np.finfo(float).eps))
        for label, m in (("m0", [1.0, 1.0]), ("m1", [1.0, -theta])):
            basis = sine_space(hg, m, exp_tol=cfg.tol)
            checks.append(_bool_check(
                f"{tag}:sine-dim-{label}", len(basis) == 0,
                samples=hg.size ** 2, witness=len(basis)))
            checks.append(_bool_check(
                f"{tag}:vanishing-{label}",
                compact_vanishing_check(hg, TabulatedFunction(m), basis),
                samples=hg.size))
        zero = TabulatedFunction([0.0, 0.0])
        rep = power_identity_check(hg, zero, m1, 0, 1, 8)
        checks.append(_residual_check(f"{tag}:power-identity", rep, 1e-10))
    rec = chebyshev_recurrence()
    ph = PolynomialHypergroup(rec)
    lam = 0.9
    f = sine_fn(rec, 1.0, lam, n_max=64)
    m = exp_fn(rec, lam, n_max=64)
    rep = power_identity_check(ph, f, m, 1, 2, 8)
    checks.append(_residual_check("compact:chebyshev:power-identity", rep, 1e-10))
    s3 = s3_conjugacy_hypergroup()
    exps = exponentials(s3, tol=cfg.tol)
    checks.append(_bool_check("compact:s3:exponential-count", len(exps) == 3,
                              samples=s3.size ** 2, witness=len(exps)))
    for i, m in enumerate(exps):
        basis = sine_space(s3, m, exp_tol=cfg.tol)
        checks.append(_bool_check(
            f"compact:s3:sine-dim-m{i}", len(basis) == 0,
            samples=s3.size ** 2, witness=len(basis)))
        checks.append(_bool_check(
            f"compact:s3:vanishing-m{i}",
            compact_vanishing_check(s3, TabulatedFunction(m), basis),
            samples=s3.size))
    return checks


# ---------------------------------------------------------------- polyone

def _polyone_recs(cfg):
    if cfg.rec_file:
        return [recurrence_from_file(cfg.rec_file)]
    return [chebyshev_recurrence(), legendre_recurrence()]


def run_polyone(cfg):
    checks = []
    lambdas = cfg.lambdas or (0.3, 0.7, 1.0, 1.5, 0.5 + 0.5j)
    n_max = cfg.n_max or 64
    rng = np.random.default_rng(cfg.seed)
    pairs = _pairs_grid(n_max)
    for rec in _polyone_recs(cfg):
        name = rec.name or "custom"
        ph = PolynomialHypergroup(rec)
        ph.build_table(n_max)
        for lam in lambdas:
            m = exp_fn(rec, lam, n_max=2 * n_max)
            f = sine_fn(rec, 1.0, lam, n_max=2 * n_max)
            rep = exp_residual(ph, m, pairs)
            checks.append(_residual_check(
                f"polyone:{name}:exp:lam={_fmt_lam(lam)}", rep, 1e-9,
                relative=True))
            rep = sine_residual(ph, f, m, pairs)
            checks.append(_residual_check(
                f"polyone:{name}:sine:lam={_fmt_lam(lam)}", rep, 1e-9,
                relative=True))
        ok, worst, draws = True, None, 10
        for _ in range(draws):
            lam = complex(rng.uniform(-1.25, 1.25), rng.uniform(-0.5, 0.5))
            f1 = complex(rng.uniform(-2, 2), rng.uniform(-2, 2))
            try:
                reconstruct_sine(rec, lam, f1, n_max, rtol=1e-9)
            except TheoremViolationError as exc:
                ok, worst = False, str(exc)
        checks.append(_bool_check(
            f"polyone:{name}:reconstruct", ok, samples=draws, witness=worst))
        sines = sine_values(rec, 5, 0.3)
        prods = sine_values(rec, 5, 1.0) * exp_values(rec, 5, 0.3)
        sv = np.linalg.svd(np.column_stack([sines, prods]),
                           compute_uv=False)
        ratio = float(sv[1] / sv[0])
        checks.append(CheckResult(
            f"polyone:{name}:derivative-not-multiplicative", ratio, ratio,
            None, 6, ratio > 1e-6))
    return checks


# ---------------------------------------------------------------- su2

def run_su2(cfg):
    checks = []
    lambdas = cfg.lambdas or (0.3, 0.5 + 0.2j, 1.0)
    n_max = cfg.n_max or 40
    hg = su2.Su2Hypergroup()
    worst = 0.0
    wit = None
    for k in range(101):
        for n in range(k, 101):
            err = abs(sum(hg.convolve(k, n).weights) - 1.0)
            if err > worst:
                worst, wit = err, (k, n)
    checks.append(CheckResult("su2:weight-sums", worst, worst, wit,
                              101 * 102 // 2, worst <= 1e-12))
    mu = hg.convolve(1, 1)
    ok = mu.weight(0) == 0.25 and mu.weight(2) == 0.75 and len(mu) == 2
    checks.append(_bool_check("su2:unit-square", ok, witness=mu.items()))
    pairs = _pairs_grid(n_max)
    rng = np.random.default_rng(cfg.seed)
    for lam in lambdas:
        m = su2.phi_fn(2 * n_max, lam)
        f = su2.dphi_fn(2 * n_max, lam)
        rep = exp_residual(hg, m, pairs)
        checks.append(_residual_check(
            f"su2:exp:lam={_fmt_lam(lam)}", rep, 1e-9, relative=True))
        rep = sine_residual(hg, f, m, pairs)
        checks.append(_residual_check(
            f"su2:sine:lam={_fmt_lam(lam)}", rep, 1e-9, relative=True))
        rep = su2.recurrence_residual(f, m, n_max)
        checks.append(_residual_check(
            f"su2:recurrence:lam={_fmt_lam(lam)}", rep, 1e-9, relative=True))
        f1 = complex(rng.uniform(0.5, 2.0), rng.uniform(-1.0, 1.0))
        prop = su2.propagate_sine(lam, f1, n_max)
        want = (f1 / cmath.sinh(complex(lam))) * su2.dphi_values(n_max, lam)
        rel = np.abs(prop - want) / (1.0 + np.abs(want))
        idx = int(np.argmax(rel))
        checks.append(CheckResult(
            f"su2:propagation:lam={_fmt_lam(lam)}",
            float(np.abs(prop - want)[idx]), float(rel[idx]), idx,
            n_max + 1, float(rel.max()) <= 1e-8))
    f_add = su2.additive_fn(1.0)
    rep = sine_residual(hg, f_add, lambda n: 1.0, pairs)
    checks.append(_residual_check("su2:additive", rep, 1e-10))
    return checks


# ---------------------------------------------------------------- sinsev

def _product_cases(cfg):
    cheb, leg = chebyshev_recurrence(), legendre_recurrence()
    return [
        ("d=2", ProductPolyHypergroup([cheb, leg]), (0.6, 0.8), (1.5, -2.0)),
        ("d=3", ProductPolyHypergroup([cheb, cheb, leg]), (0.6, 1.1, 0.8),
         (1.0, 0.5, -0.75)),
    ]


def run_sinsev(cfg):
    checks = []
    rng = np.random.default_rng(cfg.seed)
    n_pairs = min(cfg.samples, 200)
    for tag, hg, lam, coeff in _product_cases(cfg):
        d = hg.dimension
        pairs = [
            (tuple(int(v) for v in rng.integers(0, 13, size=d)),
             tuple(int(v) for v in rng.integers(0, 13, size=d)))
            for _ in range(n_pairs)]
        m = hg.exp_fn(lam)
        f = hg.multi_sine(coeff, lam)
        rep = exp_residual(hg, m, pairs)
        checks.append(_residual_check(
            f"sinsev:{tag}:exp", rep, 1e-9, relative=True))
        rep = sine_residual(hg, f, m, pairs)
        checks.append(_residual_check(
            f"sinsev:{tag}:sine", rep, 1e-9, relative=True))
        try:
            got = hg.fit_coefficients(f, lam, n_max=6, rtol=1e-9)
            err = float(np.abs(got - np.asarray(coeff, dtype=complex)).max())
            ok = err <= 1e-9
        except TheoremViolationError:
            err, ok = math.inf, False
        checks.append(CheckResult(
            f"sinsev:{tag}:fit-roundtrip", err, err, None, d, ok))
    return checks


# ---------------------------------------------------------------- sturm

def run_sturm(cfg):
    checks = []
    lambdas = cfg.lambdas or (0.5, 1.0, 2.0, 1.0 + 0.5j)
    x_max, h = cfg.x_max, cfg.h
    const = sturm_mod.constant_family()
    power = sturm_mod.power_family(cfg.alpha)
    res_bound = 10.0 * h * h
    worst_res = 0.0
    for lam in lambdas:
        sol = sturm_mod.solve_phi(const, lam, x_max=x_max, h=h)
        w = cmath.sqrt(complex(lam))
        ref = np.cosh(w * sol.grid)
        err = float(np.abs(sol.values - ref).max())
        checks.append(CheckResult(
            f"sturm:const:phi:lam={_fmt_lam(lam)}", err, err, None,
            len(sol.grid), err <= 1e-6))
        worst_res = max(worst_res, sol.ode_residual)
        dsol = sturm_mod.dlambda_phi(const, lam, x_max=x_max, h=h)
        ssol = sturm_mod.solve_sine(const, lam, 1.0, x_max=x_max, h=h)
        err = float(np.abs(dsol.values - ssol.values).max())
        checks.append(CheckResult(
            f"sturm:const:dlambda-vs-sine:lam={_fmt_lam(lam)}", err, err,
            None, len(dsol.grid), err <= 1e-5))
        worst_res = max(worst_res, dsol.ode_residual, ssol.ode_residual)
    lam = 1.0
    sol = sturm_mod.solve_phi(sturm_mod.power_family(0.5), lam,
                              x_max=x_max, h=h)
    ref = np.ones_like(sol.values)
    ref[1:] = np.sinh(sol.grid[1:]) / sol.grid[1:]
    err = float(np.abs(sol.values - ref).max())
    checks.append(CheckResult(
        "sturm:power-half:phi:lam=1", err, err, None, len(sol.grid),
        err <= 1e-6))
    worst_res = max(worst_res, sol.ode_residual)
    dsol = sturm_mod.dlambda_phi(power, lam, x_max=x_max, h=h)
    ssol = sturm_mod.solve_sine(power, lam, 1.0, x_max=x_max, h=h)
    err = float(np.abs(dsol.values - ssol.values).max())
    checks.append(CheckResult(
        f"sturm:power(alpha={cfg.alpha:g}):dlambda-vs-sine:lam=1", err, err,
        None, len(dsol.grid), err <= 1e-5))
    worst_res = max(worst_res, dsol.ode_residual, ssol.ode_residual)
    for fam, tag in ((const, "const"), (power, f"power(alpha={cfg.alpha:g})")):
        sol = sturm_mod.solve_sine(fam, 1.0, 0.0, x_max=x_max, h=h)
        err = float(np.abs(sol.values).max())
        checks.append(CheckResult(
            f"sturm:{tag}:homogeneous-zero", err, err, None, len(sol.grid),
            err <= 1e-10))
    checks.append(CheckResult(
        "sturm:ode-residual-bound", worst_res, worst_res / res_bound, None,
        len(lambdas) * 3 + 3, worst_res <= res_bound))
    rng = np.random.default_rng(cfg.seed)
    pts = rng.uniform(0.05, 2.5, size=(40, 2))
    for lam in (0.8, 1.0, 2.0):
        rep = sturm_mod.cosh_hypergroup_check(lam, [tuple(p) for p in pts])
        checks.append(_residual_check(
            f"sturm:cosh-check:lam={_fmt_lam(lam)}", rep, 1e-10))
    return checks


# ---------------------------------------------------------------- coset

def _coset_samples(rng, count):
    xs = np.exp(rng.uniform(math.log(0.1), math.log(10.0), size=count))
    us = rng.uniform(-10.0, 10.0, size=count)
    return xs, us


def run_coset(cfg):
    checks = []
    lambdas = cfg.lambdas or (0.0, 1.0, 2.0, 0.5 + 0.5j)
    rng = np.random.default_rng(cfg.seed)
    count = cfg.samples
    xs, us = _coset_samples(rng, count)
    ys, vs = _coset_samples(rng, count)
    hg = coset.CosetHypergroup()
    pairs = [((x, abs(u)), (y, abs(v)))
             for x, u, y, v in zip(xs, us, ys, vs)]
    for lam in lambdas:
        m = coset.coset_exponential(lam)
        f = coset.coset_sine(1.0, lam)
        rep = exp_residual(hg, m, pairs)
        checks.append(_residual_check(
            f"coset:exp:lam={_fmt_lam(lam)}", rep, 1e-12, relative=True))
        rep = sine_residual(hg, f, m, pairs)
        checks.append(_residual_check(
            f"coset:sine:lam={_fmt_lam(lam)}", rep, 1e-10, relative=True))
    recorded = [(2.0, 1.0, 1.0, 1.0)]
    rep = coset.falsify_dalembert_alpha(0.0, 1.0, recorded)
    independent = math.cosh(3.0) + math.cosh(1.0) - 2.0 * math.cosh(1.0) ** 2
    ok = abs(rep.max_abs - independent) <= 1e-6 and rep.max_abs > 0.1
    checks.append(CheckResult(
        "coset:falsify-alpha:recorded", rep.max_abs, rep.max_rel,
        rep.witness, 1, ok))
    quads = list(zip(xs[:200], us[:200], ys[:200], vs[:200]))
    for alpha, lam in ((1.0, 0.0), (0.5, 1.0)):
        rep = coset.falsify_dalembert_alpha(lam, alpha, quads)
        checks.append(CheckResult(
            f"coset:falsify-alpha={alpha:g}:lam={_fmt_lam(lam)}",
            rep.max_abs, rep.max_rel, rep.witness, len(quads),
            rep.max_abs > 1e-3))
    rep = coset.falsify_square_term(1.0, 1.0, [((2.0, 1.0), (3.0, 1.0))])
    checks.append(CheckResult(
        "coset:falsify-square:recorded", rep.max_abs, rep.max_rel,
        rep.witness, 1, rep.max_abs > 0.5))
    rep = coset.falsify_square_term(1.0, 0.25, pairs[:200])
    checks.append(CheckResult(
        "coset:falsify-square:random", rep.max_abs, rep.max_rel, rep.witness,
        200, rep.max_abs > 1e-3))
    uv = [(u, v) for u, v in zip(us[:200], vs[:200])]
    rep = coset.square_norm_check(uv)
    checks.append(_residual_check("coset:square-norm", rep, 1e-12))
    gpairs = [((x, u), (y, v))
              for x, u, y, v in zip(xs[:200], us[:200], ys[:200], vs[:200])]
    rep = coset.group_sine_check(1.0 + 1.0j, gpairs)
    checks.append(_residual_check("coset:group-sine", rep, 1e-12,
                                  relative=True))
    dyadic = [0.5, -2.0, 4.0, -0.25, 8.0, 1.0]
    ok = True
    for i, x in enumerate(dyadic):
        p = (x, float(i - 2))
        q = (dyadic[(i + 1) % len(dyadic)], float(2 * i))
        r = (dyadic[(i + 2) % len(dyadic)], float(i))
        if coset.group_mul(coset.group_mul(p, q), r) != coset.group_mul(
                p, coset.group_mul(q, r)):
            ok = False
        if coset.conjugate_by(p, (-1.0, 0.0)) != (-1.0, 2.0 * p[1]):
            ok = False
    checks.append(_bool_check("coset:group-identities-exact", ok,
                              samples=len(dyadic)))
    worst = 0.0
    for x, u, y, v in zip(xs[:200], us[:200], ys[:200], vs[:200]):
        p, q, r = (x, u), (y, v), (x * 0.5 + 1.0, v - u)
        lhs = coset.group_mul(coset.group_mul(p, q), r)
        rhs = coset.group_mul(p, coset.group_mul(q, r))
        err = max(abs(lhs[0] - rhs[0]) / (1.0 + abs(rhs[0])),
                  abs(lhs[1] - rhs[1]) / (1.0 + abs(rhs[1])))
        worst = max(worst, err)
    checks.append(CheckResult("coset:associativity-float", worst, worst,
                              None, 200, worst <= 1e-12))
    witness_f = lambda p: p[1]
    left = coset.coset_apply(witness_f, (2.0, 3.0), (5.0, 7.0))
    right = coset.coset_apply(witness_f, (5.0, 7.0), (2.0, 3.0))
    checks.append(_bool_check(
        "coset:non-commutative-witness", abs(left - right) > 0.5,
        witness=(left, right)))
    raw_samples = [(x, u) for x, u in zip(xs[:50], us[:50])]
    m_raw = lambda p: coset.coset_exponential(1.0)(coset.coset_of(p))
    checks.append(_bool_check(
        "coset:compat", coset.verify_compat(m_raw, raw_samples),
        samples=len(raw_samples)))
    return checks


_RUNNERS = {
    "compact": run_compact,
    "polyone": run_polyone,
    "su2": run_su2,
    "sinsev": run_sinsev,
    "sturm": run_sturm,
    "coset": run_coset,
}


def run_suite(name, cfg=None):
    """Run one suite (or "all") and return its SuiteReport."""
    cfg = cfg or SuiteConfig()
    t0 = time.perf_counter()
    if name == "all":
        checks = []
        for s in SUITE_NAMES:
            checks.extend(_RUNNERS[s](cfg))
    else:
        runner = _RUNNERS.get(name)
        if runner is None:
            raise ValueError(
                f"unknown suite {name!r}; choose from {SUITE_NAMES + ('all',)}")
        checks = runner(cfg)
    return SuiteReport(name, checks, wall_time=time.perf_counter() - t0)


# ------------------------------------------------- dual vs finite difference

def dual_fd_families(x_max=1.0, h=1e-3, alpha=0.5):
    """Built-in exponential families exposed as (name, value, deriv, points,
    lambdas) tuples, where value(x, lam) accepts dual lam and deriv(x, lam)
    is the artifact's lambda-derivative.  Used to cross-check dual numbers
    against central differences."""
    cheb = chebyshev_recurrence()
    leg = legendre_recurrence()
    prod = ProductPolyHypergroup([cheb, leg])

    def sturm_value(x, lam):
        fam = sturm_mod.power_family(alpha)
        if isinstance(lam, DualScalar):
            sol = sturm_mod.dlambda_phi(fam, lam.value, x_max=x, h=h)
            return DualScalar(sol.forcing[-1], sol.values[-1] * lam.deriv)
        return sturm_mod.solve_phi(fam, lam, x_max=x, h=h).values[-1]

    def sturm_deriv(x, lam):
        return sturm_mod.dlambda_phi(
            sturm_mod.power_family(alpha), lam, x_max=x, h=h).values[-1]

    return [
        ("chebyshev",
         lambda n, lam: eval_P(cheb, n, lam),
         lambda n, lam: deriv_of(eval_P(cheb, n, DualScalar(lam, 1.0))),
         [3, 7], [0.6, 0.3 + 0.4j]),
        ("legendre",
         lambda n, lam: eval_P(leg, n, lam),
         lambda n, lam: deriv_of(eval_P(leg, n, DualScalar(lam, 1.0))),
         [3, 7], [0.6, 0.3 + 0.4j]),
        ("su2",
         lambda n, lam: su2.phi(n, lam),
         lambda n, lam: su2.dphi(n, lam),
         [2, 9], [0.4, 0.2 + 0.3j]),
        ("product-coordinate-0",
         lambda x, lam: prod.q_eval(x, (lam, 0.8)),
         lambda x, lam: prod.q_grad(x, (lam, 0.8))[0],
         [(2, 3), (4, 1)], [0.5, 0.7]),
        ("sturm-power",
         sturm_value,
         sturm_deriv,
         [1.0, 2.0], [0.6, 1.2]),
        ("coset",
         lambda p, lam: coset.coset_exponential(lam)(p),
         lambda p, lam: deriv_of(
             coset.coset_exponential(DualScalar(lam, 1.0))(p)),
         [(2.0, 1.0), (0.5, 3.0)], [0.7, 1.5]),
    ]


def dual_vs_fd_report(h=1e-5):
    """Worst relative disagreement between dual-number derivatives and
    central differences across all built-in families."""
    def gen():
        for name, value, deriv, points, lambdas in dual_fd_families():
            for x in points:
                for lam in lambdas:
                    d_dual = deriv(x, lam)
                    d_fd = central_difference(lambda t: value(x, t), lam, h=h)
                    err = abs(d_dual - d_fd)
                    rel = err / (1.0 + abs(d_fd))
                    yield err, rel, (name, x, _fmt_lam(lam))
    return _scan(gen())
