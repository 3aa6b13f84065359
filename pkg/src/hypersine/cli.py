"""Command-line front end.

Subcommands: verify <suite>, tabulate, sine-space <spec.json>, list.
Exit codes: 0 success, 1 verification failure, 2 usage or config error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

import numpy as np

from . import coset, su2
from .core import (NotHypergroupError, TabulatedFunction, exp_residual,
                   exponentials, load_finite_hypergroup, sine_residual,
                   sine_space)
from .multipoly import ProductPolyHypergroup
from .polyhg import (BUILTIN_RECURRENCES, PolynomialHypergroup, exp_fn,
                     sine_fn)
from . import sturm as sturm_mod
from .suites import SUITE_NAMES, SuiteConfig, jsonable, run_suite

TABULATE_FAMILIES = ("chebyshev", "legendre", "su2", "product", "coset",
                     "sturm")


def _parse_lambda(text):
    """Accept "1.5", "0.5+0.5j", or the "re,im" form."""
    text = text.strip()
    try:
        if "," in text:
            re_s, im_s = text.split(",")
            return complex(float(re_s), float(im_s))
        return complex(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(
            f"cannot parse {text!r} as a lambda value") from exc


def build_parser():
    parser = argparse.ArgumentParser(
        prog="hypersine",
        description="Verify sine and exponential functional equations on "
                    "built-in hypergroup families.")
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--tol", type=float, default=1e-9,
                        help="probability-weight verification tolerance")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--lambda", dest="lambdas", type=_parse_lambda,
                        action="append", metavar="LAM",
                        help="spectral parameter; repeatable; accepts "
                             "re, re+imj, or re,im")
    common.add_argument("--n-max", type=int, default=None)
    common.add_argument("--xmax", type=float, default=5.0)
    common.add_argument("--h", type=float, default=1e-3)
    common.add_argument("--out", default=None,
                        help="write the report here instead of stdout")
    common.add_argument("--format", choices=("json", "csv"), default=None,
                        help="json for verify, csv for tables by default")

    p_verify = sub.add_parser(
        "verify", parents=[common],
        help="run a verification suite and emit its report")
    p_verify.add_argument("suite", choices=SUITE_NAMES + ("all",))
    p_verify.add_argument("--theta", type=float, action="append",
                          help="two-point family parameter; repeatable")
    p_verify.add_argument("--alpha", type=float, default=0.5,
                          help="power-weight parameter for the ODE family")
    p_verify.add_argument("--samples", type=int, default=1000)
    p_verify.add_argument("--rec-file", default=None,
                          help="JSON recurrence spec replacing the built-in "
                               "polynomial families")

    p_tab = sub.add_parser(
        "tabulate", parents=[common],
        help="tabulate an exponential and a sine function for one family")
    p_tab.add_argument("--family", choices=TABULATE_FAMILIES, required=True)
    p_tab.add_argument("--c", type=_parse_lambda, default=complex(1.0),
                       help="sine normalization constant")
    p_tab.add_argument("--alpha", type=float, default=None,
                       help="power-weight parameter (sturm family)")
    p_tab.add_argument("--a-const", action="store_true",
                       help="use the constant weight (sturm family)")

    p_space = sub.add_parser(
        "sine-space", parents=[common],
        help="solve the sine equation on a finite hypergroup spec file")
    p_space.add_argument("spec", help="JSON file with size, tensor, name")
    p_space.add_argument("--m", action="append", metavar="V1,V2,...",
                         help="exponential values; repeatable; default "
                              "enumerates all exponentials")

    sub.add_parser("list", help="list suites, families, and recurrences")
    return parser


def _emit(text, out):
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _rows_to_text(rows, header, fmt):
    if fmt == "json":
        return json.dumps([dict(zip(header, r)) for r in rows],
                          sort_keys=True, indent=2) + "\n"
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def _c(z):
    z = complex(z)
    if z.imag == 0:
        return repr(z.real)
    return repr(z)


def cmd_verify(args):
    cfg = SuiteConfig(
        seed=args.seed, tol=args.tol,
        lambdas=tuple(args.lambdas or ()),
        n_max=args.n_max or 0, x_max=args.xmax, h=args.h,
        thetas=tuple(args.theta) if args.theta else (0.1, 0.25, 0.5, 0.9),
        alpha=args.alpha, samples=args.samples,
        rec_file=args.rec_file or "")
    report = run_suite(args.suite, cfg)
    fmt = args.format or "json"
    text = report.to_json() if fmt == "json" else report.to_csv()
    _emit(text, args.out)
    for check in report.checks:
        if not check.passed:
            print(f"FAIL {check.name}: max_abs={check.max_abs:.3e} "
                  f"max_rel={check.max_rel:.3e} witness={check.witness!r}",
                  file=sys.stderr)
    n_fail = sum(not c.passed for c in report.checks)
    print(f"suite {report.suite}: {len(report.checks) - n_fail}/"
          f"{len(report.checks)} checks passed "
          f"({report.wall_time:.2f}s)", file=sys.stderr)
    return 0 if report.passed else 1


def _sine_eq_residual(hg, f, m, x, y):
    conv = hg.convolve(x, y)
    lhs = sum(w * f(el) for el, w in conv.items())
    return abs(lhs - f(x) * m(y) - f(y) * m(x))


def _tabulate_poly(args, rec):
    n_max = 8 if args.n_max is None else args.n_max
    lam = (args.lambdas or [0.7])[0]
    hg = PolynomialHypergroup(rec)
    m = exp_fn(rec, lam, n_max=max(2 * n_max + 2, 4))
    f = sine_fn(rec, args.c, lam, n_max=max(2 * n_max + 2, 4))
    rows = []
    for n in range(n_max + 1):
        rows.append((n, _c(m(n)), _c(f(n)),
                     repr(_sine_eq_residual(hg, f, m, n, 1))))
    return rows, ["element", "m", "sine", "residual"]


def _tabulate_su2(args):
    n_max = 8 if args.n_max is None else args.n_max
    lam = (args.lambdas or [0.3])[0]
    hg = su2.Su2Hypergroup()
    if n_max < 0:
        return [], ["element", "m", "sine", "residual"]
    m = su2.phi_fn(2 * n_max + 2, lam)
    if lam == 0:
        f = su2.additive_fn(args.c)
    else:
        base = su2.dphi_fn(2 * n_max + 2, lam)
        f = lambda n: args.c * base(n)
    rows = []
    for n in range(n_max + 1):
        rows.append((n, _c(m(n)), _c(f(n)),
                     repr(_sine_eq_residual(hg, f, m, n, 1))))
    return rows, ["element", "m", "sine", "residual"]


def _tabulate_product(args):
    n_max = 4 if args.n_max is None else args.n_max
    lam = args.lambdas or [0.6, 0.8]
    if len(lam) == 1:
        lam = [lam[0], lam[0]]
    hg = ProductPolyHypergroup([BUILTIN_RECURRENCES["chebyshev"](),
                                BUILTIN_RECURRENCES["legendre"]()])
    lam = tuple(lam[:2])
    m = hg.exp_fn(lam)
    f = hg.multi_sine((args.c, args.c), lam)
    rows = []
    for i in range(n_max + 1):
        for j in range(n_max + 1):
            x = (i, j)
            rows.append((f"{i},{j}", _c(m(x)), _c(f(x)),
                         repr(_sine_eq_residual(hg, f, m, x, (1, 1)))))
    return rows, ["element", "m", "sine", "residual"]


def _tabulate_coset(args):
    n_max = 8 if args.n_max is None else args.n_max
    lam = (args.lambdas or [1.0])[0]
    hg = coset.CosetHypergroup()
    m = coset.coset_exponential(lam)
    f = coset.coset_sine(args.c, lam)
    rows = []
    for t in range(n_max + 1):
        x = (float(np.exp(t / 4.0)), float(t))
        rows.append((f"{x[0]!r},{x[1]!r}", _c(m(x)), _c(f(x)),
                     repr(_sine_eq_residual(hg, f, m, x, (2.0, 1.0)))))
    return rows, ["element", "m", "sine", "residual"]


def _tabulate_sturm(args):
    lam = (args.lambdas or [1.0])[0]
    if args.a_const and args.alpha is not None:
        raise ValueError("choose either --a-const or --alpha, not both")
    if args.a_const or args.alpha is None:
        family = sturm_mod.constant_family()
    else:
        family = sturm_mod.power_family(args.alpha)
    sol = sturm_mod.solve_sine(family, lam, args.c, x_max=args.xmax, h=args.h)
    phi = sol.forcing
    f = sol.values
    h = sol.grid[1] - sol.grid[0]
    res = np.zeros(len(sol.grid))
    fpp = (f[2:] - 2.0 * f[1:-1] + f[:-2]) / (h * h)
    fp = (f[2:] - f[:-2]) / (2.0 * h)
    rvals = np.array([family.ratio(x) for x in sol.grid[1:-1]])
    res[1:-1] = np.abs(fpp + rvals * fp - complex(lam) * f[1:-1]
                       - complex(args.c) * phi[1:-1])
    rows = []
    for i, x in enumerate(sol.grid):
        rows.append((repr(float(x)),
                     repr(float(phi[i].real)), repr(float(phi[i].imag)),
                     repr(float(f[i].real)), repr(float(f[i].imag)),
                     repr(float(res[i]))))
    return rows, ["x", "re_phi", "im_phi", "re_f", "im_f", "residual"]


def cmd_tabulate(args):
    if args.family in ("chebyshev", "legendre"):
        rows, header = _tabulate_poly(args,
                                      BUILTIN_RECURRENCES[args.family]())
    elif args.family == "su2":
        rows, header = _tabulate_su2(args)
    elif args.family == "product":
        rows, header = _tabulate_product(args)
    elif args.family == "coset":
        rows, header = _tabulate_coset(args)
    else:
        rows, header = _tabulate_sturm(args)
    _emit(_rows_to_text(rows, header, args.format or "csv"), args.out)
    return 0


def cmd_sine_space(args):
    hg = load_finite_hypergroup(args.spec)
    if args.m:
        ms = []
        for spec in args.m:
            vals = [complex(v) for v in spec.split(",")]
            if len(vals) != hg.size:
                raise ValueError(
                    f"--m needs {hg.size} values, got {len(vals)}")
            rep = exp_residual(hg, TabulatedFunction(vals), hg.all_pairs())
            if rep.max_abs > args.tol:
                raise ValueError(
                    f"supplied m is not an exponential: residual "
                    f"{rep.max_abs:.3e} at {rep.witness}")
            ms.append(vals)
    else:
        ms = [list(m) for m in exponentials(hg, tol=args.tol)]
    rows = []
    for mv in ms:
        basis = sine_space(hg, mv, exp_tol=args.tol)
        worst = 0.0
        mfun = TabulatedFunction(mv)
        for b in basis:
            rep = sine_residual(hg, b, mfun, hg.all_pairs())
            worst = max(worst, rep.max_abs)
        rows.append((json.dumps(jsonable([complex(v) for v in mv])),
                     len(basis),
                     json.dumps([jsonable([complex(b(i)) for i in
                                           range(hg.size)]) for b in basis]),
                     repr(worst)))
        print(f"m={rows[-1][0]}: sine-space dimension {len(basis)}",
              file=sys.stderr)
    text = _rows_to_text(rows, ["m", "dimension", "basis", "max_residual"],
                         args.format or "csv")
    _emit(text, args.out)
    return 0


def cmd_list(_args):
    print("suites: " + " ".join(SUITE_NAMES + ("all",)))
    print("tabulate families: " + " ".join(TABULATE_FAMILIES))
    print("built-in recurrences: " + " ".join(sorted(BUILTIN_RECURRENCES)))
    return 0


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    handlers = {
        "verify": cmd_verify,
        "tabulate": cmd_tabulate,
        "sine-space": cmd_sine_space,
        "list": cmd_list,
    }
    try:
        return handlers[args.command](args)
    except (NotHypergroupError, ValueError, OSError, OverflowError,
            json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
