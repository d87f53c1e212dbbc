"""Command-line surface: compute, verify, and export.

Subcommands
-----------
coeffs      coefficient tables of the base family or a type I vector
verify      residual suites (orthogonality, recurrence, ode, lowering,
            raising, zeros) over n = 1..n-max
zeros       sorted zeros of the base polynomial
recurrence  nearest-neighbor coefficient table with the n -> inf limits
density     limit density u_r and CDF F_r on an interior x grid
figure2     the five density curves r = 1..5 as CSV plus a standalone SVG

Conventions: data on stdout, diagnostics on stderr; CSV has a mandatory
header (`k,re,im` for coefficients, `x,u,F` for curves); floats carry 17
significant digits and round-trip exactly; `--format json` wraps the payload
in a record with schema_version "1".  Exit codes: 0 ok, 1 verification
failure, 2 usage error, 3 degree-cap/resource error.
"""

from __future__ import annotations

import argparse
import sys

import numpy as np

from .asymptotics import density_curve
from .operators import lowering_check, ode_coeffs, ode_residual, raising_check
from .orthogonality import verify_type1
from .polynomials import (
    DegreeCapError,
    Params,
    base_poly,
    type1_diagonal,
    type1_down,
    type1_up,
)
from .recurrence import coeff_a, coeff_b, limit_a, limit_b, recurrence_residual
from .zeros import ZeroFindingError, find_zeros

_EXIT_OK = 0
_EXIT_VERIFY = 1
_EXIT_USAGE = 2
_EXIT_CAP = 3


def _fmt(v):
    return f"{v:.17g}"


def _to_json(obj):
    # deterministic JSON with 17-significant-digit floats (the stdlib encoder
    # cannot be told how to print floats)
    if isinstance(obj, dict):
        inner = ",".join(f"{_to_json(k)}:{_to_json(v)}" for k, v in obj.items())
        return "{" + inner + "}"
    if isinstance(obj, (list, tuple)):
        return "[" + ",".join(_to_json(v) for v in obj) + "]"
    if isinstance(obj, bool):
        return "true" if obj else "false"
    if isinstance(obj, float):
        return _fmt(obj)
    if isinstance(obj, int):
        return str(obj)
    if obj is None:
        return "null"
    return '"' + str(obj).replace("\\", "\\\\").replace('"', '\\"') + '"'


def _emit_record(args, payload, out):
    record = {
        "schema_version": "1",
        "command": {k: v for k, v in sorted(vars(args).items()) if k != "func"},
        "payload": payload,
    }
    out.write(_to_json(record) + "\n")


def _usage_fail(msg):
    print(f"error: {msg}", file=sys.stderr)
    return _EXIT_USAGE


def _params_or_none(args):
    if args.r < 1:
        return None, _usage_fail("--r must be an integer >= 1")
    if not args.alpha > -1.0:
        return None, _usage_fail("--alpha must be > -1")
    if not args.beta > -1.0:
        return None, _usage_fail("--beta must be > -1")
    return Params(args.r, args.alpha, args.beta), None


# ---------------------------------------------------------------------------
# coeffs
# ---------------------------------------------------------------------------


def _cmd_coeffs(args, out=None):
    out = out if out is not None else sys.stdout
    params, err = _params_or_none(args)
    if err is not None:
        return err
    fam = args.family
    if fam in ("up", "down") and args.k is None:
        return _usage_fail(f"--family {fam} requires --k (ray index 1..r)")
    if fam in ("up", "down") and not 1 <= args.k <= args.r:
        return _usage_fail(f"--k must lie in 1..{args.r}")
    if fam in ("base", "diag") and args.k is not None:
        return _usage_fail(f"--family {fam} does not take --k")
    if fam == "base" and args.n < 0:
        return _usage_fail("--n must be >= 0 for the base family")
    if fam == "diag" and args.n < 1:
        return _usage_fail("--n must be >= 1 for the diagonal family")
    if fam == "down" and args.n < 1:
        return _usage_fail("--n must be >= 1 for the down family")

    try:
        if fam == "base":
            p = base_poly(args.n, params)
            cc = np.asarray(p.coeffs, dtype=complex)
            rows = [(k, float(c.real), float(c.imag)) for k, c in enumerate(cc)]
            if args.format == "csv":
                out.write("k,re,im\n")
                for k, re, im in rows:
                    out.write(f"{k},{_fmt(re)},{_fmt(im)}\n")
            else:
                payload = {
                    "kind": "coefficients",
                    "columns": ["k", "re", "im"],
                    "rows": [[k, re, im] for k, re, im in rows],
                }
                _emit_record(args, payload, out)
            return _EXIT_OK

        builder = {"diag": type1_diagonal, "up": type1_up, "down": type1_down}[fam]
        v = builder(args.n, params) if fam == "diag" else builder(args.n, args.k, params)
        rows = []
        for j, p in enumerate(v.polys, start=1):
            for k, c in enumerate(np.asarray(p.coeffs, dtype=complex)):
                rows.append((j, k, float(c.real), float(c.imag)))
        if args.format == "csv":
            out.write("ray,k,re,im\n")
            for j, k, re, im in rows:
                out.write(f"{j},{k},{_fmt(re)},{_fmt(im)}\n")
        else:
            payload = {
                "kind": "coefficients",
                "columns": ["ray", "k", "re", "im"],
                "rows": [list(row) for row in rows],
            }
            _emit_record(args, payload, out)
        return _EXIT_OK
    except DegreeCapError as e:
        print(f"error: {e}", file=sys.stderr)
        return _EXIT_CAP


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------


def _ortho_residual_level(n, params, tol):
    worst = 0.0
    reports = [verify_type1(type1_diagonal(n, params), tol)]
    for k in range(1, params.r + 1):
        reports.append(verify_type1(type1_up(n, k, params), tol))
        if params.r * n - 1 >= 1:
            reports.append(verify_type1(type1_down(n, k, params), tol))
    for rep in reports:
        worst = max(worst, rep.max_ortho_residual, rep.norm_residual)
    return worst


def _cmd_verify(args, out=None):
    out = out if out is not None else sys.stdout
    params, err = _params_or_none(args)
    if err is not None:
        return err
    if args.n_max < 1:
        return _usage_fail("--n-max must be >= 1")
    suite = args.suite
    if suite in ("recurrence",) and params.r < 2:
        return _usage_fail("the recurrence suite needs --r >= 2")
    if suite == "raising" and not (
        params.alpha > params.r - 1 and params.beta > params.r - 1
    ):
        return _usage_fail("the raising suite needs alpha, beta > r-1")

    def residual_for(n):
        if suite == "orthogonality":
            return _ortho_residual_level(n, params, args.tol)
        if suite == "recurrence":
            return max(
                recurrence_residual(n, k, params) for k in range(1, params.r + 1)
            )
        if suite == "ode":
            return ode_residual(ode_coeffs(n, params))
        if suite == "lowering":
            return lowering_check(n, params)
        if suite == "raising":
            return raising_check(n, params)
        if suite == "zeros":
            try:
                return float(find_zeros(n, params).residuals.max())
            except ZeroFindingError as e:
                print(f"n={n}: {e}", file=sys.stderr)
                return float("inf")
        raise AssertionError(suite)

    all_pass = True
    try:
        for n in range(1, args.n_max + 1):
            res = residual_for(n)
            ok = res <= args.tol
            all_pass = all_pass and ok
            out.write(
                f"suite={suite} n={n} worst_residual={_fmt(res)} "
                f"{'pass' if ok else 'FAIL'}\n"
            )
    except DegreeCapError as e:
        print(f"error: {e}", file=sys.stderr)
        return _EXIT_CAP
    out.write(f"suite={suite} overall={'pass' if all_pass else 'FAIL'}\n")
    return _EXIT_OK if all_pass else _EXIT_VERIFY


# ---------------------------------------------------------------------------
# zeros / recurrence / density / figure2
# ---------------------------------------------------------------------------


def _cmd_zeros(args, out=None):
    out = out if out is not None else sys.stdout
    params, err = _params_or_none(args)
    if err is not None:
        return err
    if args.n < 1:
        return _usage_fail("--n must be >= 1")
    try:
        zs = find_zeros(args.n, params)
    except DegreeCapError as e:
        print(f"error: {e}", file=sys.stderr)
        return _EXIT_CAP
    except ZeroFindingError as e:
        print(f"error: {e}", file=sys.stderr)
        return _EXIT_VERIFY
    if args.format == "csv":
        out.write("i,x\n")
        for i, x in enumerate(zs.zeros, start=1):
            out.write(f"{i},{_fmt(float(x))}\n")
    else:
        payload = {
            "kind": "zeros",
            "n": zs.n,
            "precision": zs.precision,
            "zeros": [float(x) for x in zs.zeros],
        }
        _emit_record(args, payload, out)
    return _EXIT_OK


def _cmd_recurrence(args, out=None):
    out = out if out is not None else sys.stdout
    params, err = _params_or_none(args)
    if err is not None:
        return err
    if params.r < 2:
        return _usage_fail("the recurrence table needs --r >= 2 (b is undefined at r=1)")
    if args.n_max < 1:
        return _usage_fail("--n-max must be >= 1")
    la, lb = limit_a(params.r), limit_b(params.r)
    rows = [
        (n, coeff_a(n, params), coeff_b(n, params), la, lb)
        for n in range(1, args.n_max + 1)
    ]
    if args.format == "csv":
        out.write("n,a,b,a_limit,b_limit\n")
        for n, a, b, la_, lb_ in rows:
            out.write(f"{n},{_fmt(a)},{_fmt(b)},{_fmt(la_)},{_fmt(lb_)}\n")
    else:
        payload = {
            "kind": "table",
            "columns": ["n", "a", "b", "a_limit", "b_limit"],
            "rows": [list(row) for row in rows],
        }
        _emit_record(args, payload, out)
    return _EXIT_OK


def _cmd_density(args, out=None):
    out = out if out is not None else sys.stdout
    if args.r < 1:
        return _usage_fail("--r must be an integer >= 1")
    if args.samples < 1:
        return _usage_fail("--samples must be >= 1")
    curve = density_curve(args.r, args.samples, spacing="x")
    if args.format == "csv":
        out.write("x,u,F\n")
        for x, u, F in zip(curve.x, curve.u, curve.F):
            out.write(f"{_fmt(float(x))},{_fmt(float(u))},{_fmt(float(F))}\n")
    else:
        payload = {
            "kind": "curve",
            "columns": ["x", "u", "F"],
            "rows": [[float(x), float(u), float(F)] for x, u, F in zip(curve.x, curve.u, curve.F)],
        }
        _emit_record(args, payload, out)
    return _EXIT_OK


_SVG_STROKES = ("#000000", "#c22222", "#2255cc", "#1f8f4d", "#8844bb")


def _svg_figure(curves, width=640, height=440, ymax=3.0):
    # hand-emitted polyline SVG: axes, five clipped curves, small legend
    ml, mr, mt, mb = 56.0, 16.0, 16.0, 44.0
    pw, ph = width - ml - mr, height - mt - mb

    def sx(x):
        return ml + pw * x

    def sy(y):
        return mt + ph * (1.0 - min(y, ymax) / ymax)

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        f'<rect x="0" y="0" width="{width}" height="{height}" fill="#ffffff"/>',
        f'<line x1="{_fmt(ml)}" y1="{_fmt(mt + ph)}" x2="{_fmt(ml + pw)}" '
        f'y2="{_fmt(mt + ph)}" stroke="#333333" stroke-width="1"/>',
        f'<line x1="{_fmt(ml)}" y1="{_fmt(mt)}" x2="{_fmt(ml)}" '
        f'y2="{_fmt(mt + ph)}" stroke="#333333" stroke-width="1"/>',
    ]
    for tick in (0.0, 0.25, 0.5, 0.75, 1.0):
        parts.append(
            f'<text x="{_fmt(sx(tick))}" y="{_fmt(mt + ph + 18.0)}" font-size="11" '
            f'text-anchor="middle" font-family="sans-serif">{tick:g}</text>'
        )
    for tick in (0.0, 1.0, 2.0, 3.0):
        parts.append(
            f'<text x="{_fmt(ml - 8.0)}" y="{_fmt(sy(tick) + 4.0)}" font-size="11" '
            f'text-anchor="end" font-family="sans-serif">{tick:g}</text>'
        )
    for i, curve in enumerate(curves):
        pts = " ".join(
            f"{_fmt(sx(float(x)))},{_fmt(sy(float(u)))}"
            for x, u in zip(curve.x, curve.u)
        )
        parts.append(
            f'<polyline points="{pts}" fill="none" stroke="{_SVG_STROKES[i]}" '
            f'stroke-width="1.4"/>'
        )
        parts.append(
            f'<text x="{_fmt(ml + pw - 60.0)}" y="{_fmt(mt + 16.0 + 15.0 * i)}" '
            f'font-size="12" font-family="sans-serif" fill="{_SVG_STROKES[i]}">'
            f"r = {curve.r}</text>"
        )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def _cmd_figure2(args, out=None):
    out = out if out is not None else sys.stdout
    if args.samples < 10:
        return _usage_fail("--samples must be >= 10")
    curves = [density_curve(r, args.samples, spacing="theta") for r in range(1, 6)]
    out.write("r,x,u,F\n")
    for curve in curves:
        for x, u, F in zip(curve.x, curve.u, curve.F):
            out.write(f"{curve.r},{_fmt(float(x))},{_fmt(float(u))},{_fmt(float(F))}\n")
    if args.svg:
        with open(args.svg, "w", encoding="utf-8") as fh:
            fh.write(_svg_figure(curves))
        print(f"wrote {args.svg}", file=sys.stderr)
    return _EXIT_OK


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------


def build_parser():
    ap = argparse.ArgumentParser(
        prog="angelesco",
        description="Type I multiple orthogonal polynomials on the r-star.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    def add_common(p, beta_too=True):
        p.add_argument("--r", type=int, required=True, help="ray count, >= 1")
        p.add_argument("--alpha", type=float, default=0.0)
        p.add_argument("--beta", type=float, default=0.0)

    p = sub.add_parser("coeffs", help="coefficient tables")
    add_common(p)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--family", choices=("base", "diag", "up", "down"), default="base")
    p.add_argument("--k", type=int, default=None, help="ray index for up/down")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.set_defaults(func=_cmd_coeffs)

    p = sub.add_parser("verify", help="residual verification suites")
    p.add_argument(
        "--suite",
        choices=("orthogonality", "recurrence", "ode", "lowering", "raising", "zeros"),
        required=True,
    )
    add_common(p)
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--tol", type=float, default=1e-9)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("zeros", help="zeros of the base polynomial")
    add_common(p)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.set_defaults(func=_cmd_zeros)

    p = sub.add_parser("recurrence", help="recurrence coefficient table")
    add_common(p)
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.set_defaults(func=_cmd_recurrence)

    p = sub.add_parser("density", help="limit density curve")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--samples", type=int, default=99)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.set_defaults(func=_cmd_density)

    p = sub.add_parser("figure2", help="five density curves r=1..5 (CSV + SVG)")
    p.add_argument("--samples", type=int, default=2001, help="points per curve")
    p.add_argument("--svg", default="figure2.svg", help="SVG output path ('' to skip)")
    p.set_defaults(func=_cmd_figure2)

    return ap


def main(argv=None):
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as e:
        # argparse exits 2 on usage errors already
        return int(e.code) if e.code is not None else _EXIT_USAGE
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
