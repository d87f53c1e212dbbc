"""Zeros of the kernel polynomials and their empirical measure.

All n zeros of p_n lie simple in (0,1).  For small degrees they come from
the balanced companion matrix of the monic-normalized coefficients plus
Newton polish with compensated evaluation; past n = 12 the monomial-basis
root conditioning exhausts double precision, and construction, bracketing
(on the exact quantile grid of the limit zero distribution) and polishing
all switch to extended arithmetic.  Reported zeros are always doubles.

Zeros of the rotated star entries are rotations of this one zero set, so
they are never recomputed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import mpmath as mp
import numpy as np

from .poly import poly_eval
from .polynomials import DEGREE_CAP, DegreeCapError, base_poly

__all__ = ["ZeroSet", "ZeroFindingError", "find_zeros", "empirical_cdf", "stieltjes_empirical"]

# The companion eigenproblem of the monic coefficient vector is reliable only
# for small degrees here: the monomial-basis root condition numbers grow so
# fast that by n ~ 20 the eigenvalues of the (balanced) companion matrix stray
# far off the real axis.  Measured thresholds for the 1e-8 imaginary-part
# filter lie between 13 and 20 over the parameter grid, so the double path is
# used through n = 12 and everything above runs in extended precision.
_EXTENDED_FROM = 13
_RESIDUAL_TOL = 1e-10
_MIN_SEPARATION = 1e-12


class ZeroFindingError(RuntimeError):
    """Raised when the computed roots fail the count/location/residual
    invariants; carries the offending indices."""

    def __init__(self, message, indices=()):
        super().__init__(message)
        self.indices = tuple(indices)


@dataclass(frozen=True)
class ZeroSet:
    """Sorted simple zeros of p_n in (0,1) with evaluation residuals
    relative to the local term magnitude sum |c_k| x^k."""

    params: object
    n: int
    zeros: np.ndarray
    residuals: np.ndarray
    newton_iters: np.ndarray
    precision: str

    def __post_init__(self):
        self.zeros.setflags(write=False)
        self.residuals.setflags(write=False)
        self.newton_iters.setflags(write=False)


def _companion_roots(coeffs):
    mon = coeffs / coeffs[-1]
    n = len(mon) - 1
    comp = np.zeros((n, n))
    comp[0, :] = -mon[-2::-1]
    comp[1:, :-1] = np.eye(n - 1)
    return np.linalg.eigvals(comp)  # LAPACK balances internally


def _extract_real(raw, n):
    mask = np.abs(raw.imag) <= 1e-8 * (1.0 + np.abs(raw.real))
    real = np.sort(raw.real[mask])
    if real.size != n:
        bad = np.nonzero(~mask)[0]
        raise ZeroFindingError(
            f"expected {n} real roots, eigenvalue filter kept {real.size}",
            indices=bad,
        )
    return real


def _newton_double(p, dp, x0, max_iter=12):
    x = x0
    prev = abs(poly_eval(p, x))
    iters = 0
    for it in range(1, max_iter + 1):
        d = poly_eval(dp, x)
        if d == 0.0:
            break
        step = poly_eval(p, x) / d
        xn = x - step
        fn = abs(poly_eval(p, xn))
        iters = it
        if fn >= prev:  # machine-precision plateau
            if fn < prev * 4.0:
                x = xn if fn < prev else x
            break
        x, prev = xn, fn
        if step == 0.0:
            break
    return x, iters


def _mp_coeffs(n, params):
    r = params.r
    a = mp.mpf(params.alpha)
    b = mp.mpf(params.beta)
    out = []
    for k in range(n + 1):
        v = (
            mp.binomial(n, k)
            * mp.gamma(n + a + (b + k) / r + 1)
            / (mp.gamma(n + a + 1) * mp.gamma((b + k) / r + 1))
        )
        out.append(v if (n - k) % 2 == 0 else -v)
    return out


def _quantile_grid(n, r, per_root):
    # grid points at the quantiles of the limit zero distribution, whose CDF
    # inverts in closed form through the theta parametrization; the zeros are
    # asymptotically equidistributed with respect to it, so a few grid points
    # per root bracket every sign change even down to moderate n
    from .asymptotics import hatx_of_theta

    m = per_root * n
    qs = np.arange(1, m) / m
    theta = math.pi * (1.0 - qs) / (r + 1)
    pts = np.array([hatx_of_theta(t, r) ** (1.0 / r) for t in theta])
    lo = min(pts[0] * 0.25, 1e-8)
    hi = 1.0 - min((1.0 - pts[-1]) * 0.25, 1e-12)
    return np.concatenate([[lo], pts, [hi]])


def _find_zeros_extended(n, params):
    dps = max(50, 30 + int(1.2 * n))
    with mp.workdps(dps):
        c = _mp_coeffs(n, params)
        crev = c[::-1]
        dcrev = [c[k] * k for k in range(n, 0, -1)]
        absrev = [abs(v) for v in crev]

        brackets = None
        for per_root in (8, 16, 32, 64):
            grid = _quantile_grid(n, params.r, per_root)
            vals = [mp.polyval(crev, mp.mpf(float(g))) for g in grid]
            signs = [mp.sign(v) for v in vals]
            cand = [
                (float(grid[i]), float(grid[i + 1]))
                for i in range(len(grid) - 1)
                if signs[i] * signs[i + 1] < 0
            ]
            if len(cand) == n:
                brackets = cand
                break
        if brackets is None:
            raise ZeroFindingError(
                f"quantile grid failed to isolate {n} sign changes"
            )

        zeros = np.empty(n)
        residuals = np.empty(n)
        iters = np.empty(n, dtype=np.int64)
        for i, (lo, hi) in enumerate(brackets):
            a, b = mp.mpf(lo), mp.mpf(hi)
            fa = mp.polyval(crev, a)
            for _ in range(40):
                mid = (a + b) / 2
                fm = mp.polyval(crev, mid)
                if mp.sign(fm) == mp.sign(fa):
                    a, fa = mid, fm
                else:
                    b = mid
            x = (a + b) / 2
            it = 0
            for it in range(1, 7):
                step = mp.polyval(crev, x) / mp.polyval(dcrev, x)
                xn = x - step
                if not a <= xn <= b:
                    break
                x = xn
                if abs(step) < mp.mpf(10) ** (-dps + 6) * (1 + abs(x)):
                    break
            if mp.polyval(dcrev, x) == 0:
                raise ZeroFindingError(f"derivative vanishes at root {i}", indices=[i])
            scale = mp.polyval(absrev, abs(x))
            residuals[i] = float(abs(mp.polyval(crev, x)) / scale)
            zeros[i] = float(x)
            iters[i] = it
    return zeros, residuals, iters


def find_zeros(n, params, precision="auto"):
    """All n zeros of p_n(.; alpha, beta) in (0,1).

    ``precision``: "double" (companion matrix + Newton), "extended"
    (bracketed bisection + Newton at 50+ digits), or "auto" (extended from
    n = 13 on).  Violations of the zero-set invariants raise
    :class:`ZeroFindingError` rather than returning partial output.
    """
    if n < 1:
        raise ValueError("find_zeros needs n >= 1")
    if n > DEGREE_CAP:
        raise DegreeCapError(n)
    if precision == "auto":
        precision = "extended" if n >= _EXTENDED_FROM else "double"

    if precision == "extended":
        zeros, residuals, iters = _find_zeros_extended(n, params)
    elif precision == "double":
        p = base_poly(n, params)
        dp = p.derivative()
        start = _extract_real(_companion_roots(p.coeffs), n)
        absc = np.abs(p.coeffs)
        zeros = np.empty(n)
        residuals = np.empty(n)
        iters = np.empty(n, dtype=np.int64)
        for i, x0 in enumerate(start):
            x, it = _newton_double(p, dp, float(x0))
            zeros[i] = x
            iters[i] = it
            scale = float(np.dot(absc, np.abs(x) ** np.arange(len(absc))))
            residuals[i] = abs(poly_eval(p, x)) / scale
            if poly_eval(dp, x) == 0.0:
                raise ZeroFindingError(f"derivative vanishes at root {i}", indices=[i])
    else:
        raise ValueError(f"unknown precision mode {precision!r}")

    order = np.argsort(zeros)
    zeros, residuals, iters = zeros[order], residuals[order], iters[order]

    bad = [i for i, x in enumerate(zeros) if not 0.0 < x < 1.0]
    if bad:
        raise ZeroFindingError(f"roots outside (0,1) at {bad}", indices=bad)
    gaps = np.diff(zeros)
    bad = list(np.nonzero(gaps <= _MIN_SEPARATION)[0])
    if bad:
        raise ZeroFindingError(f"root separation below {_MIN_SEPARATION} at {bad}", indices=bad)
    bad = list(np.nonzero(residuals > _RESIDUAL_TOL)[0])
    if bad:
        raise ZeroFindingError(
            f"evaluation residuals above {_RESIDUAL_TOL} at {bad} "
            "(precision exhausted; try the extended mode)",
            indices=bad,
        )
    return ZeroSet(params, n, zeros, residuals, iters, precision)


def empirical_cdf(zs, x):
    """Fraction of zeros <= x: the CDF of the normalized zero counting measure."""
    return float(np.searchsorted(zs.zeros, x, side="right")) / zs.n


def stieltjes_empirical(zs, z):
    """(1/n) sum_j 1/(z - x_j), the Stieltjes transform of the zero measure;
    equals p_n'(z)/(n p_n(z)) away from [0,1]."""
    z = complex(z)
    d = z - zs.zeros
    if np.abs(d).min() < 1e-13:
        raise ValueError("z is numerically on top of a zero")
    return complex(np.mean(1.0 / d))
