"""Limiting zero distribution and its algebraic Stieltjes transform.

The zero counting measures of p_n converge to a measure on [0,1] whose
density has the trigonometric parametrization

    xhat = x^r = sin^(r+1)((r+1)t) / (c_r sin t sin^r(r t)),   0 < t < pi/(r+1),
    w(xhat) = (r+1)/(pi |xhat'(t)|),      u(x) = r x^(r-1) w(x^r),

with c_r = (r+1)^(r+1)/r^r.  Because xhat(t) is strictly decreasing, the
mass in t is exactly uniform, which gives the closed CDF
F(x) = 1 - (r+1) t(x^r)/pi used throughout (and validated against
quadrature in the tests).

The Stieltjes transform S of the limit measure satisfies

    z S^(r+1) - (z S + r)(z S - 1)^r = 0,

equivalently W^(r+1) - (r+1) z^r W + r z^r = 0 with W = zS/(zS-1).  For
r = 2 the three solution branches are produced with Cardano's formula and
labeled by analytic continuation from the real far field, where
z S_1 -> -2 and z S_2, z S_3 -> 1; branch 2 is the Stieltjes transform and
its boundary values recover the density via Stieltjes-Perron inversion.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations

import numpy as np

__all__ = [
    "hatx_of_theta",
    "theta_of_hatx",
    "w_density",
    "u_density",
    "limit_cdf",
    "u_closed_r2",
    "DensityCurve",
    "density_curve",
    "cubic_branches_r2",
    "solve_stieltjes_boundary",
    "perron_density",
    "algebraic_residual",
    "algebraic_residual_w",
    "stieltjes_limit",
    "ks_distance",
    "endpoint_exponents",
]


def _theta_max(r):
    return math.pi / (r + 1)


def _c_r(r):
    return (r + 1.0) ** (r + 1) / r**r


def _sin_top(theta, r):
    # sin((r+1)theta) evaluated through the distance to the right endpoint,
    # where (r+1)theta is a cancellation-prone sliver below pi
    if theta > 0.5 * _theta_max(r):
        return math.sin((r + 1) * (_theta_max(r) - theta))
    return math.sin((r + 1) * theta)


def hatx_of_theta(theta, r):
    """xhat(t): strictly decreasing from 1 (t -> 0) to 0 (t -> pi/(r+1))."""
    if not 0.0 < theta < _theta_max(r):
        raise ValueError("theta must lie strictly inside (0, pi/(r+1))")
    return _sin_top(theta, r) ** (r + 1) / (
        _c_r(r) * math.sin(theta) * math.sin(r * theta) ** r
    )


def _log_hatx_of_delta(delta, r):
    # log xhat at theta = theta_max - delta; accurate for tiny delta
    tm = _theta_max(r)
    th = tm - delta
    return (
        (r + 1) * math.log(math.sin((r + 1) * delta))
        - math.log(math.sin(th))
        - r * math.log(math.sin(r * th))
        - math.log(_c_r(r))
    )


def _dlog_hatx(theta, r):
    # d log xhat / d theta = (r+1)^2 cot((r+1)t) - cot t - r^2 cot(rt);
    # near the right endpoint, cot((r+1)t) = -cot((r+1)(tm-t)) keeps precision
    tm = _theta_max(r)
    if theta > 0.5 * tm:
        top = -((r + 1) ** 2) / math.tan((r + 1) * (tm - theta))
    else:
        top = (r + 1) ** 2 / math.tan((r + 1) * theta)
    return top - 1.0 / math.tan(theta) - r**2 / math.tan(r * theta)


@lru_cache(maxsize=32)
def _check_monotone(r):
    # the inversion below assumes xhat is strictly decreasing; probe a fine
    # grid once per r and fail loudly if that ever breaks
    tm = _theta_max(r)
    grid = np.linspace(tm * 1e-4, tm * (1.0 - 1e-4), 10_000)
    vals = np.array([hatx_of_theta(t, r) for t in grid])
    if not np.all(np.diff(vals) < 0.0):
        raise RuntimeError(f"hatx(theta) is not strictly decreasing for r={r}")
    return True


def theta_of_hatx(xh, r):
    """The unique t in (0, pi/(r+1)) with xhat(t) = xh, for xh in (0,1).

    Bracketed bisection plus Newton polish; solved in the distance to the
    right endpoint (log form) for small xh, in t directly otherwise.
    """
    if not 0.0 < xh < 1.0:
        raise ValueError("xhat must lie strictly inside (0,1)")
    _check_monotone(r)
    tm = _theta_max(r)

    if xh <= 0.5:
        # delta-space: log xhat is increasing in delta = tm - theta
        target = math.log(xh)
        k_r = (r + 1.0) ** (r + 1) / (_c_r(r) * math.sin(tm) * math.sin(r * tm) ** r)
        delta = (xh / k_r) ** (1.0 / (r + 1))  # leading-order inverse
        lo, hi = delta * 0.5, min(delta * 2.0, tm * 0.5)
        flo = _log_hatx_of_delta(lo, r) - target
        fhi = _log_hatx_of_delta(hi, r) - target
        while flo > 0.0:
            lo *= 0.5
            flo = _log_hatx_of_delta(lo, r) - target
        while fhi < 0.0:
            hi = min(hi * 2.0, tm * (1.0 - 1e-12))
            fhi = _log_hatx_of_delta(hi, r) - target
            if hi >= tm * (1.0 - 1e-12) and fhi < 0.0:
                break
        for _ in range(90):
            mid = 0.5 * (lo + hi)
            if _log_hatx_of_delta(mid, r) < target:
                lo = mid
            else:
                hi = mid
        delta = 0.5 * (lo + hi)
        for _ in range(3):
            g = _log_hatx_of_delta(delta, r) - target
            dg = -_dlog_hatx(tm - delta, r)
            step = g / dg
            cand = delta - step
            if lo / 2 < cand < hi * 2:
                delta = cand
        return tm - delta

    lo, hi = tm * 1e-9, tm * 0.5
    while hatx_of_theta(hi, r) > xh:
        hi = 0.5 * (hi + tm)
    for _ in range(90):
        mid = 0.5 * (lo + hi)
        if hatx_of_theta(mid, r) > xh:
            lo = mid
        else:
            hi = mid
    theta = 0.5 * (lo + hi)
    for _ in range(3):
        f = hatx_of_theta(theta, r) - xh
        df = hatx_of_theta(theta, r) * _dlog_hatx(theta, r)
        cand = theta - f / df
        if lo / 2 < cand < 2 * hi:
            theta = cand
    return theta


def _w_at_theta(theta, r, xh=None):
    if xh is None:
        xh = hatx_of_theta(theta, r)
    st = _sin_top(theta, r)
    s1, sr = math.sin(theta), math.sin(r * theta)
    denom = abs((r + 1) * sr - r * cmath.exp(1j * theta) * st) ** 2
    return (r + 1) / (math.pi * xh) * s1 * sr * st / denom


def w_density(xh, r):
    """Density of the pushed-forward measure in xhat = x^r, on (0,1)."""
    theta = theta_of_hatx(xh, r)
    return _w_at_theta(theta, r, xh)


def u_density(x, r):
    """Limit density of the zero distribution: u(x) = r x^(r-1) w(x^r)."""
    if not 0.0 < x < 1.0:
        raise ValueError("x must lie strictly inside (0,1)")
    xh = x**r
    if xh == 0.0:
        raise ValueError("x^r underflows; too close to the endpoint")
    return r * x ** (r - 1) * w_density(xh, r)


def limit_cdf(x, r):
    """F(x) = 1 - (r+1) theta(x^r)/pi, the exact CDF of the limit measure."""
    if x <= 0.0:
        return 0.0
    if x >= 1.0:
        return 1.0
    xh = x**r
    if xh == 0.0:
        return 0.0
    return 1.0 - (r + 1) * theta_of_hatx(xh, r) / math.pi


def u_closed_r2(x):
    """Closed radical form of the r=2 limit density.

    1 - sqrt(1-x^2) is evaluated as x^2/(1 + sqrt(1-x^2)) so the cube root
    keeps full precision near x = 0.
    """
    if not 0.0 < x < 1.0:
        raise ValueError("x must lie strictly inside (0,1)")
    s = math.sqrt((1.0 - x) * (1.0 + x))
    plus = (1.0 + s) ** (1.0 / 3.0)
    minus = (x * x / (1.0 + s)) ** (1.0 / 3.0)
    return math.sqrt(3.0) / (2.0 * math.pi) * (plus + minus) / (x ** (1.0 / 3.0) * s)


@dataclass(frozen=True)
class DensityCurve:
    """Sampled limit density: increasing x with u and F columns, plus the
    generating theta grid."""

    r: int
    x: np.ndarray
    u: np.ndarray
    F: np.ndarray
    theta: np.ndarray


def density_curve(r, samples, spacing="theta"):
    """Sample (x, u_r(x), F_r(x)).

    ``spacing="theta"`` places samples uniformly in the parameter, which
    concentrates x-points near both endpoints (the right grid for plotting a
    density with endpoint singularities); ``spacing="x"`` uses the interior
    grid x_i = i/(samples+1).
    """
    tm = _theta_max(r)
    if spacing == "theta":
        theta = tm * np.arange(samples, 0, -1) / (samples + 1.0)
        xh = np.array([hatx_of_theta(t, r) for t in theta])
        x = xh ** (1.0 / r)
        u = np.array(
            [r * xi ** (r - 1) * _w_at_theta(t, r, xhi) for xi, t, xhi in zip(x, theta, xh)]
        )
        F = 1.0 - (r + 1) * theta / math.pi
    elif spacing == "x":
        x = np.arange(1, samples + 1) / (samples + 1.0)
        theta = np.array([theta_of_hatx(xi**r, r) for xi in x])
        u = np.array(
            [r * xi ** (r - 1) * _w_at_theta(t, r, xi**r) for xi, t in zip(x, theta)]
        )
        F = 1.0 - (r + 1) * theta / math.pi
    else:
        raise ValueError(f"unknown spacing {spacing!r}")
    return DensityCurve(r, x, u, F, theta)


# ---------------------------------------------------------------------------
# algebraic Stieltjes equation
# ---------------------------------------------------------------------------


def _cardano_r2(z):
    # roots of z(1-z^2) S^3 + 3z S - 2 = 0 for one fixed z not in {0, 1, -1}
    a = z * (1.0 - z * z)
    if a == 0.0:
        raise ValueError("z is a branch point of the cubic")
    s = 1.0 / cmath.sqrt(1.0 - z * z)
    t1 = (1.0 + s) / a
    t2 = (1.0 - s) / a
    t = t1 if abs(t1) >= abs(t2) else t2
    u = t ** (1.0 / 3.0)
    v = -1.0 / ((1.0 - z * z) * u)
    zeta = complex(-0.5, 0.5 * math.sqrt(3.0))
    return (u + v, zeta * u + zeta.conjugate() * v, zeta.conjugate() * u + zeta * v)


def _match_roots(prev, new):
    # best bijection prev -> new; None when the assignment is not clearly
    # separated (step too large for continuation)
    best, best_cost = None, math.inf
    for perm in permutations(range(3)):
        cost = max(abs(prev[i] - new[perm[i]]) for i in range(3))
        if cost < best_cost:
            best, best_cost = perm, cost
    gaps = [abs(new[i] - new[j]) for i in range(3) for j in range(i + 1, 3)]
    if best_cost > 0.35 * min(gaps):
        return None
    return best


# outside this radius every branch is single-valued (the branch points 0, +1,
# -1 all lie in the unit disk) and the 1/z expansions label the roots directly
_R_FAR = 8.0


def _label_far(z, roots):
    # z S_1 -> -2; the two branches with zS -> 1 split as
    # z(zS - 1) = +-3^(-1/2) + O(1/z), positive for the Stieltjes branch
    i1 = min(range(3), key=lambda i: abs(z * roots[i] + 2.0))
    rest = [i for i in range(3) if i != i1]
    i2 = max(rest, key=lambda i: (z * (z * roots[i] - 1.0)).real)
    i3 = next(i for i in rest if i != i2)
    return [roots[i1], roots[i2], roots[i3]]


def _continuation_path(z):
    # inward waypoints from the labeling radius: a radial leg at a safe
    # angle, then a short arc; the angle is nudged only when the radial leg
    # would cross a branch point at +-1
    rho, phi = abs(z), cmath.phase(z)
    phi_safe = phi
    if rho < 1.0 and abs(math.sin(phi)) < 1e-9:
        if abs(phi) < 0.5:
            phi_safe = 1e-3 if z.imag >= 0.0 else -1e-3
        else:
            phi_safe = (math.pi - 1e-3) if z.imag >= 0.0 else -(math.pi - 1e-3)

    pts = []
    nrad = max(3, int(math.log(_R_FAR / max(rho, 1e-12)) / 0.2) + 1)
    for i in range(1, nrad + 1):
        ri = _R_FAR * (rho / _R_FAR) ** (i / nrad)
        pts.append(ri * cmath.exp(1j * phi_safe))
    if phi_safe != phi:
        for i in range(1, 6):
            pts.append(rho * cmath.exp(1j * (phi_safe + (phi - phi_safe) * i / 5)))
    pts.append(z)
    return pts


def cubic_branches_r2(z):
    """The three branches (S_1, S_2, S_3) of the r=2 cubic at z.

    Labels follow the far-field behavior z S_1 -> -2 and z S_2, z S_3 -> 1,
    with S_2 the Stieltjes branch: analytic off [0,1], and with negative
    imaginary part in the upper half plane.  For |z| > 8 the labels come
    straight from the 1/z expansions (all branches are single-valued there);
    closer in they are carried along a continuation path from that radius,
    so they stay consistent arbitrarily close to the cut.  For real z in
    [0,1] the returned values are the upper-boundary limits.  Accuracy
    degrades near the branch points {0, 1, -1}.
    """
    z = complex(z)
    if abs(z) < 1e-9 or abs(z - 1.0) < 1e-9 or abs(z + 1.0) < 1e-9:
        raise ValueError("z coincides with a branch point of the cubic")
    if abs(z) >= _R_FAR:
        return tuple(_label_far(z, list(_cardano_r2(z))))

    path = _continuation_path(z)
    start = _R_FAR * cmath.exp(1j * cmath.phase(path[0]))
    labeled = _label_far(start, list(_cardano_r2(start)))

    prev_pt = start
    pending = list(reversed(path))
    depth = 0
    while pending:
        pt = pending.pop()
        new = list(_cardano_r2(pt))
        perm = _match_roots(labeled, new)
        if perm is None:
            depth += 1
            if depth > 200:
                raise RuntimeError("branch continuation failed to separate roots")
            pending.append(pt)
            pending.append(0.5 * (prev_pt + pt))
            continue
        labeled = [new[perm[0]], new[perm[1]], new[perm[2]]]
        prev_pt = pt
    return tuple(labeled)


def _w_poly_roots(z, r):
    # W^(r+1) - (r+1) z^r W + r z^r = 0
    c = np.zeros(r + 2, dtype=complex)
    c[0] = 1.0
    c[-2] = -(r + 1) * z**r
    c[-1] = r * z**r
    return np.roots(c)


def solve_stieltjes_boundary(x, eps, r):
    """Stieltjes branch of the algebraic equation at z = x + i*eps.

    Selection happens in the W variable: near the cut the physical branch is
    the root with argument inside the window (0, pi/(r+1)); the remaining
    roots sit in disjoint angular windows, so the choice is unambiguous.
    """
    if not 0.0 < x < 1.0:
        raise ValueError("x must lie inside the support (0,1)")
    z = complex(x, eps)
    ws = _w_poly_roots(z, r)
    window = [w for w in ws if 0.0 < cmath.phase(w) < _theta_max(r)]
    if len(window) != 1:
        raise RuntimeError(
            f"expected exactly one W-root in the angular window, got {len(window)}"
        )
    w = window[0]
    return w / (z * (w - 1.0))


def perron_density(x, r, eps=1e-3):
    """Density recovered from the algebraic solution by Stieltjes-Perron
    inversion with Richardson extrapolation over eps, eps/2, eps/4."""
    f = [-solve_stieltjes_boundary(x, e, r).imag / math.pi for e in (eps, eps / 2, eps / 4)]
    return (f[0] - 6.0 * f[1] + 8.0 * f[2]) / 3.0


def algebraic_residual(z, S, r):
    """|z S^(r+1) - (zS + r)(zS - 1)^r| scaled by the largest term."""
    z, S = complex(z), complex(S)
    t1 = z * S ** (r + 1)
    t2 = -(z * S + r) * (z * S - 1.0) ** r
    den = max(abs(t1), abs(t2), 1e-300)
    return abs(t1 + t2) / den


def algebraic_residual_w(z, S, r):
    """Residual of the transformed equation W^(r+1) - (r+1) z^r W + r z^r,
    with W = zS/(zS-1), scaled by the largest term."""
    z, S = complex(z), complex(S)
    w = z * S / (z * S - 1.0)
    t1 = w ** (r + 1)
    t2 = -(r + 1) * z**r * w
    t3 = r * z**r
    den = max(abs(t1), abs(t2), abs(t3), 1e-300)
    return abs(t1 + t2 + t3) / den


def stieltjes_limit(z, r, rtol=1e-11):
    """S(z) = int u_r(x)/(z-x) dx by quadrature in the theta parameter,
    where the measure is exactly uniform: (r+1)/pi dtheta."""
    from scipy.integrate import quad

    z = complex(z)
    tm = _theta_max(r)

    def xval(t):
        return hatx_of_theta(t, r) ** (1.0 / r)

    re = quad(lambda t: ((r + 1) / math.pi) * (1.0 / (z - xval(t))).real, 0.0, tm,
              epsabs=0.0, epsrel=rtol, limit=200)[0]
    im = quad(lambda t: ((r + 1) / math.pi) * (1.0 / (z - xval(t))).imag, 0.0, tm,
              epsabs=0.0, epsrel=rtol, limit=200)[0]
    return complex(re, im)


def ks_distance(zs, r):
    """Kolmogorov-Smirnov distance between the empirical zero CDF and the
    limit CDF, maximized over the jump points."""
    n = zs.n
    worst = 0.0
    for i, x in enumerate(zs.zeros, start=1):
        fx = limit_cdf(x, r)
        worst = max(worst, abs(i / n - fx), abs(fx - (i - 1) / n))
    return worst


def endpoint_exponents(r, npts=25):
    """Fitted log-log slopes of u_r at the endpoints.

    Left: regression of log u against log x over x in [1e-6, 1e-3].
    Right: regression of log u against log(1 - x^r) over 1-x^r in the same
    window.  The limits are -1/(r+1) and -1/2.
    """
    xs = np.geomspace(1e-6, 1e-3, npts)
    ul = np.array([u_density(x, r) for x in xs])
    s0 = np.polyfit(np.log(xs), np.log(ul), 1)[0]

    ts = np.geomspace(1e-6, 1e-3, npts)
    xr = (1.0 - ts) ** (1.0 / r)
    ur = np.array([u_density(x, r) for x in xr])
    s1 = np.polyfit(np.log(ts), np.log(ur), 1)[0]
    return float(s0), float(s1)
