"""Nearest-neighbor recurrence coefficients near the diagonal.

The star recurrence, valid for every ray entry j and every ray k,

    x A_n(x) = A_(n-e_k)(x) + b_n,k A_n(x) + sum_l a_n,l A_(n+e_l)(x),

has ray-resolved coefficients a_n,l = a(n) omega^(2(l-1)) and
b_n,k = b(n) omega^(k-1) built from two positive scalar profiles.  Only
this star parametrization is exposed; the classical two-interval (r=2)
coefficient set of the real-line convention is provided as a reference
translation (see ``r2_recurrence_a`` / ``r2_recurrence_c``).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .numerics import gamma_ratio, root_of_unity
from .poly import poly_eval
from .polynomials import type1_diagonal, type1_down, type1_up

__all__ = [
    "RecurrenceRow",
    "coeff_a",
    "coeff_b",
    "limit_a",
    "limit_b",
    "recurrence_row",
    "recurrence_residual",
    "r2_recurrence_a",
    "r2_recurrence_c",
]


def coeff_a(n, params):
    """Scalar profile a(n) of the up-neighbor coefficients at level n."""
    if n < 1:
        raise ValueError("coeff_a needs n >= 1")
    r, a, b = params.r, params.alpha, params.beta
    if n == 1:
        # at n = 1 the linear factor r+r*alpha+beta equals r times the
        # gamma argument 1+alpha+beta/r, which can sit on a pole; fusing
        # x*Gamma(x) = Gamma(x+1) keeps the profile finite there
        pre = (1.0 + a) / ((r + 1 + r * a + b) * (r + 2 + r * a + b))
        return pre * gamma_ratio(
            [(b + 2.0) / r, 2.0 + a + b / r],
            [b / r + 1.0, 1.0 + a + (b + 2.0) / r],
        )
    pre = (
        n
        * (n + a)
        * (r * n + r * a + b)
        / (r * (r * n + n + r * a + b) * (r * n + n + r * a + b + 1.0))
    )
    gr = gamma_ratio(
        [(b + n + 1.0) / r, n + a + (b + n - 1.0) / r],
        [(b + n - 1.0) / r + 1.0, n + a + (b + n + 1.0) / r],
    )
    return pre * gr


def coeff_b(n, params):
    """Scalar profile b(n) of the down-neighbor coefficient at level n.

    Defined for r > 1 only: the star parametrization does not cover r = 1
    (that case is plain Jacobi on [0,1] in a different normalization).
    """
    if n < 1:
        raise ValueError("coeff_b needs n >= 1")
    r, a, b = params.r, params.alpha, params.beta
    if r < 2:
        raise ValueError("coeff_b is defined for r >= 2 only")
    if n == 1:
        # same fusion as in coeff_a: both linear factors pair with gamma
        # arguments that may degenerate at n = 1
        return gamma_ratio(
            [2.0 + a + (b - 1.0) / r, b / r + 1.0],
            [2.0 + a + b / r, (b - 1.0) / r + 1.0],
        )
    pre = (n + a + (b - 1.0) / r) / (n + a + (n + b - 1.0) / r)
    gr = gamma_ratio(
        [n + a + (n + b - 2.0) / r, (n + b - 1.0) / r + 1.0],
        [n + a + (n + b - 1.0) / r, (n + b - 2.0) / r + 1.0],
    )
    return pre * gr


def limit_a(r):
    """n -> infinity limit of coeff_a: r/(r+1)^(2+2/r)."""
    return r / (r + 1.0) ** (2.0 + 2.0 / r)


def limit_b(r):
    """n -> infinity limit of coeff_b (r > 1): r/(r+1)^(1+1/r)."""
    return r / (r + 1.0) ** (1.0 + 1.0 / r)


@dataclass(frozen=True)
class RecurrenceRow:
    """Level n with its scalar profiles; ray-resolved values are
    a*omega^(2(k-1)) and b*omega^(k-1)."""

    n: int
    a_scalar: float
    b_scalar: float

    def a_ray(self, k, r):
        return self.a_scalar * root_of_unity(r, 2 * (k - 1))

    def b_ray(self, k, r):
        return self.b_scalar * root_of_unity(r, k - 1)


def recurrence_row(n, params):
    return RecurrenceRow(n, coeff_a(n, params), coeff_b(n, params))


def _cheb_ray_points(params, deg):
    # Chebyshev-distributed points on each ray, scaled into |x| <= 1; deg+2
    # points per ray suffice to pin a degree-deg polynomial identity
    npts = deg + 2
    t = 0.5 * (1.0 + np.cos(np.pi * np.arange(npts) / (npts - 1)))
    pts = []
    for j in range(params.r):
        w = root_of_unity(params.r, j)
        pts.extend(complex(w * ti) for ti in t)
    return pts


def recurrence_residual(n, k, params, sample_points=None):
    """Largest normalized deviation of the nearest-neighbor relation at
    level n, ray k, sampled over points and all ray entries j.

    Every vector comes from its closed-form construction; the residual is
    |x A - A_down - b A - sum_l a_l A_up,l| over the magnitude of the
    largest participating term.
    """
    if n < 1:
        raise ValueError("recurrence_residual needs n >= 1")
    r = params.r
    if r < 2:
        raise ValueError("the star recurrence check needs r >= 2")
    cur = type1_diagonal(n, params)
    dn = type1_down(n, k, params)
    ups = [type1_up(n, l, params) for l in range(1, r + 1)]
    a_n = coeff_a(n, params)
    b_n = coeff_b(n, params)
    bk = b_n * root_of_unity(r, k - 1)
    al = [a_n * root_of_unity(r, 2 * l) for l in range(r)]  # ray l+1 phase

    if sample_points is None:
        sample_points = _cheb_ray_points(params, n)

    worst = 0.0
    for j in range(r):
        for x in sample_points:
            cj = poly_eval(cur.polys[j], x)
            terms = [x * cj, -poly_eval(dn.polys[j], x), -bk * cj]
            terms.extend(-al[l] * poly_eval(ups[l].polys[j], x) for l in range(r))
            num = abs(sum(terms))
            den = max(abs(t) for t in terms)
            if den > 0.0:
                worst = max(worst, num / den)
    return worst


def r2_recurrence_a(n, alpha, beta):
    """Two-interval (r=2, real-line) diagonal coefficient a_{n,n}; equals
    coeff_a at r=2.  Translation: the real-line set (a, b, c, d) maps to the
    star profiles via a = b = coeff_a, c = coeff_b, d = -c, with star phases
    omega^(2(k-1)) = 1 and omega^(k-1) = +/-1."""
    s = 3 * n + 2 * alpha + beta
    return n * (n + alpha) * (2 * n + 2 * alpha + beta) / ((s + 1.0) * s * (s - 1.0))


def r2_recurrence_c(n, alpha, beta):
    """Two-interval (r=2, real-line) off-diagonal coefficient c_{n-1,n};
    equals coeff_b at r=2 (and d_{n,n-1} = -c_{n-1,n})."""
    pre = (2 * n + 2 * alpha + beta - 1.0) / (3 * n + 2 * alpha + beta - 1.0)
    gr = gamma_ratio(
        [n + alpha + (n + beta) / 2.0 - 1.0, (n + beta + 1.0) / 2.0],
        [n + alpha + (n + beta - 1.0) / 2.0, (n + beta) / 2.0],
    )
    return pre * gr
