"""Scalar building blocks: log-gamma, Pochhammer symbols, generalized
binomials, signed gamma ratios, and roots of unity.

Every gamma ratio in the library is funneled through :func:`gamma_ratio`,
which accumulates log-gamma terms with exact summation and resolves
pole/pole cancellations that occur at degenerate parameter combinations
(e.g. ``r=1`` with ``alpha+beta = -1``).
"""

from __future__ import annotations

import cmath
import math

from scipy.special import gammasgn

__all__ = [
    "log_gamma",
    "pochhammer",
    "gen_binomial",
    "gamma_ratio",
    "root_of_unity",
    "DegenerateParameters",
]


class DegenerateParameters(ValueError):
    """A gamma ratio has an unpaired pole: the requested formula is
    singular at these exact parameter values."""


def log_gamma(x):
    """Natural logarithm of Gamma(x) for x > 0.

    Raises a ``ValueError`` for x <= 0; the signed machinery for negative
    arguments lives in :func:`gamma_ratio`.
    """
    if not x > 0.0:
        raise ValueError(f"log_gamma requires a positive argument, got {x!r}")
    return math.lgamma(x)


def pochhammer(a, n):
    """Rising factorial (a)_n = a (a+1) ... (a+n-1), as a direct product.

    The product form is exact for zero or negative bases and avoids the
    cancellation a Gamma-quotient would suffer for small ``a``.
    """
    if n < 0:
        raise ValueError("pochhammer needs n >= 0")
    out = 1.0
    for j in range(n):
        out *= a + j
    return out


def gen_binomial(x, k):
    """Generalized binomial x(x-1)...(x-k+1)/k! for real x, integer k >= 0."""
    if k < 0:
        raise ValueError("gen_binomial needs k >= 0")
    out = 1.0
    for j in range(k):
        out *= (x - j) / (j + 1)
    return out


def _is_pole(x):
    # Gamma poles sit at 0, -1, -2, ...
    return x <= 0.0 and x == math.floor(x)


def _norm_args(args):
    # each argument is a value or a (value, rate) pair; the rate is the speed
    # at which the argument crosses zero under a parameter perturbation and
    # only matters when the argument sits exactly on a gamma pole
    out = []
    for a in args:
        if isinstance(a, tuple):
            out.append((float(a[0]), float(a[1])))
        else:
            out.append((float(a), 1.0))
    return out


def gamma_ratio(nums, dens):
    """Signed ratio  prod Gamma(nums) / prod Gamma(dens).

    Arguments may carry a rate as a ``(value, rate)`` pair.  Pole arguments
    (non-positive integers) are resolved as a joint limit: writing each pole
    argument as rate*eps near its pole and letting eps -> 0, a num/den pole
    pair at -m1, -m2 contributes (-1)^(m1-m2) m2!/m1! * rate_den/rate_num.
    This is exactly the finite limit of the fused formulas in this library at
    their removable parameter degeneracies (the pole loci of a fused
    coefficient always coincide, with rates 1 or r).  A surplus denominator
    pole gives 0 (1/Gamma is entire); a surplus numerator pole raises
    :class:`DegenerateParameters`.  Equal non-pole arguments cancel exactly;
    everything else is accumulated as exactly-summed log-gammas with signs.
    """
    nums = sorted(_norm_args(nums))
    dens = sorted(_norm_args(dens))
    num_poles = [a for a in nums if _is_pole(a[0])]
    den_poles = [a for a in dens if _is_pole(a[0])]
    nums = [a for a in nums if not _is_pole(a[0])]
    dens = [a for a in dens if not _is_pole(a[0])]

    if len(num_poles) > len(den_poles):
        raise DegenerateParameters(
            f"gamma ratio has an unpaired pole: {num_poles!r} over {den_poles!r}"
        )
    if len(den_poles) > len(num_poles):
        return 0.0

    # exact cancellation of equal regular arguments
    rn, rd = [], []
    i = j = 0
    while i < len(nums) and j < len(dens):
        if nums[i][0] == dens[j][0]:
            i += 1
            j += 1
        elif nums[i][0] < dens[j][0]:
            rn.append(nums[i])
            i += 1
        else:
            rd.append(dens[j])
            j += 1
    rn.extend(nums[i:])
    rd.extend(dens[j:])

    sign = 1.0
    logs = []
    for (a, ra), (b, rb) in zip(num_poles, den_poles):
        ka, kb = int(-a), int(-b)
        sign *= -1.0 if (ka - kb) % 2 else 1.0
        logs.append(math.lgamma(kb + 1.0) - math.lgamma(ka + 1.0))
        logs.append(math.log(rb / ra))
    for x, _ in rn:
        sign *= gammasgn(x)
        logs.append(math.lgamma(x))
    for x, _ in rd:
        sign *= gammasgn(x)
        logs.append(-math.lgamma(x))
    return sign * math.exp(math.fsum(logs))


def _cospi(x):
    # cos(pi*x) with exact zeros at half-integers; x reduced mod 2
    x = math.fabs(x) % 2.0
    if x > 1.0:
        x = 2.0 - x
    if x == 0.5:
        return 0.0
    if x < 0.5:
        return math.cos(math.pi * x)
    return -math.cos(math.pi * (1.0 - x))


def _sinpi(x):
    return _cospi(x - 0.5)


def root_of_unity(r, k=1):
    """omega^k with omega = exp(2*pi*i/r); the exponent is reduced mod r.

    Powers are always produced from the reduced index and the exact angle,
    never by repeated multiplication, so there is no phase drift; quarter
    turns come out exactly (+1, -1, +i, -i).
    """
    if r < 1:
        raise ValueError("root_of_unity needs r >= 1")
    k = k % r
    t = 2.0 * k / r
    return complex(_cospi(t), _sinpi(t))
