"""Type I vectors for the Angelesco system on the r-star.

The measures live on the star segments [0, omega^(j-1)], j = 1..r, with
weight |x|^beta (1-x^r)^alpha.  Everything is assembled from one real
polynomial family

    p_n(x) = sum_k  C(n,k) (-1)^(n-k)
             Gamma(n+alpha+(beta+k)/r+1) /
             [Gamma(n+alpha+1) Gamma((beta+k)/r+1)]  x^k,

whose rotations and beta-shifts produce the type I vectors at the diagonal
multi-index (n,...,n) and one step above/below it.

Every stored coefficient is produced by a single fused gamma-ratio call
(normalization constants folded in), so parameter combinations where the
normalizer vanishes while a polynomial coefficient blows up, e.g. r=1 with
alpha+beta = -1, evaluate to their finite limit instead of inf*0.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .numerics import (
    DegenerateParameters,
    gamma_ratio,
    gen_binomial,
    pochhammer,
    root_of_unity,
)
from .poly import Poly, poly_rotate

__all__ = [
    "DEGREE_CAP",
    "DegreeCapError",
    "Params",
    "MultiIndexTag",
    "TypeIVector",
    "Constants",
    "base_poly",
    "shifted_base_poly",
    "leading_coefficient",
    "normalization_constants",
    "diagonal_normalizer",
    "up_normalizer",
    "down_normalizer",
    "type1_diagonal",
    "type1_up",
    "type1_down",
    "legendre_angelesco_r2",
]

# Coefficients grow combinatorially with n; past ~60 double precision cannot
# evaluate p_n near its zeros even with compensation (the root finder switches
# to extended precision already past 40, see zeros.py).
DEGREE_CAP = 60


class DegreeCapError(ValueError):
    def __init__(self, n, cap=DEGREE_CAP):
        super().__init__(f"degree {n} exceeds the supported cap {cap}")
        self.n = n
        self.cap = cap


def _check_cap(n):
    if n > DEGREE_CAP:
        raise DegreeCapError(n)


@dataclass(frozen=True)
class Params:
    """Weight parameters: ray count r >= 1 and exponents alpha, beta > -1."""

    r: int
    alpha: float
    beta: float

    def __post_init__(self):
        if not (isinstance(self.r, (int, np.integer)) and self.r >= 1):
            raise ValueError(f"r must be an integer >= 1, got {self.r!r}")
        if not (math.isfinite(self.alpha) and self.alpha > -1.0):
            raise ValueError(f"alpha must be finite and > -1, got {self.alpha!r}")
        if not (math.isfinite(self.beta) and self.beta > -1.0):
            raise ValueError(f"beta must be finite and > -1, got {self.beta!r}")


@dataclass(frozen=True)
class MultiIndexTag:
    """Diagonal level n with an offset: the multi-index is (n,...,n),
    (n,...,n)+e_k ('plus') or (n,...,n)-e_k ('minus')."""

    n: int
    kind: str  # "diagonal" | "plus" | "minus"
    k: int | None = None

    def __post_init__(self):
        if self.kind not in ("diagonal", "plus", "minus"):
            raise ValueError(f"unknown multi-index kind {self.kind!r}")
        if self.kind == "diagonal":
            if self.n < 1:
                raise ValueError("diagonal level must be >= 1")
            if self.k is not None:
                raise ValueError("diagonal index carries no ray")
        else:
            if self.k is None or self.k < 1:
                raise ValueError("plus/minus index needs a ray k >= 1")
            if self.kind == "minus" and self.n < 1:
                raise ValueError("minus index needs level n >= 1")
            if self.kind == "plus" and self.n < 0:
                raise ValueError("plus index needs level n >= 0")

    def size(self, r):
        """|n| = sum of the multi-index entries."""
        if self.kind == "diagonal":
            return r * self.n
        if self.kind == "plus":
            return r * self.n + 1
        return r * self.n - 1


class TypeIVector:
    """The r polynomials (A_1, ..., A_r) of a type I vector.

    Entry j-1 of ``polys`` is the polynomial attached to the segment
    [0, omega^(j-1)].  Diagonal vectors additionally keep their real base
    polynomial: every entry is an exact rotation of it.
    """

    __slots__ = ("params", "tag", "polys", "base")

    def __init__(self, params, tag, polys, base=None):
        self.params = params
        self.tag = tag
        self.polys = tuple(polys)
        self.base = base
        if len(self.polys) != params.r:
            raise ValueError("need one polynomial per ray")

    @property
    def size(self):
        return self.tag.size(self.params.r)

    def nominal_degrees(self):
        """Exact degrees the construction is expected to produce."""
        r, n = self.params.r, self.tag.n
        if self.tag.kind == "diagonal":
            return [n - 1] * r
        if self.tag.kind == "plus":
            return [n if j == self.tag.k else n - 1 for j in range(1, r + 1)]
        return [n - 2 if j == self.tag.k else n - 1 for j in range(1, r + 1)]

    def degrees(self, rel_tol=1e-10):
        """Observed degrees, ignoring leading coefficients below ``rel_tol``
        times the entry's coefficient scale (storage is never truncated)."""
        out = []
        for p in self.polys:
            mags = np.abs(p.coeffs)
            scale = mags.max() if mags.size else 0.0
            deg = -1
            for k in range(len(mags) - 1, -1, -1):
                if mags[k] > rel_tol * scale:
                    deg = k
                    break
            out.append(deg)
        return out

    def __repr__(self):
        return f"TypeIVector(r={self.params.r}, tag={self.tag!r})"


@dataclass(frozen=True)
class Constants:
    """Normalization constants at level n: diagonal lambda, up tau,
    down gamma, and the leading coefficient nu of the base polynomial."""

    lambda_diag: float
    tau_up: float
    gamma_down: float
    nu_leading: float


# ---------------------------------------------------------------------------
# base family
# ---------------------------------------------------------------------------


def _base_coef(n, t, r, alpha, beta):
    # C(n,t) folded into the gamma lists; sign (-1)^(n-t) applied outside
    val = gamma_ratio(
        [n + alpha + (beta + t) / r + 1.0, n + 1.0],
        [n + alpha + 1.0, (beta + t) / r + 1.0, t + 1.0, n - t + 1.0],
    )
    return -val if (n - t) % 2 else val


def base_poly(n, params):
    """The degree-n member of the real kernel family p_n(.; alpha, beta)."""
    _check_cap(n)
    r, a, b = params.r, params.alpha, params.beta
    return Poly([_base_coef(n, t, r, a, b) for t in range(n + 1)])


def shifted_base_poly(n, params):
    """p_n with beta shifted down by one (the classical companion family q_n);
    well defined for every beta > -1 even though beta-1 may reach -2."""
    _check_cap(n)
    r, a, b = params.r, params.alpha, params.beta
    return Poly([_base_coef(n, t, r, a, b - 1.0) for t in range(n + 1)])


def leading_coefficient(n, params):
    """Leading coefficient nu_n of p_n."""
    r, a, b = params.r, params.alpha, params.beta
    return gamma_ratio(
        [n + a + (b + n) / r + 1.0],
        [n + a + 1.0, (b + n) / r + 1.0],
    )


def diagonal_normalizer(level, params):
    """lambda at diagonal level: (1/r) (r(level-1)+r*alpha+beta+r)_level / (level-1)!."""
    if level < 1:
        raise ValueError("diagonal level must be >= 1")
    m = level - 1
    r, a, b = params.r, params.alpha, params.beta
    pb = r * m + r * a + b + r
    return gamma_ratio([(pb + level, r)], [(pb, r), m + 1.0]) / r


def up_normalizer(n, params):
    """tau at level n, the normalizer of the above-diagonal combination."""
    r, a, b = params.r, params.alpha, params.beta
    return r * gamma_ratio(
        [n + 1.0, n + a + 1.0, (b + n + 1.0) / r, (r * n + r * a + b + 1.0, r)],
        [n + a + (b + n + 1.0) / r, (r * n + n + r * a + b + 2.0, r)],
    )


def down_normalizer(n, params):
    """gamma at level n, the normalizer of the below-diagonal combination."""
    if n < 1:
        raise ValueError("down_normalizer needs n >= 1")
    r, a, b = params.r, params.alpha, params.beta
    db = r * n + r * a + b - 1.0
    return r * gamma_ratio(
        [n + 0.0, n + a + (n + b - 1.0) / r, (db, r)],
        [n + a, (n + b - 1.0) / r + 1.0, (db + n, r)],
    )


def normalization_constants(n, params):
    try:
        gamma = down_normalizer(n, params) if n >= 1 else math.nan
    except DegenerateParameters:
        gamma = math.nan  # empty minus index (r=1, n=1): no normalizer exists
    return Constants(
        lambda_diag=diagonal_normalizer(n, params),
        tau_up=up_normalizer(n, params),
        gamma_down=gamma,
        nu_leading=leading_coefficient(n, params),
    )


# ---------------------------------------------------------------------------
# type I vectors
# ---------------------------------------------------------------------------


def type1_diagonal(level, params):
    """Type I vector at the diagonal multi-index (level, ..., level).

    Entry j is lambda * p_(level-1)(omega^(-j+1) x); the normalizer is fused
    into the coefficients, so entries stay finite where lambda alone would
    vanish against a pole of p.
    """
    if level < 1:
        raise ValueError("diagonal level must be >= 1")
    _check_cap(level - 1)
    r, a, b = params.r, params.alpha, params.beta
    m = level - 1
    pb = r * m + r * a + b + r
    coef = []
    for t in range(m + 1):
        val = gamma_ratio(
            [(pb + level, r), m + a + (b + t) / r + 1.0, m + 1.0],
            [(pb, r), m + a + 1.0, (b + t) / r + 1.0, t + 1.0, m - t + 1.0, m + 1.0],
        ) / r
        coef.append(-val if (m - t) % 2 else val)
    base = Poly(coef)
    polys = [poly_rotate(base, -(j - 1), r) for j in range(1, r + 1)]
    return TypeIVector(params, MultiIndexTag(level, "diagonal"), polys, base=base)


def type1_up(n, k, params):
    """Type I vector one step above the diagonal: multi-index (n,..,n)+e_k.

    Built from the r combinations A_l(x) = (1/tau) sum_m omega^(l m)
    p_n(x; alpha, beta-m)/nu_n^(beta-m); entry j is then
    A_((j-k) mod r)(omega^(-j+1) x) omega^(-k+1).  The leading coefficient
    of A_l for l != 0 cancels exactly by the root-of-unity sum.
    """
    if n < 0:
        raise ValueError("type1_up needs n >= 0")
    _check_cap(n + 1)
    r, a, b = params.r, params.alpha, params.beta
    if not 1 <= k <= r:
        raise ValueError(f"ray k must be in 1..{r}")

    # ratio[m][t]: coefficient t of p_n(.; beta-m) / (tau * nu^(beta-m)),
    # all gamma factors fused; the m-dependence of the t=n entry cancels
    # exactly, which is what makes the degree drop structural.
    ratio = np.empty((r, n + 1))
    for m in range(r):
        for t in range(n + 1):
            val = gamma_ratio(
                [
                    n + a + (b - m + t) / r + 1.0,
                    n + a + 1.0,
                    (b - m + n) / r + 1.0,
                    n + a + (b + n + 1.0) / r,
                    (r * n + n + r * a + b + 2.0, r),
                ],
                [
                    n + a + 1.0,
                    n + a + 1.0,
                    (b - m + t) / r + 1.0,
                    n + a + (b - m + n) / r + 1.0,
                    (b + n + 1.0) / r,
                    (r * n + r * a + b + 1.0, r),
                    t + 1.0,
                    n - t + 1.0,
                ],
            ) / r
            ratio[m, t] = -val if (n - t) % 2 else val

    omega_mat = np.array(
        [[root_of_unity(r, l * m) for m in range(r)] for l in range(r)]
    )
    combos = omega_mat @ ratio  # combos[l, t] = coefficients of A_l

    polys = []
    for j in range(1, r + 1):
        l = (j - k) % r
        phases = np.array(
            [root_of_unity(r, (-j + 1) * t + (-k + 1)) for t in range(n + 1)]
        )
        polys.append(Poly(combos[l] * phases))
    return TypeIVector(params, MultiIndexTag(n, "plus", k), polys)


def type1_down(n, k, params):
    """Type I vector one step below the diagonal: multi-index (n,..,n)-e_k.

    gamma * A_j(x) = omega^(j-1) nu^(beta) p_(n-1)(omega^(-j+1)x; beta-1)
                   - omega^(k-1) nu^(beta-1) p_(n-1)(omega^(-j+1)x; beta);
    on ray j = k the two leading terms coincide and the degree drops to n-2.
    For r = 1, n = 1 the multi-index is empty and the vector is zero.
    """
    if n < 1:
        raise ValueError("type1_down needs n >= 1")
    _check_cap(n - 1)
    r, a, b = params.r, params.alpha, params.beta
    if not 1 <= k <= r:
        raise ValueError(f"ray k must be in 1..{r}")

    db = r * n + r * a + b - 1.0
    t1 = np.empty(n)  # nu^(beta) coef_t(p_(n-1); beta-1) / gamma, fused
    t2 = np.empty(n)  # nu^(beta-1) coef_t(p_(n-1); beta) / gamma, fused
    for t in range(n):
        v1 = gamma_ratio(
            [(db + n, r), n - 1 + a + (b - 1.0 + t) / r + 1.0],
            [(db, r), n + a, (b - 1.0 + t) / r + 1.0, t + 1.0, n - t + 0.0],
        ) / r
        v2 = gamma_ratio(
            [
                n + a,
                (n + b - 1.0) / r + 1.0,
                (db + n, r),
                n - 1 + a + (b - 1.0 + n - 1.0) / r + 1.0,
                n - 1 + a + (b + t) / r + 1.0,
            ],
            [
                n + a + (n + b - 1.0) / r,
                (db, r),
                n + a,
                (b - 1.0 + n - 1.0) / r + 1.0,
                n + a,
                (b + t) / r + 1.0,
                t + 1.0,
                n - t + 0.0,
            ],
        ) / r
        sign = -1.0 if (n - 1 - t) % 2 else 1.0
        t1[t] = sign * v1
        t2[t] = sign * v2

    polys = []
    for j in range(1, r + 1):
        wj = root_of_unity(r, j - 1)
        wk = root_of_unity(r, k - 1)
        phases = np.array([root_of_unity(r, (-j + 1) * t) for t in range(n)])
        coeffs = phases * (wj * t1 - wk * t2)
        if n == 1 and r == 1:
            coeffs = np.zeros(1)  # empty multi-index: the zero vector
        polys.append(Poly(coeffs))
    return TypeIVector(params, MultiIndexTag(n, "minus", k), polys)


# ---------------------------------------------------------------------------
# r = 2, alpha = beta = 0 (Legendre-Angelesco) in the real-line convention
# ---------------------------------------------------------------------------


def _la_p(n):
    # binomial-product route, independent of the gamma machinery
    return Poly(
        [
            math.comb(n, k) * gen_binomial(n + k / 2.0, n) * (-1.0) ** (n - k)
            for k in range(n + 1)
        ]
    )


def _la_q(n):
    return Poly(
        [
            math.comb(n, k) * gen_binomial(n + (k - 1) / 2.0, n) * (-1.0) ** (n - k)
            for k in range(n + 1)
        ]
    )


def _reflect(p):
    # p(-x)
    return Poly(p.coeffs * (-1.0) ** np.arange(len(p.coeffs)))


def legendre_angelesco_r2(n, which):
    """The r=2, alpha=beta=0 pairs (A, B) in the real-line orientation:
    A lives on [-1, 0], B on [0, 1].

    ``which`` selects the diagonal pair (A_{n+1,n+1}, B_{n+1,n+1}), the pair
    above (A_{n,n+1}, B_{n,n+1}) or below (A_{n+1,n}, B_{n+1,n}).  Note the
    orientation: ray 2 of the star runs 0 -> -1, so A here equals minus the
    star's second-ray polynomial.
    """
    _check_cap(n)
    if which == "diag":
        c = 0.5 * float(Fraction(math.factorial(3 * n + 2),
                                 math.factorial(n) * math.factorial(2 * n + 1)))
        b_poly = _la_p(n).scale(c)
        return _reflect(b_poly).scale(-1.0), b_poly

    gamma_n = 2.0 * pochhammer(n / 2.0 + 1.0, n) * float(
        Fraction(math.factorial(2 * n), math.factorial(3 * n + 1))
    )
    nu1 = gen_binomial(n + n / 2.0, n)
    nu2 = gen_binomial(n + (n - 1) / 2.0, n)
    q, p = _la_q(n), _la_p(n)
    b_down = (q.scale(nu1) - p.scale(nu2)).scale(1.0 / gamma_n)  # B_{n+1,n}
    b_up = (q.scale(nu1) + p.scale(nu2)).scale(1.0 / gamma_n)    # B_{n,n+1}
    if which == "up":
        return _reflect(b_down), b_up  # (A_{n,n+1}, B_{n,n+1})
    if which == "down":
        return _reflect(b_up), b_down  # (A_{n+1,n}, B_{n+1,n})
    raise ValueError(f"which must be 'diag', 'up' or 'down', got {which!r}")
