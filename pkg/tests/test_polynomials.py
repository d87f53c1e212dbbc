import math

import mpmath as mp
import numpy as np
import pytest

from angelesco import (
    DEGREE_CAP,
    DegenerateParameters,
    DegreeCapError,
    Params,
    base_poly,
    diagonal_normalizer,
    down_normalizer,
    leading_coefficient,
    legendre_angelesco_r2,
    normalization_constants,
    pochhammer,
    shifted_base_poly,
    type1_diagonal,
    type1_down,
    type1_up,
    up_normalizer,
)
from angelesco.poly import Poly

GRID = (-0.5, 0.0, 0.7, 2.0)

from r2_reference import coeffs_match as _coeffs_match, mp_p_r2 as _mp_p_r2, mp_r2_pair as _mp_r2_pair  # noqa: E402


# ---------------------------------------------------------------------------
# base family
# ---------------------------------------------------------------------------


def test_base_poly_small_cases():
    p = Params(2, 0.0, 0.0)
    assert np.allclose(base_poly(0, p).coeffs, [1.0])
    assert np.allclose(base_poly(1, p).coeffs, [-1.0, 1.5])
    assert np.allclose(base_poly(2, p).coeffs, [1.0, -3.75, 3.0])


def test_base_poly_frozen_oracle_values():
    # 50-digit evaluation of the closed form at n=3, alpha=0.7, beta=-0.5
    want = [
        -0.57402583414461479381,
        4.7755282756880635777,
        -10.21765984777414333,
        6.3036973239082439226,
    ]
    got = base_poly(3, Params(2, 0.7, -0.5)).coeffs
    assert _coeffs_match(got, want, 1e-14)


@pytest.mark.parametrize("a", GRID)
@pytest.mark.parametrize("b", GRID)
def test_base_poly_matches_r2_closed_form(a, b):
    for n in range(0, 21):
        got = base_poly(n, Params(2, a, b)).coeffs
        want = _mp_p_r2(n, a, b)
        assert _coeffs_match(got, want, 1e-13)


def test_shifted_family_is_beta_shift():
    p = Params(2, 0.0, 0.0)
    assert np.allclose(shifted_base_poly(1, p).coeffs, [-0.5, 1.0])
    assert np.allclose(shifted_base_poly(0, Params(2, 0.0, 1.0)).coeffs, [1.0])
    for n in (0, 1, 4, 9):
        for a, b in ((0.0, 0.0), (0.7, -0.5), (2.0, 0.7)):
            q = shifted_base_poly(n, Params(3, a, b)).coeffs
            # the shifted family at beta is the base family at beta-1; compare
            # against the raw closed form, which stays finite for beta > -1
            with mp.workdps(40):
                am, bm = mp.mpf(a), mp.mpf(b) - 1
                want = [
                    float(
                        mp.binomial(n, k)
                        * mp.gamma(n + am + (bm + k) / 3 + 1)
                        / (mp.gamma(n + am + 1) * mp.gamma((bm + k) / 3 + 1))
                        * (-1) ** (n - k)
                    )
                    for k in range(n + 1)
                ]
            assert _coeffs_match(q, want, 1e-13)


def test_leading_coefficient_examples():
    assert leading_coefficient(0, Params(2, 0.0, 0.7)) == pytest.approx(1.0)
    assert leading_coefficient(1, Params(2, 0.0, 0.0)) == pytest.approx(1.5)
    assert leading_coefficient(2, Params(2, 0.0, 0.0)) == pytest.approx(3.0)
    for n in (1, 5, 12):
        for r in (1, 3, 5):
            p = Params(r, 0.7, -0.5)
            assert leading_coefficient(n, p) == pytest.approx(
                float(base_poly(n, p).coeffs[-1]), rel=1e-12
            )


def test_degree_cap_enforced():
    with pytest.raises(DegreeCapError):
        base_poly(DEGREE_CAP + 1, Params(2, 0.0, 0.0))
    with pytest.raises(DegreeCapError):
        type1_diagonal(DEGREE_CAP + 2, Params(2, 0.0, 0.0))


def test_params_validation():
    with pytest.raises(ValueError):
        Params(0, 0.0, 0.0)
    with pytest.raises(ValueError):
        Params(2, -1.0, 0.0)
    with pytest.raises(ValueError):
        Params(2, 0.0, -1.5)


def test_public_base_poly_degenerate_point_raises():
    # r=1 with alpha+beta = -1: the raw kernel polynomial itself is singular
    # (the type I vectors remain finite through fused normalizers)
    with pytest.raises(DegenerateParameters):
        base_poly(0, Params(1, -0.5, -0.5))


# ---------------------------------------------------------------------------
# type I vectors
# ---------------------------------------------------------------------------


def test_diagonal_level_one_r2():
    v = type1_diagonal(1, Params(2, 0.0, 0.0))
    assert np.allclose(v.polys[0].coeffs, [1.0])
    assert np.allclose(v.polys[1].coeffs, [1.0])


def test_diagonal_rotation_covariance():
    for r in (2, 3, 5):
        v = type1_diagonal(4, Params(r, 0.7, -0.5))
        for j in range(1, r + 1):
            want = v.base.rotate(-(j - 1), r)
            assert np.allclose(v.polys[j - 1].coeffs, want.coeffs)


def test_degree_patterns():
    for r in (1, 2, 4):
        params = Params(r, 0.7, 2.0)
        for n in (1, 3, 6):
            assert type1_diagonal(n, params).degrees() == [n - 1] * r
            for k in range(1, r + 1):
                up = type1_up(n, k, params)
                assert up.degrees() == up.nominal_degrees()
                dn = type1_down(n, k, params)
                assert dn.degrees() == dn.nominal_degrees()


def test_up_leading_coefficient_cancels_structurally():
    # the x^n coefficient of the non-leading combinations must sit far below
    # the coefficient scale (root-of-unity cancellation of the leading terms)
    for r in (2, 3, 5):
        params = Params(r, 0.7, -0.5)
        for n in (2, 5):
            for k in range(1, r + 1):
                v = type1_up(n, k, params)
                for j, p in enumerate(v.polys, start=1):
                    if j == k:
                        continue
                    c = np.abs(np.asarray(p.coeffs, dtype=complex))
                    if len(c) > n:
                        assert c[n] <= 1e-10 * c.max()


def test_up_second_coefficient_nonvanishing():
    # observed across the grid: the x^(n-1) coefficient stays genuinely
    # nonzero for the off-ray entries, so their degree is exactly n-1
    for r in (2, 3):
        for a in GRID:
            for b in GRID:
                v = type1_up(3, 1, Params(r, a, b))
                for j, p in enumerate(v.polys, start=1):
                    if j == 1:
                        continue
                    c = np.abs(np.asarray(p.coeffs, dtype=complex))
                    assert c[2] > 1e-6 * c.max()


def test_down_degenerate_empty_index():
    v = type1_down(1, 1, Params(1, 0.0, 0.0))
    assert v.size == 0
    assert v.polys[0].is_zero


def test_r1_up_equals_next_diagonal():
    for a, b in ((0.0, 0.0), (0.7, -0.5), (2.0, 2.0), (-0.5, 0.7)):
        params = Params(1, a, b)
        for n in (0, 1, 3, 7):
            up = type1_up(n, 1, params).polys[0].coeffs
            diag = type1_diagonal(n + 1, params).polys[0].coeffs
            assert _coeffs_match(up, diag, 1e-12)


def test_vectors_finite_at_degenerate_loci():
    # fused construction must survive the removable singularities
    v = type1_diagonal(1, Params(1, -0.5, -0.5))
    assert v.polys[0].coeffs[0] == pytest.approx(1.0 / math.pi, rel=1e-13)
    v = type1_up(0, 1, Params(1, -0.5, -0.5))
    assert v.polys[0].coeffs[0] == pytest.approx(1.0 / math.pi, rel=1e-13)
    # r=2 down at the pochhammer-base zero (r(n+alpha)+beta = 1)
    v = type1_down(1, 1, Params(2, -0.5, 0.0))
    m0 = math.pi / 2  # int_0^1 (1-x^2)^(-1/2) dx
    assert v.polys[1].coeffs[0] == pytest.approx(-1.0 / m0, rel=1e-12)


# ---------------------------------------------------------------------------
# r=2 closed-form cross-checks (orientation map: B = ray 1, A = -ray 2)
# ---------------------------------------------------------------------------


@pytest.mark.parametrize("a,b", [(0.0, 0.0), (0.7, -0.5), (2.0, 0.7), (-0.5, 2.0)])
def test_diagonal_matches_two_interval_form(a, b):
    for n in range(0, 11):
        va, vb = _mp_r2_pair(n, a, b, "diag")
        v = type1_diagonal(n + 1, Params(2, a, b))
        assert _coeffs_match(v.polys[0].coeffs, vb, 1e-12)
        assert _coeffs_match((-1.0 * v.polys[1].coeffs), va, 1e-12)


@pytest.mark.parametrize("a,b", [(0.0, 0.0), (0.7, -0.5), (2.0, 0.7), (-0.5, 2.0)])
def test_up_matches_two_interval_form(a, b):
    for n in range(0, 11):
        va, vb = _mp_r2_pair(n, a, b, "up")  # (A_{n,n+1}, B_{n,n+1})
        v = type1_up(n, 1, Params(2, a, b))
        assert _coeffs_match(v.polys[0].coeffs, vb, 1e-12)
        assert _coeffs_match(-1.0 * v.polys[1].coeffs, va, 1e-12)
        va2, vb2 = _mp_r2_pair(n, a, b, "down")  # (A_{n+1,n}, B_{n+1,n})
        v2 = type1_up(n, 2, Params(2, a, b))
        assert _coeffs_match(v2.polys[0].coeffs, vb2, 1e-12)
        assert _coeffs_match(-1.0 * v2.polys[1].coeffs, va2, 1e-12)


@pytest.mark.parametrize("a,b", [(0.0, 0.0), (0.7, -0.5), (2.0, 0.7), (-0.5, 2.0)])
def test_down_matches_two_interval_form(a, b):
    # the lowered vector at level n is the two-interval pair at level n-1
    for n in range(1, 11):
        va, vb = _mp_r2_pair(n - 1, a, b, "down")  # (A_{n,n-1}, B_{n,n-1})
        v = type1_down(n, 1, Params(2, a, b))
        assert _coeffs_match(v.polys[0].coeffs, vb, 1e-12)
        assert _coeffs_match(-1.0 * v.polys[1].coeffs, va, 1e-12)
        va2, vb2 = _mp_r2_pair(n - 1, a, b, "up")  # (A_{n-1,n}, B_{n-1,n})
        v2 = type1_down(n, 2, Params(2, a, b))
        assert _coeffs_match(v2.polys[0].coeffs, vb2, 1e-12)
        assert _coeffs_match(-1.0 * v2.polys[1].coeffs, va2, 1e-12)


def test_legendre_angelesco_frozen_values():
    a1, b1 = legendre_angelesco_r2(1, "diag")
    assert np.allclose(b1.coeffs, [-10.0, 15.0])  # (1/2)(5!/3!) (1.5x - 1)
    assert np.allclose(a1.coeffs, [10.0, 15.0])  # -B(-x): root at -2/3


def test_legendre_angelesco_matches_general_path():
    p00 = Params(2, 0.0, 0.0)
    for n in range(0, 9):
        a, b = legendre_angelesco_r2(n, "diag")
        v = type1_diagonal(n + 1, p00)
        assert _coeffs_match(v.polys[0].coeffs, b.coeffs, 1e-12)
        assert _coeffs_match(v.polys[1].coeffs, -1.0 * a.coeffs, 1e-12)
        a, b = legendre_angelesco_r2(n, "up")
        v = type1_up(n, 1, p00)
        assert _coeffs_match(v.polys[0].coeffs, b.coeffs, 1e-12)
        assert _coeffs_match(v.polys[1].coeffs, -1.0 * a.coeffs, 1e-12)
        a, b = legendre_angelesco_r2(n, "down")
        v = type1_up(n, 2, p00)
        assert _coeffs_match(v.polys[0].coeffs, b.coeffs, 1e-12)
        assert _coeffs_match(v.polys[1].coeffs, -1.0 * a.coeffs, 1e-12)


def test_normalization_constants_positive_and_consistent():
    for r in (1, 2, 4):
        for a, b in ((0.0, 0.0), (0.7, -0.5), (2.0, 2.0)):
            params = Params(r, a, b)
            for n in (1, 3, 7):
                c = normalization_constants(n, params)
                assert c.lambda_diag > 0
                assert c.tau_up > 0
                assert c.nu_leading > 0
                if r == 1 and n == 1:
                    continue  # empty minus index: no meaningful normalizer
                assert c.gamma_down > 0
                # gamma = r nu_(n-1) (n-1)! / (rn + r alpha + beta - 1)_n
                want = (
                    r
                    * leading_coefficient(n - 1, params)
                    * math.factorial(n - 1)
                    / pochhammer(r * n + r * a + b - 1.0, n)
                )
                assert down_normalizer(n, params) == pytest.approx(want, rel=1e-11)
                assert up_normalizer(n, params) > 0
                assert diagonal_normalizer(n, params) > 0
