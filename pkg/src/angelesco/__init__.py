"""Type I multiple orthogonal polynomials on an r-star.

An Angelesco system whose r measures live on the star segments
[0, omega^(j-1)], omega = exp(2 pi i/r), with weight |x|^beta (1-x^r)^alpha.
The library builds the type I vectors at and next to the diagonal
multi-index in closed form, verifies them against an analytic moment
oracle, and provides their recurrence coefficients, the order-(r+1)
differential equation, zeros, and the asymptotic zero distribution with
its algebraic Stieltjes transform.
"""

from .asymptotics import (
    DensityCurve,
    algebraic_residual,
    algebraic_residual_w,
    cubic_branches_r2,
    density_curve,
    endpoint_exponents,
    hatx_of_theta,
    ks_distance,
    limit_cdf,
    perron_density,
    solve_stieltjes_boundary,
    stieltjes_limit,
    theta_of_hatx,
    u_closed_r2,
    u_density,
    w_density,
)
from .numerics import (
    DegenerateParameters,
    gamma_ratio,
    gen_binomial,
    log_gamma,
    pochhammer,
    root_of_unity,
)
from .operators import (
    OdeSpec,
    RaisingCoeffs,
    lowering_check,
    ode_coeffs,
    ode_residual,
    raising_check,
    raising_coeffs,
)
from .orthogonality import (
    MomentTable,
    OrthoReport,
    check_modr,
    gauss_jacobi_rstar,
    moment,
    ray_form,
    ray_form_direct,
    verify_type1,
)
from .poly import Poly, poly_axpy, poly_derivative, poly_eval, poly_rotate
from .polynomials import (
    DEGREE_CAP,
    Constants,
    DegreeCapError,
    MultiIndexTag,
    Params,
    TypeIVector,
    base_poly,
    diagonal_normalizer,
    down_normalizer,
    leading_coefficient,
    legendre_angelesco_r2,
    normalization_constants,
    shifted_base_poly,
    type1_diagonal,
    type1_down,
    type1_up,
    up_normalizer,
)
from .recurrence import (
    RecurrenceRow,
    coeff_a,
    coeff_b,
    limit_a,
    limit_b,
    r2_recurrence_a,
    r2_recurrence_c,
    recurrence_residual,
    recurrence_row,
)
from .zeros import ZeroFindingError, ZeroSet, empirical_cdf, find_zeros, stieltjes_empirical

__version__ = "0.1.0"
