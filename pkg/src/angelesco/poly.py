"""Dense monomial-basis polynomials with compensated evaluation.

Coefficient index k holds the coefficient of x^k.  Degrees in this library
stay small (hard cap 60), so a dense representation is the right tool; the
delicate part is evaluation near clustered roots, which is why the scalar
evaluator runs a compensated Horner scheme built on error-free
transformations (two_sum / two_prod with Dekker splitting).
"""

from __future__ import annotations

import numpy as np

from .numerics import root_of_unity

__all__ = ["Poly", "poly_eval", "poly_rotate", "poly_derivative", "poly_axpy"]

_SPLIT = 134217729.0  # 2**27 + 1, Dekker splitting constant


def _two_sum(a, b):
    s = a + b
    bb = s - a
    return s, (a - (s - bb)) + (b - bb)


def _two_prod(a, b):
    p = a * b
    ca = _SPLIT * a
    ah = ca - (ca - a)
    al = a - ah
    cb = _SPLIT * b
    bh = cb - (cb - b)
    bl = b - bh
    return p, ((ah * bh - p) + ah * bl + al * bh) + al * bl


def _comp_horner_real(c, x):
    # Graillat-style compensated Horner: result accurate to ~eps plus an
    # eps^2-level term times the condition number.
    s = c[-1]
    e = 0.0
    for k in range(len(c) - 2, -1, -1):
        p, d1 = _two_prod(s, x)
        s, d2 = _two_sum(p, c[k])
        e = e * x + (d1 + d2)
    return s + e


def _comp_horner_complex(c, z):
    zr, zi = z.real, z.imag
    sr, si = c[-1].real, c[-1].imag
    er = ei = 0.0
    for k in range(len(c) - 2, -1, -1):
        p1, d1 = _two_prod(sr, zr)
        p2, d2 = _two_prod(si, zi)
        tr, d3 = _two_sum(p1, -p2)
        p3, d4 = _two_prod(sr, zi)
        p4, d5 = _two_prod(si, zr)
        ti, d6 = _two_sum(p3, p4)
        ck = c[k]
        nr, d7 = _two_sum(tr, ck.real)
        ni, d8 = _two_sum(ti, ck.imag)
        er, ei = (
            er * zr - ei * zi + (d1 - d2 + d3 + d7),
            er * zi + ei * zr + (d4 + d5 + d6 + d8),
        )
        sr, si = nr, ni
    return complex(sr + er, si + ei)


class Poly:
    """Immutable dense polynomial; trailing exact zeros are trimmed."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        arr = np.atleast_1d(np.asarray(coeffs))
        if arr.ndim != 1:
            raise ValueError("Poly expects a 1-d coefficient sequence")
        if np.iscomplexobj(arr):
            arr = arr.astype(np.complex128)
            if np.all(arr.imag == 0.0):
                arr = arr.real.copy()
        else:
            arr = arr.astype(np.float64)
        nz = np.nonzero(arr)[0]
        end = nz[-1] + 1 if nz.size else 1
        arr = arr[:end].copy()
        arr.setflags(write=False)
        object.__setattr__(self, "coeffs", arr)

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    @property
    def degree(self):
        """Exact degree; -1 for the zero polynomial."""
        if len(self.coeffs) == 1 and self.coeffs[0] == 0.0:
            return -1
        return len(self.coeffs) - 1

    @property
    def is_zero(self):
        return self.degree == -1

    @property
    def is_real(self):
        return not np.iscomplexobj(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def __repr__(self):
        return f"Poly({self.coeffs.tolist()!r})"

    def __eq__(self, other):
        return (
            isinstance(other, Poly)
            and len(self.coeffs) == len(other.coeffs)
            and bool(np.all(self.coeffs == other.coeffs))
        )

    def __hash__(self):
        return hash(self.coeffs.tobytes())

    def __call__(self, z):
        return poly_eval(self, z)

    def eval_many(self, zs):
        """Classical Horner, vectorized over an array of points."""
        zs = np.asarray(zs)
        acc = np.full(zs.shape, self.coeffs[-1], dtype=np.result_type(self.coeffs, zs))
        for c in self.coeffs[-2::-1]:
            acc = acc * zs + c
        return acc

    def derivative(self):
        return poly_derivative(self)

    def rotate(self, m, r):
        return poly_rotate(self, m, r)

    def scale(self, a):
        return Poly(a * self.coeffs)

    def shift_up(self, k):
        """Multiply by x^k."""
        if self.is_zero:
            return self
        pad = np.zeros(k, dtype=self.coeffs.dtype)
        return Poly(np.concatenate([pad, self.coeffs]))

    def __add__(self, other):
        a, b = self.coeffs, other.coeffs
        n = max(len(a), len(b))
        out = np.zeros(n, dtype=np.result_type(a, b))
        out[: len(a)] += a
        out[: len(b)] += b
        return Poly(out)

    def __sub__(self, other):
        return self + other.scale(-1.0)

    def __mul__(self, other):
        if isinstance(other, Poly):
            if self.is_zero or other.is_zero:
                return Poly([0.0])
            return Poly(np.convolve(self.coeffs, other.coeffs))
        return self.scale(other)

    __rmul__ = __mul__


def poly_eval(p, z):
    """Evaluate p at a scalar point with compensated Horner summation.

    Faithful rounding up to condition numbers around 1e16; the compensation
    costs a constant factor, irrelevant at the degrees used here.
    """
    c = p.coeffs
    if isinstance(z, complex) or np.iscomplexobj(c):
        return _comp_horner_complex(c.astype(np.complex128), complex(z))
    return _comp_horner_real(c, float(z))


def poly_rotate(p, m, r):
    """Compose with a ray rotation: returns q with q(x) = p(omega^m x)."""
    if p.is_zero:
        return p
    phases = np.array([root_of_unity(r, m * k) for k in range(len(p.coeffs))])
    out = p.coeffs * phases
    if np.all(out.imag == 0.0):
        out = out.real
    return Poly(out)


def poly_derivative(p):
    if len(p.coeffs) == 1:
        return Poly(np.zeros(1, dtype=p.coeffs.dtype))
    k = np.arange(1, len(p.coeffs))
    return Poly(p.coeffs[1:] * k)


def poly_axpy(a, p, q):
    """a*p + q with exact degree bookkeeping."""
    return p.scale(a) + q
