"""Brute-force reference solver for cross-validation.

Fits the unique osculating polynomial in the monomial basis by solving the
confluent Vandermonde system with Gaussian elimination (partial pivoting)
in extended precision, and evaluates the result by Horner's rule.  The
routines here deliberately share no algorithm with :mod:`osculant.core`:
they only consume the plain node/data carriers, so agreement between the
two paths is meaningful evidence of correctness.

Extended precision is provided by mpmath at 113 mantissa bits (binary128
semantics, comfortably more than twice float64's 53 bits).  Desk-scale
systems only: the size guard keeps conditioning survivable under partial
pivoting.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from mpmath import mp, mpf

from .core import NodeSet, OsculatoryData
from .errors import SingularSystemError, SizeLimitError

# Largest admissible system dimension (m+1)*(n+1).
SIZE_LIMIT = 64

_PRECISION_BITS = 113

# Back-substituted residual must stay below RESIDUAL_TOL * system scale.
RESIDUAL_TOL = 1e-20

# Pivots this small relative to the matrix scale mean duplicate (or nearly
# duplicate) nodes produced a rank-deficient system; genuine pivots of a
# desk-scale confluent Vandermonde matrix never fall this far.
_SINGULAR_RTOL = mpf(10) ** -28


@dataclass(frozen=True)
class MonomialPolynomial:
    """Polynomial ``sum_k coeffs[k] * x**k`` in extended-precision scalars.

    ``residual`` is the scale-relative back-substitution residual of the
    linear system that produced the fit (zero for directly constructed
    polynomials).  The coefficient list length equals the number of
    interpolation conditions; the leading coefficient may be zero.
    """

    coeffs: tuple
    residual: float = 0.0

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1


def _falling_factorial(k: int, p: int) -> int:
    """k * (k-1) * ... * (k-p+1), the p-th derivative factor of x**k."""
    return math.factorial(k) // math.factorial(k - p) if k >= p else 0


def confluent_vandermonde_fit(nodes: NodeSet, data: OsculatoryData) -> MonomialPolynomial:
    """Solve the value-and-derivative interpolation conditions directly.

    Builds the square system ``d^p/dx^p [sum_k c_k x**k](x_i) = y_i^(p)``
    and solves it by Gaussian elimination with partial pivoting in extended
    precision.  Raises :class:`SizeLimitError` beyond desk scale and
    :class:`SingularSystemError` when elimination meets a negligible pivot
    or the back-substituted residual exceeds its tolerance.
    """
    npts = data.values.shape[0]
    m = data.order
    size = npts * (m + 1)
    if size > SIZE_LIMIT:
        raise SizeLimitError(
            f"system dimension {size} exceeds the reference-solver limit {SIZE_LIMIT}"
        )
    with mp.workprec(_PRECISION_BITS):
        matrix = []
        rhs = []
        for i in range(npts):
            x_i = mpf(float(nodes.nodes[i]))
            for p in range(m + 1):
                row = []
                for k in range(size):
                    if k < p:
                        row.append(mpf(0))
                    else:
                        row.append(_falling_factorial(k, p) * x_i ** (k - p))
                matrix.append(row)
                rhs.append(mpf(float(data.values[i, p])))

        scale = max((abs(e) for row in matrix for e in row), default=mpf(0))
        pivot_floor = scale * _SINGULAR_RTOL

        # Forward elimination with partial pivoting.
        for col in range(size):
            pivot_row = max(range(col, size), key=lambda r: abs(matrix[r][col]))
            if abs(matrix[pivot_row][col]) <= pivot_floor:
                raise SingularSystemError(
                    "confluent Vandermonde system is numerically singular; "
                    "nodes are effectively duplicated"
                )
            if pivot_row != col:
                matrix[col], matrix[pivot_row] = matrix[pivot_row], matrix[col]
                rhs[col], rhs[pivot_row] = rhs[pivot_row], rhs[col]
            pivot = matrix[col][col]
            for r in range(col + 1, size):
                factor = matrix[r][col] / pivot
                if factor == 0:
                    continue
                for c in range(col, size):
                    matrix[r][c] -= factor * matrix[col][c]
                rhs[r] -= factor * rhs[col]

        coeffs = [mpf(0)] * size
        for r in range(size - 1, -1, -1):
            acc = rhs[r]
            for c in range(r + 1, size):
                acc -= matrix[r][c] * coeffs[c]
            coeffs[r] = acc / matrix[r][r]

        # Self-check: residual of the original (rebuilt) system.
        max_residual = mpf(0)
        row_scale = mpf(0)
        for i in range(npts):
            x_i = mpf(float(nodes.nodes[i]))
            for p in range(m + 1):
                acc = mpf(0)
                magnitude = abs(mpf(float(data.values[i, p])))
                for k in range(p, size):
                    term = _falling_factorial(k, p) * x_i ** (k - p) * coeffs[k]
                    acc += term
                    magnitude += abs(term)
                max_residual = max(max_residual, abs(acc - mpf(float(data.values[i, p]))))
                row_scale = max(row_scale, magnitude)
        relative = max_residual / row_scale if row_scale > 0 else mpf(0)
        if relative > RESIDUAL_TOL:
            raise SingularSystemError(
                f"back-substituted residual {float(relative):.3e} exceeds "
                f"{RESIDUAL_TOL:.0e}; the fit is not trustworthy"
            )
        return MonomialPolynomial(coeffs=tuple(coeffs), residual=float(relative))


def poly_eval_deriv(poly: MonomialPolynomial, x: float, k: int) -> float:
    """k-th derivative of a monomial polynomial at ``x``.

    Horner evaluation in extended precision, rounded to double on return.
    Orders beyond the degree give exactly zero.
    """
    if k < 0:
        raise ValueError("derivative order must be >= 0")
    d = poly.degree
    if k > d:
        return 0.0
    with mp.workprec(_PRECISION_BITS):
        xm = mpf(float(x))
        acc = poly.coeffs[d] * _falling_factorial(d, k)
        for j in range(d - 1, k - 1, -1):
            acc = acc * xm + poly.coeffs[j] * _falling_factorial(j, k)
        return float(acc)


def finite_difference(f, x: float, h: float) -> float:
    """Central difference ``(f(x+h) - f(x-h)) / (2h)`` in plain doubles."""
    if h <= 0:
        raise ValueError("step h must be positive")
    return (f(x + h) - f(x - h)) / (2.0 * h)
