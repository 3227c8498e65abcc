"""Evaluation of osculating interpolants.

Two algebraically identical representations are offered:

* the direct form, a sum of per-node terms ``l_i(x)**(m+1) * P_i(x)``
  with the Lagrange basis ``l_i`` evaluated as an explicit product, and
* the barycentric quotient form, a ratio of weighted sums of inverse
  powers of ``(x - x_i)`` that never evaluates a basis polynomial.

Derivatives of any order are computed from the direct form by propagating
jets (:mod:`osculant.jets`) through the product structure, which realises
the Leibniz expansion without symbolic differentiation.

All evaluators are pure, read-only functions over an immutable
:class:`~osculant.core.Interpolant`; they may run concurrently.
"""

from __future__ import annotations

import enum
import math

import numpy as np

from .core import Interpolant
from .errors import NonFiniteInputError
from .jets import Jet

_EPS = float(np.finfo(float).eps)

# Two-tier guard around the barycentric quotient's poles: at (almost) a node
# return the prescribed value; merely near one, fall back to the direct form
# to dodge catastrophic cancellation in 1/(x - x_i).
_NODE_SNAP_RTOL = 4.0 * _EPS
_NEAR_POLE_RTOL = 1e-8

_SPLITTER = 134217729.0  # 2**27 + 1, splits a double into two 26-bit halves


def _two_sum(a: float, b: float) -> tuple[float, float]:
    """Error-free sum: returns (s, e) with s + e == a + b exactly."""
    s = a + b
    t = s - a
    return s, (a - (s - t)) + (b - t)


def _two_prod(a: float, b: float) -> tuple[float, float]:
    """Error-free product via Dekker splitting: p + e == a * b exactly."""
    p = a * b
    ah = _SPLITTER * a
    ah = ah - (ah - a)
    al = a - ah
    bh = _SPLITTER * b
    bh = bh - (bh - b)
    bl = b - bh
    e = ((ah * bh - p) + ah * bl + al * bh) + al * bl
    return p, e


class EvalMethod(enum.Enum):
    """Which representation an evaluation routine should use."""

    DIRECT = "direct"
    BARYCENTRIC = "barycentric"


def _check_point(x: float) -> float:
    x = float(x)
    if not math.isfinite(x):
        raise NonFiniteInputError("evaluation point must be finite")
    return x


def _local_derivs(row: np.ndarray, t: float, p: int, fact: list[int]) -> np.ndarray:
    """Derivatives 0..p of the local polynomial ``sum_j row[j]/j! * t**j``.

    Horner in ``t`` per derivative order; orders beyond the polynomial
    degree are exactly zero.
    """
    m = row.size - 1
    out = np.zeros(p + 1)
    for q in range(min(p, m) + 1):
        acc = row[m] / fact[m - q]
        for j in range(m - 1, q - 1, -1):
            acc = acc * t + row[j] / fact[j - q]
        out[q] = acc
    return out


def eval_direct(f: Interpolant, x: float) -> float:
    """Evaluate the interpolant at ``x`` through the direct form.

    Each ``l_i(x)`` is evaluated as the explicit product of its linear
    factors, raised to the power ``m+1`` by repeated multiplication, and
    multiplied by the local polynomial.  At a node the own term reduces to
    the prescribed value exactly and every other term carries a zero factor.
    """
    x = _check_point(x)
    nodes = f.nodes.nodes
    a = f.a_table.values
    m = f.order
    fact = [math.factorial(j) for j in range(m + 1)]
    order = np.argsort(nodes)
    sorted_nodes = [float(v) for v in nodes[order]]
    total = 0.0
    for i in order:
        x_i = float(nodes[i])
        basis = 1.0
        for x_k in sorted_nodes:
            if x_k != x_i:
                basis *= (x - x_k) / (x_i - x_k)
        power = 1.0
        for _ in range(m + 1):
            power *= basis
        total += power * float(_local_derivs(a[i], x - x_i, 0, fact)[0])
    return total


def eval_derivative(f: Interpolant, x: float, p: int) -> float:
    """p-th derivative of the interpolant at ``x`` via jet propagation.

    Builds the order-p jet of each ``l_i`` from its linear factors, raises
    it to the power ``m+1``, multiplies by the jet of the local polynomial
    and sums; the p-th slot of the result is the answer.  Orders beyond the
    polynomial degree come out exactly zero.
    """
    x = _check_point(x)
    if p < 0:
        raise ValueError("derivative order must be >= 0")
    nodes = f.nodes.nodes
    a = f.a_table.values
    m = f.order
    fact = [math.factorial(j) for j in range(m + 1)]
    order = np.argsort(nodes)
    sorted_nodes = [float(v) for v in nodes[order]]
    total = Jet.constant(0.0, p)
    for i in order:
        x_i = float(nodes[i])
        basis = Jet.constant(1.0, p)
        for x_k in sorted_nodes:
            if x_k != x_i:
                # same value arithmetic as eval_direct, so p=0 is bit-identical
                basis = basis * Jet.linear((x - x_k) / (x_i - x_k), 1.0 / (x_i - x_k), p)
        local = Jet(_local_derivs(a[i], x - x_i, p, fact))
        total = total + basis ** (m + 1) * local
    return float(total.coeffs[p])


def eval_barycentric(f: Interpolant, x: float) -> float:
    """Evaluate the interpolant at ``x`` through the barycentric quotient.

    Numerator and denominator are sums over nodes of
    ``delta_i**(m+1) * sum_j c_ij/j! * (x - x_i)**(j-m-1)`` with the
    numerator and denominator coefficient tables respectively; the inner
    sum costs one division followed by a Horner recurrence in
    ``1/(x - x_i)``.  Within the guard bands around a node the routine
    short-circuits to the prescribed value or to the direct form.
    """
    x = _check_point(x)
    nodes = f.nodes.nodes
    scale = max(f.nodes.span, 1.0)
    dist = np.abs(x - nodes)
    nearest = int(np.argmin(dist))
    if dist[nearest] <= _NODE_SNAP_RTOL * scale:
        return float(f.data.values[nearest, 0])
    if dist[nearest] < _NEAR_POLE_RTOL * scale:
        return eval_direct(f, x)

    a = f.a_table.values
    b = f.b_table.values
    delta_pow = f.weights.delta_pow
    m = f.order
    fact = [math.factorial(j) for j in range(m + 1)]
    # Terms of opposite sign can exceed the final sums by many orders of
    # magnitude when nodes cluster, so both the inner Horner recurrences and
    # the outer accumulations run compensated (error-free transformations,
    # plain double ops only): the lost low-order halves are carried along and
    # folded back in at the end.
    num_hi = num_lo = 0.0
    den_hi = den_lo = 0.0
    for i in np.argsort(nodes):
        u = 1.0 / (x - float(nodes[i]))
        dp = float(delta_pow[i])
        for is_num, row in ((True, a[i]), (False, b[i])):
            hi = float(row[0])
            lo = 0.0
            for j in range(1, m + 1):
                p, ep = _two_prod(hi, u)
                hi, es = _two_sum(p, float(row[j]) / fact[j])
                lo = lo * u + (ep + es)
            p, ep = _two_prod(hi, u)
            lo = lo * u + ep
            th, e1 = _two_prod(dp, p)
            tl = dp * lo + e1
            if is_num:
                num_hi, e2 = _two_sum(num_hi, th)
                num_lo += tl + e2
            else:
                den_hi, e2 = _two_sum(den_hi, th)
                den_lo += tl + e2
    num = num_hi + num_lo
    den = den_hi + den_lo
    if den == 0.0 or not (math.isfinite(num) and math.isfinite(den)):
        # Inverse powers can overflow for extreme order/gap combinations;
        # the direct form has no poles, so use it as the escape hatch.
        return eval_direct(f, x)
    return num / den


def eval_grid(f: Interpolant, xs, method: EvalMethod | str = EvalMethod.DIRECT) -> np.ndarray:
    """Evaluate at every point of ``xs`` with the selected representation.

    Output order matches input order and each point is independent of the
    others.  A non-finite point is reported with its index.
    """
    method = EvalMethod(method)
    points = np.asarray(xs, dtype=float).reshape(-1)
    bad = np.flatnonzero(~np.isfinite(points))
    if bad.size:
        raise NonFiniteInputError(f"grid point at index {bad[0]} is not finite")
    evaluate = eval_direct if method is EvalMethod.DIRECT else eval_barycentric
    return np.array([evaluate(f, x) for x in points])
