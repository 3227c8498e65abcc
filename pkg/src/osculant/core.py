"""Construction of osculating (Hermite-type) polynomial interpolants.

An osculating interpolant matches prescribed values and derivatives up to a
uniform order ``m`` at every node.  With nodes ``x_0..x_n`` the interpolant
is a sum of per-node contributions ``L_i(x) * P_i(x)`` where ``l_i`` is the
Lagrange basis polynomial, ``L_i = l_i**(m+1)`` and ``P_i`` is a local
polynomial of degree ``m`` in ``(x - x_i)``.  This module builds all static
data of that representation:

* barycentric weights (and their ``m+1`` powers) for the quotient form,
* derivatives of ``l_i`` and ``L_i`` at the nodes,
* the local numerator coefficients (from the prescribed data) and the
  matching denominator coefficients (from constant-one data).

Evaluation lives in :mod:`osculant.evaluate`.

Everything here is a pure function of its inputs; the resulting tables and
the final :class:`Interpolant` bundle are immutable and safe to share
between threads.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import (
    DuplicateNodeError,
    NonFiniteInputError,
    OrderTooLargeError,
    ShapeMismatchError,
    WeightOverflowError,
    WrongOrderError,
)

# Relative gap below which two nodes are treated as duplicates.  Below this,
# weight powers overflow or the basis derivatives lose all significant digits.
DISTINCTNESS_RTOL = 1e-13

# Largest derivative order for which every binomial coefficient C(p, v),
# p <= MAX_ORDER, is exactly representable in float64 (C(56, 28) < 2**53).
MAX_ORDER = 56


@lru_cache(maxsize=None)
def binomial_rows(p_max: int) -> tuple[tuple[int, ...], ...]:
    """Rows 0..p_max of Pascal's triangle, as exact integers."""
    if p_max > MAX_ORDER:
        raise OrderTooLargeError(
            f"derivative order {p_max} exceeds {MAX_ORDER}; binomial "
            "coefficients would no longer be exact in double precision"
        )
    rows = [(1,)]
    for p in range(1, p_max + 1):
        prev = rows[-1]
        rows.append(
            tuple(
                (prev[v - 1] if v > 0 else 0) + (prev[v] if v < p else 0)
                for v in range(p + 1)
            )
        )
    return tuple(rows)


def _readonly(arr: np.ndarray) -> np.ndarray:
    arr.flags.writeable = False
    return arr


# ---------------------------------------------------------------------------
# Domain types
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class NodeSet:
    """Distinct abscissae ``x_0..x_n`` in user-given order.

    ``span`` caches ``max(nodes) - min(nodes)``.  Build through
    :func:`build_nodeset`, which enforces finiteness and distinctness.
    """

    nodes: np.ndarray
    span: float

    def __len__(self) -> int:
        return self.nodes.size


@dataclass(frozen=True)
class OsculatoryData:
    """Prescribed node data: row ``i`` holds ``y_i, y_i', ..., y_i^(m)``."""

    values: np.ndarray
    order: int

    def __len__(self) -> int:
        return self.values.shape[0]


@dataclass(frozen=True)
class BasisDerivativeTable:
    """Derivatives of the basis polynomials at their own node.

    ``lagrange[i, v]`` is the v-th derivative of ``l_i`` at ``x_i`` and
    ``powered[i, v]`` the v-th derivative of ``L_i = l_i**(m+1)``, for
    ``v = 0..m``.  Column 0 is identically one since ``l_i(x_i) = 1``.
    """

    lagrange: np.ndarray
    powered: np.ndarray


@dataclass(frozen=True)
class BarycentricWeights:
    """Classical barycentric weights and their ``m+1`` powers.

    ``delta[i] = prod_{j != i} 1 / (x_i - x_j)`` and
    ``delta_pow[i] = delta[i]**(m+1)``.
    """

    delta: np.ndarray
    delta_pow: np.ndarray


@dataclass(frozen=True)
class CoefficientTable:
    """Local numerator coefficients: entry ``(i, j)`` scales
    ``(x - x_i)**j / j!`` in the i-th local polynomial."""

    values: np.ndarray


@dataclass(frozen=True)
class DenominatorTable:
    """Local denominator coefficients (numerator table of the constant-one
    data set), used by the barycentric quotient form."""

    values: np.ndarray


@dataclass(frozen=True)
class Interpolant:
    """Immutable bundle of everything the evaluators need."""

    nodes: NodeSet
    data: OsculatoryData
    basis: BasisDerivativeTable
    weights: BarycentricWeights
    a_table: CoefficientTable
    b_table: DenominatorTable

    @property
    def order(self) -> int:
        """Uniform derivative order ``m`` prescribed at every node."""
        return self.data.order

    @property
    def degree_bound(self) -> int:
        """Largest possible polynomial degree, ``(m+1)*(n+1) - 1``.

        There are ``(m+1)*(n+1)`` interpolation conditions, and the
        representation ``sum_i l_i**(m+1) * P_i`` itself has degree
        ``(m+1)*n + m``, which is the same number minus one.
        """
        return (self.order + 1) * len(self.nodes) - 1


# ---------------------------------------------------------------------------
# Construction
# ---------------------------------------------------------------------------

def build_nodeset(values) -> NodeSet:
    """Validate abscissae and wrap them in a :class:`NodeSet`.

    Input order is preserved.  Raises :class:`NonFiniteInputError` for
    NaN/inf entries and :class:`DuplicateNodeError` when any two nodes are
    closer than ``1e-13 * max(span, 1)``.
    """
    nodes = np.array(values, dtype=float).reshape(-1)
    if nodes.size == 0:
        raise ValueError("at least one node is required")
    if not np.isfinite(nodes).all():
        raise NonFiniteInputError("nodes must be finite")
    span = float(nodes.max() - nodes.min())
    if nodes.size > 1:
        gaps = np.diff(np.sort(nodes))
        threshold = DISTINCTNESS_RTOL * max(span, 1.0)
        if gaps.min() <= threshold:
            raise DuplicateNodeError(
                f"minimum node gap {gaps.min():.3e} is at or below the "
                f"distinctness threshold {threshold:.3e}"
            )
    return NodeSet(nodes=_readonly(nodes), span=span)


def build_data(values) -> OsculatoryData:
    """Wrap a ``(n+1, m+1)`` matrix of prescribed values and derivatives.

    Row ``i`` is ``(y_i, y_i', ..., y_i^(m))``; the derivative order ``m``
    is inferred from the column count.
    """
    try:
        matrix = np.array(values, dtype=float)
    except ValueError as exc:
        raise ShapeMismatchError(f"data must be a rectangular matrix: {exc}") from None
    if matrix.ndim != 2 or matrix.shape[1] < 1:
        raise ShapeMismatchError(
            f"data must be a 2-D matrix with at least one column, "
            f"got shape {matrix.shape}"
        )
    if not np.isfinite(matrix).all():
        raise NonFiniteInputError("data values must be finite")
    return OsculatoryData(values=_readonly(matrix), order=matrix.shape[1] - 1)


def _sorted_diffs(nodes: NodeSet, i: int) -> np.ndarray:
    """Differences ``x_i - x_k`` for all ``k != i``, in a canonical order.

    Iterating the other nodes sorted by value makes every downstream product
    and sum independent of the storage order, so permuting the node list
    permutes results exactly.
    """
    x_i = nodes.nodes[i]
    diffs = x_i - np.sort(nodes.nodes)
    return diffs[diffs != 0.0]


def compute_weights(nodes: NodeSet, m: int) -> BarycentricWeights:
    """Barycentric weights ``delta_i`` and their ``m+1`` powers.

    ``delta_i`` is the product of ``1 / (x_i - x_j)`` over all other nodes;
    for a single node the empty product gives ``delta_0 = 1``.  Raises
    :class:`WeightOverflowError` when any weight or weight power leaves the
    finite nonzero range, which signals nodes too clustered (or too far
    apart) for this order.
    """
    npts = len(nodes)
    delta = np.empty(npts)
    with np.errstate(over="ignore", divide="ignore"):
        for i in range(npts):
            delta[i] = 1.0 / np.prod(_sorted_diffs(nodes, i))
        delta_pow = delta ** (m + 1)
    for name, arr in (("delta", delta), ("delta_pow", delta_pow)):
        if not np.isfinite(arr).all() or (arr == 0.0).any():
            raise WeightOverflowError(
                f"barycentric {name} left the finite nonzero range for "
                f"order m={m}; nodes are too clustered for this degree"
            )
    return BarycentricWeights(delta=_readonly(delta), delta_pow=_readonly(delta_pow))


def power_sums(nodes: NodeSet, i: int, r_max: int) -> np.ndarray:
    """Inverse-distance power sums ``s_r = sum_{k != i} (x_i - x_k)**(-r)``.

    Returns ``s_1..s_r_max``; ``s_1`` is the logarithmic derivative of the
    Lagrange basis product at ``x_i``, i.e. ``l_i'(x_i)``.  For a single
    node every sum is empty, hence zero.
    """
    if not 0 <= i < len(nodes):
        raise IndexError(f"node index {i} out of range")
    if r_max < 1:
        raise ValueError("r_max must be >= 1")
    diffs = _sorted_diffs(nodes, i)
    out = np.empty(r_max)
    if diffs.size == 0:
        out[:] = 0.0
        return _readonly(out)
    inv = 1.0 / diffs
    acc = np.ones_like(inv)
    for r in range(1, r_max + 1):
        acc = acc * inv
        out[r - 1] = acc.sum()
    return _readonly(out)


def basis_derivatives(nodes: NodeSet, m: int) -> BasisDerivativeTable:
    """Derivatives of ``l_i`` and ``L_i = l_i**(m+1)`` at ``x_i``, v = 0..m.

    Uses the logarithmic-derivative recurrence: with
    ``g_r = c * (-1)**(r-1) * (r-1)! * s_r`` (``c = 1`` for ``l_i`` and
    ``c = m+1`` for ``L_i``), the derivatives of ``F = l_i**c`` satisfy

        ``F^(r) = sum_{q=0}^{r-1} C(r-1, q) * g_{r-q} * F^(q)``,  F^(0) = 1.

    This is exact at all orders and costs O(n + m^2) per node; no symbolic
    differentiation of the product is needed.
    """
    if m < 0:
        raise ValueError("order m must be >= 0")
    npts = len(nodes)
    lagrange = np.zeros((npts, m + 1))
    powered = np.zeros((npts, m + 1))
    lagrange[:, 0] = 1.0
    powered[:, 0] = 1.0
    if m == 0:
        return BasisDerivativeTable(lagrange=_readonly(lagrange), powered=_readonly(powered))

    binom = binomial_rows(m)
    # g_base[r] = (-1)**(r-1) * (r-1)! * s_r, before the power factor c.
    sign_fact = [(-1) ** (r - 1) * math.factorial(r - 1) for r in range(1, m + 1)]
    for i in range(npts):
        s = power_sums(nodes, i, m)
        g_base = np.empty(m + 1)
        g_base[0] = 0.0
        for r in range(1, m + 1):
            g_base[r] = sign_fact[r - 1] * s[r - 1]
        for c, table in ((1.0, lagrange), (float(m + 1), powered)):
            g = c * g_base
            row = table[i]
            for r in range(1, m + 1):
                acc = 0.0
                for q in range(r):
                    acc += binom[r - 1][q] * g[r - q] * row[q]
                row[r] = acc
    return BasisDerivativeTable(lagrange=_readonly(lagrange), powered=_readonly(powered))


def _triangular_solve(values: np.ndarray, powered: np.ndarray) -> np.ndarray:
    """Per-node triangular recursion shared by numerator and denominator.

    Row i solves, independently of all other rows,

        ``a_i^(0) = y_i``
        ``a_i^(p) = y_i^(p) - sum_{v=1}^{p} C(p, v) * L_i^(v)(x_i) * a_i^(p-v)``.

    Only the own-node term of the full interpolation conditions survives
    because ``l_k`` has a simple zero at ``x_i`` for ``k != i``, so
    ``L_k = l_k**(m+1)`` vanishes there together with its first m
    derivatives.  That decoupling is what makes the system solvable one
    node at a time.
    """
    m = values.shape[1] - 1
    binom = binomial_rows(m)
    a = np.empty_like(values)
    a[:, 0] = values[:, 0]  # plain copy: no floating-point op touches it
    for p in range(1, m + 1):
        acc = values[:, p].copy()
        for v in range(1, p + 1):
            acc -= binom[p][v] * powered[:, v] * a[:, p - v]
        a[:, p] = acc
    return _readonly(a)


def solve_numerator(data: OsculatoryData, basis: BasisDerivativeTable) -> CoefficientTable:
    """Local numerator coefficients from the prescribed data."""
    if data.values.shape != basis.powered.shape:
        raise ShapeMismatchError(
            f"data shape {data.values.shape} does not match basis table "
            f"shape {basis.powered.shape}"
        )
    return CoefficientTable(values=_triangular_solve(data.values, basis.powered))


def solve_denominator(m: int, basis: BasisDerivativeTable) -> DenominatorTable:
    """Local denominator coefficients: the numerator solve applied to the
    constant-one data set (value 1, all derivatives 0, at every node)."""
    npts = basis.powered.shape[0]
    ones_data = np.zeros((npts, m + 1))
    ones_data[:, 0] = 1.0
    return DenominatorTable(values=_triangular_solve(ones_data, basis.powered))


def closed_form_m1(data: OsculatoryData, basis: BasisDerivativeTable) -> CoefficientTable:
    """Order-1 coefficients straight from the printed closed form.

    ``a_i^(0) = y_i`` and ``a_i^(1) = y_i' - 2 l_i'(x_i) y_i``.  Kept as an
    independent cross-check of the triangular recursion.
    """
    if data.order != 1:
        raise WrongOrderError(f"closed form requires m=1, got m={data.order}")
    y = data.values[:, 0]
    yp = data.values[:, 1]
    lag1 = basis.lagrange[:, 1]
    a = np.empty_like(data.values)
    a[:, 0] = y
    a[:, 1] = yp - 2.0 * lag1 * y
    return CoefficientTable(values=_readonly(a))


def closed_form_m2(data: OsculatoryData, basis: BasisDerivativeTable) -> CoefficientTable:
    """Order-2 coefficients straight from the printed closed form.

    ``a_i^(0) = y_i``,
    ``a_i^(1) = y_i' - 3 l_i'(x_i) y_i``,
    ``a_i^(2) = y_i'' - 6 l_i'(x_i) y_i' + 12 l_i'(x_i)**2 y_i
    - 3 l_i''(x_i) y_i``.
    """
    if data.order != 2:
        raise WrongOrderError(f"closed form requires m=2, got m={data.order}")
    y = data.values[:, 0]
    yp = data.values[:, 1]
    ypp = data.values[:, 2]
    lag1 = basis.lagrange[:, 1]
    lag2 = basis.lagrange[:, 2]
    a = np.empty_like(data.values)
    a[:, 0] = y
    a[:, 1] = yp - 3.0 * lag1 * y
    a[:, 2] = ypp - 6.0 * lag1 * yp + 12.0 * lag1**2 * y - 3.0 * lag2 * y
    return CoefficientTable(values=_readonly(a))


def build_interpolant(nodes: NodeSet, data: OsculatoryData) -> Interpolant:
    """Assemble the full interpolant bundle for the given nodes and data.

    Runs weight, basis-derivative, numerator and denominator construction
    and returns the immutable result.  Component errors propagate.
    """
    if data.values.shape[0] != len(nodes):
        raise ShapeMismatchError(
            f"data has {data.values.shape[0]} rows for {len(nodes)} nodes"
        )
    m = data.order
    basis = basis_derivatives(nodes, m)
    return Interpolant(
        nodes=nodes,
        data=data,
        basis=basis,
        weights=compute_weights(nodes, m),
        a_table=solve_numerator(data, basis),
        b_table=solve_denominator(m, basis),
    )
