"""Construction-side tests: node validation, weights, basis derivatives,
coefficient solves and their exact structural invariants."""

import dataclasses

import numpy as np
import pytest

import osculant as osc
from conftest import make_problem
from osculant.core import MAX_ORDER, binomial_rows


# ---------------------------------------------------------------------------
# build_nodeset
# ---------------------------------------------------------------------------

def test_nodeset_valid_input_passes_through():
    ns = osc.build_nodeset([0.0, 1.0, 2.0])
    assert len(ns) == 3
    assert ns.span == 2.0
    np.testing.assert_array_equal(ns.nodes, [0.0, 1.0, 2.0])


def test_nodeset_preserves_input_order():
    ns = osc.build_nodeset([2.0, 0.0, 1.0])
    np.testing.assert_array_equal(ns.nodes, [2.0, 0.0, 1.0])


def test_nodeset_rejects_exact_duplicates():
    with pytest.raises(osc.DuplicateNodeError):
        osc.build_nodeset([0.0, 0.0])


def test_nodeset_rejects_gap_below_relative_threshold():
    # span ~ 1e-16, so the threshold 1e-13 * max(span, 1) = 1e-13 dominates
    with pytest.raises(osc.DuplicateNodeError):
        osc.build_nodeset([0.0, 1e-16])


def test_nodeset_accepts_tiny_gap_on_tiny_span_scaled():
    # same relative layout but shifted far from the threshold
    ns = osc.build_nodeset([0.0, 1e-12])
    assert len(ns) == 2


@pytest.mark.parametrize("bad", [float("nan"), float("inf"), -float("inf")])
def test_nodeset_rejects_non_finite(bad):
    with pytest.raises(osc.NonFiniteInputError):
        osc.build_nodeset([0.0, bad])


def test_nodeset_rejects_empty():
    with pytest.raises(ValueError):
        osc.build_nodeset([])


def test_nodeset_single_node_ok():
    ns = osc.build_nodeset([3.5])
    assert len(ns) == 1
    assert ns.span == 0.0


def test_build_data_rejects_bad_shapes():
    with pytest.raises(osc.ShapeMismatchError):
        osc.build_data([[1.0, 2.0], [3.0]])   # ragged
    with pytest.raises(osc.ShapeMismatchError):
        osc.build_data([1.0, 2.0])            # not a matrix
    with pytest.raises(osc.NonFiniteInputError):
        osc.build_data([[1.0, float("nan")]])


# ---------------------------------------------------------------------------
# compute_weights
# ---------------------------------------------------------------------------

def test_weights_single_node_empty_product():
    ns = osc.build_nodeset([7.0])
    for m in (0, 1, 5):
        w = osc.compute_weights(ns, m)
        np.testing.assert_array_equal(w.delta, [1.0])
        np.testing.assert_array_equal(w.delta_pow, [1.0])


def test_weights_two_nodes():
    w = osc.compute_weights(osc.build_nodeset([0.0, 1.0]), 0)
    np.testing.assert_array_equal(w.delta, [-1.0, 1.0])


def test_weights_three_nodes():
    w = osc.compute_weights(osc.build_nodeset([0.0, 1.0, 2.0]), 0)
    np.testing.assert_array_equal(w.delta, [0.5, -1.0, 0.5])


def test_weights_power_matches_recomputation():
    rng = np.random.default_rng(11)
    for _ in range(20):
        n = int(rng.integers(0, 7))
        m = int(rng.integers(0, 4))
        f = make_problem(rng, n, m)
        w = f.weights
        np.testing.assert_array_equal(w.delta_pow, w.delta ** (m + 1))


def test_weights_overflow_raises():
    tight = osc.build_nodeset([k * 1e-4 for k in range(10)])
    with pytest.raises(osc.WeightOverflowError):
        osc.compute_weights(tight, 30)


def test_weights_m0_match_classical_barycentric():
    # cross-check against the direct product definition, n <= 8
    rng = np.random.default_rng(5)
    for _ in range(30):
        n = int(rng.integers(1, 9))
        f = make_problem(rng, n, 0)
        nodes = f.nodes.nodes
        ref = np.array([
            1.0 / np.prod([nodes[i] - nodes[j] for j in range(n + 1) if j != i])
            for i in range(n + 1)
        ])
        np.testing.assert_allclose(f.weights.delta, ref, rtol=1e-14)


# ---------------------------------------------------------------------------
# power_sums
# ---------------------------------------------------------------------------

def test_power_sums_three_nodes():
    ns = osc.build_nodeset([0.0, 1.0, 2.0])
    s = osc.power_sums(ns, 1, 2)
    assert s[0] == 0.0     # 1/(1-0) + 1/(1-2)
    assert s[1] == 2.0     # 1/1 + 1/1


def test_power_sums_single_node_all_zero():
    ns = osc.build_nodeset([4.0])
    np.testing.assert_array_equal(osc.power_sums(ns, 0, 5), np.zeros(5))


def test_power_sums_first_equals_lagrange_derivative():
    rng = np.random.default_rng(2)
    for _ in range(10):
        n = int(rng.integers(1, 7))
        f = make_problem(rng, n, 1)
        for i in range(n + 1):
            s = osc.power_sums(f.nodes, i, 1)
            assert s[0] == f.basis.lagrange[i, 1]


def test_power_sums_argument_validation():
    ns = osc.build_nodeset([0.0, 1.0])
    with pytest.raises(IndexError):
        osc.power_sums(ns, 2, 1)
    with pytest.raises(ValueError):
        osc.power_sums(ns, 0, 0)


# ---------------------------------------------------------------------------
# basis_derivatives
# ---------------------------------------------------------------------------

def test_basis_two_nodes_m1():
    table = osc.basis_derivatives(osc.build_nodeset([0.0, 1.0]), 1)
    assert table.lagrange[0, 1] == -1.0
    assert table.powered[0, 1] == -2.0
    assert table.lagrange[1, 1] == 1.0
    assert table.powered[1, 1] == 2.0


def test_basis_single_node_trivial_rows():
    table = osc.basis_derivatives(osc.build_nodeset([2.0]), 3)
    np.testing.assert_array_equal(table.lagrange, [[1.0, 0.0, 0.0, 0.0]])
    np.testing.assert_array_equal(table.powered, [[1.0, 0.0, 0.0, 0.0]])


def test_basis_m0_reduces_to_trivial_column():
    table = osc.basis_derivatives(osc.build_nodeset([0.0, 0.5, 2.0]), 0)
    assert table.lagrange.shape == (3, 1)
    np.testing.assert_array_equal(table.lagrange, np.ones((3, 1)))
    np.testing.assert_array_equal(table.powered, np.ones((3, 1)))


def test_basis_column_zero_is_one():
    rng = np.random.default_rng(3)
    for _ in range(10):
        f = make_problem(rng, int(rng.integers(0, 6)), int(rng.integers(0, 5)))
        np.testing.assert_array_equal(f.basis.lagrange[:, 0], 1.0)
        np.testing.assert_array_equal(f.basis.powered[:, 0], 1.0)


def test_basis_chain_rule_exact():
    # first powered derivative is (m+1) times the lagrange one, bit for bit
    rng = np.random.default_rng(4)
    for _ in range(30):
        m = int(rng.integers(1, 6))
        f = make_problem(rng, int(rng.integers(0, 7)), m)
        np.testing.assert_array_equal(
            f.basis.powered[:, 1], (m + 1) * f.basis.lagrange[:, 1]
        )


def test_basis_second_derivative_against_power_sums():
    # l_i'' (x_i) = s_1**2 - s_2, from differentiating the log-derivative
    ns = osc.build_nodeset([-1.0, 0.3, 0.9, 2.0])
    table = osc.basis_derivatives(ns, 2)
    for i in range(4):
        s = osc.power_sums(ns, i, 2)
        assert table.lagrange[i, 2] == pytest.approx(s[0] ** 2 - s[1], rel=1e-15)


# ---------------------------------------------------------------------------
# solve_numerator / solve_denominator
# ---------------------------------------------------------------------------

def test_numerator_cubic_fixture(cubic):
    np.testing.assert_array_equal(cubic.a_table.values, [[0.0, 0.0], [1.0, 1.0]])


def test_numerator_column_zero_is_untouched_data():
    rng = np.random.default_rng(6)
    for _ in range(10):
        f = make_problem(rng, int(rng.integers(0, 6)), int(rng.integers(0, 4)))
        np.testing.assert_array_equal(f.a_table.values[:, 0], f.data.values[:, 0])


def test_numerator_shape_mismatch():
    basis = osc.basis_derivatives(osc.build_nodeset([0.0, 1.0]), 1)
    with pytest.raises(osc.ShapeMismatchError):
        osc.solve_numerator(osc.build_data([[1.0, 2.0, 3.0], [0.0, 0.0, 0.0]]), basis)


def test_denominator_m0_is_all_ones():
    basis = osc.basis_derivatives(osc.build_nodeset([0.0, 1.0, 2.0]), 0)
    b = osc.solve_denominator(0, basis)
    np.testing.assert_array_equal(b.values, np.ones((3, 1)))


def test_denominator_m1_closed_form():
    ns = osc.build_nodeset([0.0, 0.7, 2.0])
    basis = osc.basis_derivatives(ns, 1)
    b = osc.solve_denominator(1, basis)
    np.testing.assert_array_equal(b.values[:, 1], -2.0 * basis.lagrange[:, 1])


def test_denominator_single_node():
    basis = osc.basis_derivatives(osc.build_nodeset([5.0]), 3)
    b = osc.solve_denominator(3, basis)
    np.testing.assert_array_equal(b.values, [[1.0, 0.0, 0.0, 0.0]])


def test_constant_one_identity_exact():
    # numerator of the all-ones data set equals the denominator, bit for bit
    rng = np.random.default_rng(7)
    for _ in range(20):
        n = int(rng.integers(0, 7))
        m = int(rng.integers(0, 5))
        f = make_problem(rng, n, m)
        ones = np.zeros((n + 1, m + 1))
        ones[:, 0] = 1.0
        a = osc.solve_numerator(osc.build_data(ones), f.basis)
        np.testing.assert_array_equal(a.values, f.b_table.values)


# ---------------------------------------------------------------------------
# closed forms
# ---------------------------------------------------------------------------

def test_closed_form_wrong_order():
    f = make_problem(np.random.default_rng(8), 2, 2)
    with pytest.raises(osc.WrongOrderError):
        osc.closed_form_m1(f.data, f.basis)
    g = make_problem(np.random.default_rng(8), 2, 1)
    with pytest.raises(osc.WrongOrderError):
        osc.closed_form_m2(g.data, g.basis)


def test_closed_form_m1_zero_value_leaves_slope():
    ns = osc.build_nodeset([0.0, 1.0])
    basis = osc.basis_derivatives(ns, 1)
    data = osc.build_data([[0.0, 4.0], [0.0, -2.5]])
    a = osc.closed_form_m1(data, basis)
    np.testing.assert_array_equal(a.values[:, 1], [4.0, -2.5])


def test_closed_form_m1_cubic_fixture(cubic):
    a = osc.closed_form_m1(cubic.data, cubic.basis)
    np.testing.assert_array_equal(a.values, [[0.0, 0.0], [1.0, 1.0]])


def test_closed_form_m2_single_node_is_taylor():
    ns = osc.build_nodeset([0.0])
    basis = osc.basis_derivatives(ns, 2)
    a = osc.closed_form_m2(osc.build_data([[1.0, 2.0, 3.0]]), basis)
    np.testing.assert_array_equal(a.values, [[1.0, 2.0, 3.0]])


def test_closed_form_m2_zero_value_and_slope():
    ns = osc.build_nodeset([0.0, 1.0, 3.0])
    basis = osc.basis_derivatives(ns, 2)
    data = osc.build_data([[0.0, 0.0, 7.0], [0.0, 0.0, -1.0], [0.0, 0.0, 0.5]])
    a = osc.closed_form_m2(data, basis)
    np.testing.assert_array_equal(a.values[:, 2], [7.0, -1.0, 0.5])


@pytest.mark.parametrize("m,closed", [(1, osc.closed_form_m1), (2, osc.closed_form_m2)])
def test_closed_form_agrees_with_recursion(m, closed):
    rng = np.random.default_rng(9)
    for _ in range(100):
        f = make_problem(rng, int(rng.integers(0, 7)), m)
        a = closed(f.data, f.basis)
        diff = np.abs(a.values - f.a_table.values)
        assert (diff <= 1e-13 * (1.0 + np.abs(f.a_table.values))).all()


# ---------------------------------------------------------------------------
# build_interpolant
# ---------------------------------------------------------------------------

def test_interpolant_single_node_is_taylor_data():
    f = osc.build_interpolant(
        osc.build_nodeset([0.0]), osc.build_data([[1.0, 2.0, 3.0]])
    )
    np.testing.assert_array_equal(f.a_table.values, [[1.0, 2.0, 3.0]])
    np.testing.assert_array_equal(f.b_table.values, [[1.0, 0.0, 0.0]])
    assert f.degree_bound == 2


def test_interpolant_constant_data_tables_coincide():
    data = np.zeros((4, 3))
    data[:, 0] = 1.0
    f = osc.build_interpolant(
        osc.build_nodeset([-1.0, 0.0, 1.0, 2.0]), osc.build_data(data)
    )
    np.testing.assert_array_equal(f.a_table.values, f.b_table.values)


def test_interpolant_shape_mismatch():
    with pytest.raises(osc.ShapeMismatchError):
        osc.build_interpolant(
            osc.build_nodeset([0.0, 1.0]), osc.build_data([[1.0, 2.0]])
        )


def test_interpolant_is_immutable(cubic):
    with pytest.raises(dataclasses.FrozenInstanceError):
        cubic.order = 3
    for arr in (cubic.nodes.nodes, cubic.a_table.values, cubic.b_table.values,
                cubic.weights.delta, cubic.basis.lagrange):
        assert not arr.flags.writeable
        with pytest.raises(ValueError):
            arr[0] = 0.0


def test_permutation_equivariance_exact():
    # permuting the node order permutes every table row identically
    rng = np.random.default_rng(10)
    for _ in range(20):
        n = int(rng.integers(1, 7))
        m = int(rng.integers(0, 4))
        f = make_problem(rng, n, m)
        perm = rng.permutation(n + 1)
        g = osc.build_interpolant(
            osc.build_nodeset(f.nodes.nodes[perm]),
            osc.build_data(f.data.values[perm]),
        )
        np.testing.assert_array_equal(f.a_table.values[perm], g.a_table.values)
        np.testing.assert_array_equal(f.b_table.values[perm], g.b_table.values)
        np.testing.assert_array_equal(f.weights.delta[perm], g.weights.delta)
        np.testing.assert_array_equal(f.basis.lagrange[perm], g.basis.lagrange)
        np.testing.assert_array_equal(f.basis.powered[perm], g.basis.powered)


# ---------------------------------------------------------------------------
# binomial guard
# ---------------------------------------------------------------------------

def test_binomial_rows_values():
    rows = binomial_rows(5)
    assert rows[5] == (1, 5, 10, 10, 5, 1)


def test_binomial_rows_order_guard():
    assert binomial_rows(MAX_ORDER)[MAX_ORDER][0] == 1
    with pytest.raises(osc.OrderTooLargeError):
        binomial_rows(MAX_ORDER + 1)
