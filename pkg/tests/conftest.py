import numpy as np
import pytest

import osculant as osc


@pytest.fixture
def cubic():
    """Nodes {0, 1}, m=1, data sampled from x**3.

    By uniqueness the interpolant reproduces x**3 exactly; its tables are
    small integers, so equality checks can be exact.
    """
    nodes = osc.build_nodeset([0.0, 1.0])
    data = osc.build_data([[0.0, 0.0], [1.0, 3.0]])
    return osc.build_interpolant(nodes, data)


def make_problem(rng, n, m, min_gap=0.1):
    """Random problem: nodes in [-2, 2] with a minimum gap, data in [-10, 10].

    A wider gap keeps the quotient form's error amplification (the
    generalized Lebesgue function of the node set) small; tight clusters
    are legitimate inputs but poison any fixed agreement tolerance.
    """
    while True:
        nodes = rng.uniform(-2.0, 2.0, n + 1)
        if n == 0 or np.diff(np.sort(nodes)).min() >= min_gap:
            break
    data = rng.uniform(-10.0, 10.0, (n + 1, m + 1))
    return osc.build_interpolant(osc.build_nodeset(nodes), osc.build_data(data))
