"""Cross-checking against the extended-precision reference solver.

The confluent Vandermonde oracle fits the same polynomial by a completely
different route (monomial basis, Gaussian elimination at 113 mantissa
bits), so agreement is strong evidence both sides are right.
"""

import numpy as np

import osculant as osc
from osculant.problems import problem_to_interpolant, random_problem

rng = np.random.default_rng(2024)
problem = random_problem(rng, n=3, m=2, label="demo")
f = problem_to_interpolant(problem)
fit = osc.confluent_vandermonde_fit(f.nodes, f.data)

print(f"random problem: {len(f.nodes)} nodes, m = {f.order}, "
      f"degree <= {f.degree_bound}")
print(f"oracle residual (scale-relative): {fit.residual:.3e}")
print(f"oracle monomial coefficients: {[round(float(c), 6) for c in fit.coeffs]}")

lo, hi = f.nodes.nodes.min(), f.nodes.nodes.max()
grid = np.linspace(lo, hi, 100)
reference = np.array([osc.poly_eval_deriv(fit, x, 0) for x in grid])
scale = 1.0 + np.abs(reference).max()

for method in ("direct", "barycentric"):
    dev = np.abs(osc.eval_grid(f, grid, method) - reference).max() / scale
    print(f"max deviation vs oracle, {method:12s}: {dev:.3e}")

dev = max(
    abs(osc.eval_derivative(f, x, p) - osc.poly_eval_deriv(fit, x, p))
    for x in grid[::10] for p in range(f.order + 1)
)
print(f"max derivative deviation (orders 0..{f.order}): {dev:.3e}")
print("\nsame check, one command: `osculant verify --seed 2024`")
