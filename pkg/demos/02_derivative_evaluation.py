"""Derivatives of the interpolant at arbitrary points.

Jet propagation gives exact-to-rounding derivatives of any order; compare
against central finite differences and show that orders past the
polynomial degree vanish identically.
"""

import numpy as np

import osculant as osc

# sin-like data: match sin and cos at three nodes, second derivatives too
xs = np.array([0.0, 1.0, 2.5])
data = np.column_stack([np.sin(xs), np.cos(xs), -np.sin(xs)])
f = osc.build_interpolant(osc.build_nodeset(xs), osc.build_data(data))
print(f"interpolant of sin with (f, f', f'') at 3 nodes, degree <= {f.degree_bound}")

print("\n  x     p(x)-sin(x)   p'(x)-cos(x)")
for x in np.linspace(0.0, 2.5, 6):
    v = osc.eval_direct(f, x) - np.sin(x)
    s = osc.eval_derivative(f, x, 1) - np.cos(x)
    print(f"  {x:4.2f}  {v: .3e}    {s: .3e}")

x = 1.7
print(f"\nat x = {x}:")
for p in range(4):
    exact = osc.eval_derivative(f, x, p)
    if p == 1:
        fd = osc.finite_difference(lambda t: osc.eval_direct(f, t), x, 1e-6)
        print(f"  order {p}: {exact: .12f}   central difference {fd: .12f}")
    else:
        print(f"  order {p}: {exact: .12f}")

deg = f.degree_bound
print(f"\nderivative of order {deg + 1} (> degree {deg}): "
      f"{osc.eval_derivative(f, x, deg + 1)!r}")
