"""Fitting values plus derivatives at every node.

Build an interpolant that matches f and f' at two nodes, confirm it
reproduces the underlying cubic, and show the single-node case collapsing
to a Taylor polynomial.
"""

import numpy as np

import osculant as osc

# f(x) = x^3 sampled with first derivatives at x = 0 and x = 1
nodes = osc.build_nodeset([0.0, 1.0])
data = osc.build_data([
    [0.0, 0.0],   # f(0), f'(0)
    [1.0, 3.0],   # f(1), f'(1)
])
f = osc.build_interpolant(nodes, data)

print("cubic through value+slope data at {0, 1}")
print(f"  degree bound: {f.degree_bound}")
print(f"  numerator table:\n{f.a_table.values}")
print(f"  denominator table:\n{f.b_table.values}")

print("\n  x      direct        barycentric   x^3")
for x in np.linspace(-0.5, 1.5, 9):
    d = osc.eval_direct(f, x)
    b = osc.eval_barycentric(f, x)
    print(f"  {x:5.2f}  {d:12.9f}  {b:12.9f}  {x**3:12.9f}")

# A single node degenerates to the Taylor polynomial of the data.
taylor = osc.build_interpolant(
    osc.build_nodeset([2.0]),
    osc.build_data([[1.0, -0.5, 4.0]]),   # value, first, second derivative
)
print("\nsingle node at x=2 with data (1, -0.5, 4):")
print("  h      interpolant   1 - 0.5 h + 2 h^2")
for h in (0.1, 0.5, 1.0):
    got = osc.eval_direct(taylor, 2.0 + h)
    expected = 1.0 - 0.5 * h + 2.0 * h * h
    print(f"  {h:4.1f}  {got:12.6f}  {expected:12.6f}")
