"""Truncated derivative (jet) arithmetic.

A :class:`Jet` carries the value and the first ``p`` derivatives of a
quantity at a fixed point: ``coeffs = (f(x), f'(x), ..., f^(p)(x))``.
Sums add componentwise, products follow the Leibniz rule

    ``(f g)^(k) = sum_j C(k, j) f^(j) g^(k-j)``,

and integer powers repeat the product.  Propagating jets through an
expression yields its exact derivatives without symbolic differentiation.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import binomial_rows


@dataclass(frozen=True)
class Jet:
    """Value and derivatives of one quantity at one point."""

    coeffs: np.ndarray

    @property
    def order(self) -> int:
        return self.coeffs.size - 1

    @staticmethod
    def constant(value: float, order: int) -> "Jet":
        c = np.zeros(order + 1)
        c[0] = value
        return Jet(c)

    @staticmethod
    def linear(value: float, slope: float, order: int) -> "Jet":
        """Jet of an affine function: all derivatives past the first vanish."""
        c = np.zeros(order + 1)
        c[0] = value
        if order >= 1:
            c[1] = slope
        return Jet(c)

    def __add__(self, other: "Jet") -> "Jet":
        return Jet(self.coeffs + other.coeffs)

    def __mul__(self, other):
        if isinstance(other, Jet):
            p = self.order
            if other.order != p:
                raise ValueError("jet orders differ")
            binom = binomial_rows(p)
            out = np.empty(p + 1)
            for k in range(p + 1):
                acc = 0.0
                for j in range(k + 1):
                    acc += binom[k][j] * self.coeffs[j] * other.coeffs[k - j]
                out[k] = acc
            return Jet(out)
        return Jet(self.coeffs * float(other))

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "Jet":
        if exponent < 0:
            raise ValueError("only non-negative integer powers are supported")
        result = Jet.constant(1.0, self.order)
        for _ in range(exponent):
            result = result * self
        return result
