"""Truncated four-variable power series (jets).

A :class:`Jet4` stores the dense coefficient array of a polynomial in
four variables truncated at a fixed maximum degree per variable; entry
``[i, j, k, l]`` is the coefficient of ``u^i s^j v^k w^l``. Ring
operations truncate products back to those orders, so a jet carries
exactly the Taylor data needed to read one coefficient of an analytic
function of the four variables.

Reciprocal and square root use the graded coefficient recursion
(forward substitution on one variable at a time, with lower-dimensional
truncated convolutions underneath). Unlike Newton iteration on jets,
the recursion never forms large pre-convergence transients, so it stays
accurate even when the result's coefficients grow quickly with degree.

Jets are immutable values; orders are small in practice (per-variable
degree below ten), so dense storage is the simple and fast choice.
"""

from __future__ import annotations

from dataclasses import dataclass
from numbers import Real

import numpy as np
from scipy.signal import fftconvolve

Orders = tuple[int, int, int, int]


@dataclass(frozen=True)
class Jet4:
    """Dense truncated power series in four variables."""

    orders: Orders
    coeffs: np.ndarray

    def __post_init__(self) -> None:
        if len(self.orders) != 4 or any(o < 0 for o in self.orders):
            raise ValueError(f"orders must be four non-negative integers, got {self.orders}")
        expected = tuple(o + 1 for o in self.orders)
        if self.coeffs.shape != expected:
            raise ValueError(
                f"coefficient array shape {self.coeffs.shape} does not match orders {self.orders}"
            )

    @staticmethod
    def constant(value: float, orders: Orders) -> "Jet4":
        coeffs = np.zeros(tuple(o + 1 for o in orders))
        coeffs[(0, 0, 0, 0)] = value
        return Jet4(orders, coeffs)

    @staticmethod
    def variable(axis: int, orders: Orders) -> "Jet4":
        """The jet of the bare variable along ``axis`` (0..3)."""
        if orders[axis] < 1:
            raise ValueError(f"axis {axis} has order {orders[axis]} < 1")
        coeffs = np.zeros(tuple(o + 1 for o in orders))
        idx = [0, 0, 0, 0]
        idx[axis] = 1
        coeffs[tuple(idx)] = 1.0
        return Jet4(orders, coeffs)

    def __add__(self, other):
        if isinstance(other, Real):
            c = self.coeffs.copy()
            c[(0, 0, 0, 0)] += other
            return Jet4(self.orders, c)
        return jet_add(self, other)

    __radd__ = __add__

    def __neg__(self):
        return Jet4(self.orders, -self.coeffs)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        return jet_mul(self, other)

    __rmul__ = __mul__


def _check_orders(a: Jet4, b: Jet4) -> None:
    if a.orders != b.orders:
        raise ValueError(f"order mismatch: {a.orders} vs {b.orders}")


def jet_add(a: Jet4, b: Jet4) -> Jet4:
    _check_orders(a, b)
    return Jet4(a.orders, a.coeffs + b.coeffs)


def jet_scale(a: Jet4, c: float) -> Jet4:
    return Jet4(a.orders, a.coeffs * float(c))


def _mul_nd(a: np.ndarray, b: np.ndarray, shape: tuple[int, ...]) -> np.ndarray:
    """Truncated convolution of two coefficient arrays of equal rank."""
    if a.ndim == 0:
        return a * b
    full = fftconvolve(a, b)
    return full[tuple(slice(0, s) for s in shape)]


def _recip_nd(a: np.ndarray) -> np.ndarray:
    if a.ndim == 0:
        if a == 0.0:
            raise ValueError("reciprocal requires a nonzero constant term")
        return np.asarray(1.0 / a)
    inner = a.shape[1:]
    r = np.zeros_like(a, dtype=float)
    r0 = _recip_nd(a[0])
    r[0] = r0
    for i in range(1, a.shape[0]):
        acc = _mul_nd(a[1], r[i - 1], inner).copy()
        for j in range(2, i + 1):
            acc += _mul_nd(a[j], r[i - j], inner)
        r[i] = -_mul_nd(r0, acc, inner)
    return r


def _sqrt_nd(a: np.ndarray) -> np.ndarray:
    if a.ndim == 0:
        if a <= 0.0:
            raise ValueError(f"square root requires a positive constant term, got {float(a)}")
        return np.sqrt(a)
    inner = a.shape[1:]
    q = np.zeros_like(a, dtype=float)
    q[0] = _sqrt_nd(a[0])
    # solve 2 q0 * q_i = a_i - sum_{0<j<i} q_j q_{i-j} for each slice
    half_iq0 = 0.5 * _recip_nd(q[0])
    for i in range(1, a.shape[0]):
        acc = np.array(a[i], dtype=float, copy=True)
        for j in range(1, i):
            acc -= _mul_nd(q[j], q[i - j], inner)
        q[i] = _mul_nd(half_iq0, acc, inner)
    return q


def jet_mul(a: Jet4, b) -> Jet4:
    """Truncated product; ``b`` may be a jet of matching orders or a scalar."""
    if isinstance(b, Real):
        return jet_scale(a, b)
    _check_orders(a, b)
    return Jet4(a.orders, np.ascontiguousarray(_mul_nd(a.coeffs, b.coeffs, a.coeffs.shape)))


def jet_reciprocal(a: Jet4) -> Jet4:
    """Jet ``b`` with ``a*b = 1`` up to truncation."""
    if float(a.coeffs[(0, 0, 0, 0)]) == 0.0:
        raise ValueError("reciprocal requires a nonzero constant term")
    return Jet4(a.orders, _recip_nd(a.coeffs))


def jet_sqrt(a: Jet4) -> Jet4:
    """Jet ``b`` with ``b*b = a`` up to truncation."""
    c0 = float(a.coeffs[(0, 0, 0, 0)])
    if c0 <= 0.0:
        raise ValueError(f"square root requires a positive constant term, got {c0}")
    return Jet4(a.orders, _sqrt_nd(a.coeffs))


def jet_inv_sqrt(a: Jet4) -> Jet4:
    """Jet ``b`` with ``a * b * b = 1`` up to truncation."""
    return jet_reciprocal(jet_sqrt(a))


def coefficient(a: Jet4, i: int, j: int, k: int, l: int) -> float:
    """Stored coefficient of ``u^i s^j v^k w^l``."""
    idx = (i, j, k, l)
    for axis, (q, o) in enumerate(zip(idx, a.orders)):
        if not (0 <= q <= o):
            raise IndexError(f"index {q} out of range for axis {axis} with order {o}")
    return float(a.coeffs[idx])
