"""Truncated and sparse power-series arithmetic.

DenseSeries holds complex Taylor coefficients 0..N with explicit truncation
degree.  SparseSeries holds (exponent, coefficient) pairs with strictly
increasing integer exponents; exponents may be arbitrarily large Python
integers, which is what makes the lacunary constructions representable.

The log/exp conversions use the classical O(N^2) convolution recurrences
derived from p*F' = p' and p' = F'*p.  They are numerically transparent and
fast enough for every truncation degree this package needs (N <= 2**16).
"""

from __future__ import annotations

import cmath
import math
from typing import Sequence, Tuple, Union

import numpy as np

from .errors import NearZeroConstantTerm, OutsideDisc
from .numerics import binary_power

DEFAULT_EPS0 = 1e-300


class DenseSeries:
    """Complex coefficients c[0..N]; immutable, N = truncation_degree."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Union[Sequence[complex], np.ndarray]):
        arr = np.asarray(coeffs, dtype=np.complex128).copy()
        if arr.ndim != 1 or arr.size == 0:
            raise ValueError("coeffs must be a nonempty 1-d sequence")
        if not np.isfinite(arr.view(np.float64)).all():
            raise ValueError("coefficients must be finite")
        arr.setflags(write=False)
        self.coeffs = arr

    @property
    def truncation_degree(self) -> int:
        return self.coeffs.size - 1

    def resized(self, degree: int) -> "DenseSeries":
        """Copy truncated or zero-padded to the given degree."""
        if degree < 0:
            raise ValueError("degree must be >= 0")
        n = self.coeffs.size
        if degree + 1 <= n:
            return DenseSeries(self.coeffs[: degree + 1])
        out = np.zeros(degree + 1, dtype=np.complex128)
        out[:n] = self.coeffs
        return DenseSeries(out)

    def __setattr__(self, name, value):
        if hasattr(self, "coeffs"):
            raise AttributeError("DenseSeries is immutable")
        object.__setattr__(self, name, value)

    def __eq__(self, other) -> bool:
        return isinstance(other, DenseSeries) and np.array_equal(
            self.coeffs, other.coeffs
        )

    def __hash__(self):
        return hash(self.coeffs.tobytes())

    def __repr__(self) -> str:
        head = ", ".join(f"{c:.6g}" for c in self.coeffs[:4])
        tail = ", ..." if self.coeffs.size > 4 else ""
        return f"DenseSeries([{head}{tail}], degree={self.truncation_degree})"


class SparseSeries:
    """Exponent/coefficient pairs, exponents strictly increasing and >= 1.

    Zero coefficients are dropped on construction.  An empty series is the
    zero function.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Sequence[Tuple[int, complex]]):
        cleaned = []
        last = 0
        for exponent, coefficient in terms:
            e = int(exponent)
            c = complex(coefficient)
            if e < 1:
                raise ValueError("exponents must be >= 1")
            if e <= last:
                raise ValueError("exponents must be strictly increasing")
            if not (math.isfinite(c.real) and math.isfinite(c.imag)):
                raise ValueError("coefficients must be finite")
            last = e
            if c != 0:
                cleaned.append((e, c))
        object.__setattr__(self, "terms", tuple(cleaned))

    @property
    def exponents(self) -> Tuple[int, ...]:
        return tuple(e for e, _ in self.terms)

    @property
    def max_exponent(self) -> int:
        """Largest stored exponent; 0 for the zero series."""
        return self.terms[-1][0] if self.terms else 0

    def abs_coeff_sum(self) -> float:
        return math.fsum(abs(c) for _, c in self.terms)

    def __setattr__(self, name, value):
        raise AttributeError("SparseSeries is immutable")

    def __eq__(self, other) -> bool:
        return isinstance(other, SparseSeries) and self.terms == other.terms

    def __hash__(self):
        return hash(self.terms)

    def __repr__(self) -> str:
        return f"SparseSeries({len(self.terms)} terms, max_exp={self.max_exponent})"


AnySeries = Union[DenseSeries, SparseSeries]


def derivative(s: DenseSeries) -> DenseSeries:
    """Termwise derivative; degree drops by one (constant maps to [0])."""
    c = s.coeffs
    if c.size == 1:
        return DenseSeries([0.0])
    n = np.arange(1, c.size)
    return DenseSeries(n * c[1:])


def integrate(s: DenseSeries, constant: complex = 0.0) -> DenseSeries:
    """Termwise antiderivative with the given constant term; degree + 1."""
    c = s.coeffs
    out = np.empty(c.size + 1, dtype=np.complex128)
    out[0] = constant
    out[1:] = c / np.arange(1, c.size + 1)
    return DenseSeries(out)


def _branch_log(b0: complex, branch_base: complex) -> complex:
    """Logarithm of b0 on the branch whose imaginary part is nearest the
    imaginary part of branch_base; principal branch for the default 0."""
    principal = cmath.log(b0)
    shift = round((branch_base.imag - principal.imag) / (2.0 * math.pi))
    return principal + complex(0.0, 2.0 * math.pi * shift)


def log_series(
    p: DenseSeries, branch_base: complex = 0j, eps0: float = DEFAULT_EPS0
) -> DenseSeries:
    """Taylor coefficients of log(p) up to the truncation degree of p.

    Uses the recurrence from p*F' = p':

        a_n = (n*b_n - sum_{k=1}^{n-1} k*a_k*b_{n-k}) / (n*b_0)

    Raises NearZeroConstantTerm when |b_0| < eps0 (the logarithm would be
    ill conditioned; certified inputs always have Re b_0 > 0).
    """
    b = p.coeffs
    b0 = complex(b[0])
    if abs(b0) < eps0:
        raise NearZeroConstantTerm(
            f"|constant term| = {abs(b0):.3e} below threshold {eps0:.3e}"
        )
    n_max = p.truncation_degree
    a = np.zeros(n_max + 1, dtype=np.complex128)
    a[0] = _branch_log(b0, complex(branch_base))
    ka = np.zeros(n_max + 1, dtype=np.complex128)  # ka[k] = k*a[k]
    for n in range(1, n_max + 1):
        conv = np.dot(ka[1:n], b[n - 1:0:-1]) if n > 1 else 0.0
        a[n] = (n * b[n] - conv) / (n * b0)
        ka[n] = n * a[n]
    return DenseSeries(a)


def exp_series(f: DenseSeries) -> DenseSeries:
    """Taylor coefficients of exp(f) up to the truncation degree of f.

    Uses the recurrence from p' = F'*p:  n*b_n = sum_{k=1}^{n} k*a_k*b_{n-k}.
    """
    a = f.coeffs
    n_max = f.truncation_degree
    b = np.zeros(n_max + 1, dtype=np.complex128)
    b[0] = cmath.exp(complex(a[0]))
    ka = np.arange(n_max + 1) * a
    for n in range(1, n_max + 1):
        b[n] = np.dot(ka[1 : n + 1], b[:n][::-1]) / n
    return DenseSeries(b)


def densify(s: SparseSeries, degree: int) -> DenseSeries:
    """Dense series of the given degree holding the sparse terms with
    exponent <= degree."""
    if degree < 0:
        raise ValueError("degree must be >= 0")
    out = np.zeros(degree + 1, dtype=np.complex128)
    for e, c in s.terms:
        if e > degree:
            break
        out[e] = c
    return DenseSeries(out)


def evaluate(s: AnySeries, z: complex) -> complex:
    """Point value on the closed unit disc.

    Dense series use Horner evaluation; sparse series sum coefficient *
    z**exponent with binary powering per exponent, so arbitrarily large
    exponents are fine (the powers underflow gracefully for |z| < 1).
    """
    z = complex(z)
    if abs(z) > 1.0 + 1e-15:
        raise OutsideDisc(f"|z| = {abs(z):.6f} > 1")
    if isinstance(s, DenseSeries):
        acc = 0j
        for c in s.coeffs[::-1]:
            acc = acc * z + c
        return complex(acc)
    acc = 0j
    for e, c in s.terms:
        acc += c * binary_power(z, e)
    return acc
