"""Certified constructors for holomorphic functions with positive real part
on the unit disc.

Two analytic certification routes are implemented, and only these:

* ByConstruction: an atomic Herglotz kernel sum i*c + sum w_j*(z_j+z)/(z_j-z)
  with positive weights has positive real part term by term.
* ByImaginaryBound: p = exp(F) for a sparse F whose coefficient magnitudes
  sum to B < pi/2, so |Im F| <= B and Re p = e^{Re F} * cos(Im F) > 0.

Numeric grid sampling (certify_numeric) is a diagnostic cross-check only; a
finite grid can never prove positivity on the whole disc.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Dict, Optional, Sequence, Tuple

import numpy as np

from .errors import ImaginaryBoundViolated, InvalidMeasure, OutsideDisc
from .series import DenseSeries, SparseSeries, densify, exp_series, log_series

DEFAULT_MARGIN = 1e-9


@dataclass(frozen=True)
class HerglotzSpec:
    """Atomic positive measure on the circle plus an imaginary constant.

    atoms: (angle in [0, 2*pi), weight > 0) pairs, at least one.
    im_p0: imaginary part of the value at the origin.
    """

    atoms: Tuple[Tuple[float, float], ...]
    im_p0: float = 0.0

    def __init__(self, atoms: Sequence[Tuple[float, float]], im_p0: float = 0.0):
        if len(atoms) == 0:
            raise InvalidMeasure("at least one atom required")
        norm = []
        for theta, weight in atoms:
            w = float(weight)
            if not (w > 0.0) or not math.isfinite(w):
                raise InvalidMeasure(f"weight {w!r} must be strictly positive")
            norm.append((float(theta) % (2.0 * math.pi), w))
        object.__setattr__(self, "atoms", tuple(norm))
        object.__setattr__(self, "im_p0", float(im_p0))

    @property
    def total_mass(self) -> float:
        return math.fsum(w for _, w in self.atoms)


@dataclass(frozen=True)
class ByConstruction:
    """Positivity holds because every kernel term has positive real part."""


@dataclass(frozen=True)
class ByImaginaryBound:
    """Positivity holds because |Im log p| <= bound < pi/2."""

    bound: float


@dataclass(frozen=True)
class Mobius:
    pass


@dataclass(frozen=True)
class Herglotz:
    spec: HerglotzSpec


@dataclass(frozen=True)
class LacunaryExp:
    series: SparseSeries


@dataclass
class CertReport:
    """Result of sampling Re p on a polar grid (diagnostic, not a proof)."""

    min_re: float
    argmin_radius: float
    argmin_theta: float
    radial_steps: int
    angular_steps: int
    passed: bool


class CaratheodoryFunction:
    """A function with positive real part together with its certificate.

    Taylor and log-Taylor coefficients are materialized lazily per requested
    truncation degree and cached.  Cache fills are idempotent (same key, same
    value), so unsynchronized concurrent first access is harmless.
    """

    def __init__(self, construction, certificate, spec_dict: Optional[Dict] = None):
        self.construction = construction
        self.certificate = certificate
        self.spec_dict = spec_dict or {"type": "lacunary"}
        self.schedule = None  # set by the gauge-adapted builder
        self._taylor_cache: Dict[int, DenseSeries] = {}
        self._log_cache: Dict[int, DenseSeries] = {}

    # -- coefficient access ------------------------------------------------

    def taylor(self, degree: int) -> DenseSeries:
        """Taylor coefficients of p to the given truncation degree."""
        got = self._taylor_cache.get(degree)
        if got is None:
            got = self._materialize_taylor(degree)
            self._taylor_cache[degree] = got
        return got

    def log_taylor(self, degree: int) -> DenseSeries:
        """Taylor coefficients of log(p) to the given truncation degree."""
        got = self._log_cache.get(degree)
        if got is None:
            got = self._materialize_log(degree)
            self._log_cache[degree] = got
        return got

    def log_sparse(self) -> Optional[SparseSeries]:
        """Exact sparse log-coefficients when p = exp(sparse F), else None."""
        if isinstance(self.construction, LacunaryExp):
            return self.construction.series
        return None

    def _materialize_taylor(self, degree: int) -> DenseSeries:
        c = self.construction
        if isinstance(c, Mobius):
            out = np.full(degree + 1, 2.0, dtype=np.complex128)
            out[0] = 1.0
            return DenseSeries(out)
        if isinstance(c, Herglotz):
            thetas = np.array([t for t, _ in c.spec.atoms])
            weights = np.array([w for _, w in c.spec.atoms])
            out = np.empty(degree + 1, dtype=np.complex128)
            out[0] = c.spec.total_mass + 1j * c.spec.im_p0
            if degree >= 1:
                n = np.arange(1, degree + 1)
                # b_n = 2 * sum_j w_j * conj(zeta_j)^n
                out[1:] = 2.0 * (np.exp(-1j * np.outer(n, thetas)) @ weights)
            return DenseSeries(out)
        return exp_series(densify(c.series, degree))

    def _materialize_log(self, degree: int) -> DenseSeries:
        c = self.construction
        if isinstance(c, Mobius):
            out = np.zeros(degree + 1, dtype=np.complex128)
            odd = np.arange(1, degree + 1, 2)
            out[odd] = 2.0 / odd
            return DenseSeries(out)
        if isinstance(c, LacunaryExp):
            return densify(c.series, degree)
        return log_series(self.taylor(degree))

    # -- point evaluation ----------------------------------------------------

    def __call__(self, z: complex) -> complex:
        z = complex(z)
        if abs(z) > 1.0 + 1e-15:
            raise OutsideDisc(f"|z| = {abs(z):.6f} > 1")
        c = self.construction
        if isinstance(c, Mobius):
            return (1.0 + z) / (1.0 - z)
        if isinstance(c, Herglotz):
            acc = 1j * c.spec.im_p0
            for theta, w in c.spec.atoms:
                zeta = cmath.exp(1j * theta)
                acc += w * (zeta + z) / (zeta - z)
            return acc
        from .series import evaluate  # local import keeps module load light

        return cmath.exp(evaluate(c.series, z))

    def __repr__(self) -> str:
        return (
            f"CaratheodoryFunction({type(self.construction).__name__}, "
            f"{self.certificate!r})"
        )


def mobius() -> CaratheodoryFunction:
    """The function (1+z)/(1-z); its log-coefficients are 2/n at odd n."""
    return CaratheodoryFunction(Mobius(), ByConstruction(), {"type": "mobius"})


def from_herglotz(spec: HerglotzSpec) -> CaratheodoryFunction:
    """Kernel sum p(z) = i*im_p0 + sum_j w_j*(zeta_j+z)/(zeta_j-z).

    Positive by construction; Taylor coefficients are available in closed
    form (b_0 = i*im_p0 + sum w_j, b_n = 2*sum_j w_j*zeta_j^(-n)).
    """
    spec_dict = {
        "type": "herglotz",
        "atoms": [{"theta": t, "weight": w} for t, w in spec.atoms],
        "im_p0": spec.im_p0,
    }
    return CaratheodoryFunction(Herglotz(spec), ByConstruction(), spec_dict)


def from_lacunary(
    f: SparseSeries, margin: float = DEFAULT_MARGIN
) -> CaratheodoryFunction:
    """p = exp(F) for a sparse F with sum of |coefficients| < pi/2 - margin.

    The coefficient-magnitude sum bounds |Im F| on the closed disc, which
    keeps the image of p inside the right half plane.  Raises
    ImaginaryBoundViolated when the sufficient condition fails.
    """
    bound = f.abs_coeff_sum()
    if bound >= math.pi / 2.0 - margin:
        raise ImaginaryBoundViolated(
            f"sum of |coefficients| = {bound:.12g} reaches pi/2 - {margin:g}"
        )
    spec_dict = {
        "type": "lacunary",
        "terms": [
            {"exponent": e, "re": c.real, "im": c.imag} for e, c in f.terms
        ],
    }
    return CaratheodoryFunction(LacunaryExp(f), ByImaginaryBound(bound), spec_dict)


def certify_numeric(
    p: CaratheodoryFunction, radial_steps: int, angular_steps: int
) -> CertReport:
    """Sample Re p on a polar grid with r <= 0.999 and report the minimum.

    Advisory only; the analytic certificate attached to p is authoritative.
    """
    if radial_steps < 1 or angular_steps < 1:
        raise ValueError("grid steps must be >= 1")
    min_re = math.inf
    arg_r = arg_t = 0.0
    for i in range(1, radial_steps + 1):
        r = 0.999 * i / radial_steps
        for j in range(angular_steps):
            theta = 2.0 * math.pi * j / angular_steps
            value = p(r * cmath.exp(1j * theta))
            if value.real < min_re:
                min_re = value.real
                arg_r, arg_t = r, theta
    return CertReport(
        min_re=min_re,
        argmin_radius=arg_r,
        argmin_theta=arg_t,
        radial_steps=radial_steps,
        angular_steps=angular_steps,
        passed=min_re > 0.0,
    )
