"""Extremal lacunary constructions that exhaust the quadratic growth ceiling.

build_p_star assembles exp((i/2) * sum z^(2^k)/k^2): a dyadic exponent series
whose means at the adapted radii r_k = exp(-2^-k) grow like 4^k/k^4, beating
every power gauge below the ceiling.

choose_schedule / build_p_phi generalize the construction to an arbitrary
gauge that vanishes relative to the ceiling: exponents n_k are chosen
minimally with gauge(exp(-1/n_k)) <= n_k^2 / k^8, which forces the means to
overtake the gauge by a factor k^4 along exp(-1/n_k).

Schedule exponents routinely leave the double range (for gauges close to the
ceiling they reach exp(k^4) and beyond), so everything downstream of the
search works either with exact integers in log space or with ordinary floats,
never with rounded radii.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, List, Optional, Sequence, Tuple, Union

from .caratheodory import CaratheodoryFunction, from_lacunary
from .errors import (
    ExponentOverflow,
    GaugeHypothesisError,
    ParseError,
    RadiusOutOfRange,
    SearchBudgetExceeded,
)
from .means import parseval_log_value_at_inv_n, parseval_value_at_neglog
from .numerics import DIRECT_N_LIMIT, gap_from_inv_n, neglog_gap_from_inv_n
from .series import SparseSeries

TWO_PI = 2.0 * math.pi

# Means floor coefficient along the adapted radii: pi * e^-2 / 2.
FLOOR_COEFF = math.pi * math.exp(-2.0) / 2.0

MAX_STAR_INDEX = 62  # exponent 2^k must fit a 64-bit signed width

_LINEAR_BRACKET = 4096  # scan brackets up to this width instead of bisecting
_SCAN_CAP = 10 ** 7  # refuse unbounded linear scans over erratic gauges
_CALLABLE_DEFAULT_BUDGET = 10 ** 15


@dataclass(frozen=True)
class Gauge:
    """Comparison function (1-r)^(-a) * log(e/(1-r))^(-b) on (0, 1)."""

    a: float
    b: float = 0.0

    def __post_init__(self):
        if not (math.isfinite(self.a) and math.isfinite(self.b)):
            raise ValueError("gauge parameters must be finite")
        if self.a < 0.0 or self.b < 0.0:
            raise ValueError("gauge parameters must be >= 0")

    @property
    def satisfies_hypothesis(self) -> bool:
        """True when the gauge vanishes relative to (1-r)^-2 as r -> 1."""
        return self.a < 2.0 or (self.a == 2.0 and self.b > 0.0)

    def value(self, r: float) -> float:
        if not (0.0 < r < 1.0):
            raise RadiusOutOfRange(f"radius {r!r} not in (0, 1)")
        return self.value_from_gap(1.0 - r)

    def value_from_gap(self, gap: float) -> float:
        """Gauge value expressed through gap = 1 - r (accurate near r = 1)."""
        return gap ** (-self.a) * (1.0 - math.log(gap)) ** (-self.b)

    def log_value_from_neglog_gap(self, neglog_gap: float) -> float:
        """log of the gauge given L = -log(1 - r); exact at any scale."""
        return self.a * neglog_gap - self.b * math.log1p(neglog_gap)

    def label(self) -> str:
        if self.b == 0.0:
            return f"pow:{self.a!r}"
        return f"powlog:{self.a!r},{self.b!r}"

    @classmethod
    def from_string(cls, text: str) -> "Gauge":
        """Parse "pow:<a>" or "powlog:<a>,<b>" (locale-independent floats)."""
        if text.startswith("pow:"):
            body, offset = text[4:], 4
            parts = [body]
        elif text.startswith("powlog:"):
            body, offset = text[7:], 7
            parts = body.split(",")
            if len(parts) != 2:
                raise ParseError(
                    f"powlog gauge needs two comma-separated numbers at "
                    f"position {offset}: {text!r}"
                )
        else:
            raise ParseError(
                f"gauge string must start with 'pow:' or 'powlog:' "
                f"(position 0): {text!r}"
            )
        numbers = []
        pos = offset
        for part in parts:
            try:
                numbers.append(float(part))
            except ValueError:
                raise ParseError(
                    f"invalid number {part!r} at position {pos} in {text!r}"
                ) from None
            pos += len(part) + 1
        if len(numbers) == 1:
            return cls(numbers[0], 0.0)
        return cls(numbers[0], numbers[1])


class CallableGauge:
    """In-process wrapper for an arbitrary positive gauge r -> value.

    No structural growth check is possible, so schedule searches are capped
    by a budget and only reach radii representable as doubles.
    """

    def __init__(self, fn: Callable[[float], float]):
        self._fn = fn

    def value(self, r: float) -> float:
        if not (0.0 < r < 1.0):
            raise RadiusOutOfRange(f"radius {r!r} not in (0, 1)")
        v = float(self._fn(r))
        if not (v > 0.0 and math.isfinite(v)):
            raise ValueError(f"gauge value {v!r} must be positive and finite")
        return v

    def value_from_gap(self, gap: float) -> float:
        return self.value(1.0 - gap)


GaugeLike = Union[Gauge, CallableGauge]


@dataclass(frozen=True)
class ExponentSchedule:
    """Strictly increasing exponents for the gauge-adapted construction."""

    n_k: Tuple[int, ...]
    budget: Optional[int] = None

    def __post_init__(self):
        prev = 0
        for n in self.n_k:
            if n <= prev:
                raise ValueError("schedule must be strictly increasing")
            prev = n

    def __len__(self) -> int:
        return len(self.n_k)


def _has_log_form(phi: GaugeLike) -> bool:
    return hasattr(phi, "log_value_from_neglog_gap")


def _log_gauge_at_inv_n(phi: GaugeLike, n: int) -> float:
    """log gauge(exp(-1/n)), choosing the same arithmetic the schedule
    predicate uses so inequalities verified there survive verbatim."""
    if n <= DIRECT_N_LIMIT:
        return math.log(phi.value_from_gap(gap_from_inv_n(n)))
    if not _has_log_form(phi):
        raise OverflowError("callable gauges cannot reach radii this close to 1")
    return phi.log_value_from_neglog_gap(neglog_gap_from_inv_n(n))


def _admissible(phi: GaugeLike, n: int, k: int) -> bool:
    """gauge(exp(-1/n)) <= n^2/k^8, evaluated directly in double arithmetic
    whenever representable (exact at integer boundaries), in log space
    otherwise."""
    if n <= DIRECT_N_LIMIT:
        return phi.value_from_gap(gap_from_inv_n(n)) <= (n * n) / (k ** 8)
    if not _has_log_form(phi):
        return False
    lhs = phi.log_value_from_neglog_gap(neglog_gap_from_inv_n(n))
    return lhs <= 2.0 * math.log(n) - 8.0 * math.log(k)


def _margin(phi: GaugeLike, n: int, k: int) -> float:
    if n <= DIRECT_N_LIMIT:
        return (n * n) / (k ** 8) - phi.value_from_gap(gap_from_inv_n(n))
    lhs = phi.log_value_from_neglog_gap(neglog_gap_from_inv_n(n))
    return (2.0 * math.log(n) - 8.0 * math.log(k)) - lhs


def _margins_look_monotone(phi: GaugeLike, k: int, lo: int, hi: int) -> bool:
    """Sampled check that the admissibility margin is nondecreasing on
    (lo, hi]; bisection is only trusted when this holds."""
    samples = 9
    points = sorted(
        {lo + 1 + ((hi - lo - 1) * i) // (samples - 1) for i in range(samples)}
    )
    margins = [_margin(phi, n, k) for n in points]
    return all(m2 >= m1 for m1, m2 in zip(margins, margins[1:]))


def _first_admissible_in_bracket(
    phi: GaugeLike, k: int, lo: int, hi: int
) -> int:
    """Smallest admissible n in (lo, hi], given not admissible(lo) and
    admissible(hi)."""
    if hi - lo <= _LINEAR_BRACKET or not _margins_look_monotone(phi, k, lo, hi):
        if hi - lo > _SCAN_CAP:
            raise SearchBudgetExceeded(
                f"gauge margin not monotone over a bracket of width "
                f"{hi - lo}; refusing an unbounded scan at k={k}"
            )
        for n in range(lo + 1, hi + 1):
            if _admissible(phi, n, k):
                return n
        return hi
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if _admissible(phi, mid, k):
            hi = mid
        else:
            lo = mid
    return hi


def choose_schedule(
    phi: GaugeLike, k_max: int, budget: Optional[int] = None
) -> ExponentSchedule:
    """Minimal strictly increasing exponents with gauge(exp(-1/n_k)) <= n_k^2/k^8.

    Search per index: doubling until admissible, then the smallest admissible
    integer inside the bracket.  Deterministic for fixed inputs.  Raises
    SearchBudgetExceeded when no admissible exponent <= budget exists for
    some index, and GaugeHypothesisError when a parametric gauge visibly
    violates the required decay.
    """
    if k_max < 1:
        raise ValueError("k_max must be >= 1")
    if isinstance(phi, Gauge) and not phi.satisfies_hypothesis:
        raise GaugeHypothesisError(
            f"gauge {phi.label()} does not vanish relative to the quadratic "
            f"ceiling (need a < 2, or a = 2 with b > 0)"
        )
    if budget is None and not _has_log_form(phi):
        budget = _CALLABLE_DEFAULT_BUDGET
    found: List[int] = []
    prev = 0
    for k in range(1, k_max + 1):
        lo = prev + 1
        if budget is not None and lo > budget:
            raise SearchBudgetExceeded(f"no admissible exponent <= {budget} at k={k}")
        if _admissible(phi, lo, k):
            n_k = lo
        else:
            below, cand = lo, 2 * lo
            while True:
                if budget is not None and cand >= budget:
                    cand = budget
                if _admissible(phi, cand, k):
                    break
                if budget is not None and cand >= budget:
                    raise SearchBudgetExceeded(
                        f"no admissible exponent <= {budget} at k={k}"
                    )
                below, cand = cand, cand * 2
            n_k = _first_admissible_in_bracket(phi, k, below, cand)
        found.append(n_k)
        prev = n_k
    return ExponentSchedule(tuple(found), budget)


def build_p_star(k_max: int) -> CaratheodoryFunction:
    """The dyadic lacunary function exp((i/2) * sum_{k<=k_max} z^(2^k)/k^2)."""
    if k_max < 1:
        raise ValueError("k_max must be >= 1")
    if k_max > MAX_STAR_INDEX:
        raise ExponentOverflow(
            f"k_max = {k_max} puts exponents past 2^{MAX_STAR_INDEX}"
        )
    terms = [(2 ** k, 0.5j / (k * k)) for k in range(1, k_max + 1)]
    p = from_lacunary(SparseSeries(terms))
    p.spec_dict = {"type": "theorem2_star", "k_max": k_max}
    return p


def critical_radii_star(k_max: int) -> List[float]:
    """Adapted radii exp(-2^-k), k = 1..k_max, as floats.

    Past k = 53 the float collapses onto 1.0; sweeps that need larger k work
    from the exact negated logs 2^-k instead (see star_sweep).
    """
    if k_max < 1:
        raise ValueError("k_max must be >= 1")
    if k_max > 53:
        raise RadiusOutOfRange(
            "exp(-2^-k) is not representable below 1.0 past k = 53"
        )
    return [math.exp(-(2.0 ** -k)) for k in range(1, k_max + 1)]


def build_p_phi(schedule: ExponentSchedule) -> CaratheodoryFunction:
    """exp((i/2) * sum z^(n_k)/k^2) for a chosen exponent schedule."""
    terms = [
        (n, 0.5j / (k * k)) for k, n in enumerate(schedule.n_k, start=1)
    ]
    p = from_lacunary(SparseSeries(terms))
    p.schedule = schedule
    return p


def ratio_profile(
    p: CaratheodoryFunction,
    phi: GaugeLike,
    radii: Sequence[float],
    trunc_degree: int = 4096,
) -> List[float]:
    """means(r) / gauge(r) over an ordinary float radius grid.

    Uses the exact sparse log-coefficients when available, otherwise the
    dense log-coefficients at trunc_degree.
    """
    f = p.log_sparse()
    if f is None:
        f = p.log_taylor(trunc_degree)
    out = []
    for r in radii:
        if not (0.0 < r < 1.0):
            raise RadiusOutOfRange(f"radius {r!r} not in (0, 1)")
        means = parseval_value_at_neglog(f, -math.log(r))
        out.append(means / phi.value(r))
    return out


def ratio_at_schedule(
    p: CaratheodoryFunction, phi: GaugeLike, schedule: ExponentSchedule
) -> List[float]:
    """means/gauge at the exact adapted radii exp(-1/n_k).

    Both sides are evaluated in log space from the exact integers, so the
    ratios stay finite and meaningful even when means and gauge separately
    overflow every float."""
    f = p.log_sparse()
    if f is None:
        raise ValueError("schedule ratios need a sparse log-representation")
    out = []
    for n in schedule.n_k:
        ln_means = parseval_log_value_at_inv_n(f, n)
        ln_gauge = _log_gauge_at_inv_n(phi, n)
        d = ln_means - ln_gauge
        out.append(math.exp(d) if d < 709.0 else math.inf)
    return out


def star_sweep(k_max: int) -> List[dict]:
    """Means of the dyadic extremal function at its adapted radii.

    Radii are handled through their exact negated logs 2^-k; the reported
    r_k float is display-only.  Each row carries the single-term lower bound
    2*pi*e^-2*4^(k-1)/k^4 and the ratio of the full sum to it.
    """
    p = build_p_star(k_max)
    f = p.log_sparse()
    rows = []
    for k in range(1, k_max + 1):
        value = parseval_value_at_neglog(f, 2.0 ** -k)
        lower = TWO_PI * math.exp(-2.0) * 4.0 ** (k - 1) / float(k) ** 4
        rows.append(
            {
                "k": k,
                "r_k": math.exp(-(2.0 ** -k)),
                "means": value,
                "lower_bound": lower,
                "ratio_to_lower": value / lower,
            }
        )
    return rows


def gauge_sweep(
    phi: GaugeLike, k_max: int, budget: Optional[int] = None
) -> Tuple[ExponentSchedule, List[dict]]:
    """Schedule plus per-index ratios means/gauge against the k^4 floor."""
    schedule = choose_schedule(phi, k_max, budget)
    p = build_p_phi(schedule)
    ratios = ratio_at_schedule(p, phi, schedule)
    rows = []
    for k, (n, ratio) in enumerate(zip(schedule.n_k, ratios), start=1):
        floor = FLOOR_COEFF * float(k) ** 4
        rows.append(
            {
                "k": k,
                "n_k": n,
                "ratio": ratio,
                "floor": floor,
                "ratio_to_floor": ratio / floor,
            }
        )
    return schedule, rows
