"""Numerical toolkit for integral means of normalized logarithmic
derivatives over the class of holomorphic functions with positive real part
on the unit disc: certified constructors, two independent means
computations, extremal lacunary functions, and growth-scale diagnostics.
"""

from .analysis import (
    GrowthFit,
    Report,
    UNIFORM_CONSTANT,
    corollary_report,
    fit_exponent,
    little_o_check,
    validity_horizon,
)
from .caratheodory import (
    CaratheodoryFunction,
    CertReport,
    HerglotzSpec,
    certify_numeric,
    from_herglotz,
    from_lacunary,
    mobius,
)
from .errors import (
    DegenerateProfile,
    ExponentOverflow,
    GaugeHypothesisError,
    ImaginaryBoundViolated,
    InvalidMeasure,
    NearZeroConstantTerm,
    OutsideDisc,
    ParseError,
    QuadratureInfeasible,
    RadiusOutOfRange,
    SearchBudgetExceeded,
    ToolkitError,
)
from .extremal import (
    CallableGauge,
    ExponentSchedule,
    FLOOR_COEFF,
    Gauge,
    build_p_phi,
    build_p_star,
    choose_schedule,
    critical_radii_star,
    gauge_sweep,
    ratio_at_schedule,
    ratio_profile,
    star_sweep,
)
from .means import (
    MeansProfile,
    geometric_radii,
    h2_sum,
    parseval_means,
    quadrature_means,
    tail_bound,
)
from .series import (
    DenseSeries,
    SparseSeries,
    densify,
    derivative,
    evaluate,
    exp_series,
    integrate,
    log_series,
)
from .specs import function_spec_of, parse_function_spec

__all__ = [
    "CallableGauge",
    "CaratheodoryFunction",
    "CertReport",
    "DegenerateProfile",
    "DenseSeries",
    "ExponentOverflow",
    "ExponentSchedule",
    "FLOOR_COEFF",
    "Gauge",
    "GaugeHypothesisError",
    "GrowthFit",
    "HerglotzSpec",
    "ImaginaryBoundViolated",
    "InvalidMeasure",
    "MeansProfile",
    "NearZeroConstantTerm",
    "OutsideDisc",
    "ParseError",
    "QuadratureInfeasible",
    "RadiusOutOfRange",
    "Report",
    "SearchBudgetExceeded",
    "SparseSeries",
    "ToolkitError",
    "UNIFORM_CONSTANT",
    "build_p_phi",
    "build_p_star",
    "certify_numeric",
    "choose_schedule",
    "corollary_report",
    "critical_radii_star",
    "densify",
    "derivative",
    "evaluate",
    "exp_series",
    "fit_exponent",
    "from_herglotz",
    "from_lacunary",
    "function_spec_of",
    "gauge_sweep",
    "geometric_radii",
    "h2_sum",
    "integrate",
    "little_o_check",
    "log_series",
    "mobius",
    "parse_function_spec",
    "parseval_means",
    "quadrature_means",
    "ratio_at_schedule",
    "ratio_profile",
    "star_sweep",
    "tail_bound",
    "validity_horizon",
]
