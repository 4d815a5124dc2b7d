"""Command-line front end.

Commands:

    means   means profile of one function over a radius grid (CSV or JSON)
    h2      squared-coefficient sum of log p against the pi^2/2 ceiling
    star    dyadic extremal sweep: means at exp(-2^-k) vs the 4^(k-1)/k^4 floor
    gauge   gauge-adapted sweep: schedule n_k and means/gauge vs the k^4 floor
    report  four-part optimality report over the canonical suite (JSON)

Outputs are byte-deterministic: floats are printed with 17 significant
digits in scientific notation, files are written atomically, and rerunning
the same command reproduces identical bytes.  Errors exit nonzero after
printing a machine-readable JSON record on stderr.

MEANS_THREADS caps internal parallelism over radii (default 1).
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from typing import List, Optional, Sequence

from .analysis import UNIFORM_CONSTANT, corollary_report
from .caratheodory import CaratheodoryFunction
from .errors import ParseError, QuadratureInfeasible, ToolkitError
from .extremal import Gauge, gauge_sweep, star_sweep
from .jsonio import atomic_write_text, dumps_canonical, format_float, int_str
from .means import geometric_radii, h2_sum, parseval_means, quadrature_means
from .specs import function_spec_of, parse_function_spec

H2_CEILING = math.pi ** 2 / 2.0


def parse_gauge(text: str) -> Gauge:
    """Parse "pow:<a>" or "powlog:<a>,<b>" into a gauge."""
    return Gauge.from_string(text)


def _parse_radii_spec(text: str) -> List[float]:
    """geometric:<start>,<factor>,<count> or critical-star:<k_max>."""
    if text.startswith("geometric:"):
        body = text[len("geometric:"):]
        parts = body.split(",")
        if len(parts) != 3:
            raise ParseError(
                f"geometric radii need start,factor,count: {text!r}"
            )
        try:
            start, factor = float(parts[0]), float(parts[1])
            count = int(parts[2])
        except ValueError as exc:
            raise ParseError(f"bad geometric radii {text!r}: {exc}") from None
        return geometric_radii(start, factor, count)
    if text.startswith("critical-star:"):
        body = text[len("critical-star:"):]
        try:
            k_max = int(body)
        except ValueError:
            raise ParseError(f"bad critical-star radii {text!r}") from None
        from .extremal import critical_radii_star

        return critical_radii_star(k_max)
    raise ParseError(
        f"radii spec must start with 'geometric:' or 'critical-star:': {text!r}"
    )


def _load_spec(text: str) -> CaratheodoryFunction:
    """Inline JSON, or @path to read the spec from a file."""
    if text.startswith("@"):
        with open(text[1:], "r", encoding="utf-8") as handle:
            text = handle.read()
    return parse_function_spec(text)


def _cell(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return format_float(value)
    if isinstance(value, int):
        return int_str(value)
    return str(value)


def _render_csv(columns: Sequence[str], rows: Sequence[dict]) -> str:
    lines = [",".join(columns)]
    for row in rows:
        lines.append(",".join(_cell(row[c]) for c in columns))
    return "\n".join(lines) + "\n"


def _render_json(
    command: str,
    columns: Sequence[str],
    rows: Sequence[dict],
    function_spec: Optional[dict] = None,
) -> str:
    doc = {"schema": "v1", "command": command}
    if function_spec is not None:
        doc["function"] = function_spec
    doc["rows"] = [{c: row[c] for c in columns} for row in rows]
    return dumps_canonical(doc)


def _write_output(path: str, text: str) -> None:
    if path == "-":
        sys.stdout.write(text)
    else:
        atomic_write_text(path, text)


def _cmd_means(args) -> str:
    p = _load_spec(args.spec)
    radii = _parse_radii_spec(args.radii)
    f = p.log_sparse()
    if f is None:
        f = p.log_taylor(args.trunc)
    profile = parseval_means(f, radii)
    quad_points = args.quad_points
    if quad_points is None:
        quad_points = 2 * args.trunc + 1
    elif 0 < quad_points < 2 * args.trunc + 1:
        raise ParseError(
            f"quadrature needs at least 2*trunc+1 = {2 * args.trunc + 1} "
            f"points, got {quad_points}"
        )
    quad = None
    if quad_points > 0:
        try:
            quad = quadrature_means(p, radii, quad_points, args.trunc)
        except QuadratureInfeasible:
            quad = None  # sparse exponents too large; coefficient route only
    columns = ["r", "I_parseval", "tail_bound"]
    if quad is not None:
        columns += ["I_quadrature", "quad_rel_err"]
    rows = []
    for j, r in enumerate(radii):
        row = {
            "r": r,
            "I_parseval": profile.values[j],
            "tail_bound": profile.tail_bounds[j],
        }
        if quad is not None:
            row["I_quadrature"] = quad.values[j]
            row["quad_rel_err"] = abs(quad.values[j] - profile.values[j]) / max(
                profile.values[j], 1e-30
            )
        rows.append(row)
    if args.format == "csv":
        return _render_csv(columns, rows)
    return _render_json("means", columns, rows, function_spec_of(p))


def _cmd_h2(args) -> str:
    p = _load_spec(args.spec)
    f = p.log_sparse()
    if f is None:
        f = p.log_taylor(args.trunc)
    total = h2_sum(f)
    rows = [
        {
            "terms": (
                len(f.terms) if hasattr(f, "terms") else f.truncation_degree
            ),
            "h2_sum": total,
            "ceiling": H2_CEILING,
            "margin": H2_CEILING - total,
        }
    ]
    columns = ["terms", "h2_sum", "ceiling", "margin"]
    if args.format == "csv":
        return _render_csv(columns, rows)
    return _render_json("h2", columns, rows, function_spec_of(p))


def _cmd_star(args) -> str:
    rows = star_sweep(args.kmax)
    columns = ["k", "r_k", "means", "lower_bound", "ratio_to_lower"]
    if args.format == "csv":
        return _render_csv(columns, rows)
    spec = {"type": "theorem2_star", "k_max": args.kmax}
    return _render_json("star", columns, rows, spec)


def _cmd_gauge(args) -> str:
    phi = parse_gauge(args.phi)
    budget = int(args.budget) if args.budget is not None else None
    _, rows = gauge_sweep(phi, args.kmax, budget)
    columns = ["k", "n_k", "ratio", "floor", "ratio_to_floor"]
    if args.format == "csv":
        return _render_csv(columns, rows)
    spec = {"type": "theorem3_gauge", "gauge": phi.label(), "k_max": args.kmax}
    if budget is not None:
        spec["budget"] = budget
    return _render_json("gauge", columns, rows, spec)


def canonical_suite(gauge: Gauge, k_max_star: int, k_max_gauge: int):
    """The fixed function suite the report command runs on."""
    suite = [
        parse_function_spec({"type": "mobius"}),
        parse_function_spec(
            {
                "type": "herglotz",
                "atoms": [
                    {"theta": 0.0, "weight": 0.5},
                    {"theta": math.pi, "weight": 0.5},
                ],
                "im_p0": 0.0,
            }
        ),
        parse_function_spec({"type": "theorem2_star", "k_max": k_max_star}),
        parse_function_spec(
            {
                "type": "theorem3_gauge",
                "gauge": gauge.label(),
                "k_max": k_max_gauge,
            }
        ),
    ]
    return suite


def _cmd_report(args) -> str:
    phi = parse_gauge(args.gauge)
    suite = canonical_suite(phi, args.kmax_star, args.kmax_gauge)
    report = corollary_report(suite, phi, constant=args.constant)
    return report.to_json()


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="logmeans",
        description=(
            "Integral means of normalized logarithmic derivatives for "
            "functions with positive real part on the unit disc."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_io(p, default_format="csv"):
        p.add_argument("--out", default="-", help="output path, '-' = stdout")
        p.add_argument(
            "--format", choices=("csv", "json"), default=default_format
        )

    p_means = sub.add_parser("means", help="means profile over a radius grid")
    p_means.add_argument("--spec", required=True, help="function spec JSON or @file")
    p_means.add_argument(
        "--radii",
        default="geometric:0.5,0.5,20",
        help="geometric:<start>,<factor>,<count> or critical-star:<k_max>",
    )
    p_means.add_argument("--trunc", type=int, default=2048)
    p_means.add_argument(
        "--quad-points",
        type=int,
        default=None,
        help="quadrature points (default 2*trunc+1; 0 disables quadrature)",
    )
    add_io(p_means)
    p_means.set_defaults(run=_cmd_means)

    p_h2 = sub.add_parser("h2", help="squared-coefficient sum of log p")
    p_h2.add_argument("--spec", required=True)
    p_h2.add_argument("--trunc", type=int, default=2048)
    add_io(p_h2)
    p_h2.set_defaults(run=_cmd_h2)

    p_star = sub.add_parser("star", help="dyadic extremal sweep")
    p_star.add_argument("--kmax", type=int, default=30)
    add_io(p_star)
    p_star.set_defaults(run=_cmd_star)

    p_gauge = sub.add_parser("gauge", help="gauge-adapted sweep")
    p_gauge.add_argument("--phi", required=True, help="pow:<a> or powlog:<a>,<b>")
    p_gauge.add_argument("--kmax", type=int, default=12)
    p_gauge.add_argument("--budget", default=None, help="search cap per index")
    add_io(p_gauge)
    p_gauge.set_defaults(run=_cmd_gauge)

    p_report = sub.add_parser("report", help="four-part optimality report")
    p_report.add_argument("--gauge", default="pow:1.9")
    p_report.add_argument("--kmax-star", type=int, default=25)
    p_report.add_argument("--kmax-gauge", type=int, default=12)
    p_report.add_argument("--constant", type=float, default=UNIFORM_CONSTANT)
    p_report.add_argument("--out", default="-")
    p_report.set_defaults(run=_cmd_report, format="json")

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        text = args.run(args)
        _write_output(args.out, text)
    except ToolkitError as exc:
        record = {"schema": "v1", "error": {"name": exc.name, "message": str(exc)}}
        sys.stderr.write(json.dumps(record) + "\n")
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
