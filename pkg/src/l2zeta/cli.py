"""Command-line entry point: ``l2zeta analyze|eval|oracle|plot``.

Exit codes: 0 success, 2 invalid input, 3 numeric failure. Data goes to
stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import sys

from .analysis import analyze, census_residual, theta_residual
from .graph import GraphFormatError, graph_invariants, load_graph
from .reportio import dump_report
from .svg import branch_svg
from .zeta import DegenerateLeadingCoefficient, zeta_closed_form

EXIT_OK, EXIT_INVALID, EXIT_NUMERIC = 0, 2, 3


class InputError(ValueError):
    pass


def parse_complex(text: str) -> complex:
    """'re,im' (or a lone real part) as a complex number."""
    parts = text.split(",")
    if len(parts) not in (1, 2):
        raise InputError(f"expected re,im but got {text!r}")
    try:
        vals = [float(p) for p in parts]
    except ValueError:
        raise InputError(f"expected re,im but got {text!r}") from None
    return complex(vals[0], vals[1] if len(vals) == 2 else 0.0)


def _load(path):
    try:
        return load_graph(path)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from exc


def _fmt(z: complex) -> str:
    return f"{z.real:.15g}{z.imag:+.15g}j"


def cmd_analyze(args) -> int:
    G = _load(args.graph)
    text = dump_report(analyze(G, symbolic=not args.no_symbolic))
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_eval(args) -> int:
    G = _load(args.graph)
    u = parse_complex(args.u)
    try:
        z = zeta_closed_form(G, u)
    except DegenerateLeadingCoefficient as exc:
        raise InputError(str(exc)) from exc
    if args.json:
        sys.stdout.write(dump_report({"u": u, "zeta": z.value, "in_validity_region":
                                      z.in_validity_region, "limit_value": z.limit_value,
                                      "notes": z.notes}))
        return EXIT_OK
    print(f"Z({_fmt(u)}) = {_fmt(z.value)}")
    if z.limit_value:
        print("limit value at u = 0")
    print("validity: " + ("ok" if z.in_validity_region else "outside the checked region"))
    for note in z.notes:
        print(f"warning: {note}", file=sys.stderr)
    return EXIT_OK


def cmd_oracle(args) -> int:
    G = _load(args.graph)
    u = parse_complex(args.u)
    if u == 0:
        raise InputError("the oracle comparison needs u != 0")
    if args.theta_samples < 64:
        raise InputError("--theta-samples must be at least 64")
    th = theta_residual(G, u, samples=args.theta_samples)
    cen = census_residual(G, args.geodesic_len)
    if args.json:
        sys.stdout.write(dump_report({"theta": th, "census": cen}))
        return EXIT_OK
    print(f"{'check':<40}{'residual':>14}")
    print(f"{'closed form vs theta integral':<40}{th['residual']:>14.3e}")
    if "skipped" in cen:
        print(f"{'census (length %d)' % cen['length']:<40}{'skipped':>14}")
        print(f"note: {cen['skipped']}", file=sys.stderr)
    else:
        print(f"{'census coefficients (length %d)' % cen['length']:<40}"
              f"{cen['max_abs_difference']:>14d}")
        print(f"{'taylor rounding error':<40}{cen['rounding_error']:>14.3e}")
        print("census series:      " + " ".join(map(str, cen["census_series"])))
        print("closed-form series: " + " ".join(map(str, cen["closed_form_series"])))
    if not th["converged"]:
        print("warning: theta quadrature did not converge", file=sys.stderr)
    return EXIT_OK


def cmd_plot(args) -> int:
    G = _load(args.graph)
    _, q = graph_invariants(G)
    report = analyze(G, oracles=False)
    text = branch_svg(report["surface"]["branch_points"], q)
    with open(args.svg, "w", encoding="utf-8") as fh:
        fh.write(text)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="l2zeta", description="L2 zeta functions of Z-periodic graphs")
    sub = p.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analyze", help="full analysis report as JSON")
    a.add_argument("graph")
    a.add_argument("--out")
    a.add_argument("--no-symbolic", action="store_true",
                   help="recover Omega from numeric samples instead of power sums")
    a.set_defaults(func=cmd_analyze)

    e = sub.add_parser("eval", help="evaluate Z(u) by the closed form")
    e.add_argument("graph")
    e.add_argument("--u", required=True, help="complex point as re,im")
    e.add_argument("--json", action="store_true")
    e.set_defaults(func=cmd_eval)

    o = sub.add_parser("oracle", help="compare the closed form with independent computations")
    o.add_argument("graph")
    o.add_argument("--u", required=True)
    o.add_argument("--theta-samples", type=int, default=4096)
    o.add_argument("--geodesic-len", type=int, default=8)
    o.add_argument("--json", action="store_true")
    o.set_defaults(func=cmd_oracle)

    s = sub.add_parser("plot", help="SVG diagram of the branch points")
    s.add_argument("graph")
    s.add_argument("--svg", required=True)
    s.set_defaults(func=cmd_plot)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INVALID if exc.code else EXIT_OK
    try:
        return args.func(args)
    except (GraphFormatError, InputError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except (ArithmeticError, ValueError, MemoryError) as exc:
        print(f"numeric failure: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_NUMERIC


if __name__ == "__main__":
    sys.exit(main())
