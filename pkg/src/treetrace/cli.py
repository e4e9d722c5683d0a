"""Command-line surface: replication report, cocycle values, surgery, traces.

Exit codes: 0 on success (for ``report``: every check passed), 1 when a
report check fails, 2 on usage, parse, or validation errors.  All numbers
are printed as exact rationals ``p/q`` (or ``p``), never as decimals.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from fractions import Fraction

from .forms import b_form, cocycle, j_form, q_form, trace_a, trace_b
from .grammar import (
    ParseError,
    format_s2h,
    format_tensor,
    parse_hvec,
    parse_tensor,
    parse_tree,
    parse_twist,
)
from .surgery import (
    BUILTIN_KNOTS,
    KnotRecord,
    LaurentPoly,
    POINCARE,
    SphereInvariants,
    casson_surgery,
    cocycle_equation,
    cocycle_coefficients,
    conway_coefficient,
    d2_value,
    jones_h_derivative,
    lambda2_surgery,
    solve_alpha_r,
    surgery_cocycle_value,
    twist_cocycle_data,
    vanishing_combo,
)
from .symplectic import DEFAULT_GENUS, coinvariant_reduce, max_index
from .trees import tau2_bscc_twist, tree_expand


@dataclass
class CheckResult:
    name: str
    expected: str
    computed: str

    @property
    def passed(self) -> bool:
        return self.expected == self.computed


@dataclass
class ReplicationReport:
    genus: int
    checks: list = field(default_factory=list)

    def add(self, name: str, expected, computed):
        self.checks.append(CheckResult(name, str(expected), str(computed)))

    @property
    def overall_pass(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_dict(self) -> dict:
        return {
            "genus": self.genus,
            "overall_pass": self.overall_pass,
            "checks": [
                {"name": c.name, "expected": c.expected,
                 "computed": c.computed, "pass": c.passed}
                for c in self.checks
            ],
        }


def build_report(genus: int = DEFAULT_GENUS) -> ReplicationReport:
    """Run every built-in replication check at the given genus."""
    if genus < DEFAULT_GENUS:
        raise ValueError("report needs genus >= %d" % DEFAULT_GENUS)
    report = ReplicationReport(genus)

    expected_forms = {
        "trefoil": {"q": 48, "j": 12, "b": 72, "cocycle": 108, "surgery": 108},
        "figure-eight": {"q": 80, "j": 12, "b": 96, "cocycle": 132, "surgery": 132},
    }
    for name, knot in BUILTIN_KNOTS.items():
        want = expected_forms[name]
        slug = name.replace("-", "_")
        lam, tau = twist_cocycle_data(knot, genus)
        report.add("q_%s" % slug, want["q"], q_form(tau, tau))
        report.add("j_%s" % slug, want["j"], j_form(tau, tau))
        report.add("b_%s" % slug, want["b"], b_form(tau, tau))
        report.add("cocycle_%s" % slug, want["cocycle"],
                   cocycle(lam, tau, lam, tau))
        report.add("surgery_difference_%s" % slug, want["surgery"],
                   surgery_cocycle_value(knot))
        report.add("cross_route_%s" % slug,
                   surgery_cocycle_value(knot) - 36 * lam * lam,
                   b_form(tau, tau))

    eq_expected = {"trefoil": (12, 48, 72), "figure-eight": (12, 80, 96)}
    for name, knot in BUILTIN_KNOTS.items():
        j, q, rhs = cocycle_equation(knot, genus)
        report.add("coefficient_equation_%s" % name.replace("-", "_"),
                   "%s*r1 + %s*r2 = %s" % eq_expected[name],
                   "%s*r1 + %s*r2 = %s" % (j, q, rhs))

    report.add("cocycle_coefficients", "(3, 3/4)",
               "(%s, %s)" % cocycle_coefficients(genus))
    report.add("alpha_r", "(18, -3)", "(%s, %s)" % solve_alpha_r())

    report.add("c4_trefoil", 0, conway_coefficient(BUILTIN_KNOTS["trefoil"].conway, 4))
    report.add("c4_figure_eight", 0,
               conway_coefficient(BUILTIN_KNOTS["figure-eight"].conway, 4))
    report.add("v2_trefoil", -6,
               jones_h_derivative(BUILTIN_KNOTS["trefoil"].jones, 2))
    report.add("v2_figure_eight", 6,
               jones_h_derivative(BUILTIN_KNOTS["figure-eight"].jones, 2))
    report.add("casson_trefoil_surgery", 1,
               casson_surgery(BUILTIN_KNOTS["trefoil"], 1))
    report.add("casson_figure_eight_surgery", -1,
               casson_surgery(BUILTIN_KNOTS["figure-eight"], 1))
    report.add("lambda2_trefoil_surgery", POINCARE.lam2,
               lambda2_surgery(BUILTIN_KNOTS["trefoil"], 1))
    report.add("poincare_obstruction", 24, vanishing_combo(POINCARE))
    return report


def _emit_report(report: ReplicationReport, fmt: str) -> int:
    if fmt == "json":
        print(json.dumps(report.to_dict(), indent=2))
    else:
        for check in report.checks:
            if check.passed:
                print("PASS %s: %s" % (check.name, check.computed))
            else:
                print("FAIL %s: expected %s, computed %s"
                      % (check.name, check.expected, check.computed))
        print("overall: %s" % ("PASS" if report.overall_pass else "FAIL"))
    return 0 if report.overall_pass else 1


def _cmd_report(args) -> int:
    return _emit_report(build_report(args.genus), args.format)


def _twist_argument(text: str, genus: int, lam: Fraction):
    """Resolve a knot name or twist(x; y) spec to (casson value, tree image)."""
    if text in BUILTIN_KNOTS:
        return twist_cocycle_data(BUILTIN_KNOTS[text], genus)
    x, y = parse_twist(text)
    top = max(max_index(x), max_index(y))
    if top > genus:
        raise ValueError("twist uses index %d beyond genus %d" % (top, genus))
    return lam, tau2_bscc_twist(x, y, genus)


def _cmd_cocycle(args) -> int:
    lam_x, tau_x = _twist_argument(args.x, args.genus, Fraction(args.lambda_x))
    lam_y, tau_y = _twist_argument(args.y, args.genus, Fraction(args.lambda_y))
    values = {
        "Q": q_form(tau_x, tau_y),
        "J": j_form(tau_x, tau_y),
        "C": cocycle(lam_x, tau_x, lam_y, tau_y),
    }
    if args.format == "json":
        print(json.dumps({k: str(v) for k, v in values.items()}, indent=2))
    else:
        for key in ("Q", "J", "C"):
            print("%s = %s" % (key, values[key]))
    return 0


def load_knot_document(path: str) -> KnotRecord:
    """Read a knot document: JSON with name, conway/jones pair lists, and an
    optional pair of basis strings for a bounding curve."""
    with open(path) as handle:
        doc = json.load(handle)
    basis = None
    if doc.get("bscc_basis") is not None:
        x, y = doc["bscc_basis"]
        basis = (parse_hvec(x), parse_hvec(y))
    return KnotRecord(
        name=doc["name"],
        conway=LaurentPoly((int(e), int(c)) for e, c in doc["conway"]),
        jones=LaurentPoly((int(e), int(c)) for e, c in doc["jones"]),
        bscc_basis=basis,
    )


def _cmd_surgery(args) -> int:
    if args.knot in BUILTIN_KNOTS:
        knot = BUILTIN_KNOTS[args.knot]
    else:
        knot = load_knot_document(args.knot)
    sphere = SphereInvariants(casson_surgery(knot, args.n),
                              lambda2_surgery(knot, args.n))
    values = {
        "lambda": sphere.lam,
        "lambda2": sphere.lam2,
        "d2": d2_value(sphere),
        "vanishing_combo": vanishing_combo(sphere),
    }
    if args.format == "json":
        print(json.dumps({k: str(v) for k, v in values.items()}, indent=2))
    else:
        for key in ("lambda", "lambda2", "d2", "vanishing_combo"):
            print("%s = %s" % (key, values[key]))
    return 0


def _cmd_coinvariants(args) -> int:
    tensor = parse_tensor(args.tensor)
    reduced = coinvariant_reduce(tensor, args.genus)
    print(format_tensor(reduced))
    return 0


def _cmd_trace(args) -> int:
    t = parse_tree(args.tree)
    top = max(max_index(x) for x in t)
    if top > args.genus:
        raise ValueError("tree uses index %d beyond genus %d" % (top, args.genus))
    expanded = tree_expand(t)
    traced = trace_a(expanded) if args.side == "A" else trace_b(expanded)
    print(format_s2h(traced))
    return 0


def build_arg_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="treetrace",
        description="Exact symplectic tree-algebra and surgery-invariant calculator.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_report = sub.add_parser(
        "report", help="run all replication checks; exit 0 iff all pass")
    p_report.add_argument("--genus", type=int, default=DEFAULT_GENUS)
    p_report.add_argument("--format", choices=("text", "json"), default="text")
    p_report.set_defaults(func=_cmd_report)

    p_cocycle = sub.add_parser(
        "cocycle", help="Q, J and full cocycle of two twists or knots")
    p_cocycle.add_argument("x", help="knot name or twist(x; y) spec")
    p_cocycle.add_argument("y", help="knot name or twist(x; y) spec")
    p_cocycle.add_argument("--genus", type=int, default=DEFAULT_GENUS)
    p_cocycle.add_argument("--lambda-x", default="0",
                           help="Casson value for a twist-spec first argument")
    p_cocycle.add_argument("--lambda-y", default="0",
                           help="Casson value for a twist-spec second argument")
    p_cocycle.add_argument("--format", choices=("text", "json"), default="text")
    p_cocycle.set_defaults(func=_cmd_cocycle)

    p_surgery = sub.add_parser(
        "surgery", help="invariants of the sphere from 1/n surgery on a knot")
    p_surgery.add_argument("knot", help="built-in knot name or JSON document path")
    p_surgery.add_argument("n", type=int)
    p_surgery.add_argument("--format", choices=("text", "json"), default="text")
    p_surgery.set_defaults(func=_cmd_surgery)

    p_coinv = sub.add_parser(
        "coinvariants", help="reduce a tensor to chord generators")
    p_coinv.add_argument("tensor", help="tensor expression like a1*b1*a2*b2")
    p_coinv.add_argument("--genus", type=int, default=DEFAULT_GENUS)
    p_coinv.set_defaults(func=_cmd_coinvariants)

    p_trace = sub.add_parser(
        "trace", help="Lagrangian trace of a tree")
    p_trace.add_argument("tree", help="tree expression T(x1, x2; x3, x4)")
    p_trace.add_argument("--side", choices=("A", "B"), default="A")
    p_trace.add_argument("--genus", type=int, default=DEFAULT_GENUS)
    p_trace.set_defaults(func=_cmd_trace)

    return parser


def main(argv=None) -> int:
    parser = build_arg_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as err:
        print("parse error: %s" % err, file=sys.stderr)
        return 2
    except (ValueError, OSError, KeyError, json.JSONDecodeError) as err:
        print("error: %s" % err, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
