"""Command-line front end.

Exit codes: 0 PASS, 1 FAIL, 2 INDETERMINATE, 64 usage error, 65 input error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .derivation import (
    DEFAULT_BOUND,
    Derivation,
    apply_derivation,
    d_degree,
    derivation_weight,
    is_irreducible_derivation,
    is_locally_nilpotent,
    jacobian_derivation,
)
from .elimination import resultant
from .fixtures import F_TEXT, FLAGSHIP_DERIVATION_TEXT, XYZ
from .geometry import (
    affine_singular_points,
    chart_y_ideal,
    chart_y_ideal_generators,
    chart_y_jacobian,
    check_all_conditions,
    check_C1,
    check_C2,
    dehomogenize_chart_z,
    f0_family,
    jacobian_rank,
)
from .grading import QUINTIC_WEIGHTS, Weights, monomial_basis
from .polycore import (
    Polynomial,
    PolynomialSyntaxError,
    UnknownVariableError,
    VariableSet,
    format_canonical,
    identifiers,
    parse_polynomial,
)
from .quotient import (
    centralizer_constraint_system,
    format_A_monomial,
    graded_component_A,
    verify_torus_family,
    xyz_degree,
)
from .report import EXIT_INPUT, EXIT_USAGE, Report, Verdict, emit_report
from .sextic import (
    build_sextic_inputs,
    compute_sextic_resultant,
    cross_check_original_resultant,
    verify_final_forms,
    verify_P_properties,
    verify_rewrite_chain,
)

F0_SAMPLES = ((1, 0), (0, 0), (2, 3))


class UsageError(Exception):
    pass


class InputError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _verdict(ok: bool) -> Verdict:
    return Verdict.PASS if ok else Verdict.FAIL


# polynomial input --------------------------------------------------------

def _read_text(args, text_attr: str, file_attr: str, default: str | None = None) -> str:
    text = getattr(args, text_attr, None)
    path = getattr(args, file_attr, None)
    if text is not None and path is not None:
        raise UsageError(f"give either --{text_attr} or --{file_attr.replace('_', '-')}, not both")
    if path is not None:
        try:
            return Path(path).read_text(encoding="utf-8")
        except OSError as exc:
            raise InputError(f"cannot read {path}: {exc.strerror}") from None
    if text is not None:
        return text
    if default is not None:
        return default
    raise UsageError(f"missing --{text_attr} or --{file_attr.replace('_', '-')}")


def _vars_for(texts, weights: Weights | None, explicit: str | None) -> VariableSet:
    if explicit:
        return VariableSet(n.strip() for n in explicit.split(",") if n.strip())
    if weights is not None:
        names = list(weights)
        extra = [n for t in texts for n in identifiers(t) if n not in names]
        return VariableSet(names + list(dict.fromkeys(extra)))
    names: list[str] = []
    for t in texts:
        names += [n for n in identifiers(t) if n not in names]
    return VariableSet(names or ["x"])


def _parse(text: str, vars: VariableSet) -> Polynomial:
    try:
        return parse_polynomial(text.strip(), vars)
    except (PolynomialSyntaxError, UnknownVariableError) as exc:
        raise InputError(str(exc)) from None


def _weights(args) -> Weights | None:
    if getattr(args, "weights", None) is None:
        return None
    try:
        return Weights.parse(args.weights)
    except ValueError as exc:
        raise InputError(str(exc)) from None


# subcommands -------------------------------------------------------------

def cmd_quintic(args, report: Report) -> None:
    F = parse_polynomial(F_TEXT, XYZ)
    conds = check_all_conditions(F)
    for name, res in conds.results.items():
        report.add(f"{name} on F", res.verdict, res.describe())

    for a, b in F0_SAMPLES:
        with report.timed(f"f0({a},{b}): chart-z origin multiplicity 3") as slot:
            scan = affine_singular_points(dehomogenize_chart_z(f0_family(a, b)))
            origin = [p for p in scan.points if p.coords == (0, 0)]
            slot.verdict = _verdict(bool(origin) and origin[0].multiplicity == 3)
            slot.witness = "; ".join(f"{p.coords} mult {p.multiplicity}" for p in scan.points)
    with report.timed("chart-y generators and clearing identities (symbolic a, b)") as slot:
        try:
            gens = chart_y_ideal_generators()
            slot.verdict = Verdict.PASS
            slot.witness = ", ".join(str(g) for g in gens)
        except AssertionError as exc:
            slot.verdict, slot.witness = Verdict.FAIL, str(exc)
    for a, b in F0_SAMPLES:
        with report.timed(f"f0({a},{b}): J0 and J1 have rank 2") as slot:
            gens = chart_y_ideal_generators(a, b)
            same = tuple(chart_y_ideal(f0_family(a, b))) == gens
            J = chart_y_jacobian(gens)
            r0 = jacobian_rank(J, {"U": 0, "V": 0, "W": 0})
            r1 = jacobian_rank(J, {"U": -b, "V": 0, "W": 0})
            slot.verdict = _verdict(same and r0 == 2 and r1 == 2)
            slot.witness = f"rank J0 = {r0}, rank J1 = {r1}"
        with report.timed(f"f0({a},{b}): exactly one singular point") as slot:
            res = check_C2(f0_family(a, b))
            slot.verdict = _verdict(res.verdict == Verdict.FAIL and res.witness["count"] == 1)
            slot.witness = res.describe()

    x, y, z = Polynomial.gens(XYZ)
    g = x * z + y ** 2
    D = Derivation.parse(FLAGSHIP_DERIVATION_TEXT, XYZ)
    with report.timed("jacobian derivation of (x, xz+y^2) is 2y d/dz - x d/dy") as slot:
        J = jacobian_derivation(x, g)
        slot.verdict, slot.witness = _verdict(J == D), J.format().replace("\n", "; ")
    with report.timed("x and xz+y^2 lie in the kernel") as slot:
        slot.verdict = _verdict(D(x).is_zero() and D(g).is_zero())
    with report.timed("deg_D(y) = 1, deg_D(z) = 2") as slot:
        dy, dz = d_degree(D, y, args.bound), d_degree(D, z, args.bound)
        slot.verdict, slot.witness = _verdict(dy.value == 1 and dz.value == 2), f"deg_D(y)={dy}, deg_D(z)={dz}"
    with report.timed("locally nilpotent") as slot:
        nv = is_locally_nilpotent(D, args.bound)
        slot.verdict, slot.witness = _nilpotency_verdict(nv), nv.detail
    with report.timed("irreducible derivation") as slot:
        slot.verdict = _verdict(is_irreducible_derivation(D))
    with report.timed("derivation weight 1 = (3+4) - (3+2+1)") as slot:
        d, homog = derivation_weight(D, QUINTIC_WEIGHTS)
        slot.verdict, slot.witness = _verdict(homog and d == (3 + 4) - (3 + 2 + 1)), f"weight {d}"

    with report.timed("torus family fixes F") as slot:
        tc = verify_torus_family(F)
        slot.verdict, slot.witness = tc.verdict, tc.detail
    with report.timed("A_9 = k w for n in {2,4,5,7,8}") as slot:
        comps = {n: graded_component_A(n, 9) for n in (2, 4, 5, 7, 8)}
        slot.verdict = _verdict(all(c == [(0, 0, 0, 1)] for c in comps.values()))
        slot.witness = ", ".join(f"n={n}: {[format_A_monomial(e) for e in c]}" for n, c in comps.items())


def cmd_sextic(args, report: Report) -> None:
    fix = build_sextic_inputs()
    with report.timed("rewrite chain (four identities)") as slot:
        v, checks = verify_rewrite_chain(fix)
        slot.verdict = v
        slot.witness = "; ".join(f"{c.name}: {'ok' if c.holds else c.difference}" for c in checks)
    with report.timed("final forms in (u, x, y, z)") as slot:
        slot.verdict = _verdict(verify_final_forms(fix))
    with report.timed("Res_lam(S, T) equals the 36-term P") as slot:
        P = compute_sextic_resultant(fix)
        slot.verdict = _verdict(P == fix.P_golden)
        lt, c = P.leading_term(Weights(u=5, x=3, y=2, z=1))
        slot.witness = f"{len(P)} terms, leading coefficient {c}"
    with report.timed("properties of P") as slot:
        v, props = verify_P_properties(P)
        slot.verdict = v
        slot.witness = "; ".join(f"{p.name}: {'ok' if p.holds else p.detail}" for p in props)
    with report.timed("original resultant is a scalar multiple of P") as slot:
        cc = cross_check_original_resultant(fix)
        slot.verdict, slot.witness = cc.verdict, cc.detail


def cmd_check(args, report: Report) -> None:
    text = _read_text(args, "poly", "file", default=F_TEXT if args.builtin == "F" else None)
    w = _weights(args) or QUINTIC_WEIGHTS
    vars = _vars_for([text], w, None)
    f = _parse(text, vars)
    missing = [n for n in f.variables_present() if n not in w]
    if missing:
        raise InputError(f"no weight for {', '.join(missing)}")
    try:
        quintic_shape = set(f.variables_present()) <= set("xyz") and all(
            w.get(n) == QUINTIC_WEIGHTS[n] for n in "xyz" if n in w)
        if quintic_shape:
            conds = check_all_conditions(f.embed(XYZ))
            for name, res in conds.results.items():
                report.add(name, res.verdict, res.describe())
        else:
            res = check_C1(f.embed(VariableSet(list(w))), w)
            report.add("C1", res.verdict, res.describe())
    except ValueError as exc:
        raise InputError(str(exc)) from None


def cmd_resultant(args, report: Report) -> None:
    ft = _read_text(args, "f", "f_file")
    gt = _read_text(args, "g", "g_file")
    vars = _vars_for([ft, gt], _weights(args), args.vars)
    if args.var not in vars:
        raise InputError(f"variable {args.var!r} does not occur")
    f, g = _parse(ft, vars), _parse(gt, vars)
    with report.timed(f"Res_{args.var}(f, g)") as slot:
        try:
            r = resultant(f, g, args.var)
        except ValueError as exc:
            raise InputError(str(exc)) from None
        slot.verdict, slot.witness = Verdict.PASS, format_canonical(r)


def _derivation_vars(dtext: str, others: list[str], explicit: str | None) -> VariableSet:
    if explicit:
        return VariableSet(n.strip() for n in explicit.split(",") if n.strip())
    names = list(XYZ.names)
    for line in dtext.splitlines():
        head, _, body = line.split("#", 1)[0].partition("->")
        names += [n for n in [head.strip()] + identifiers(body) if n and n not in names]
    for t in others:
        names += [n for n in identifiers(t) if n not in names]
    return VariableSet(names)


def _derivation(dtext: str, vars: VariableSet) -> Derivation:
    try:
        return Derivation.parse(dtext, vars)
    except (ValueError, PolynomialSyntaxError, UnknownVariableError) as exc:
        raise InputError(str(exc)) from None


def _nilpotency_verdict(nv) -> Verdict:
    return {"true": Verdict.PASS, "false": Verdict.FAIL}.get(nv.verdict, Verdict.INDETERMINATE)


def cmd_lnd(args, report: Report) -> None:
    dtext = _read_text(args, "derivation", "derivation_file", default=FLAGSHIP_DERIVATION_TEXT)
    if args.action == "nilpotent":
        D = _derivation(dtext, _derivation_vars(dtext, [], args.vars))
        with report.timed("locally nilpotent") as slot:
            nv = is_locally_nilpotent(D, args.bound)
            slot.verdict, slot.witness = _nilpotency_verdict(nv), nv.detail
        return
    ptext = _read_text(args, "poly", "file")
    vars = _derivation_vars(dtext, [ptext], args.vars)
    D = _derivation(dtext, vars)
    f = _parse(ptext, vars)
    if args.action == "apply":
        with report.timed("D(f)") as slot:
            slot.verdict, slot.witness = Verdict.PASS, format_canonical(apply_derivation(D, f))
    else:
        with report.timed("deg_D(f)") as slot:
            dd = d_degree(D, f, args.bound)
            slot.verdict = Verdict.INDETERMINATE if dd.exceeded is not None else Verdict.PASS
            slot.witness = str(dd)


def cmd_basis(args, report: Report) -> None:
    w = _weights(args) or QUINTIC_WEIGHTS
    vars = VariableSet(list(w))
    with report.timed(f"basis of degree {args.degree}") as slot:
        mons = [format_canonical(Polynomial(vars, {e: 1})) for e in monomial_basis(args.degree, w, vars)]
        slot.verdict = Verdict.PASS
        slot.witness = f"{len(mons)}: " + ", ".join(mons)


def cmd_centralizer(args, report: Report) -> None:
    text = _read_text(args, "poly", "file", default=F_TEXT)
    h = _parse(text, XYZ)
    try:
        if h.is_zero() or xyz_degree(h) != 9:
            raise ValueError("h must be a nonzero form of degree 9 under x=3,y=2,z=1")
    except ValueError as exc:
        raise InputError(str(exc)) from None
    with report.timed("constraint system") as slot:
        entries = centralizer_constraint_system(h)
        slot.verdict = Verdict.PASS
        slot.witness = "\n".join(f"{format_A_monomial(e + (0,))}: {c}" for e, c in entries)
    with report.timed("torus family") as slot:
        tc = verify_torus_family(h)
        slot.verdict, slot.witness = tc.verdict, tc.detail


# parser ------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("json", "text"), default=argparse.SUPPRESS)
    common.add_argument("--bound", type=int, default=argparse.SUPPRESS,
                        help=f"iteration bound for nilpotency and D-degree (default {DEFAULT_BOUND})")
    common.add_argument("--weights", default=argparse.SUPPRESS, help="e.g. x=3,y=2,z=1")

    p = _Parser(prog="lndkit", description="Exact checks for locally nilpotent derivations and weighted hypersurfaces.")
    p.add_argument("--format", choices=("json", "text"), default="text")
    p.add_argument("--bound", type=int, default=DEFAULT_BOUND)
    p.add_argument("--weights", default=None)
    sub = p.add_subparsers(dest="command", parser_class=_Parser)

    sub.add_parser("quintic", parents=[common], help="conditions and lemmas for the builtin quintic F")
    sub.add_parser("sextic", parents=[common], help="binary sextic resultant pipeline")

    c = sub.add_parser("check", parents=[common], help="conditions C1-C4 for a polynomial")
    c.add_argument("--file")
    c.add_argument("--poly")
    c.add_argument("--builtin", choices=("F",))

    r = sub.add_parser("resultant", parents=[common], help="resultant of two polynomials")
    r.add_argument("--f")
    r.add_argument("--f-file", dest="f_file")
    r.add_argument("--g")
    r.add_argument("--g-file", dest="g_file")
    r.add_argument("--var", required=True)
    r.add_argument("--vars", help="ambient variable order, comma separated")

    lnd = sub.add_parser("lnd", parents=[common], help="derivations: apply, degree, nilpotent")
    lnd.add_argument("action", choices=("apply", "degree", "nilpotent"))
    lnd.add_argument("--derivation", help="lines 'x -> expr'; default 2y d/dz - x d/dy")
    lnd.add_argument("--derivation-file", dest="derivation_file")
    lnd.add_argument("--poly")
    lnd.add_argument("--file")
    lnd.add_argument("--vars")

    b = sub.add_parser("basis", parents=[common], help="monomial basis of a graded component")
    b.add_argument("--degree", type=int, required=True)

    z = sub.add_parser("centralizer", parents=[common], help="centralizer constraints for a degree-9 form")
    z.add_argument("--file")
    z.add_argument("--poly")
    return p


COMMANDS = {
    "quintic": cmd_quintic,
    "sextic": cmd_sextic,
    "check": cmd_check,
    "resultant": cmd_resultant,
    "lnd": cmd_lnd,
    "basis": cmd_basis,
    "centralizer": cmd_centralizer,
}


def run(argv: list[str]) -> tuple[Report | None, int, str]:
    """Parse ``argv`` and execute; returns (report, exit code, rendered output)."""
    try:
        args = build_parser().parse_args(argv)
        if args.command is None:
            raise UsageError("a subcommand is required")
        if args.bound < 1:
            raise UsageError("--bound must be positive")
    except UsageError as exc:
        return None, EXIT_USAGE, f"usage error: {exc}"
    report = Report(args.command if args.command != "lnd" else f"lnd {args.action}")
    try:
        COMMANDS[args.command](args, report)
    except UsageError as exc:
        return None, EXIT_USAGE, f"usage error: {exc}"
    except InputError as exc:
        return None, EXIT_INPUT, f"input error: {exc}"
    return report, report.exit_code, emit_report(report, args.format)


def main(argv: list[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    if argv in (["-h"], ["--help"]):
        build_parser().print_help()
        return 0
    report, code, out = run(argv)
    stream = sys.stdout if report is not None else sys.stderr
    print(out, file=stream)
    return code


__all__ = ["run", "main", "build_parser", "emit_report"]
