"""Command-line front end.

Exit codes: 0 ok, 2 theorem violation (or failed witness check), 3 hypotheses
not met / size or modulus error, 64 usage error, 65 parse error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .bivariate import (
    BiPoly,
    bipoly_is_even,
    bipoly_is_even_each_variable,
    is_homogeneous,
    is_symmetric,
    odd_homogeneous_components,
    restrict_line,
    theorem_pqr_assert,
)
from .cyclic import InvalidModulus, PrimeModulus, UseParityModule, right_cyclic_classify
from .explorer import (
    Family,
    SearchConfig,
    SizeLimitExceeded,
    Theorem,
    run_theorem_suite,
    search_open_q1,
    search_open_q2,
    search_symmetric_remark,
)
from .outcomes import Status
from .parity import (
    Target,
    build_witness,
    classify_rpe,
    classify_rpo,
    theorem_eo_demo,
    verify_witness_numeric,
)
from .parser import GRAMMAR, ParseError, parse_bipoly, parse_expr, parse_poly
from .poly import UniPoly, ZERO_DEGREE, cyclic_class
from .rational import DegenerateComposition, RationalFunction, rf_compose, rf_cyclic_class

EXIT_OK = 0
EXIT_VIOLATION = 2
EXIT_HYPOTHESES = 3
EXIT_USAGE = 64
EXIT_PARSE = 65


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(message)


class CommandFailed(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


def parse_coeffs(text: str) -> tuple:
    """'-2..2' or a comma list such as '-1,0,1/2'."""
    text = text.strip()
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            return tuple(range(int(lo), int(hi) + 1))
        return tuple(Fraction(t.strip()) for t in text.split(",") if t.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"bad coefficient set {text!r}") from exc


def _glue_option_values(argv: list) -> list:
    # "--coeffs -1..1" would otherwise be read as an unknown option
    out, i = [], 0
    while i < len(argv):
        if argv[i] == "--coeffs" and i + 1 < len(argv):
            out.append(f"--coeffs={argv[i + 1]}")
            i += 2
        else:
            out.append(argv[i])
            i += 1
    return out


def _modulus(value) -> PrimeModulus:
    try:
        return PrimeModulus(int(value))
    except InvalidModulus as exc:
        raise CommandFailed(str(exc), EXIT_HYPOTHESES) from exc


def _config(args, family=Family.POLYNOMIAL) -> SearchConfig:
    kwargs = {"family": family, "parallelism": args.parallelism}
    if args.max_degree is not None:
        kwargs["max_degree"] = args.max_degree
    if args.coeffs is not None:
        kwargs["coefficient_set"] = args.coeffs
    if getattr(args, "modulus", None) is not None:
        kwargs["modulus"] = _modulus(args.modulus)
    if getattr(args, "max_power", None) is not None:
        kwargs["max_power"] = args.max_power
    if getattr(args, "bivariate_degree", None) is not None:
        kwargs["bivariate_degree"] = args.bivariate_degree
    try:
        return SearchConfig(**kwargs)
    except ValueError as exc:
        raise CommandFailed(str(exc), EXIT_HYPOTHESES) from exc


# -- commands: each returns (input_canonical, result, status, human_text, exit code)


def _classify(args, target: Target):
    p = parse_poly(args.expr)
    c = classify_rpe(p) if target is Target.EVEN else classify_rpo(p)
    result = {"classification": c.to_dict(), "witness": None, "verification": None}
    lines = [f"p(z) = {p}", f"classification: {c.describe()}"]
    code, status = EXIT_OK, "ok"
    if c.admits_witness:
        w = build_witness(c)
        rep = verify_witness_numeric(w, p, target, args.samples, args.tol)
        result["witness"] = w.to_dict()
        result["verification"] = rep.to_dict()
        lines.append(f"witness: f(z) = {w.describe()}  (f(p(z)) is {target.value})")
        lines.append(
            f"verification: residual {rep.max_residual:.3e} vs tol {rep.tol:g} over"
            f" {rep.samples} samples -> {'pass' if rep.passed else 'FAIL'}"
        )
        if not rep.passed:
            code, status = EXIT_VIOLATION, "verification_failed"
    else:
        status = "no_witness"
    return str(p), result, status, "\n".join(lines), code


def cmd_classify_rpe(args):
    return _classify(args, Target.EVEN)


def cmd_classify_rpo(args):
    return _classify(args, Target.ODD)


def cmd_verify_witness(args):
    target = Target(args.target)
    canon, result, status, text, code = _classify(args, target)
    if status == "no_witness":
        code = EXIT_HYPOTHESES
    return canon, result, status, text, code


def _class_of(value, N: int):
    if isinstance(value, RationalFunction):
        return rf_cyclic_class(value, N)
    if isinstance(value, UniPoly):
        return cyclic_class(value, N)
    raise CommandFailed("cyclic classes are defined for functions of z only", EXIT_HYPOTHESES)


def cmd_cyclic_class(args):
    value = parse_expr(args.expr)
    if args.modulus < 2:
        raise CommandFailed("modulus must be >= 2", EXIT_HYPOTHESES)
    cls = _class_of(value, args.modulus)
    return str(value), cls.to_dict(), "ok", f"{value}: {cls}", EXIT_OK


def cmd_rational_class(args):
    value = parse_expr(args.expr)
    if isinstance(value, UniPoly):
        value = RationalFunction(value)
    if not isinstance(value, RationalFunction):
        raise CommandFailed("expected a function of z", EXIT_HYPOTHESES)
    cls = rf_cyclic_class(value, args.modulus)
    f0 = value.at_zero()
    result = {"class": cls.to_dict(), "f(0)": None if f0 is None else str(f0)}
    text = f"{value}: {cls}; f(0) = {'pole' if f0 is None else f0}"
    return str(value), result, "ok", text, EXIT_OK


def cmd_right_cyclic(args):
    p = parse_poly(args.expr)
    m = _modulus(args.modulus)
    try:
        res = right_cyclic_classify(p, m)
    except UseParityModule as exc:
        raise CommandFailed(
            "modulus 2 is the even/odd case: use classify-rpe or classify-rpo", EXIT_HYPOTHESES
        ) from exc
    if res.exists:
        text = (
            f"Yes: p - p(0) lies in C_{res.residue} (mod {m.N});"
            f" f(z) = {res.witness.describe()} puts f(p) in C_0"
        )
    else:
        text = f"No: p - p(0) = {p - p.at_zero()} is not cyclic mod {m.N}"
    return str(p), res.to_dict(), "ok", text, EXIT_OK


def cmd_compose(args):
    f, g = parse_expr(args.f), parse_expr(args.g)
    if isinstance(f, BiPoly) or isinstance(g, BiPoly):
        raise CommandFailed("compose takes functions of z only", EXIT_HYPOTHESES)
    if isinstance(f, UniPoly) and isinstance(g, UniPoly):
        h = f.compose(g)
    else:
        f = f if isinstance(f, RationalFunction) else RationalFunction(f)
        g = g if isinstance(g, RationalFunction) else RationalFunction(g)
        try:
            h = rf_compose(f, g)
        except DegenerateComposition as exc:
            raise CommandFailed(str(exc), EXIT_HYPOTHESES) from exc
    result = {"composition": str(h)}
    text = f"f(g(z)) = {h}"
    if args.modulus is not None:
        cls = _class_of(h, args.modulus)
        result["class"] = cls.to_dict()
        text += f"\nclass: {cls}"
    return f"{f} o {g}", result, "ok", text, EXIT_OK


def cmd_bipoly(args):
    P = parse_bipoly(args.expr)
    hom = is_homogeneous(P)
    result = {
        "even": bipoly_is_even(P),
        "even_each_variable": bipoly_is_even_each_variable(P),
        "odd_components": [[k, str(c)] for k, c in odd_homogeneous_components(P)],
        "homogeneous_degree": "zero" if hom is ZERO_DEGREE else hom,
        "symmetric": is_symmetric(P),
    }
    lines = [f"P(z, w) = {P}"] + [f"{k}: {v}" for k, v in result.items()]
    if args.line:
        a, b = (Fraction(t) for t in args.line)
        r = restrict_line(P, a, b)
        result["restriction"] = str(r)
        lines.append(f"P({a}*z, {b}*z) = {r}")
    return str(P), result, "ok", "\n".join(lines), EXIT_OK


def cmd_pqr_check(args):
    P = parse_poly(args.P)
    Q = parse_bipoly(args.Q)
    v = theorem_pqr_assert(P, Q)
    code = {Status.HOLDS: EXIT_OK, Status.HYPOTHESES_UNMET: EXIT_HYPOTHESES, Status.VIOLATION: EXIT_VIOLATION}[
        v.status
    ]
    text = f"P = {P}, Q = {Q}: {v.status.value}" + (f" ({v.reason})" if v.reason else "")
    return f"{P} o {Q}", v.to_dict(), v.status.value, text, code


def _report_result(rep):
    code = EXIT_OK if rep.consistent else EXIT_VIOLATION
    status = "consistent" if rep.consistent else "violation"
    return rep.name, rep.to_dict(), status, rep.summary(), code


def cmd_theorem_suite(args):
    config = _config(args)
    try:
        rep = run_theorem_suite(Theorem(args.theorem), config)
    except ValueError as exc:
        raise CommandFailed(str(exc), EXIT_HYPOTHESES) from exc
    return _report_result(rep)


def cmd_explore(args):
    family = {"polynomial": Family.POLYNOMIAL, "rational": Family.RATIONAL_FUNCTION}[args.family]
    try:
        if args.question == "q1":
            rep = search_open_q1(_config(args, family))
        elif args.question == "q2":
            if args.modulus is None:
                raise CommandFailed("q2 needs --modulus N (a prime >= 3)", EXIT_HYPOTHESES)
            rep = search_open_q2(_modulus(args.modulus), _config(args, family))
        else:
            rep = search_symmetric_remark(_config(args))
    except (ValueError, SizeLimitExceeded) as exc:
        raise CommandFailed(str(exc), EXIT_HYPOTHESES) from exc
    return _report_result(rep)


def cmd_eo_demo(args):
    rep = theorem_eo_demo(args.samples, args.tol)
    lines = [
        "p(z) = z^4 - 2*z^2, f(x) = cos(x) + sin(x)",
        f"  p(f(x)) vs p(f(-x)):              residual {rep.evenness.max_residual:.3e}",
        f"  p(f(x)) vs -4cos^4 + 4cos^2 - 1:  residual {rep.closed_form.max_residual:.3e}",
        "q(z) = z^2 + 2*z, f(x) = cos(x) + sin(x) - 1",
        f"  q(f(x)) vs -q(f(-x)):             residual {rep.shifted_oddness.max_residual:.3e}",
        f"pass: {rep.passed} (tol {args.tol:g}, {args.samples} samples)",
    ]
    code = EXIT_OK if rep.passed else EXIT_VIOLATION
    return "z^4 - 2*z^2", rep.to_dict(), "ok" if rep.passed else "failed", "\n".join(lines), code


def cmd_grammar(args):
    return "", {"grammar": GRAMMAR}, "ok", GRAMMAR, EXIT_OK


# -- argument parsing -----------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="parity-lab", description="Even, odd and cyclic compositions of polynomials.")
    sub = parser.add_subparsers(dest="command", metavar="COMMAND", parser_class=_Parser)

    def add(name, fn, help_text):
        p = sub.add_parser(name, help=help_text, description=help_text)
        p.add_argument("--json", action="store_true", help="emit the structured report")
        p.set_defaults(fn=fn)
        return p

    def numeric(p):
        p.add_argument("--samples", type=int, default=64)
        p.add_argument("--tol", type=float, default=1e-9)

    def sweep(p, modulus=True):
        p.add_argument("--max-degree", type=int, default=None)
        p.add_argument("--coeffs", type=parse_coeffs, default=None, help="e.g. -2..2 or -1,0,1/2")
        p.add_argument("--parallelism", type=int, default=1)
        if modulus:
            p.add_argument("--modulus", type=int, default=None)

    p = add("classify-rpe", cmd_classify_rpe, "decide whether some entire f makes f(p) even")
    p.add_argument("expr")
    numeric(p)
    p = add("classify-rpo", cmd_classify_rpo, "decide whether some entire f makes f(p) odd")
    p.add_argument("expr")
    numeric(p)
    p = add("verify-witness", cmd_verify_witness, "build and numerically check the witness f")
    p.add_argument("expr")
    p.add_argument("--target", choices=["even", "odd"], default="even")
    numeric(p)
    p = add("cyclic-class", cmd_cyclic_class, "class C_k of a polynomial or rational function")
    p.add_argument("expr")
    p.add_argument("--modulus", type=int, default=2)
    p = add("right-cyclic", cmd_right_cyclic, "does some entire f put f(p) in C (prime N >= 3)")
    p.add_argument("expr")
    p.add_argument("--modulus", type=int, required=True)
    p = add("compose", cmd_compose, "f(g(z)) for polynomials or rational functions")
    p.add_argument("f")
    p.add_argument("g")
    p.add_argument("--modulus", type=int, default=None)
    p = add("rational-class", cmd_rational_class, "cyclic class of a rational function")
    p.add_argument("expr")
    p.add_argument("--modulus", type=int, default=2)
    p = add("bipoly", cmd_bipoly, "evenness, homogeneity and symmetry of P(z, w)")
    p.add_argument("expr")
    p.add_argument("--line", nargs=2, metavar=("A", "B"), help="also restrict to z -> A z, w -> B z")
    p = add("pqr-check", cmd_pqr_check, "check P(Q(z, w)) even => P or Q even")
    p.add_argument("P")
    p.add_argument("Q")
    p = add("explore", cmd_explore, "search open questions: q1, q2, symmetric")
    p.add_argument("question", choices=["q1", "q2", "symmetric"])
    p.add_argument("--family", choices=["polynomial", "rational"], default="polynomial")
    sweep(p)
    p = add("theorem-suite", cmd_theorem_suite, "exhaustive theorem check over a small family")
    p.add_argument("theorem", choices=[t.value for t in Theorem])
    sweep(p)
    p.add_argument("--max-power", type=int, default=None)
    p.add_argument("--bivariate-degree", type=int, default=None)
    p = add("eo-demo", cmd_eo_demo, "numeric demo: z^4 - 2z^2 of cos + sin is even")
    numeric(p)
    add("grammar", cmd_grammar, "print the expression grammar")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(_glue_option_values(sys.argv[1:] if argv is None else list(argv)))
    except UsageError as exc:
        print(f"parity-lab: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    if not getattr(args, "command", None):
        parser.print_help(sys.stderr)
        return EXIT_USAGE
    as_json = args.json
    try:
        canon, result, status, text, code = args.fn(args)
    except ParseError as exc:
        return _fail(args, as_json, "parse_error", str(exc), EXIT_PARSE, offset=exc.offset)
    except CommandFailed as exc:
        return _fail(args, as_json, "error", str(exc), exc.code)
    except SizeLimitExceeded as exc:
        return _fail(args, as_json, "error", str(exc), EXIT_HYPOTHESES)
    if as_json:
        doc = {"command": args.command, "input_canonical": canon, "result": result, "status": status}
        print(json.dumps(doc, indent=2))
    else:
        print(text)
    return code


def _fail(args, as_json, status, message, code, **extra) -> int:
    if as_json:
        doc = {
            "command": args.command,
            "input_canonical": None,
            "result": {"error": message, **extra},
            "status": status,
        }
        print(json.dumps(doc, indent=2))
    else:
        print(f"parity-lab: {message}", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
