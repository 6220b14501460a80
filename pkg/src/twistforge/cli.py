"""twistforge command line.

Every subcommand prints one JSON document ({"schema": 1, ...}, sorted keys) or
an aligned table.  Exit status: 0 success, 1 verification failure or
violation, 2 usage error.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Any, Callable, Sequence

from . import __version__
from ._parallel import default_jobs
from .algebra.cyclotomic import CycInt
from .algebra.parse import parse_curve, parse_poly
from .errors import (
    AnomalyError,
    InvalidParameterError,
    ParseError,
    SemanticError,
    TwistforgeError,
)
from .ff import (
    Form,
    SuperCurve,
    char_sum_count,
    count_points,
    count_points_double_loop,
    field,
    jacobi_sum,
    zeta_report,
)
from .ff.counting import DOUBLE_LOOP_LIMIT
from .lab import point_search_twists, scan_parity_conjecture, scan_question5, simultaneous_hits
from .torsion import (
    gr_two_torsion_condition,
    hyperelliptic_k_values,
    no_two_torsion_odd_a,
    torsion_bound,
    two_torsion_special,
    verify_l7_equivalences,
)
from .twists import (
    BUILDERS,
    HyperParams,
    Kind,
    TwistConstruction,
    build_example_2_m_2m,
    build_p_twist_additive,
    build_p_twist_product,
    specialize_construction,
    verify_automorphism,
    verify_nondegenerate,
    verify_on_curve,
)

SCHEMA = 1

KINDS = {
    "q2-m-m": Kind.Q2_M_M,
    "q2-2m-2m": Kind.Q2_2M_2M,
    "m-m-2m": Kind.M_M_2M,
    "p-product": Kind.P_TWIST_PRODUCT,
    "p-additive": Kind.P_TWIST_ADDITIVE,
    "example": Kind.EXAMPLE_2_M_2M,
}


class UsageError(Exception):
    pass


# argument helpers ------------------------------------------------------------------------------

def _int_list(text: str) -> list[int]:
    try:
        return [int(s) for s in text.replace(",", " ").split()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"expected a rational number, got {text!r}")


def _point(text: str) -> dict[str, Fraction]:
    out = {}
    for item in text.replace(",", " ").split():
        name, sep, value = item.partition("=")
        if not sep:
            raise argparse.ArgumentTypeError(f"expected name=value, got {item!r}")
        out[name.strip()] = _fraction(value)
    if not out:
        raise argparse.ArgumentTypeError("empty parameter point")
    return out


def _add_output(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=("json", "table"), default="json", help="output format (default json)")
    p.add_argument("--out", help="write the report to this path instead of stdout")
    p.add_argument("--jobs", type=int, default=None, help="worker processes (default $TWISTFORGE_THREADS or 1)")
    p.add_argument("--seed", type=int, default=None, help="shuffles prime sampling order only")


def _add_construction(p: argparse.ArgumentParser) -> None:
    p.add_argument("--kind", required=True, choices=sorted(KINDS))
    p.add_argument("--f", help="polynomial in x, e.g. 'x^3+1'")
    p.add_argument("--m", type=int, default=3)
    p.add_argument("--a", type=int, default=1)
    p.add_argument("--b", type=int, default=1)
    p.add_argument("--c", type=int, default=1)
    p.add_argument("--p", type=int, help="prime for the p-twist constructions")
    p.add_argument("--n", type=int, default=1, help="exponent n for p-additive")


def _add_curve(p: argparse.ArgumentParser, need_l: bool = True) -> None:
    p.add_argument("--curve", help="'p=7 m=1 k=2 a=4 form=minus' (overrides the single flags)")
    p.add_argument("--p", type=int)
    p.add_argument("--m", type=int, default=1)
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--a", type=int, default=1)
    p.add_argument("--form", choices=("minus", "plus"), default="minus")
    if need_l:
        p.add_argument("--l", type=int, required=True, help="prime l")


def _curve(args) -> SuperCurve:
    if args.curve:
        return parse_curve(args.curve)
    if args.p is None:
        raise UsageError("give --curve or --p")
    return SuperCurve(args.p, args.m, args.k, args.a, Form(args.form))


def _construction(args) -> TwistConstruction:
    kind = KINDS[args.kind]
    if kind is Kind.P_TWIST_PRODUCT:
        if args.p is None:
            raise UsageError("--p is required for p-product")
        return build_p_twist_product(args.p, args.m, args.a, args.b)
    if kind is Kind.P_TWIST_ADDITIVE:
        if args.p is None:
            raise UsageError("--p is required for p-additive")
        return build_p_twist_additive(args.p, args.m, args.n, args.a, args.b)
    if not args.f:
        raise UsageError(f"--f is required for {args.kind}")
    f = parse_poly(args.f)
    if kind is Kind.EXAMPLE_2_M_2M:
        return build_example_2_m_2m(f, args.m)
    return BUILDERS[kind](HyperParams(f, args.m, args.b, args.c, args.a))


def _construction_summary(c: TwistConstruction) -> dict:
    return {
        "kind": c.kind.value,
        "parameters": {k: v for k, v in c.parameters.items()},
        "D": str(c.D),
        "points": [{"label": pt.label, "x": str(pt.x), "y": str(pt.y)} for pt in c.points],
        "curves": [cv.label for cv in c.curves],
    }


# subcommands ---------------------------------------------------------------------------------------

def cmd_verify(args) -> tuple[dict, bool]:
    c = _construction(args)
    rep = verify_on_curve(c)
    out = rep.to_dict()
    out["construction"] = _construction_summary(c)
    return out, rep.all_verified


def cmd_nondegenerate(args) -> tuple[dict, bool]:
    c = _construction(args)
    rep = verify_nondegenerate(c)
    return rep.to_dict(), rep.ok


def cmd_automorphism(args) -> tuple[dict, bool]:
    kind = KINDS[args.kind]
    if not args.f and kind is not Kind.M_M_2M:
        raise UsageError(f"--f is required for {args.kind}")
    f = parse_poly(args.f) if args.f else None
    rep = verify_automorphism(kind, HyperParams(f, args.m, args.b, args.c, args.a))
    return rep.to_dict(), rep.all_hold


def cmd_specialize(args) -> tuple[dict, bool]:
    inst = specialize_construction(_construction(args), args.at)
    return inst.to_dict(), all(inst.membership)


def cmd_count_points(args) -> tuple[dict, bool]:
    curve = _curve(args)
    F = field(args.l, args.d)
    out: dict[str, Any] = {"curve": curve.to_dict(), "l": args.l, "d": args.d, "q": F.q}
    methods = ("logs", "charsum", "double-loop") if args.method == "all" else (args.method,)
    values = {}
    for m in methods:
        if m == "logs":
            values[m] = count_points(curve, F)
        elif m == "charsum":
            if (F.q - 1) % curve.p:
                out["charsum"] = "n/a (q != 1 mod p)"
                continue
            values[m] = char_sum_count(curve, F)
        else:
            if F.q > DOUBLE_LOOP_LIMIT:
                out["double-loop"] = f"n/a (q > {DOUBLE_LOOP_LIMIT})"
                continue
            values[m] = count_points_double_loop(curve, F)
    out.update(values)
    agree = len(set(values.values())) <= 1
    out["agree"] = agree
    return out, agree


def cmd_jacobi_sum(args) -> tuple[dict, bool]:
    F = field(args.l, args.d)
    tau = jacobi_sum(args.p, args.m, args.k, F, args.j)
    norm_ok = (tau * tau.conjugate()) == CycInt(args.p, [F.q])
    out = {
        "p": args.p,
        "m": args.m,
        "k": args.k,
        "l": args.l,
        "d": args.d,
        "j": args.j,
        "tau": str(tau),
        "coefficients": [str(c) for c in tau.coords],
        "tau_times_conjugate_is_q": norm_ok,
    }
    return out, norm_ok


def _zeta_methods(method: str) -> tuple[str, ...]:
    return ("newton", "jacobi") if method == "both" else (method,)


def cmd_zeta(args) -> tuple[dict, bool]:
    curve = _curve(args)
    reports = {m: zeta_report(curve, args.l, m) for m in _zeta_methods(args.method)}
    out = {m: r.to_dict() for m, r in reports.items()}
    ok = all(r.functional_equation_holds() and r.slopes_symmetric() for r in reports.values())
    if len(reports) == 2:
        out["agree"] = reports["newton"].P_coeffs == reports["jacobi"].P_coeffs
        ok = ok and out["agree"]
    return out, ok


def cmd_jacobian_order(args) -> tuple[dict, bool]:
    curve = _curve(args)
    out: dict[str, Any] = {"curve": curve.to_dict(), "l": args.l}
    for m in _zeta_methods(args.method):
        out[m] = zeta_report(curve, args.l, m).jacobian_order
    orders = [out[m] for m in _zeta_methods(args.method)]
    out["agree"] = len(set(orders)) == 1
    return out, out["agree"]


def cmd_torsion_bound(args) -> tuple[dict, bool]:
    cert = torsion_bound(_curve(args), args.budget, args.ceiling, jobs=args.jobs, seed=args.seed)
    return cert.to_dict(), cert.ok()


def cmd_two_torsion(args) -> tuple[dict, bool]:
    p, m, k, a = args.p, args.m, args.k, args.a
    out: dict[str, Any] = {"p": p, "m": m, "k": k, "a": a}
    if m + k < p:
        out["gross_rohrlich_condition"] = gr_two_torsion_condition(p, m, k)
    if m == 1 and k in hyperelliptic_k_values(p):
        out["hyperelliptic_criterion"] = {"has_two_torsion": two_torsion_special(p, k, a)}
    if a % 2 and p != 7:
        out["odd_a_criterion"] = no_two_torsion_odd_a(p, a, m, k).to_dict()
    if len(out) == 4:
        out["note"] = "no criterion applies to these parameters"
    return out, True


def cmd_l7_verify(args) -> tuple[dict, bool]:
    rep = verify_l7_equivalences(args.p, args.a)
    return rep.to_dict(), rep.all_passed


def cmd_scan_parity(args) -> tuple[dict, bool]:
    rep = scan_parity_conjecture(args.p, args.a, args.k, args.l_bound, jobs=args.jobs)
    return rep.to_dict(), not rep.violations


def cmd_scan_q5(args) -> tuple[dict, bool]:
    rep = scan_question5(args.p, args.a, args.k, args.l_bound, jobs=args.jobs)
    return rep.to_dict(), True


def cmd_point_search(args) -> tuple[dict, bool]:
    params: dict[str, Any] = {"m": args.m}
    if args.family == "quad-m-2m":
        if not args.f:
            raise UsageError("--f is required for quad-m-2m")
        params.update(f=parse_poly(args.f), b=args.b, c=args.c)
    elif args.family == "m-m-m":
        params["coefficients"] = tuple(args.coefficients or (args.a, args.b, args.c))
    else:
        if args.p is None or not args.coefficients:
            raise UsageError("p-p-p needs --p and --coefficients")
        params.update(p=args.p, coefficients=tuple(args.coefficients))
    rep = point_search_twists(args.family, params, args.d_height, args.xy_height, jobs=args.jobs)
    out = rep.to_dict()
    out["simultaneous"] = simultaneous_hits(rep)
    return out, True


# parser -------------------------------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="twistforge", description="Twist constructions and superelliptic Jacobians.")
    parser.add_argument("--version", action="version", version=f"twistforge {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, fn: Callable, help: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help)
        p.set_defaults(handler=fn)
        _add_output(p)
        return p

    for name, fn, h in (
        ("verify", cmd_verify, "check that the points lie on the twisted curves"),
        ("nondegenerate", cmd_nondegenerate, "check the nondegeneracy factors"),
    ):
        _add_construction(add(name, fn, h))

    p = add("automorphism", cmd_automorphism, "check the automorphism identities over Q(zeta_2m)")
    p.add_argument("--kind", required=True, choices=("q2-m-m", "q2-2m-2m", "m-m-2m"))
    p.add_argument("--f")
    p.add_argument("--m", type=int, default=3)
    p.add_argument("--a", type=int, default=1)
    p.add_argument("--b", type=int, default=1)
    p.add_argument("--c", type=int, default=1)

    p = add("specialize", cmd_specialize, "evaluate a construction at rational parameters")
    _add_construction(p)
    p.add_argument("--at", type=_point, required=True, help="e.g. 'u=1,v=2,w=3'")

    p = add("count-points", cmd_count_points, "#C(F_{l^d})")
    _add_curve(p)
    p.add_argument("--d", type=int, default=1, help="extension degree")
    p.add_argument("--method", choices=("logs", "charsum", "double-loop", "all"), default="all")

    p = add("jacobi-sum", cmd_jacobi_sum, "Jacobi sum tau in Z[zeta_p]")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--m", type=int, default=1)
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--d", type=int, default=1)
    p.add_argument("--j", type=int, default=1, help="character index")

    for name, fn, h in (
        ("zeta", cmd_zeta, "zeta numerator P_l(T), slopes, ordinariness"),
        ("jacobian-order", cmd_jacobian_order, "#J(F_l) = P_l(1)"),
    ):
        p = add(name, fn, h)
        _add_curve(p)
        p.add_argument("--method", choices=("newton", "jacobi", "auto", "both"), default="auto")

    p = add("torsion-bound", cmd_torsion_bound, "torsion certificate from primitive-root primes")
    _add_curve(p, need_l=False)
    p.add_argument("--budget", type=int, default=10)
    p.add_argument("--ceiling", type=int, default=500)

    p = add("two-torsion", cmd_two_torsion, "2-torsion criteria for y^p = x^m (a-x)^k")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--m", type=int, default=1)
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--a", type=int, required=True)

    p = add("l7-verify", cmd_l7_verify, "verify the hyperelliptic equivalences")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--a", type=_fraction, required=True)

    for name, fn, h in (
        ("scan-parity", cmd_scan_parity, "parity of #J^{a,1,k}(F_l) for l = 1 mod p"),
        ("scan-q5", cmd_scan_q5, "gcd parity of #J^{a,1,k}(F_l) over good primes"),
    ):
        p = add(name, fn, h)
        p.add_argument("--p", type=int, required=True)
        p.add_argument("--a", type=_int_list, required=True, help="comma-separated")
        p.add_argument("--k", type=_int_list, required=True, help="comma-separated")
        p.add_argument("--l-bound", type=int, required=True)

    p = add("point-search", cmd_point_search, "bounded-height points on simultaneous twists")
    p.add_argument("--family", choices=("quad-m-2m", "m-m-m", "p-p-p"), required=True)
    p.add_argument("--f")
    p.add_argument("--m", type=int, default=3)
    p.add_argument("--p", type=int)
    p.add_argument("--a", type=int, default=1)
    p.add_argument("--b", type=int, default=1)
    p.add_argument("--c", type=int, default=1)
    p.add_argument("--coefficients", type=_int_list)
    p.add_argument("--d-height", type=int, required=True)
    p.add_argument("--xy-height", type=int, required=True)
    return parser


# output ---------------------------------------------------------------------------------------------------

def _jsonable(x):
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, (bool, int, float, str)) or x is None:
        return x
    return str(x)


def _flatten(prefix: str, x, rows: list[tuple[str, str]]) -> None:
    if isinstance(x, dict):
        for k in sorted(x):
            _flatten(f"{prefix}.{k}" if prefix else str(k), x[k], rows)
    elif isinstance(x, list) and any(isinstance(v, (dict, list)) for v in x):
        for i, v in enumerate(x):
            _flatten(f"{prefix}[{i}]", v, rows)
    else:
        rows.append((prefix, json.dumps(x) if isinstance(x, list) else str(x)))


def render(doc: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(doc, sort_keys=True, indent=2) + "\n"
    rows: list[tuple[str, str]] = []
    _flatten("", doc, rows)
    width = max(len(k) for k, _ in rows)
    return "".join(f"{k.ljust(width)}  {v}\n" for k, v in rows)


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    if args.jobs is None:
        args.jobs = default_jobs()
    try:
        result, ok = args.handler(args)
    except (UsageError, InvalidParameterError, ParseError, SemanticError) as e:
        print(f"twistforge {args.command}: error: {e}", file=sys.stderr)
        return 2
    except AnomalyError as e:
        print(f"twistforge {args.command}: anomaly: {e}", file=sys.stderr)
        return 1
    except TwistforgeError as e:
        print(f"twistforge {args.command}: {type(e).__name__}: {e}", file=sys.stderr)
        return 1
    doc = {"schema": SCHEMA, "command": args.command, "ok": ok, "result": _jsonable(result)}
    text = render(doc, args.format)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0 if ok else 1


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
