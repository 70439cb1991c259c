"""Command-line front end.

Exit codes: 0 ok, 1 domain error, 2 usage or parse error.  With --json
a single document is written to stdout:

    {"command": ..., "status": "ok"|"error", "result": ..., "meta": {"seed": ...}}
"""

from __future__ import annotations

import argparse
import json
import sys

from .ac import Variable, flip, height
from .identities import (
    farkas_height,
    is_jacobian,
    jacobian_reduce_trace,
    jacobian_space,
    strip_bare_factors,
)
from .parsing import ParseError, gp_to_ac, parse, to_assoc, to_gp, to_poly
from .assoc import is_lie_element
from .ratfunc import RatFunc
from .realize import Realization, evaluate_gp, identity_witness_search

POLARIZATION_NOTE = (
    "linearize keeps the multilinear component without dividing by d!; "
    "fresh copies take the next unused indices of the same letter class"
)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit one JSON document")
    common.add_argument("--seed", type=int, default=None, help="seed for randomized search")

    parser = argparse.ArgumentParser(
        prog="freegp",
        description="Exact kernel for free anti-commutative and generic Poisson algebras.",
        parents=[common],
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("normalize", parents=[common], help="canonical form of an expression")
    p.add_argument("expr")

    p = sub.add_parser("bracket", parents=[common], help="bracket of two expressions")
    p.add_argument("expr1")
    p.add_argument("expr2")

    p = sub.add_parser("mul", parents=[common], help="product of two expressions")
    p.add_argument("expr1")
    p.add_argument("expr2")

    p = sub.add_parser("jacobian", parents=[common], help="is the element a derivation in every variable")
    p.add_argument("expr")

    p = sub.add_parser("jacobian-space", parents=[common], help="basis of polylinear Jacobian elements on x1..xn")
    p.add_argument("--n", type=int, required=True)

    p = sub.add_parser("reduce", parents=[common], help="derivation-difference reduction to a Jacobian element")
    p.add_argument("expr")

    p = sub.add_parser("linearize", parents=[common], help="full polarization", epilog=POLARIZATION_NOTE)
    p.add_argument("expr")

    p = sub.add_parser("flip", parents=[common], help="flip with respect to a variable")
    p.add_argument("--var", required=True)
    p.add_argument("expr")

    p = sub.add_parser("height", parents=[common], help="bracket height of a word at a variable")
    p.add_argument("--var", required=True)
    p.add_argument("expr")

    p = sub.add_parser("farkas-height", parents=[common], help="bracket-factor heights and their 3-power total")
    p.add_argument("expr")

    p = sub.add_parser("lie-test", parents=[common], help="is an associative expression a Lie element ('*' concatenates, braces commute)")
    p.add_argument("expr")

    p = sub.add_parser("realize", parents=[common], help="evaluate under a derivation-pair realization")
    p.add_argument("--model", choices=["poisson", "gps"], required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--assign", action="append", default=[], metavar="t1=EXPR")
    p.add_argument("expr")

    p = sub.add_parser("witness", parents=[common], help="search for a non-identity witness")
    p.add_argument("--model", choices=["poisson", "gps"], default="gps")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--budget", type=int, default=200)
    p.add_argument("expr")

    return parser


def _parse_variable(name: str) -> Variable:
    try:
        return Variable.parse(name)
    except ValueError as exc:
        raise ParseError(str(exc))


def _single_word(text: str):
    g = to_gp(parse(text))
    terms = g.terms()
    if len(terms) != 1 or len(terms[0][0]) != 1:
        raise ValueError("expected a single bracket word")
    return terms[0][0][0]


def _cmd_normalize(args):
    return repr(to_gp(parse(args.expr))), None


def _cmd_bracket(args):
    value = to_gp(parse(args.expr1)).bracket(to_gp(parse(args.expr2)))
    return repr(value), None


def _cmd_mul(args):
    value = to_gp(parse(args.expr1)) * to_gp(parse(args.expr2))
    return repr(value), None


def _cmd_jacobian(args):
    return {"jacobian": is_jacobian(to_gp(parse(args.expr)))}, None


def _cmd_jacobian_space(args):
    basis = jacobian_space(args.n)
    payload = {"dimension": len(basis), "basis": [repr(b) for b in basis]}
    human = [f"dimension: {len(basis)}"] + [repr(b) for b in basis]
    return payload, human


def _cmd_reduce(args):
    f = strip_bare_factors(to_gp(parse(args.expr)))
    reduced, steps = jacobian_reduce_trace(f)
    payload = {"reduced": repr(reduced), "steps": len(steps)}
    human = [repr(reduced), f"steps: {len(steps)}"]
    return payload, human


def _cmd_linearize(args):
    from .identities import linearize

    return repr(linearize(to_gp(parse(args.expr)))), None


def _cmd_flip(args):
    v = _parse_variable(args.var)
    return repr(flip(gp_to_ac(to_gp(parse(args.expr))), v)), None


def _cmd_height(args):
    v = _parse_variable(args.var)
    k = height(_single_word(args.expr), v)
    return {"height": k}, [str(k)]


def _cmd_farkas_height(args):
    fh = farkas_height(to_gp(parse(args.expr)))
    per = {v.name: h for v, h in fh.per_variable.items()}
    payload = {"total": fh.total, "per_variable": per}
    human = [f"total: {fh.total}"] + [f"{name}: {h}" for name, h in per.items()]
    return payload, human


def _cmd_lie_test(args):
    return {"lie": is_lie_element(to_assoc(parse(args.expr)))}, None


def _parse_assignments(pairs, realization):
    assignment = {}
    for item in pairs:
        name, eq, text = item.partition("=")
        if not eq:
            raise ParseError(f"bad assignment {item!r}; use t1=EXPR")
        target = _parse_variable(name.strip())
        poly = to_poly(parse(text), realization.var_names)
        assignment[target] = RatFunc(poly)
    return assignment


def _cmd_realize(args):
    realization = Realization(args.model, args.n)
    assignment = _parse_assignments(args.assign, realization)
    value = evaluate_gp(to_gp(parse(args.expr)), assignment, realization)
    return repr(value), None


def _cmd_witness(args):
    realization = Realization(args.model, args.m)
    seed = args.seed if args.seed is not None else 0
    witness = identity_witness_search(
        to_gp(parse(args.expr)), realization, budget=args.budget, seed=seed
    )
    if witness is None:
        return {"found": False, "attempts": args.budget}, ["not found"]
    payload = {
        "found": True,
        "method": witness.method,
        "attempts": witness.attempts,
        "assignment": {v.name: repr(r) for v, r in sorted(witness.assignment.items())},
        "value": repr(witness.value),
    }
    human = [f"found ({witness.method})"] + [
        f"{v.name} = {r!r}" for v, r in sorted(witness.assignment.items())
    ] + [f"value = {witness.value!r}"]
    return payload, human


_HANDLERS = {
    "normalize": _cmd_normalize,
    "bracket": _cmd_bracket,
    "mul": _cmd_mul,
    "jacobian": _cmd_jacobian,
    "jacobian-space": _cmd_jacobian_space,
    "reduce": _cmd_reduce,
    "linearize": _cmd_linearize,
    "flip": _cmd_flip,
    "height": _cmd_height,
    "farkas-height": _cmd_farkas_height,
    "lie-test": _cmd_lie_test,
    "realize": _cmd_realize,
    "witness": _cmd_witness,
}


def _emit(command: str, status: str, result, seed, as_json: bool, human=None) -> None:
    if as_json:
        doc = {"command": command, "status": status, "result": result, "meta": {"seed": seed}}
        print(json.dumps(doc))
        return
    if status == "error":
        print(result, file=sys.stderr)
        return
    if human is None:
        human = [result if isinstance(result, str) else json.dumps(result)]
    for line in human:
        print(line)


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code if isinstance(exc.code, int) else 2
        if code != 0 and "--json" in argv:
            command = next((a for a in argv if not a.startswith("-")), "")
            _emit(command, "error", "usage error", None, True)
        return code
    try:
        result, human = _HANDLERS[args.command](args)
    except ParseError as exc:
        _emit(args.command, "error", str(exc), args.seed, args.json)
        return 2
    except (ValueError, ZeroDivisionError, ArithmeticError) as exc:
        _emit(args.command, "error", str(exc), args.seed, args.json)
        return 1
    _emit(args.command, "ok", result, args.seed, args.json, human)
    return 0


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
