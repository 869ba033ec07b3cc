"""Command-line front end.

Subcommands: ``order``, ``rank``, ``gens``, ``member``, ``calc``,
``verify`` and ``selftest``.  Exit codes: 0 on success, 1 when a
verification or self-test claim fails, 2 on usage or parse errors.

Randomized suites take an explicit ``--seed``; the default (1729) is fixed,
so every command is deterministic given its arguments.
"""

from __future__ import annotations

import argparse
import sys

from sylow2 import composite, derived, verify, wreath
from sylow2.permgroup import format_cycles
from sylow2.portrait import (
    compose,
    format_portrait,
    inverse,
    leaf_permutation,
    parse_portrait,
)

_MEMBER_PREDICATES = {
    "G": wreath.in_G,
    "W": wreath.in_W,
    "derived-B": derived.in_derived_B,
    "derived-G": derived.in_derived_G,
    "frattini-G": derived.in_frattini_G,
    "typeT": wreath.is_type_T,
    "typeC": wreath.is_type_C,
}


def _cmd_order(args):
    order = (
        composite.order_syl2_A(args.n)
        if args.kind == "A"
        else composite.order_syl2_S(args.n)
    )
    print(f"2^{order.bit_length() - 1}")
    return 0


def _cmd_rank(args):
    rank = (
        composite.rank_syl2_A(args.n)
        if args.kind == "A"
        else composite.rank_syl2_S(args.n)
    )
    print(rank)
    return 0


def _format_tuple(element):
    return "|".join(
        "e" if part is None else format_portrait(part) for part in element.parts
    )


def _cmd_gens(args):
    tuples = (
        composite.build_tuples_A(args.n)
        if args.kind == "A"
        else composite.build_tuples_S(args.n)
    )
    for element in tuples:
        if args.format == "cycles":
            print(format_cycles(composite.embed(element)))
        else:
            print(_format_tuple(element))
    return 0


def _cmd_member(args):
    g = parse_portrait(args.element)
    verdict = _MEMBER_PREDICATES[args.predicate](g)
    print("yes" if verdict else "no")
    return 0


def _cmd_calc(args):
    op = args.op
    operands = [parse_portrait(text) for text in args.elements]
    if op in ("mul", "comm") and len(operands) != 2:
        raise ValueError(f"{op} takes exactly two operands")
    if op in ("inv", "abelianize-B", "abelianize-G") and len(operands) != 1:
        raise ValueError(f"{op} takes exactly one operand")
    if op == "mul":
        result = compose(operands[0], operands[1])
    elif op == "inv":
        result = inverse(operands[0])
    elif op == "comm":
        a, b = operands
        result = compose(compose(a, b), compose(inverse(a), inverse(b)))
    elif op == "abelianize-B":
        print(derived.format_parity_vector(derived.abelianization_B(operands[0])))
        return 0
    else:
        print(derived.format_parity_vector(derived.abelianization_G(operands[0])))
        return 0
    print(format_portrait(result))
    print(format_cycles(leaf_permutation(result)))
    return 0


def _cmd_verify(args):
    if args.kind in ("A", "S") and args.level == "full" and args.target > verify.ORACLE_LIMIT:
        print(
            f"full verification is oracle-backed and capped at n = "
            f"{verify.ORACLE_LIMIT}; use --level quick for formula-only checks",
            file=sys.stderr,
        )
        return 2
    records = verify.run_verification(args.kind, args.target, args.level, args.seed)
    for r in records:
        status = "pass" if r.passed else "FAIL"
        print(
            f"{status} {r.claim} {r.params} expected={r.expected} "
            f"computed={r.computed} [{r.provenance}] ({r.wall_time_s:.3f}s)"
        )
    doc = verify.report_to_json(args.kind, args.target, args.level, args.seed, records)
    if args.json:
        verify.write_report(args.json, doc)
    return 0 if doc["pass"] else 1


def _cmd_selftest(args):
    return 0 if verify.run_selftest(args.seed) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sylow2",
        description="Sylow 2-subgroups of symmetric and alternating groups, "
        "computed from binary rooted-tree portraits and checked against a "
        "permutation-group oracle.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("order", help="2-adic order of the Sylow 2-subgroup")
    p.add_argument("kind", choices=("S", "A"))
    p.add_argument("n", type=int)
    p.set_defaults(func=_cmd_order)

    p = sub.add_parser("rank", help="minimal generating set size")
    p.add_argument("kind", choices=("S", "A"))
    p.add_argument("n", type=int)
    p.set_defaults(func=_cmd_rank)

    p = sub.add_parser("gens", help="emit a minimal generating set")
    p.add_argument("kind", choices=("S", "A"))
    p.add_argument("n", type=int)
    p.add_argument("--format", choices=("cycles", "portrait"), default="cycles")
    p.set_defaults(func=_cmd_gens)

    p = sub.add_parser("member", help="membership predicates on portraits")
    p.add_argument("predicate", choices=sorted(_MEMBER_PREDICATES))
    p.add_argument("element", help="portrait text, e.g. 0/00/1001")
    p.set_defaults(func=_cmd_member)

    p = sub.add_parser("calc", help="portrait calculator")
    p.add_argument(
        "op", choices=("mul", "inv", "comm", "abelianize-B", "abelianize-G")
    )
    p.add_argument("elements", nargs="+", help="portrait text operands")
    p.set_defaults(func=_cmd_calc)

    p = sub.add_parser("verify", help="run the verification claims")
    p.add_argument("kind", choices=("S", "A", "B", "G"))
    p.add_argument("target", type=int, help="n for kinds S/A, depth k for B/G")
    p.add_argument("--level", choices=("quick", "full"), default="quick")
    p.add_argument("--json", help="write the report to this path")
    p.add_argument("--seed", type=int, default=verify.DEFAULT_SEED)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("selftest", help="run the invariant self tests")
    p.add_argument("--seed", type=int, default=verify.DEFAULT_SEED)
    p.set_defaults(func=_cmd_selftest)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
