"""Command-line front end.

Subcommands: construct, count, enumerate, disjoint, bounds, verify, oracle.
JSON is the canonical interchange format; text grids are a human
convenience.  Exit codes: 0 success/pass, 1 domain failure (validation or a
failed verification), 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional

from . import bounds, constructions, engine, serialize
from .core import LatinSquare, TransversalFamily, is_transversal
from .errors import LatsqError

PROLONG_EXAMPLE = {
    "square": ((0, 1, 2), (1, 2, 0), (2, 0, 1)),
    "t0": (1, 2, 0),
    "t1": (2, 0, 1),
    "corner": ((3, 4), (4, 3)),
    "expected": (
        (0, 3, 4, 1, 2),
        (4, 2, 3, 0, 1),
        (3, 4, 1, 2, 0),
        (2, 1, 0, 3, 4),
        (1, 0, 2, 4, 3),
    ),
}


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _write_text(path: Optional[str], text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _read_square(path: str) -> LatinSquare:
    text = _read_text(path)
    if text.lstrip().startswith("{"):
        return serialize.square_from_json(json.loads(text))
    return serialize.square_from_text(text)


def _read_raw_grid(path: str) -> tuple[tuple[int, ...], ...]:
    """Grid rows without latin validation (prolongation corners use a shifted alphabet)."""
    text = _read_text(path)
    if text.lstrip().startswith("{"):
        obj = json.loads(text)
        if not isinstance(obj, dict) or "rows" not in obj:
            raise ValueError("grid: expected a JSON object with a 'rows' key")
        return tuple(tuple(int(v) for v in row) for row in obj["rows"])
    rows = [line.split() for line in text.splitlines() if line.strip()]
    return tuple(tuple(int(v) for v in row) for row in rows)


def _read_family(path: str) -> TransversalFamily:
    return serialize.family_from_json(json.loads(_read_text(path)))


def _read_sts(path: str):
    return serialize.sts_from_json(json.loads(_read_text(path)))


def _emit_square(square: LatinSquare, args) -> None:
    if args.format == "text":
        _write_text(args.output, serialize.square_to_text(square))
    else:
        _write_text(args.output, json.dumps(serialize.square_to_json(square)) + "\n")


def _emit_sts(sts, args) -> None:
    if args.format == "text":
        lines = "".join(f"{a} {b} {c}\n" for a, b, c in sts.triples)
        _write_text(args.output, lines)
    else:
        _write_text(args.output, json.dumps(serialize.sts_to_json(sts)) + "\n")


def cmd_construct(args) -> int:
    kind = args.kind
    if kind == "cyclic":
        _emit_square(constructions.cyclic_square(args.order), args)
    elif kind == "halfsum":
        _emit_square(constructions.half_sum_square(args.order), args)
    elif kind == "bose-sts":
        if args.input is not None:
            base = _read_square(args.input)
        elif args.order is not None:
            base = constructions.half_sum_square(args.order)
        else:
            raise UsageError("bose-sts needs --input or --order")
        _emit_sts(constructions.bose_sts(base), args)
    elif kind == "steiner":
        _emit_square(constructions.steiner_square(_read_sts(args.input)), args)
    elif kind == "prolong":
        square = _read_square(args.input)
        family = _read_family(args.family)
        corner = _read_raw_grid(args.sub) if args.sub else None
        _emit_square(constructions.prolongation(square, family, corner), args)
    elif kind == "with-transversal":
        _emit_square(constructions.square_with_transversal(args.order), args)
    return 0


def cmd_count(args) -> int:
    square = _read_square(args.input)
    if args.avoid:
        result = engine.count_avoiding(square, _read_family(args.avoid), workers=args.workers)
    else:
        result = engine.count_transversals(square, workers=args.workers)
    print(result.count)
    print(f"nodes={result.nodes_visited} elapsed={result.elapsed:.3f}s", file=sys.stderr)
    return 0


def cmd_enumerate(args) -> int:
    square = _read_square(args.input)
    for t in engine.enumerate_transversals(square, limit=args.limit):
        if args.format == "text":
            print(" ".join(str(c) for c in t.cols))
        else:
            print(json.dumps(serialize.transversal_to_json(t)))
    return 0


def cmd_disjoint(args) -> int:
    square = _read_square(args.input)
    family = engine.find_disjoint_family(square, args.k)
    if family is None:
        print(f"no family of {args.k} disjoint transversals exists", file=sys.stderr)
        return 1
    _write_text(args.output, json.dumps(serialize.family_to_json(family)) + "\n")
    return 0


def cmd_oracle(args) -> int:
    result = engine.brute_force_count(_read_square(args.input))
    print(result.count)
    print(f"examined={result.nodes_visited} elapsed={result.elapsed:.3f}s", file=sys.stderr)
    return 0


def cmd_bounds(args) -> int:
    if args.to < args.from_:
        raise UsageError(f"empty range: --from {args.from_} > --to {args.to}")
    reports = [bounds.bound_report(n) for n in range(args.from_, args.to + 1)]
    if args.format == "json":
        for report in reports:
            print(json.dumps(report.to_json()))
        return 0
    header = f"{'n':>5} {'p0':>4} {'theorem1':>14} {'ln(bound)':>12} {'(n/6)ln n':>12} {'n ln n - 2n':>12}  notes"
    print(header)
    for r in reports:
        if r.applicable:
            print(
                f"{r.order:>5} {r.p0:>4} {r.theorem1_bound:>14} {r.theorem1_log:>12.3f} "
                f"{r.corollary_lower_log:>12.3f} {r.taranenko_log:>12.3f}  asymptotic terms omitted"
            )
        else:
            print(
                f"{r.order:>5} {'-':>4} {'n/a':>14} {'n/a':>12} "
                f"{r.corollary_lower_log:>12.3f} {r.taranenko_log:>12.3f}  not an STS order"
            )
    return 0


def _verify_prolong_example(args) -> int:
    fix = PROLONG_EXAMPLE
    square = LatinSquare(fix["square"])
    family = TransversalFamily((fix["t0"], fix["t1"]), disjoint=True)
    built = constructions.prolongation(square, family, fix["corner"])
    expected = LatinSquare(fix["expected"])
    if built == expected:
        print("PASS prolong-example: 5x5 prolongation matches the fixture bit-exact")
        return 0
    print("FAIL prolong-example: constructed square differs", file=sys.stderr)
    print(serialize.square_to_text(built), file=sys.stderr)
    return 1


def _verify_theorem1(args) -> int:
    n = args.order
    sts = constructions.known_sts(n)
    square = constructions.steiner_square(sts)
    bound = bounds.theorem1_bound(n)
    counted = engine.count_transversals(square, workers=args.workers).count
    if counted < bound:
        print(f"FAIL theorem1 order {n}: t(S_{n}) = {counted} < bound {bound}", file=sys.stderr)
        return 1
    emitted: set[tuple[int, ...]] = set()
    for t in bounds.steiner_transversal_family(sts, 0, bounds.p0(n)):
        emitted.add(t.cols)
        if len(emitted) >= bound:
            break
    if len(emitted) < bound:
        print(
            f"FAIL theorem1 order {n}: generator emitted only {len(emitted)} < bound {bound}",
            file=sys.stderr,
        )
        return 1
    print(f"PASS theorem1 order {n}: t(S_{n}) = {counted} >= {bound}, generator >= {bound}")
    return 0


def _verify_prop2(args) -> int:
    if args.exhaustive and args.samples is not None:
        raise UsageError("--exhaustive and --samples are mutually exclusive")
    sts = constructions.known_sts(args.order)
    record = bounds.verify_prop2(
        sts, args.p, exhaustive=args.samples is None, samples=args.samples or 0
    )
    mode = "exhaustive" if record.exhaustive else f"{record.classes_checked} samples"
    if record.passed:
        print(
            f"PASS prop2 order {args.order} p={args.p}: max {record.max_observed} "
            f"<= s(p) = {record.bound} ({mode})"
        )
        return 0
    print(
        f"FAIL prop2 order {args.order} p={args.p}: max {record.max_observed} "
        f"> s(p) = {record.bound} ({mode})",
        file=sys.stderr,
    )
    return 1


def _verify_bose(args) -> int:
    orders = [args.order] if args.order is not None else [1, 3, 5, 7, 9]
    for n in orders:
        sts = constructions.bose_sts(constructions.half_sum_square(n))
        expected = (3 * n) * (3 * n - 1) // 6
        if len(sts.triples) != expected:
            print(f"FAIL bose order {n}: {len(sts.triples)} triples != {expected}", file=sys.stderr)
            return 1
    print(f"PASS bose: orders {orders} validate with the expected triple counts")
    return 0


def _verify_greedy_steps(args) -> int:
    checked = 0
    for n in range(1, args.max_order + 1):
        if n % 6 not in (1, 3):
            continue
        bounds.greedy_step_counts(n)  # raises on any violated inequality
        checked += 1
    print(f"PASS greedy-steps: {checked} orders up to {args.max_order} satisfy the step inequalities")
    return 0


class UsageError(Exception):
    pass


def _add_output_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--format", choices=("json", "text"), default="json")
    parser.add_argument("--output", help="output path (default stdout)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="latsq",
        description="Latin square transversal toolkit: constructions, exact counts, bounds.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_construct = sub.add_parser("construct", help="build squares, systems, prolongations")
    kinds = p_construct.add_subparsers(dest="kind", required=True)
    for name in ("cyclic", "halfsum", "with-transversal"):
        k = kinds.add_parser(name)
        k.add_argument("--order", type=int, required=True)
        _add_output_options(k)
    k = kinds.add_parser("bose-sts")
    k.add_argument("--input", help="idempotent commutative square file")
    k.add_argument("--order", type=int, help="odd order; shorthand for a half-sum square input")
    _add_output_options(k)
    k = kinds.add_parser("steiner")
    k.add_argument("--input", required=True, help="STS JSON file")
    _add_output_options(k)
    k = kinds.add_parser("prolong")
    k.add_argument("--input", required=True, help="base square file")
    k.add_argument("--family", required=True, help="disjoint transversal family JSON")
    k.add_argument("--sub", help="order-k corner square file (omit only when k = 0)")
    _add_output_options(k)
    p_construct.set_defaults(func=cmd_construct)

    p_count = sub.add_parser("count", help="exact transversal count")
    p_count.add_argument("--input", required=True)
    p_count.add_argument("--avoid", help="family JSON whose cells must be avoided")
    p_count.add_argument("--workers", type=int, default=1)
    p_count.set_defaults(func=cmd_count)

    p_enum = sub.add_parser("enumerate", help="stream transversals in lexicographic order")
    p_enum.add_argument("--input", required=True)
    p_enum.add_argument("--limit", type=int)
    p_enum.add_argument("--format", choices=("json", "text"), default="json")
    p_enum.set_defaults(func=cmd_enumerate)

    p_disjoint = sub.add_parser("disjoint", help="find k pairwise disjoint transversals")
    p_disjoint.add_argument("--input", required=True)
    p_disjoint.add_argument("--k", type=int, required=True)
    p_disjoint.add_argument("--output")
    p_disjoint.set_defaults(func=cmd_disjoint)

    p_bounds = sub.add_parser("bounds", help="bound table for a range of orders")
    p_bounds.add_argument("--from", dest="from_", type=int, required=True)
    p_bounds.add_argument("--to", type=int, required=True)
    p_bounds.add_argument("--format", choices=("json", "text"), default="text")
    p_bounds.set_defaults(func=cmd_bounds)

    p_verify = sub.add_parser("verify", help="run a built-in verification")
    checks = p_verify.add_subparsers(dest="check", required=True)
    c = checks.add_parser("prolong-example", help="reconstruct the worked 5x5 prolongation")
    c.set_defaults(func=_verify_prolong_example)
    c = checks.add_parser("theorem1", help="count t(S_n) against the closed-form bound")
    c.add_argument("--order", type=int, required=True)
    c.add_argument("--workers", type=int, default=1)
    c.set_defaults(func=_verify_theorem1)
    c = checks.add_parser("prop2", help="check s(p) against actual intersection counts")
    c.add_argument("--order", type=int, required=True)
    c.add_argument("--p", type=int, required=True)
    c.add_argument("--exhaustive", action="store_true", default=False,
                   help="exhaustive enumeration (the default unless --samples is given)")
    c.add_argument("--samples", type=int, default=None,
                   help="fixed-seed sampling with this many attempts instead of exhaustion")
    c.set_defaults(func=_verify_prop2)
    c = checks.add_parser("bose", help="validate Bose systems over half-sum squares")
    c.add_argument("--order", type=int, help="one odd order (default: 1 3 5 7 9)")
    c.set_defaults(func=_verify_bose)
    c = checks.add_parser("greedy-steps", help="step inequalities for all orders in range")
    c.add_argument("--max-order", type=int, default=1000)
    c.set_defaults(func=_verify_greedy_steps)

    p_oracle = sub.add_parser("oracle", help="independent brute-force count (order <= 8)")
    p_oracle.add_argument("--input", required=True)
    p_oracle.set_defaults(func=cmd_oracle)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except LatsqError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    except (ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
