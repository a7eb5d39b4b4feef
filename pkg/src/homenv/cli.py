"""Command-line interface to the kernel.

Exit codes: 0 success (and no violations for check-style commands),
1 mathematical violation or failed hypothesis, 2 usage or parse error.
Listings print one item per line on stdout and the count on stderr;
``--json`` switches every command to a single machine-readable document.
"""

from __future__ import annotations

import argparse
import json
import sys

from .algebra import (
    AxiomError,
    HomAlgebra,
    HomDialgebra,
    HomModule,
    algebra_from_json,
    algebra_to_json,
    bimodule_from_json,
    check_bimodule,
    check_hom_associative,
    check_hom_dialgebra,
    check_hom_leibniz,
    check_hom_lie,
    dialgebra_from_associative,
    dialgebra_from_bimodule,
    hleib,
    hlie,
)
from .envelope import check_quotient_axioms, f_has, induced_morphism_check, u_hleib, u_hlie
from .free import Window, basis_window, format_monomial
from .linalg import matrix, scalar_json
from .trees import catalan, enumerate_diweighted, enumerate_trees, enumerate_weighted, format_tree

USAGE_ERROR = 2
VIOLATION = 1


class InputError(Exception):
    pass


def _load_json(path):
    try:
        with open(path) as handle:
            return json.load(handle)
    except OSError as err:
        raise InputError(f"cannot read {path}: {err}") from err
    except json.JSONDecodeError as err:
        raise InputError(f"{path} is not valid JSON: {err}") from err


def _violations_json(violations):
    return [
        {
            "axiom": v.axiom,
            "indices": list(v.indices),
            "discrepancy": [scalar_json(x) for x in v.discrepancy],
        }
        for v in violations
    ]


def _emit_violations(violations, as_json):
    if as_json:
        print(json.dumps({"ok": not violations, "violations": _violations_json(violations)}))
    else:
        for v in violations:
            print(v)
        print(f"violations: {len(violations)}", file=sys.stderr)
    return VIOLATION if violations else 0


# ---------------------------------------------------------------------------
# subcommands

def cmd_trees(args):
    if args.di and args.max_weight is None:
        raise InputError("--di requires --max-weight")
    if args.di:
        trees = enumerate_diweighted(args.n, args.max_weight)
    elif args.max_weight is not None:
        trees = enumerate_weighted(args.n, args.max_weight)
    else:
        trees = enumerate_trees(args.n)
    lines = [format_tree(t) for t in trees]
    if args.json:
        print(
            json.dumps(
                {
                    "n": args.n,
                    "max_weight": args.max_weight,
                    "di": args.di,
                    "count": len(lines),
                    "trees": lines,
                }
            )
        )
    else:
        for line in lines:
            print(line)
        print(f"count: {len(lines)}", file=sys.stderr)
    return 0


def cmd_catalan(args):
    value = catalan(args.n)
    if args.json:
        print(json.dumps({"n": args.n, "catalan": value}))
    else:
        print(value)
    return 0


_CHECKERS = {
    "hom-assoc": (check_hom_associative, HomAlgebra),
    "hom-lie": (check_hom_lie, HomAlgebra),
    "hom-leibniz": (check_hom_leibniz, HomAlgebra),
    "hom-dialgebra": (check_hom_dialgebra, HomDialgebra),
}


def cmd_check(args):
    data = _load_json(args.file)
    if args.kind == "bimodule":
        violations = check_bimodule(_parse(bimodule_from_json, data, args.file))
        return _emit_violations(violations, args.json)
    checker, expected = _CHECKERS[args.kind]
    algebra = _parse(algebra_from_json, data, args.file)
    if not isinstance(algebra, expected):
        raise InputError(f"{args.file}: kind {args.kind} needs a {expected.__name__} file")
    return _emit_violations(checker(algebra), args.json)


def _parse(loader, data, path):
    try:
        return loader(data)
    except (KeyError, ValueError, TypeError) as err:
        raise InputError(f"{path}: {err}") from err


def cmd_derive(args):
    data = _load_json(args.file)
    try:
        if args.functor == "hlie":
            out = hlie(_parse(algebra_from_json, data, args.file))
        elif args.functor == "hleib":
            out = hleib(_parse(algebra_from_json, data, args.file))
        elif args.functor == "di-from-assoc":
            out = dialgebra_from_associative(_parse(algebra_from_json, data, args.file))
        else:
            out = dialgebra_from_bimodule(_parse(bimodule_from_json, data, args.file))
    except AxiomError as err:
        return _emit_violations(err.violations, args.json)
    text = json.dumps(algebra_to_json(out), indent=2)
    if args.output:
        with open(args.output, "w") as handle:
            handle.write(text + "\n")
    else:
        print(text)
    return 0


def cmd_free_basis(args):
    module = HomModule(args.dim, _identity(args.dim))
    monomials = basis_window(module, Window(args.max_arity, args.max_weight), di=args.di)
    lines = [format_monomial(m) for m in monomials]
    if args.json:
        print(
            json.dumps(
                {
                    "dim": args.dim,
                    "max_arity": args.max_arity,
                    "max_weight": args.max_weight,
                    "di": args.di,
                    "count": len(lines),
                    "monomials": lines,
                }
            )
        )
    else:
        for line in lines:
            print(line)
        print(f"count: {len(lines)}", file=sys.stderr)
    return 0


def _identity(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def _module_from_json(data, path):
    if "alpha" not in data or "dim" not in data:
        raise InputError(f"{path}: a Hom-module file needs 'dim' and 'alpha'")
    return HomModule(data["dim"], data["alpha"])


def _grade_table(q):
    grades = {}
    for idx, m in enumerate(q.monomials):
        grades.setdefault((m.arity, m.total_weight), [0, 0, 0])[0] += 1
    pivot_set = set(q.pivots)
    for idx, m in enumerate(q.monomials):
        grade = (m.arity, m.total_weight)
        if idx in pivot_set:
            grades[grade][1] += 1
        else:
            grades[grade][2] += 1
    rows = [
        {
            "arity": arity,
            "total_weight": weight,
            "window_dim": cells[0],
            "ideal_rank": cells[1],
            "quotient_dim": cells[2],
        }
        for (arity, weight), cells in sorted(grades.items())
    ]
    return rows


def cmd_envelope(args):
    data = _load_json(args.file)
    window = Window(args.max_arity, args.max_weight, args.pad)
    try:
        if args.kind == "hlie":
            q = u_hlie(_parse(algebra_from_json, data, args.file), window)
        elif args.kind == "hleib":
            q = u_hleib(_parse(algebra_from_json, data, args.file), window)
        else:
            q = f_has(_module_from_json(data, args.file), window)
    except AxiomError as err:
        return _emit_violations(err.violations, args.json)
    report = check_quotient_axioms(q)
    rows = _grade_table(q)
    standard = [format_monomial(m) for m in q.standard_monomials()]
    if args.json:
        print(
            json.dumps(
                {
                    "kind": args.kind,
                    "max_arity": args.max_arity,
                    "max_weight": args.max_weight,
                    "pad": args.pad,
                    "window_dim": len(q.monomials),
                    "ideal_rank": q.ideal_rank,
                    "quotient_dim": q.dim,
                    "padded_dim": q.padded_dim,
                    "closure_rank": q.closure_rank,
                    "grades": rows,
                    "standard_monomials": standard,
                    "axioms_checked": report.checked,
                    "axioms_skipped": report.skipped,
                    "violations": _violations_json(report.violations),
                }
            )
        )
    else:
        print("arity  weight  window-dim  ideal-rank  quotient-dim")
        for row in rows:
            print(
                f"{row['arity']:>5}  {row['total_weight']:>6}  {row['window_dim']:>10}"
                f"  {row['ideal_rank']:>10}  {row['quotient_dim']:>12}"
            )
        print(
            f"total  window dim {len(q.monomials)}, ideal rank {q.ideal_rank},"
            f" quotient dim {q.dim}"
        )
        print("standard monomials:")
        for line in standard:
            print(f"  {line}")
        print(
            f"axiom triples checked: {report.checked}, skipped: {report.skipped},"
            f" violations: {len(report.violations)}",
            file=sys.stderr,
        )
    return VIOLATION if report.violations else 0


def cmd_verify_adjunction(args):
    lie = _parse(algebra_from_json, _load_json(args.lie), args.lie)
    target = _parse(algebra_from_json, _load_json(args.assoc), args.assoc)
    map_data = _load_json(args.map)
    if "matrix" not in map_data:
        raise InputError(f"{args.map}: a map file needs a 'matrix' entry")
    fmat = matrix(map_data["matrix"])
    window = Window(args.max_arity, args.max_weight, args.pad)
    try:
        report = induced_morphism_check(lie, target, fmat, window)
    except AxiomError as err:
        return _emit_violations(err.violations, args.json)
    payload = {
        "ok": report.ok,
        "generators_checked": report.generators_checked,
        "generator_failures": len(report.generator_failures),
        "unit_failures": len(report.unit_failures),
        "product_failures": len(report.product_failures),
        "alpha_failures": len(report.alpha_failures),
        "tables_checked": report.tables_checked,
    }
    if args.json:
        print(json.dumps(payload))
    else:
        for key, value in payload.items():
            print(f"{key}: {value}")
    return 0 if report.ok else VIOLATION


# ---------------------------------------------------------------------------
# wiring

def _add_window_flags(parser):
    parser.add_argument("-N", "--max-arity", type=int, required=True, dest="max_arity")
    parser.add_argument("-W", "--max-weight", type=int, required=True, dest="max_weight")
    parser.add_argument("--pad", type=int, default=1)


def build_parser():
    parser = argparse.ArgumentParser(
        prog="homenv",
        description="Exact kernel for Hom-algebra tree calculus and enveloping quotients.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("trees", help="enumerate plain, weighted or diweighted trees")
    p.add_argument("--n", type=int, required=True, help="number of leaves")
    p.add_argument("--max-weight", type=int, default=None)
    p.add_argument("--di", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_trees)

    p = sub.add_parser("catalan", help="print a Catalan number")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_catalan)

    p = sub.add_parser("check", help="check the axioms of an algebra file")
    p.add_argument("file")
    p.add_argument(
        "--kind",
        required=True,
        choices=["hom-assoc", "hom-lie", "hom-leibniz", "hom-dialgebra", "bimodule"],
    )
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("derive", help="apply a construction to an algebra file")
    p.add_argument("file")
    p.add_argument(
        "--functor",
        required=True,
        choices=["hlie", "hleib", "di-from-assoc", "di-from-bimodule"],
    )
    p.add_argument("-o", "--output", default=None)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_derive)

    p = sub.add_parser("free-basis", help="list window monomials of the free algebra")
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("-N", "--max-arity", type=int, required=True, dest="max_arity")
    p.add_argument("-W", "--max-weight", type=int, required=True, dest="max_weight")
    p.add_argument("--di", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_free_basis)

    p = sub.add_parser("envelope", help="compute a windowed enveloping quotient")
    p.add_argument("file")
    p.add_argument("--kind", required=True, choices=["hlie", "fhas", "hleib"])
    _add_window_flags(p)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_envelope)

    p = sub.add_parser(
        "verify-adjunction",
        help="verify one induced-morphism instance through the enveloping quotient",
    )
    p.add_argument("--lie", required=True)
    p.add_argument("--assoc", required=True)
    p.add_argument("--map", required=True)
    _add_window_flags(p)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify_adjunction)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as err:
        return err.code if isinstance(err.code, int) else USAGE_ERROR
    try:
        return args.func(args)
    except InputError as err:
        print(f"error: {err}", file=sys.stderr)
        return USAGE_ERROR
    except AxiomError as err:
        print(f"error: {err}", file=sys.stderr)
        return VIOLATION
    except (ValueError, TypeError, KeyError) as err:
        print(f"error: {err}", file=sys.stderr)
        return USAGE_ERROR


def entry():
    sys.exit(main())


if __name__ == "__main__":
    entry()
