"""Command-line front end over the library: one JSON document per invocation.

Subcommands cover verification, exponent-level transforms, Gray maps and
weight tables, distance reports, combined analysis, bound checks, search,
and the bundled fixture corpus.  Output goes to stdout with sorted keys, so
repeated runs are byte-identical; errors go to stderr as {"error": ...}.

Exit status: 0 for a clean result, 1 when a mathematical check fails or the
requested quantities are incompatible, 2 for malformed input.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import replace
from fractions import Fraction

from .bh import BhMatrix, bh_lift, bh_search, bh_verify, gh_check
from .codes import (
    bh_row_distance_bound,
    code_from_matrix,
    equidistant_check,
    gray_expand,
    min_distance_hamming,
    min_distance_weighted,
    plotkin_check,
)
from .fixtures import all_entries, get_entry
from .gray import (
    WeightTable,
    g1,
    g2,
    gamma_average,
    hamming_table,
    lee_table,
    prime_power,
    w1_table,
    w2_table,
)
from .ph import (
    PhMatrix,
    ph_crt_merge,
    ph_evaluate,
    ph_kronecker,
    ph_normalize,
    ph_shift,
    ph_substitute,
    ph_verify,
)

__all__ = ["main"]


class _InputError(Exception):
    """Malformed input: missing file, bad JSON, out-of-domain arguments."""


class _MathError(Exception):
    """A mathematical precondition or compatibility check failed."""


def _emit(obj) -> None:
    print(json.dumps(obj, sort_keys=True))


def _num(value):
    f = Fraction(value)
    return int(f) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"


def _input_call(fn, *args, **kwargs):
    try:
        return fn(*args, **kwargs)
    except (ValueError, TypeError, KeyError) as exc:
        raise _InputError(str(exc)) from exc


def _math_call(fn, *args, **kwargs):
    try:
        return fn(*args, **kwargs)
    except (ValueError, TypeError) as exc:
        raise _MathError(str(exc)) from exc


def _read_json(path: str):
    try:
        with open(path, "r", encoding="utf-8") as handle:
            return json.load(handle)
    except OSError as exc:
        raise _InputError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise _InputError(f"{path} is not valid JSON: {exc}") from exc


def _matrix_from_payload(payload):
    """Dispatch on the payload's kind tag; returns (kind, object)."""
    if not isinstance(payload, dict):
        raise _InputError("matrix JSON must be an object with a 'kind' key")
    kind = payload.get("kind")
    if kind == "ph":
        return "ph", _input_call(PhMatrix.from_json, payload)
    if kind == "bh":
        return "bh", _input_call(BhMatrix.from_json, payload)
    if kind == "gh":
        for key in ("n", "k", "exponents"):
            if key not in payload:
                raise _InputError(f"matrix JSON missing key {key!r}")
        rows = tuple(tuple(row) for row in payload["exponents"])
        return "gh", (rows, payload["k"])
    raise _InputError(f"unknown matrix kind {kind!r}; expected ph, bh, or gh")


def _load_matrix(args):
    path = getattr(args, "path", None)
    fixture = getattr(args, "fixture", None)
    if (path is None) == (fixture is None):
        raise _InputError("give exactly one input: a matrix file or --fixture ID")
    if fixture is not None:
        payload = _input_call(get_entry, fixture).payload
    else:
        payload = _read_json(path)
    return _matrix_from_payload(payload)


def _parse_tamper(spec: str):
    parts = spec.split(",")
    if len(parts) != 3:
        raise _InputError(f"tamper spec must be 'i,j,+d', got {spec!r}")
    try:
        return tuple(int(part) for part in parts)
    except ValueError as exc:
        raise _InputError(f"tamper spec must be 'i,j,+d', got {spec!r}") from exc


def _tampered_rows(rows, i: int, j: int, delta: int, m=None):
    if not (0 <= i < len(rows) and 0 <= j < len(rows[i])):
        raise _InputError(f"tamper position ({i}, {j}) is outside the matrix")
    value = rows[i][j] + delta
    if m is not None:
        value %= m
    return tuple(
        tuple(value if (r, c) == (i, j) else a for c, a in enumerate(row))
        for r, row in enumerate(rows)
    )


def cmd_verify(args) -> int:
    kind, obj = _load_matrix(args)
    tamper = _parse_tamper(args.tamper) if args.tamper else None
    if kind == "ph":
        if tamper:
            obj = replace(obj, exponents=_tampered_rows(obj.exponents, *tamper))
        report = ph_verify(obj)
        ok = report.ok
    elif kind == "bh":
        if tamper:
            obj = replace(obj, exponents=_tampered_rows(obj.exponents, *tamper, m=obj.m))
        report = bh_verify(obj)
        ok = report.ok
    else:
        rows, k = obj
        if tamper:
            rows = _tampered_rows(rows, *tamper, m=k)
        report = gh_check(rows, k)
        ok = report.is_gh
    _emit(report.to_json())
    return 0 if ok else 1


def _transform_inputs(args, need: int) -> list[PhMatrix]:
    payloads = [_input_call(get_entry, fid).payload for fid in args.fixture or []]
    payloads += [_read_json(path) for path in args.paths]
    if len(payloads) != need:
        raise _InputError(
            f"transform {args.op} needs exactly {need} input "
            f"matrix{'es' if need > 1 else ''}, got {len(payloads)}"
        )
    matrices = []
    for payload in payloads:
        kind, obj = _matrix_from_payload(payload)
        if kind == "bh":
            obj = bh_lift(obj)
        elif kind == "gh":
            raise _InputError("group matrices have no monomial form to transform")
        matrices.append(obj)
    return matrices


def cmd_transform(args) -> int:
    matrices = _transform_inputs(args, args.need)
    if args.op == "shift":
        if (args.t is None) == (args.t_constant is None):
            raise _InputError("shift needs exactly one of --t FILE or --t-constant C")
        if args.t is not None:
            t = _read_json(args.t)
        else:
            n = matrices[0].n
            t = [[args.t_constant] * n for _ in range(n)]
        result = _math_call(ph_shift, matrices[0], t)
    elif args.op == "substitute":
        result = _math_call(ph_substitute, matrices[0], args.k)
    elif args.op == "kronecker":
        result = _math_call(ph_kronecker, matrices[0], matrices[1])
    elif args.op == "crt-merge":
        result = _math_call(ph_crt_merge, matrices[0], matrices[1], args.h, args.k)
    elif args.op == "normalize":
        result = _math_call(ph_normalize, matrices[0])
    else:
        result = _math_call(ph_evaluate, matrices[0], args.k)
    if args.check:
        report = ph_verify(result) if isinstance(result, PhMatrix) else bh_verify(result)
        if not report.ok:
            raise _MathError("transform result failed verification")
    _emit(result.to_json())
    return 0


def cmd_gray(args) -> int:
    gray_map = g1 if args.map == "g1" else g2
    image = _input_call(gray_map, args.u, args.p, args.k)
    _emit(list(image.digits))
    return 0


def cmd_weights(args) -> int:
    if args.table in ("w1", "w2"):
        p, k = _input_call(prime_power, args.m)
        builder = w1_table if args.table == "w1" else w2_table
        table = _input_call(builder, p, k)
    elif args.table == "lee":
        table = _input_call(lee_table, args.m)
    else:
        table = _input_call(hamming_table, args.m)
    _emit(table.to_json())
    return 0


def _as_bh(kind, obj):
    """Group matrices reuse the root-of-unity container for distance work."""
    if kind == "gh":
        rows, k = obj
        return "bh", _input_call(BhMatrix, len(rows), k, rows)
    return kind, obj


def cmd_distance(args) -> int:
    kind, obj = _as_bh(*_load_matrix(args))
    if args.gray:
        if args.weight or args.drop_first:
            raise _MathError("--gray cannot be combined with --weight or --drop-first")
        if kind != "bh":
            raise _MathError(
                "gray expansion needs a root-of-unity matrix; run transform evaluate first"
            )
        expansion = _math_call(gray_expand, obj, args.gray)
        report = _math_call(min_distance_hamming, expansion.rows)
    elif args.weight:
        table = _input_call(WeightTable.from_json, _read_json(args.weight))
        code = _math_call(code_from_matrix, obj, drop_first=args.drop_first)
        report = _math_call(min_distance_weighted, code, table)
    else:
        code = _math_call(code_from_matrix, obj, drop_first=args.drop_first)
        report = _math_call(min_distance_hamming, code)
    _emit(report.to_json())
    return 0


def cmd_analyze(args) -> int:
    kind, M = _as_bh(*_load_matrix(args))
    if kind != "bh":
        raise _MathError(
            "analysis needs a root-of-unity matrix; run transform evaluate first"
        )
    if args.gray and args.weight:
        raise _MathError("choose one of --gray and --weight")

    out = {"n": M.n, "m": M.m}
    if args.gray:
        expansion = _math_call(gray_expand, M, args.gray)
        report = _math_call(min_distance_hamming, expansion.rows)
        out["gray"] = {"map": args.gray, "p": expansion.p, "k": expansion.k}
    else:
        report = _math_call(min_distance_hamming, M.exponents)
    out["d"] = _num(report.min_distance)
    out["distance"] = report.to_json()
    if M.m >= 3:
        out["row_bound"] = bh_row_distance_bound(M).to_json()

    table = None
    if args.gray:
        builder = w1_table if args.gray == "g1" else w2_table
        table = builder(expansion.p, expansion.k)
    elif args.weight:
        table = _input_call(WeightTable.from_json, _read_json(args.weight))
    if table is not None:
        drop = all(row[0] == 0 for row in M.exponents)
        code = _math_call(code_from_matrix, M, drop_first=drop)
        wreport = _math_call(min_distance_weighted, code, table)
        out["code_distance"] = wreport.to_json()
        out["code_equidistant"] = _math_call(equidistant_check, code, table)
        if args.plotkin:
            gamma = gamma_average(table)
            out["gamma"] = _num(gamma)
            out["plotkin"] = _math_call(
                plotkin_check, code.size, wreport.min_distance, gamma, code.length
            ).to_json()
    elif args.plotkin:
        raise _MathError("--plotkin needs a weight scale; pass --gray or --weight")
    _emit(out)
    return 0


def cmd_plotkin(args) -> int:
    report = _input_call(plotkin_check, args.M, args.d, args.gamma, args.length)
    _emit(report.to_json())
    return 0


def cmd_search(args) -> int:
    try:
        found = bh_search(args.n, args.m, limit=args.limit, force=args.force)
    except (ValueError, TypeError) as exc:
        raise _InputError(str(exc).replace("pass force=True", "pass --force")) from exc
    _emit({"count": len(found), "matrices": [matrix.to_json() for matrix in found]})
    return 0


def cmd_fixtures(args) -> int:
    if args.action == "list":
        _emit(
            {
                "fixtures": [
                    {"id": e.id, "kind": e.kind, "provenance": e.provenance}
                    for e in all_entries()
                ]
            }
        )
    else:
        _emit(_input_call(get_entry, args.id).payload)
    return 0


def _add_matrix_input(sub) -> None:
    sub.add_argument("path", nargs="?", help="matrix JSON file")
    sub.add_argument("--fixture", help="bundled fixture id instead of a file")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hadacode",
        description="Exact toolkit for monomial and root-of-unity orthogonal "
        "matrices and the codes cut from them.",
    )
    subs = parser.add_subparsers(dest="command", metavar="command")

    sub = subs.add_parser("verify", help="run the orthogonality check for a matrix")
    _add_matrix_input(sub)
    sub.add_argument("--tamper", metavar="i,j,+d", help="perturb one exponent first")
    sub.set_defaults(cmd=cmd_verify)

    sub = subs.add_parser("transform", help="exponent-level matrix transforms")
    ops = sub.add_subparsers(dest="op", metavar="op", required=True)
    specs = [
        ("shift", 1, "add a shift matrix to the exponents"),
        ("substitute", 1, "replace x by x^k"),
        ("kronecker", 2, "Kronecker product with exponent sums"),
        ("crt-merge", 2, "entrywise congruence merge over two orders"),
        ("normalize", 1, "make the first row and column all zero"),
        ("evaluate", 1, "evaluate at a primitive k-th root of unity"),
    ]
    for name, need, help_text in specs:
        op = ops.add_parser(name, help=help_text)
        op.add_argument("paths", nargs="*", help="input matrix JSON files")
        op.add_argument("--fixture", action="append", help="bundled fixture id input")
        op.add_argument("--check", action="store_true", help="verify the result first")
        if name == "shift":
            op.add_argument("--t", help="JSON file with the shift matrix")
            op.add_argument("--t-constant", type=int, help="constant shift value")
        if name in ("substitute", "evaluate"):
            op.add_argument("--k", type=int, required=True)
        if name == "crt-merge":
            op.add_argument("--h", type=int, help="order of the first factor")
            op.add_argument("--k", type=int, help="order of the second factor")
        op.set_defaults(cmd=cmd_transform, op=name, need=need)

    sub = subs.add_parser("gray", help="digit vector of one Gray image")
    sub.add_argument("--map", choices=("g1", "g2"), required=True)
    sub.add_argument("--p", type=int, required=True)
    sub.add_argument("--k", type=int, required=True)
    sub.add_argument("--u", type=int, required=True)
    sub.set_defaults(cmd=cmd_gray)

    sub = subs.add_parser("weights", help="full weight table over Z_m")
    sub.add_argument("--table", choices=("w1", "w2", "lee", "hamming"), required=True)
    sub.add_argument("--m", type=int, required=True)
    sub.set_defaults(cmd=cmd_weights)

    sub = subs.add_parser("distance", help="minimum-distance report for a matrix")
    _add_matrix_input(sub)
    sub.add_argument("--gray", choices=("g1", "g2"), help="expand first, then scan")
    sub.add_argument("--weight", metavar="FILE", help="weight table JSON for the scan")
    sub.add_argument(
        "--drop-first", action="store_true", help="drop the all-zero first coordinate"
    )
    sub.set_defaults(cmd=cmd_distance)

    sub = subs.add_parser("analyze", help="distance, bound, and code report")
    _add_matrix_input(sub)
    sub.add_argument("--gray", choices=("g1", "g2"), help="headline the expansion distance")
    sub.add_argument("--weight", metavar="FILE", help="weight table JSON for the code view")
    sub.add_argument("--plotkin", action="store_true", help="add the size-bound verdict")
    sub.set_defaults(cmd=cmd_analyze)

    sub = subs.add_parser("plotkin", help="size bound for given parameters")
    sub.add_argument("--M", type=int, required=True, help="code size")
    sub.add_argument("--d", required=True, help="minimum distance (int or a/b)")
    sub.add_argument("--gamma", required=True, help="average weight (int or a/b)")
    sub.add_argument("--length", type=int, required=True)
    sub.set_defaults(cmd=cmd_plotkin)

    sub = subs.add_parser("search", help="enumerate normalized matrices of one order")
    sub.add_argument("--n", type=int, required=True)
    sub.add_argument("--m", type=int, required=True)
    sub.add_argument("--limit", type=int)
    sub.add_argument("--force", action="store_true", help="override the size guard")
    sub.set_defaults(cmd=cmd_search)

    sub = subs.add_parser("fixtures", help="bundled matrix corpus")
    actions = sub.add_subparsers(dest="action", metavar="action", required=True)
    actions.add_parser("list", help="ids, kinds, and provenance").set_defaults(
        cmd=cmd_fixtures, action="list"
    )
    dump = actions.add_parser("dump", help="payload JSON of one fixture")
    dump.add_argument("id")
    dump.set_defaults(cmd=cmd_fixtures, action="dump")

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if not hasattr(args, "cmd"):
        parser.print_usage(sys.stderr)
        return 2
    try:
        return args.cmd(args)
    except _InputError as exc:
        print(json.dumps({"error": str(exc)}, sort_keys=True), file=sys.stderr)
        return 2
    except _MathError as exc:
        print(json.dumps({"error": str(exc)}, sort_keys=True), file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
