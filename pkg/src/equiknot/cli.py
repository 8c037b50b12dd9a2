"""``equiknot`` command line.

Every command reads an equivariant Seifert system as JSON from a file (or
stdin when the path is ``-`` or omitted) and writes a JSON document to
stdout.  Exit codes: 0 success, 1 computation error, 2 usage or input error,
3 catalog mismatch.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from . import seifert, serialize, signatures, structures, two_bridge
from .errors import EquiknotError, InvalidInput
from .polynomials import (
    RatPoly,
    count_roots,
    delta_inverse,
    delta_transform,
    factor_rational,
    format_laurent,
    format_poly,
    is_square,
    parse_laurent,
    parse_poly,
    squarefree_part,
)

EXIT_OK, EXIT_COMPUTATION, EXIT_USAGE, EXIT_MISMATCH = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _q(x) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _read_json(path):
    try:
        if path in (None, "-"):
            return json.load(sys.stdin)
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except FileNotFoundError:
        p = serialize.DATA_DIR / str(path).rsplit("/", 1)[-1]
        if p.exists():
            return _read_json(str(p))
        raise UsageError(f"no such file: {path}")
    except json.JSONDecodeError as exc:
        raise UsageError(f"invalid JSON in {path or 'stdin'}: {exc}")


def _system(path):
    return serialize.system_from_json(_read_json(path))


def _root_factor(root) -> RatPoly:
    """The irreducible factor of the defining polynomial that vanishes at ``root``."""
    f = squarefree_part(root.defining_poly)
    if root.is_rational:
        return RatPoly((-root.value, 1))
    try:
        for g, _ in factor_rational(f):
            if count_roots(g, root.lo, root.hi) > 0:
                return g
    except EquiknotError:
        pass
    return f


def _root_json(root) -> dict:
    return {"poly": format_poly(_root_factor(root), "s"), "interval": [_q(root.lo), _q(root.hi)]}


def _matrix(M):
    return serialize.encode_matrix(M)


def cmd_validate(args):
    s = _system(args.system)
    bad = seifert.validate(s)
    return {"valid": not bad, "violations": bad}


def cmd_sum(args):
    return serialize.system_to_json(seifert.orthogonal_sum(_system(args.first), _system(args.second)))


def cmd_inverse(args):
    return serialize.system_to_json(seifert.inverse(_system(args.system)))


def cmd_metabolizer_verify(args):
    s = _system(args.system)
    H, full = serialize.witness_from_json(_read_json(args.witness))
    target = s.form if args.reduced else s
    return {"metabolizer": seifert.verify_metabolizer(target, H, full), "full": full}


def cmd_metabolizer_search(args):
    s = _system(args.system)
    found = seifert.search_partial_metabolizer(s, args.rank, args.coeff_bound, args.budget)
    if found is None:
        return {"generators": None, "full": False}
    return serialize.witness_to_json(found, False)


def cmd_complexity(args):
    r = seifert.complexity_report(_system(args.system), args.coeff_bound, args.budget)
    out = {
        "m": r.m,
        "ac_lower": r.ac_lower,
        "ac_upper": r.ac_upper,
        "partial_rank_lower": r.partial_rank_lower,
        "partial_rank_upper": r.partial_rank_upper,
        "method": r.method,
    }
    if r.witness is not None and r.witness.rank:
        out["witness"] = serialize.witness_to_json(r.witness, False)
    return out


def cmd_structure(args):
    st = structures.symmetric_structure_of(_system(args.system))
    return {"B": _matrix(st.B), "S": _matrix(st.S)}


def cmd_witt(args):
    s = _system(args.system)
    summands = []
    for w in structures.witt_summands(s):
        summands.append({
            "p": format_poly(w.p, "s"),
            "rank": w.rank_over_F,
            "dim": w.dim_ambient,
            "signatures": [{"root": _root_json(r), "signature": v} for r, v in w.signatures],
            "discriminant": w.discriminant_class,
        })
    return {"summands": summands, "sigma_tilde": structures.equivariant_signature(s)}


def cmd_profile(args):
    s = _system(args.system)
    prof = signatures.profile(s)
    best = signatures.genus_bounds(s).max_jump
    return {
        "breakpoints": [_root_json(r) for r in prof.breakpoints],
        "interval_values": list(prof.interval_values),
        "jumps": list(prof.jumps),
        "sigma": prof.sigma,
        "sigma_tilde": prof.sigma_tilde,
        "max_jump": best,
        "g4_lower": _q(Fraction(best, 4)),
    }


def cmd_jumps(args):
    s = _system(args.system)
    prof = signatures.profile(s)
    rows = []
    for r, j, v in zip(prof.breakpoints, prof.jumps, prof.values_at):
        row = _root_json(r)
        row.update({"jump": j, "value": v})
        if r.is_rational:
            row["eigenspace_jump"] = signatures.jump_via_eigenspace(s, r.value)
        rows.append(row)
    return {"jumps": rows}


def cmd_genus_bound(args):
    g = signatures.genus_bounds(_system(args.system))
    return {
        "max_jump": g.max_jump,
        "g4_lower": _q(g.g4_lower),
        "sc_lower": _q(g.sc_lower),
        "per_lambda": [dict(_root_json(r), jump=j) for r, j in g.per_lambda],
        "odd_multiplicity": [_root_json(r) for r in g.odd_multiplicity],
    }


def cmd_delta(args):
    return {"delta": format_poly(delta_transform(parse_laurent(args.poly)), "s")}


def cmd_delta_inverse(args):
    return {"delta_inverse": format_laurent(delta_inverse(parse_poly(args.poly, "s"), args.half_width))}


def cmd_fox_milnor(args):
    if args.poly is not None:
        return {"is_square": is_square(parse_laurent(args.poly))}
    if args.p is None or args.q is None:
        raise UsageError("fox-milnor needs --poly or both --p and --q")
    return {"is_square": two_bridge.fox_milnor_report(args.p, args.q),
            "alexander": format_laurent(two_bridge.alexander_oracle(args.p, args.q))}


def _row_json(r) -> dict:
    return {
        "name": r.name,
        "p": r.p,
        "q": r.q,
        "q_prime": r.q_prime,
        "cf": list(r.cf),
        "det": r.det,
        "alexander": r.alexander,
        "oracle_match": r.oracle_match,
        "lt_vanishes": r.lt_vanishes,
        "simple_roots": r.simple_roots,
        "is_square": r.fox_milnor_square,
        "J": r.J,
        "catalog_J": r.catalog_J,
        "order": r.order,
        "match": r.match,
        "errors": r.errors,
    }


def cmd_two_bridge(args):
    cf = two_bridge.even_cf(args.p, args.q)
    V = two_bridge.seifert_matrix(cf)
    row = two_bridge.evaluate_row(two_bridge.TwoBridgeKnot(args.p, args.q))
    out = _row_json(row)
    for k in ("name", "catalog_J", "order", "match"):
        out.pop(k)
    out["seifert_matrix"] = _matrix(V)
    return out


def cmd_table(args):
    report = two_bridge.table_run(two_bridge.load_catalog(args.catalog))
    rows = [_row_json(r) for r in report.rows]
    code = EXIT_OK if report.ok else EXIT_MISMATCH
    if args.fmt == "csv":
        buf = io.StringIO()
        cols = ["name", "p", "q", "q_prime", "det", "alexander", "J", "catalog_J", "order", "match"]
        w = csv.DictWriter(buf, fieldnames=cols, extrasaction="ignore", lineterminator="\n")
        w.writeheader()
        w.writerows(rows)
        buf.write(f"# rows={len(rows)} mismatches={report.mismatches} "
                  f"hypothesis_failures={report.hypothesis_failures}\n")
        return buf.getvalue(), code
    doc = {"rows": rows, "count": len(rows), "mismatches": report.mismatches,
           "hypothesis_failures": report.hypothesis_failures}
    return doc, code


def _add_system(p, name="system"):
    p.add_argument(name, nargs="?", default="-", help="system JSON file, '-' for stdin")


def _add_search(p):
    p.add_argument("--coeff-bound", type=int, default=seifert.DEFAULT_COEFF_BOUND,
                   help="largest absolute coefficient tried in the isotropic vector search")
    p.add_argument("--budget", type=int, default=None,
                   help="step budget for the search (default: $EQUIKNOT_SEARCH_BUDGET or 10^7)")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="equiknot", description="Equivariant algebraic concordance invariants from Seifert data.")
    parser.add_argument("--format", dest="fmt", choices=["json", "text", "csv"], default="json",
                        help="output format (csv only applies to table)")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("validate", help="check the axioms of a system")
    _add_system(p)
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("sum", help="orthogonal sum of two systems")
    p.add_argument("first")
    p.add_argument("second")
    p.set_defaults(func=cmd_sum)

    p = sub.add_parser("inverse", help="inverse system (-A^T, P, h, -lk)")
    _add_system(p)
    p.set_defaults(func=cmd_inverse)

    p = sub.add_parser("metabolizer-verify", help="check a candidate metabolizer")
    p.add_argument("system")
    p.add_argument("witness", help='witness JSON {"generators": [[int]], "full": bool}')
    p.add_argument("--reduced", action="store_true", help="check against the reduced form, ignoring h and lk")
    p.set_defaults(func=cmd_metabolizer_verify)

    p = sub.add_parser("metabolizer-search", help="search for a partial metabolizer of a given rank")
    _add_system(p)
    p.add_argument("--rank", type=int, required=True)
    _add_search(p)
    p.set_defaults(func=cmd_metabolizer_search)

    p = sub.add_parser("complexity", help="bounds on the algebraic complexity")
    _add_system(p)
    _add_search(p)
    p.set_defaults(func=cmd_complexity)

    p = sub.add_parser("structure", help="symmetric structure (B, S)")
    _add_system(p)
    p.set_defaults(func=cmd_structure)

    p = sub.add_parser("witt", help="trace form invariants of each primary summand")
    _add_system(p)
    p.set_defaults(func=cmd_witt)

    p = sub.add_parser("profile", help="signature profile of the Hermitian pencil")
    _add_system(p)
    p.set_defaults(func=cmd_profile)

    p = sub.add_parser("jumps", help="signature jumps at every breakpoint")
    _add_system(p)
    p.set_defaults(func=cmd_jumps)

    p = sub.add_parser("genus-bound", help="slice genus lower bounds from the maximal jump")
    _add_system(p)
    p.set_defaults(func=cmd_genus_bound)

    p = sub.add_parser("delta", help="transform a symmetric Laurent polynomial in t")
    p.add_argument("--poly", required=True, help="e.g. '-t + 3 - t^-1'")
    p.set_defaults(func=cmd_delta)

    p = sub.add_parser("delta-inverse", help="inverse transform of a polynomial in s")
    p.add_argument("--poly", required=True, help="e.g. 's - 10'")
    p.add_argument("--half-width", type=int, default=None)
    p.set_defaults(func=cmd_delta_inverse)

    p = sub.add_parser("fox-milnor", help="is the Alexander polynomial a square")
    p.add_argument("--poly", default=None)
    p.add_argument("--p", type=int, default=None)
    p.add_argument("--q", type=int, default=None)
    p.set_defaults(func=cmd_fox_milnor)

    p = sub.add_parser("two-bridge", help="even continued fraction, Seifert matrix and J for p/q")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.set_defaults(func=cmd_two_bridge)

    p = sub.add_parser("table", help="recompute the two-bridge catalog")
    p.add_argument("--catalog", default=None, help="catalog CSV (default: shipped table)")
    g = p.add_mutually_exclusive_group()
    g.add_argument("--csv", dest="table_fmt", action="store_const", const="csv")
    g.add_argument("--json", dest="table_fmt", action="store_const", const="json")
    p.set_defaults(func=cmd_table)
    return parser


def _text(doc, indent="") -> str:
    if isinstance(doc, dict):
        lines = []
        for k, v in doc.items():
            if isinstance(v, (dict, list)) and v:
                lines.append(f"{indent}{k}:")
                lines.append(_text(v, indent + "  "))
            else:
                lines.append(f"{indent}{k}: {json.dumps(v, ensure_ascii=False)}")
        return "\n".join(lines)
    if isinstance(doc, list):
        return "\n".join(f"{indent}- {json.dumps(v, ensure_ascii=False)}" for v in doc)
    return f"{indent}{doc}"


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr

    def fail(code, name, detail):
        stderr.write(json.dumps({"error": name, "detail": detail}, ensure_ascii=False) + "\n")
        return code

    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command == "table":
            args.fmt = getattr(args, "table_fmt", None) or args.fmt
        result = args.func(args)
    except SystemExit as exc:  # --help
        return exc.code if isinstance(exc.code, int) else EXIT_OK
    except UsageError as exc:
        return fail(EXIT_USAGE, "UsageError", str(exc))
    except InvalidInput as exc:
        return fail(EXIT_USAGE, exc.name, str(exc))
    except EquiknotError as exc:
        return fail(EXIT_COMPUTATION, exc.name, str(exc))
    except (ArithmeticError, ValueError) as exc:
        return fail(EXIT_COMPUTATION, type(exc).__name__, str(exc))

    code = EXIT_OK
    if isinstance(result, tuple):
        result, code = result
    if isinstance(result, str):
        stdout.write(result)
    elif args.fmt == "text":
        stdout.write(_text(result) + "\n")
    else:
        stdout.write(serialize.dumps(result))
    return code


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
