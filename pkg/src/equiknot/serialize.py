"""JSON encoding of rationals, matrices, systems and witnesses.

Rationals are written as ``"p/q"`` strings; integers stay JSON numbers while
they fit in a double without loss.
"""

from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path

from .errors import InvalidInput
from .exact import MatQ
from .seifert import EquivariantSeifertSystem, MetabolizerCandidate

_SAFE_INT = 2**53


def encode_rational(x):
    x = Fraction(x)
    if x.denominator == 1 and abs(x.numerator) < _SAFE_INT:
        return x.numerator
    return f"{x.numerator}/{x.denominator}" if x.denominator != 1 else str(x.numerator)


def decode_rational(x) -> Fraction:
    if isinstance(x, bool):
        raise InvalidInput("booleans are not numbers")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        try:
            return Fraction(x.strip())
        except ValueError as exc:
            raise InvalidInput(f"not a rational: {x!r}") from exc
    raise InvalidInput(f"expected an integer or a 'p/q' string, got {x!r}")


def encode_matrix(M: MatQ) -> list:
    return [[encode_rational(x) for x in row] for row in M.tolist()]


def decode_matrix(rows) -> MatQ:
    if not isinstance(rows, list) or any(not isinstance(r, list) for r in rows):
        raise InvalidInput("matrix must be a list of rows")
    width = len(rows[0]) if rows else 0
    if any(len(r) != width for r in rows):
        raise InvalidInput("ragged matrix")
    return MatQ([[decode_rational(x) for x in r] for r in rows], width)


def encode_vector(v) -> list:
    return [encode_rational(x) for x in v]


def system_to_json(s) -> dict:
    out = {}
    if isinstance(s, EquivariantSeifertSystem) and s.name:
        out["name"] = s.name
    out["A"] = encode_matrix(s.A)
    out["P"] = encode_matrix(s.P)
    if isinstance(s, EquivariantSeifertSystem):
        out["h"] = encode_vector(s.h)
        out["lk"] = encode_vector(s.lk)
    return out


def system_from_json(doc: dict) -> EquivariantSeifertSystem:
    """Missing covectors default to zero."""
    if not isinstance(doc, dict):
        raise InvalidInput("system document must be a JSON object")
    unknown = set(doc) - {"A", "P", "h", "lk", "name"}
    if unknown:
        raise InvalidInput(f"unknown keys {sorted(unknown)}")
    if "A" not in doc or "P" not in doc:
        raise InvalidInput("system needs both 'A' and 'P'")
    A = decode_matrix(doc["A"])
    P = decode_matrix(doc["P"])
    n = A.rows
    h = [decode_rational(x) for x in doc.get("h", [0] * n)]
    lk = [decode_rational(x) for x in doc.get("lk", [0] * n)]
    return EquivariantSeifertSystem(A, P, tuple(h), tuple(lk), doc.get("name"))


def witness_to_json(H: MetabolizerCandidate, full: bool) -> dict:
    return {"generators": [encode_vector(g) for g in H.generators], "full": bool(full)}


def witness_from_json(doc: dict) -> tuple[MetabolizerCandidate, bool]:
    if not isinstance(doc, dict) or "generators" not in doc:
        raise InvalidInput("witness document needs 'generators'")
    gens = [tuple(decode_rational(x) for x in g) for g in doc["generators"]]
    return MetabolizerCandidate(gens), bool(doc.get("full", True))


def dumps(doc) -> str:
    return json.dumps(doc, ensure_ascii=False, indent=2) + "\n"


DATA_DIR = Path(__file__).with_name("data")


def load_system(path) -> object:
    """Load a system from a path, falling back to a shipped fixture of the same file name."""
    p = Path(path)
    if not p.exists() and (DATA_DIR / p.name).exists():
        p = DATA_DIR / p.name
    with open(p, encoding="utf-8") as fh:
        return system_from_json(json.load(fh))
