"""Two-bridge knots: even continued fractions, plumbing Seifert matrices, an
independent Fox-calculus Alexander polynomial, and the maximal signature jump.

For a two-bridge knot whose Levine-Tristram signature function vanishes and
whose Alexander polynomial has simple roots, the maximal equivariant jump is
1 exactly when the Alexander polynomial has a real root, and 0 otherwise.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from pathlib import Path

from .errors import HypothesisFailure, InvalidInput, NoExpansion, OracleMismatch
from .exact import MatQ
from .polynomials import (
    LaurentPoly,
    RatPoly,
    delta_transform,
    is_square,
    isolate_real_roots,
    normalize_alexander,
    separate,
    squarefree_decomposition,
)
from .seifert import EquivariantSeifertForm, delta_theta
from .serialize import DATA_DIR
from .signatures import levine_tristram

CATALOG_PATH = DATA_DIR / "table1.csv"


@dataclass(frozen=True)
class TwoBridgeKnot:
    p: int
    q: int
    name: str = ""
    catalog_order: str = ""
    catalog_J: int | None = None

    def __post_init__(self):
        _check_fraction(self.p, self.q)


@dataclass(frozen=True)
class EvenCF:
    entries: tuple  # a_1..a_m with p/q' = [2a_1, ..., 2a_m]
    p: int = 0
    q_prime: int = 0

    def value(self) -> Fraction:
        x = None
        for a in reversed(self.entries):
            x = Fraction(2 * a) if x is None else 2 * a + 1 / x
        return x


def _check_fraction(p: int, q: int):
    if p <= 0 or p % 2 == 0:
        raise InvalidInput(f"p must be odd and positive, got {p}")
    if gcd(p, q) != 1:
        raise InvalidInput(f"p={p} and q={q} are not coprime")


def even_representative(p: int, q: int) -> int:
    """The even q' congruent to q mod p with |q'| < p."""
    _check_fraction(p, q)
    q = q % p
    return q if q % 2 == 0 else q - p


def even_cf(p: int, q: int) -> EvenCF:
    qp = even_representative(p, q)
    x = Fraction(p, qp)
    entries = []
    while True:
        a = round(x / 2)
        r = x - 2 * a
        if abs(r) >= 1 or a == 0:
            raise NoExpansion(f"no even expansion for {p}/{qp}")
        entries.append(a)
        if r == 0:
            break
        x = 1 / r
        if len(entries) > 4 * p:
            raise NoExpansion(f"expansion of {p}/{qp} does not terminate")
    cf = EvenCF(tuple(entries), p, qp)
    if cf.value() != Fraction(p, qp) or len(entries) % 2:
        raise NoExpansion(f"even expansion of {p}/{qp} failed its reconstruction check")
    return cf


def _plain_seifert_matrix(cf: EvenCF) -> MatQ:
    m = len(cf.entries)
    rows = [[0] * m for _ in range(m)]
    for i, a in enumerate(cf.entries):
        rows[i][i] = a if i % 2 == 0 else -a
        if i + 1 < m:
            rows[i][i + 1] = 1
    return MatQ(rows, m)


def alexander_from_seifert(V: MatQ) -> LaurentPoly:
    """Normalized ``det(V - t V^T)``."""
    return normalize_alexander(delta_theta(EquivariantSeifertForm(V, MatQ.identity(V.rows))))


def plumbing_alexander(cf: EvenCF) -> LaurentPoly:
    """``det(V - t V^T)`` for the bidiagonal plumbing matrix, by the tridiagonal recurrence.

    The diagonal of ``V - t V^T`` is ``(1 - t) v_i``, the superdiagonal 1 and
    the subdiagonal ``-t``, so ``D_k = (1 - t) v_k D_{k-1} + t D_{k-2}``.
    """
    one_minus_t = RatPoly((1, -1))
    t = RatPoly((0, 1))
    prev, cur = RatPoly((1,)), RatPoly((1,))
    for i, a in enumerate(cf.entries):
        v = a if i % 2 == 0 else -a
        prev, cur = cur, one_minus_t * v * cur + (t * prev if i else RatPoly())
    return normalize_alexander(LaurentPoly(cur.coeffs))


def seifert_matrix(cf: EvenCF) -> MatQ:
    """Upper bidiagonal plumbing matrix, checked against the determinant and the Fox oracle."""
    V = _plain_seifert_matrix(cf)
    if cf.p:
        if abs((V + V.T).det()) != cf.p:
            raise OracleMismatch(f"|det(V + V^T)| != {cf.p}")
        if plumbing_alexander(cf) != alexander_oracle(cf.p, cf.q_prime):
            raise OracleMismatch(f"Seifert matrix and Fox calculus disagree for {cf.p}/{cf.q_prime}")
    return V


def schubert_word(p: int, q: int) -> list[tuple[str, int]]:
    """``x^e1 y^e2 x^e3 ...`` of length p - 1, with ``e_i = (-1)^floor(i q / p)`` for odd q."""
    _check_fraction(p, q)
    if q % 2 == 0:
        q += p
    return [("x" if i % 2 else "y", -1 if (i * q // p) % 2 else 1) for i in range(1, p)]


def alexander_oracle(p: int, q: int) -> LaurentPoly:
    """Alexander polynomial from the Fox derivative of the two-bridge relator ``W x W^-1 y^-1``."""
    word = schubert_word(p, q)
    inv = [(g, -e) for g, e in reversed(word)]
    relator = word + [("x", 1)] + inv + [("y", -1)]
    terms: dict = {}
    deg = 0  # abelianized degree of the prefix
    for g, e in relator:
        if g == "x":
            if e == 1:
                terms[deg] = terms.get(deg, 0) + 1
            else:
                terms[deg - 1] = terms.get(deg - 1, 0) - 1
        deg += e
    return normalize_alexander(LaurentPoly.from_dict(terms))


def _cleared(delta: LaurentPoly) -> RatPoly:
    return delta.to_ratpoly()[0]


def max_jump(p: int, q: int) -> int:
    """1 if the Alexander polynomial has a real root, else 0."""
    delta = alexander_oracle(p, q)
    return 1 if isolate_real_roots(_cleared(delta)) else 0


def fox_milnor_report(p: int, q: int) -> bool:
    """Whether the normalized Alexander polynomial is a square."""
    return is_square(alexander_oracle(p, q))


def lt_samples(delta: LaurentPoly) -> list[Fraction]:
    """Negative lambda values, one inside every gap between negative roots of the transform."""
    q = delta_transform(delta)
    if q.degree < 1:
        return [Fraction(-1)]
    neg = []
    for r in isolate_real_roots(q):
        while not r.is_rational and r.hi >= 0 > r.lo:
            r = r.refine()
        if r.hi < 0:
            neg.append(r)
    if not neg:
        return [Fraction(-1)]
    neg = separate(neg)
    out = [neg[0].lo - 1]
    for a, b in zip(neg, neg[1:]):
        out.append((a.hi + b.lo) / 2)
    out.append(neg[-1].hi / 2)
    return out


@dataclass
class RowResult:
    name: str
    p: int
    q: int
    q_prime: int
    cf: tuple
    det: int
    alexander: str
    oracle_match: bool
    lt_vanishes: bool
    simple_roots: bool
    fox_milnor_square: bool
    J: int
    catalog_J: int | None
    order: str
    errors: list = field(default_factory=list)

    @property
    def match(self) -> bool:
        return not self.errors and self.catalog_J is not None and self.J == self.catalog_J


def evaluate_row(knot: TwoBridgeKnot) -> RowResult:
    errors = []
    cf = even_cf(knot.p, knot.q)
    V = _plain_seifert_matrix(cf)
    det = int((V + V.T).det())
    delta_v = plumbing_alexander(cf)
    delta_o = alexander_oracle(knot.p, knot.q)
    oracle_match = delta_v == delta_o
    if abs(det) != knot.p:
        errors.append("OracleMismatch: |det(V + V^T)| != p")
    if not oracle_match:
        errors.append("OracleMismatch: Seifert matrix and Fox calculus disagree")
    simple = all(m == 1 for _, m in squarefree_decomposition(_cleared(delta_o)))
    if not simple:
        errors.append("HypothesisFailure: repeated root")
    # the pencil at lambda < 0 is the Levine-Tristram form at 1/lambda, so gaps map to gaps
    lt_zero = all(levine_tristram(V, 1 / lam) == 0 for lam in lt_samples(delta_v))
    if not lt_zero:
        errors.append("HypothesisFailure: Levine-Tristram signature is not identically zero")
    J = 1 if isolate_real_roots(_cleared(delta_o)) else 0
    return RowResult(
        name=knot.name, p=knot.p, q=knot.q, q_prime=cf.q_prime, cf=cf.entries, det=det,
        alexander=str(delta_o), oracle_match=oracle_match, lt_vanishes=lt_zero, simple_roots=simple,
        fox_milnor_square=is_square(delta_o), J=J, catalog_J=knot.catalog_J, order=knot.catalog_order,
        errors=errors,
    )


def checked_max_jump(p: int, q: int) -> int:
    """``max_jump`` after verifying the hypotheses that make it valid."""
    row = evaluate_row(TwoBridgeKnot(p, q))
    if row.errors:
        raise HypothesisFailure("; ".join(row.errors))
    return row.J


def load_catalog(path=None) -> list[TwoBridgeKnot]:
    path = Path(path) if path else CATALOG_PATH
    with open(path, newline="", encoding="utf-8") as fh:
        reader = csv.DictReader(fh)
        if reader.fieldnames != ["name", "p", "q", "order", "J"]:
            raise InvalidInput(f"catalog header must be name,p,q,order,J, got {reader.fieldnames}")
        out = []
        for row in reader:
            try:
                out.append(TwoBridgeKnot(int(row["p"]), int(row["q"]), row["name"], row["order"], int(row["J"])))
            except ValueError as exc:
                raise InvalidInput(f"bad catalog row {row}") from exc
        return out


@dataclass
class TableReport:
    rows: list
    mismatches: int
    hypothesis_failures: int

    @property
    def ok(self) -> bool:
        return self.mismatches == 0 and self.hypothesis_failures == 0


def table_run(catalog) -> TableReport:
    rows = [evaluate_row(k) for k in catalog]
    return TableReport(
        rows=rows,
        mismatches=sum(1 for r in rows if not r.match),
        hypothesis_failures=sum(1 for r in rows if any(e.startswith("HypothesisFailure") for e in r.errors)),
    )
