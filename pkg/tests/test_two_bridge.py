from fractions import Fraction
from math import gcd

import pytest
import sympy

from equiknot.errors import InvalidInput
from equiknot.exact import MatQ
from equiknot.polynomials import LaurentPoly, is_square, normalize_alexander
from equiknot.two_bridge import (
    alexander_from_seifert,
    alexander_oracle,
    even_cf,
    evaluate_row,
    load_catalog,
    max_jump,
    plumbing_alexander,
    schubert_word,
    seifert_matrix,
    table_run,
    TwoBridgeKnot,
)


def test_even_cf_examples():
    assert even_cf(5, 2).entries == (1, 1)
    cf = even_cf(3, 1)
    assert cf.q_prime == -2 and cf.entries == (-1, 1)
    assert seifert_matrix(even_cf(5, 2)) == MatQ([[1, 1], [0, -1]])
    assert seifert_matrix(cf) == MatQ([[-1, 1], [0, -1]])


def test_alexander_oracle_known_values():
    assert str(alexander_oracle(3, 1)) == "t - 1 + t^-1"
    assert str(alexander_oracle(5, 2)) == "-t + 3 - t^-1"
    assert str(alexander_oracle(5, 1)) == "t^2 - t + 1 - t^-1 + t^-2"
    # the word only depends on an odd representative of q
    assert alexander_oracle(5, 2) == alexander_oracle(5, 7)


def test_schubert_word_length():
    assert len(schubert_word(11, 3)) == 10
    with pytest.raises(InvalidInput):
        schubert_word(10, 3)
    with pytest.raises(InvalidInput):
        schubert_word(9, 3)


def fox_sympy(p, q) -> LaurentPoly:
    """Independent Fox derivative of the two-bridge relator using sympy expressions."""
    if q % 2 == 0:
        q += p
    t = sympy.Symbol("t")
    eps = [(-1) ** ((i * q) // p) for i in range(1, p)]
    word = [("x" if i % 2 == 0 else "y", e) for i, e in enumerate(eps)]
    word = word + [("x", 1)] + [(g, -e) for g, e in reversed(word)] + [("y", -1)]
    total, prefix = 0, 0
    for g, e in word:
        if g == "x":
            total += t ** prefix if e == 1 else -t ** (prefix - 1)
        prefix += e
    poly = sympy.Poly(sympy.expand(total * t ** (2 * p)), t)
    return normalize_alexander(LaurentPoly([int(c) for c in reversed(poly.all_coeffs())]))


@pytest.mark.parametrize("p", [k for k in range(3, 100, 2)])
def test_seifert_matrix_agrees_with_fox_calculus(p):
    for q in range(1, p):
        if gcd(p, q) != 1:
            continue
        cf = even_cf(p, q)
        assert cf.value() == Fraction(p, cf.q_prime)
        V = seifert_matrix(cf)  # raises OracleMismatch on disagreement
        assert abs((V + V.T).det()) == p
        if p < 30:
            assert plumbing_alexander(cf) == fox_sympy(p, q)
            assert alexander_from_seifert(V) == plumbing_alexander(cf)


def test_catalog_reproduction():
    cat = load_catalog()
    assert len(cat) == 86
    report = table_run(cat)
    assert report.ok
    for r in report.rows:
        assert r.oracle_match and r.lt_vanishes and r.simple_roots
        assert not r.fox_milnor_square


def test_max_jump():
    assert max_jump(5, 2) == 1  # -t + 3 - 1/t has real roots
    assert max_jump(3, 1) == 0  # cyclotomic
    row = evaluate_row(TwoBridgeKnot(3, 1))
    assert not row.lt_vanishes  # the trefoil is not algebraically slice


def test_bad_catalog(tmp_path):
    f = tmp_path / "bad.csv"
    f.write_text("name,p,q\nx,5,2\n")
    with pytest.raises(InvalidInput):
        load_catalog(f)
    f.write_text("name,p,q,order,J\nx,6,1,?,0\n")
    with pytest.raises(InvalidInput):
        load_catalog(f)


def test_square_detection_on_constructed_squares():
    g = LaurentPoly((1, -3, 1), -1)
    assert is_square(g * g)
    assert not is_square(g)
