from fractions import Fraction

import pytest
import sympy
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from equiknot.errors import FactorizationLimit, InvalidInput, NotSymmetric, ZeroPolynomial
from equiknot.polynomials import (
    LaurentPoly,
    RatPoly,
    count_roots,
    delta_inverse,
    delta_transform,
    factor_rational,
    format_laurent,
    format_poly,
    is_irreducible,
    is_square,
    isolate_real_roots,
    normalize_alexander,
    parse_laurent,
    parse_poly,
    poly_gcd,
    poly_xgcd,
    squarefree_decomposition,
)

x = sympy.Symbol("x")
int_polys = st.lists(st.integers(-6, 6), min_size=1, max_size=8).map(RatPoly)
nonzero_polys = int_polys.filter(lambda p: not p.is_zero())


def to_sympy(p: RatPoly):
    return sympy.Poly(list(reversed([sympy.Rational(c.numerator, c.denominator) for c in p.coeffs])), x, domain="QQ")


def symmetric_laurent(coeffs):
    # coeffs[0] is the constant term, coeffs[k] the coefficient of t^k and t^-k
    d = len(coeffs) - 1
    full = list(reversed(coeffs[1:])) + list(coeffs)
    return LaurentPoly(full, -d)


sym_laurent = st.lists(st.integers(-5, 5), min_size=1, max_size=9).map(symmetric_laurent)


@settings(max_examples=80, deadline=None)
@given(int_polys, nonzero_polys)
def test_divmod(a, b):
    q, r = divmod(a, b)
    assert q * b + r == a
    assert r.degree < b.degree


@settings(max_examples=60, deadline=None)
@given(nonzero_polys, nonzero_polys)
def test_gcd_against_sympy(a, b):
    g = poly_gcd(a, b)
    assert to_sympy(g) == sympy.gcd(to_sympy(a), to_sympy(b)).monic()
    g2, u, v = poly_xgcd(a, b)
    assert u * a + v * b == g2


@settings(max_examples=60, deadline=None)
@given(nonzero_polys, nonzero_polys)
def test_squarefree_decomposition_reassembles(a, b):
    f = a * b * b
    prod = RatPoly((f.lc,))
    for g, m in squarefree_decomposition(f):
        prod = prod * g ** m
    assert prod == f


def test_squarefree_zero():
    with pytest.raises(ZeroPolynomial):
        squarefree_decomposition(RatPoly())


@settings(max_examples=60, deadline=None)
@given(nonzero_polys)
def test_root_count_against_sympy(f):
    if f.degree < 1:
        return
    roots = isolate_real_roots(f)
    distinct = sympy.real_roots(to_sympy(f).as_expr(), x)
    assert len(roots) == len(set(distinct))
    for r in roots:
        assert r.lo <= r.hi
        if r.is_rational:
            assert f(r.value) == 0
    assert count_roots(f, Fraction(-10**6), Fraction(10**6)) == len(roots)


small_polys = st.lists(st.integers(-6, 6), min_size=1, max_size=5).map(RatPoly).filter(lambda p: not p.is_zero())


@settings(max_examples=50, deadline=None)
@given(st.lists(small_polys, min_size=1, max_size=3))
def test_factorization_against_sympy(parts):
    f = RatPoly((1,))
    for p in parts:
        f = f * p
    if f.degree < 1:
        return
    try:
        factors = factor_rational(f)
    except FactorizationLimit:
        assume(False)
    prod = RatPoly((1,))
    for g, m in factors:
        prod = prod * g ** m
    assert prod == f.monic()
    ours = sorted((str(g), m) for g, m in factors)
    _, theirs = sympy.factor_list(to_sympy(f))
    theirs = sorted((str(RatPoly([Fraction(int(c.p), int(c.q)) for c in reversed(g.monic().all_coeffs())])), m)
                    for g, m in theirs)
    assert ours == theirs


def test_irreducibility():
    assert is_irreducible(RatPoly((1, 0, 1)))
    assert not is_irreducible(RatPoly((-1, 0, 1)))
    assert is_irreducible(RatPoly((-2, 0, 0, 0, 1)))
    # x^4 + 4 = (x^2 + 2x + 2)(x^2 - 2x + 2)
    assert not is_irreducible(RatPoly((4, 0, 0, 0, 1)))


def test_candidate_vanishing_at_zero_is_skipped():
    # regression: an interpolated candidate with zero constant term used to divide by zero
    f = RatPoly((-1500, -642, 266, -1964, -1055, 300))
    assert factor_rational(f) == [(f.monic(), 1)]


def test_factorization_fails_loudly_past_budget():
    f = RatPoly((-5, -1, -5, 3, 3, 1, -6, -5)) * RatPoly((-2, 4, 3, 5, 2, -5, 4, 5))
    with pytest.raises(FactorizationLimit):
        factor_rational(f)
    with pytest.raises(FactorizationLimit):
        factor_rational(RatPoly.x() ** 25 + 3)


def test_sturm_refinement_keeps_one_root():
    f = RatPoly((-2, 0, 0, 1)) * RatPoly((-3, 0, 1))
    for r in isolate_real_roots(f):
        for _ in range(20):
            r = r.refine()
            assert r.is_rational or count_roots(f, r.lo, r.hi) == 1


def test_mu_root_correspondence():
    # (t^2 - 3t + 1)(t^2 + t + 1): roots of each quadratic come in pairs {z, 1/z}
    from equiknot.polynomials import mu_root_map

    cases = [((3 + sympy.sqrt(5)) / 2, 0), (sympy.Rational(-1, 2), sympy.sqrt(3) / 2)]
    delta = delta_transform(parse_laurent("t - 3 + t^-1") * parse_laurent("t + 1 + t^-1"))
    s = sympy.Symbol("s")
    dpoly = sum(sympy.Rational(c.numerator, c.denominator) * s ** i for i, c in enumerate(delta.coeffs))
    for re_, im_ in cases:
        z = re_ + sympy.I * im_
        w = sympy.simplify(((z - 1) / (z + 1)) ** 2)
        assert sympy.simplify(dpoly.subs(s, w)) == 0
    # exact map on a rational point
    assert mu_root_map(Fraction(3), Fraction(0)) == (Fraction(1, 4), Fraction(0))


def test_delta_examples():
    assert delta_transform(parse_laurent("-t + 3 - t^-1")) == RatPoly((1, -5))
    assert delta_transform(parse_laurent("t - 1 + t^-1")) == RatPoly((1, 3))
    assert delta_inverse(parse_poly("s - 10")) == parse_laurent("-9/4*t - 22/4 - 9/4*t^-1")
    with pytest.raises(NotSymmetric):
        delta_transform(parse_laurent("t + 1"))
    assert delta_transform(parse_laurent("t + t^-1")) == RatPoly((2, 2))


@settings(max_examples=120, deadline=None)
@given(sym_laurent)
def test_delta_round_trip(p):
    q = delta_transform(p)
    assert delta_inverse(q, max(p.max_degree, 0)) == p


@settings(max_examples=120, deadline=None)
@given(sym_laurent, sym_laurent)
def test_delta_multiplicative(p, q):
    assert delta_transform(p * q) == delta_transform(p) * delta_transform(q)


@settings(max_examples=80, deadline=None)
@given(sym_laurent)
def test_text_round_trip(p):
    assert parse_laurent(format_laurent(p)) == p


@settings(max_examples=80, deadline=None)
@given(int_polys)
def test_poly_text_round_trip(p):
    assert parse_poly(format_poly(p, "s"), "s") == p


def test_parse_errors():
    for bad in ["t^", "3*", "t^x", "", "t**2"]:
        with pytest.raises(InvalidInput):
            parse_laurent(bad)


def test_normalize_and_square():
    f = parse_laurent("-t^3 + 3*t^2 - t")
    assert normalize_alexander(f) == parse_laurent("-t + 3 - t^-1")
    g = parse_laurent("t - 3 + t^-1")
    assert is_square(g * g)
    assert not is_square(g)
    assert is_square(parse_laurent("t^2"))
    # the constant must be a positive square
    assert not is_square(parse_laurent("-t^2"))
    assert not is_square(parse_laurent("2*t - 4 + 2*t^-1"))
    assert is_square(parse_laurent("1/4*t - 1/2 + 1/4*t^-1"))
