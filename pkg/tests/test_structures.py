import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from equiknot import fixtures
from equiknot.errors import NonInvertibleBeta, NotPrimary, NotReduced, SingularSymmetrization
from equiknot.exact import MatQ, charpoly, poly_at_matrix, signature
from equiknot.polynomials import RatPoly, delta_transform, isolate_real_roots
from equiknot.seifert import EquivariantSeifertForm, delta_theta, validate
from equiknot.structures import (
    SymmetricStructure,
    equivariant_signature,
    exponent_reduce,
    p_decompose_with_subspaces,
    seifert_form_from_structure,
    symmetric_structure_of,
    trace_form_invariants,
    witt_class_from_classical,
    witt_summands,
)
from helpers import named_systems, random_forms

SYSTEMS = named_systems()


def strip_s_minus_one(f: RatPoly) -> RatPoly:
    f = f.monic()
    one = RatPoly((-1, 1))
    while f.degree > 0:
        q, r = divmod(f, one)
        if not r.is_zero():
            break
        f = q
    return f


def test_unknot_g_structure():
    st_ = symmetric_structure_of(fixtures.unknot_g())
    assert st_.S == MatQ([[1]])
    assert signature(st_.B) == 1


def test_anchor_structure():
    st_ = symmetric_structure_of(fixtures.figure_eight_anchor())
    assert st_.B == MatQ([[10]])
    assert st_.S == MatQ([[Fraction(1, 5)]])


@pytest.mark.parametrize("name,s", SYSTEMS, ids=[n for n, _ in SYSTEMS])
def test_structure_is_self_adjoint(name, s):
    st_ = symmetric_structure_of(s)
    assert st_.is_valid()


@pytest.mark.parametrize("name,s", SYSTEMS, ids=[n for n, _ in SYSTEMS])
def test_charpoly_matches_alexander_transform(name, s):
    st_ = symmetric_structure_of(s)
    lhs = strip_s_minus_one(charpoly(st_.S))
    rhs = strip_s_minus_one(delta_transform(delta_theta(s)))
    assert lhs == rhs


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 10**6), st.integers(1, 4))
def test_structure_round_trip(seed, k):
    st_ = fixtures.random_structure(random.Random(seed), k)
    form = seifert_form_from_structure(st_)
    assert validate(form) == []
    again = symmetric_structure_of(form)
    assert again.B == st_.B and again.S == st_.S


def test_degenerate_inputs():
    with pytest.raises(NonInvertibleBeta):
        seifert_form_from_structure(SymmetricStructure(MatQ([[0]]), MatQ([[1]])))
    with pytest.raises(SingularSymmetrization):
        symmetric_structure_of(EquivariantSeifertForm(MatQ([[0, 1], [-1, 0]]), MatQ([[0, 1], [1, 0]])))


def test_p_decomposition_is_orthogonal_and_complete():
    rng = random.Random(11)
    for _ in range(10):
        st_ = fixtures.random_structure(rng, 5)
        pieces = p_decompose_with_subspaces(st_)
        assert sum(V.dim for _, _, V in pieces) == st_.dim  # S is invertible here
        for i, (_, _, V) in enumerate(pieces):
            for _, _, W in pieces[i + 1:]:
                for v in V.basis:
                    for w in W.basis:
                        assert sum(x * y for x, y in zip(v, st_.B.apply(w))) == 0


def test_companion_of_irreducible_quadratic():
    # S = companion(s^2 - 5) is self-adjoint for B = [[1, 0], [0, 5]]^-1 style forms
    S = MatQ([[0, 5], [1, 0]])
    B = MatQ([[1, 0], [0, 5]])
    st_ = SymmetricStructure(B, S)
    assert st_.is_valid()
    pieces = p_decompose_with_subspaces(st_)
    assert len(pieces) == 1 and pieces[0][2].dim == 2
    w = trace_form_invariants(st_, RatPoly((-5, 0, 1)))
    assert w.rank_over_F == 1
    assert [sig for _, sig in w.signatures] == [1, 1]


def test_exponent_reduction_on_jordan_blocks():
    rng = random.Random(5)
    st_ = fixtures.rational_eigen_structure(rng, [(2, 2, 1), (2, 1, -1), (2, 1, -1)])
    p = RatPoly((-2, 1))
    red = exponent_reduce(st_, p)
    assert red.dim < st_.dim
    assert all(x == 0 for x in poly_at_matrix(p, red.S).entries)
    # the hyperbolic Jordan block is metabolic, so the class is that of diag(-1, -1)
    assert signature(red.B) == -2
    with pytest.raises(NotPrimary):
        exponent_reduce(fixtures.rational_eigen_structure(rng, [(2, 1, 1), (3, 1, 1)]), p)
    with pytest.raises(NotReduced):
        trace_form_invariants(st_, p)


def test_trace_form_of_rational_piece():
    rng = random.Random(9)
    st_ = fixtures.rational_eigen_structure(rng, [(3, 1, 1), (3, 1, 1), (3, 1, -1)])
    w = trace_form_invariants(st_, RatPoly((-3, 1)))
    assert w.rank_over_F == 3
    assert [sig for _, sig in w.signatures] == [signature(st_.B)]
    assert w.discriminant_class == -1


@pytest.mark.parametrize("form", random_forms(10), ids=[f"form{i}" for i in range(10)])
def test_witt_summands_cover_real_roots(form):
    st_ = symmetric_structure_of(form)
    summands = witt_summands(form)
    for w in summands:
        assert w.dim_ambient % w.p.degree == 0
        assert len(w.signatures) == len(isolate_real_roots(w.p))
    # every real eigenvalue of S is a root of exactly one summand polynomial
    for r in isolate_real_roots(charpoly(st_.S)):
        assert sum(1 for w in summands if r.sign_of(w.p) == 0) == 1


def test_classical_witt_class():
    qb = MatQ.diag([1, 2])
    knot = MatQ([[-2, 1], [1, -2]])
    cls = witt_class_from_classical(qb, knot)
    assert cls.signature == signature(MatQ.block_diag(qb.scale(-2), knot)) - signature(qb.scale(2))
    assert cls.signature == -6


def test_equivariant_signature_values():
    # Q = [[0, 1], [1, 0]] is +2 on the invariant line and -2 on the anti-invariant one
    assert equivariant_signature(fixtures.unknot_g()) == -2
    assert equivariant_signature(fixtures.metabolic_double()[0]) == 0
