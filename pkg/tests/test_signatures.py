from fractions import Fraction

import numpy as np
import pytest

from equiknot import fixtures
from equiknot.errors import NonnegativeLambda
from equiknot.exact import MatQ, signature
from equiknot.seifert import eigenspaces, inverse, orthogonal_sum
from equiknot.exact import restrict_form
from equiknot.signatures import (
    genus_bounds,
    jump_via_eigenspace,
    levine_tristram,
    pencil_at,
    pencil_lt,
    profile,
)
from equiknot.structures import SymmetricStructure, seifert_form_from_structure, signature_at_root
from helpers import named_systems, random_forms

SYSTEMS = named_systems()
FORMS = random_forms()


def numeric_lt(V: MatQ, lam) -> int:
    A = np.array(V.tolist(), dtype=float)
    H = (A + A.T) + 1j * np.sqrt(-float(lam)) * (A - A.T)
    e = np.linalg.eigvalsh(H)
    return int((e > 1e-9).sum() - (e < -1e-9).sum())


def test_anchor_profile():
    prof = profile(fixtures.figure_eight_anchor())
    assert [b.lo for b in prof.breakpoints] == [Fraction(1, 5), Fraction(1)]
    assert prof.jumps == (-1, 0)
    assert prof.interval_values == (0, -2, -2)


def test_unknot_g_jump_at_one():
    s = fixtures.unknot_g()
    assert profile(s).jump_at(1) == -1
    assert jump_via_eigenspace(s, 1) == -1
    assert jump_via_eigenspace(s, 3) == 0


def test_balanced_eigenspace_has_no_jump():
    form = seifert_form_from_structure(SymmetricStructure(MatQ.diag([1, -1]), MatQ.diag([2, 2])))
    assert jump_via_eigenspace(form, 2) == 0
    assert profile(form).jump_at(2) == 0


def test_pencil_degenerates_at_eigenvalues():
    s = fixtures.figure_eight_anchor()
    assert pencil_at(s, Fraction(1, 5))[2] > 0
    assert pencil_at(s, 0)[2] == 0


@pytest.mark.parametrize("name,s", SYSTEMS, ids=[n for n, _ in SYSTEMS])
def test_limits(name, s):
    prof = profile(s)
    Ep, Em = eigenspaces(s.P)
    Q = s.A + s.A.T
    assert prof.interval_values[0] == signature(Q)
    assert prof.interval_values[-1] == signature(restrict_form(Q, Em)) - signature(restrict_form(Q, Ep))
    assert prof.sigma_tilde == prof.interval_values[-1]


@pytest.mark.parametrize("name,s", SYSTEMS, ids=[n for n, _ in SYSTEMS])
def test_jumps_two_ways(name, s):
    prof = profile(s)
    for root, jump in zip(prof.breakpoints, prof.jumps):
        if root.is_rational:
            assert jump == jump_via_eigenspace(s, root.value)
        else:
            assert jump == -signature_at_root(s, root)


@pytest.mark.parametrize("form", FORMS, ids=[f"form{i}" for i in range(len(FORMS))])
def test_pencil_is_levine_tristram_at_reciprocal(form):
    prof = profile(form)
    for lam in (-1, -4, Fraction(-1, 4), Fraction(-2, 3), -5):
        assert prof.value_at(lam) == pencil_lt(form, lam) == levine_tristram(form.A, 1 / Fraction(lam))


@pytest.mark.parametrize("lam", [-1, -4, Fraction(-1, 4), Fraction(-2, 3), -3])
def test_levine_tristram_against_numeric_eigenvalues(lam):
    for _, s in SYSTEMS:
        assert levine_tristram(s.A, lam) == numeric_lt(s.A, lam)


def test_levine_tristram_examples():
    assert levine_tristram(MatQ(fixtures.TREFOIL), -1) == -2
    for lam in (-1, -4):
        assert levine_tristram(MatQ(fixtures.FIGURE_EIGHT), lam) == 0
    V = MatQ(fixtures.TREFOIL)
    assert levine_tristram(V, Fraction(-1, 10**6)) == signature(V + V.T)
    with pytest.raises(NonnegativeLambda):
        levine_tristram(V, 0)


def test_profile_is_additive_and_odd():
    a, b = SYSTEMS[2][1], SYSTEMS[9][1]
    pa, pb, ps = profile(a), profile(b), profile(orthogonal_sum(a, b))
    pi = profile(inverse(a))
    for lam in (-3, Fraction(-1, 7), Fraction(1, 3), Fraction(1, 5), 2, 1):
        assert ps.value_at(lam) == pa.value_at(lam) + pb.value_at(lam)
        assert pi.value_at(lam) == -pa.value_at(lam)


def test_genus_bounds_scale_with_sums():
    s = fixtures.figure_eight_anchor()
    total = s
    for n in range(1, 4):
        g = genus_bounds(total)
        assert g.max_jump == n
        assert g.g4_lower == Fraction(n, 4)
        assert g.sc_lower == Fraction(n, 2)
        total = orthogonal_sum(total, s)


def test_metabolic_double_has_no_jumps():
    prof = profile(fixtures.metabolic_double()[0])
    assert all(j == 0 for j in prof.jumps)
    assert prof.sigma_tilde == 0
