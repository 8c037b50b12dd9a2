"""Symmetric structures ``(V, beta, S)`` attached to equivariant Seifert forms.

For a form ``(A, P)`` with ``Q = A + A^T`` invertible put
``T = Q^-1 (A^T - A)``, so that ``A = (Q + T^T Q) / 2``.  T anticommutes with
P, hence ``T^2`` preserves the +1 eigenspace ``E_+`` of P, and the structure is
``(E_+, Q|E_+, T^2|E_+)``.  Everything downstream (primary decomposition,
exponent reduction, trace forms over ``Q[s]/(p)``) works on that structure.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import ComputationError, NonInvertibleBeta, NotPrimary, NotReduced, SingularSymmetrization
from .exact import (
    MatQ,
    Subspace,
    charpoly,
    generalized_eigenspace,
    kernel,
    poly_at_matrix,
    restrict_form,
    restrict_operator,
    signature,
    signature_symmetric,
)
from .polynomials import RatPoly, RealRoot, factor_rational, isolate_real_roots, poly_xgcd
from .seifert import EquivariantSeifertForm, eigenspaces


@dataclass(frozen=True)
class SymmetricStructure:
    B: MatQ
    S: MatQ

    @property
    def dim(self) -> int:
        return self.B.rows

    def is_valid(self) -> bool:
        return (self.B.is_symmetric() and self.S.shape == self.B.shape
                and (self.dim == 0 or self.B.det() != 0) and self.B @ self.S == self.S.T @ self.B)


@dataclass(frozen=True)
class WittSummand:
    p: RatPoly
    rank_over_F: int
    dim_ambient: int
    signatures: tuple  # of (RealRoot, int)
    discriminant_class: int
    discriminant_F: RatPoly = field(compare=False, default=None)


@dataclass(frozen=True)
class EquivariantWittClass:
    q_plus: MatQ
    q_minus: MatQ

    @property
    def signature(self) -> int:
        return signature(self.q_minus) - signature(self.q_plus)


def _symmetrization(form) -> MatQ:
    Q = form.A + form.A.T
    if Q.det() == 0:
        raise SingularSymmetrization("A + A^T is singular")
    return Q


def structure_operator(form) -> MatQ:
    """T with ``A = (Q + T^T Q) / 2``; the identity is checked."""
    Q = _symmetrization(form)
    T = Q.inverse() @ (form.A.T - form.A)
    if (Q + T.T @ Q).scale(Fraction(1, 2)) != form.A:
        raise ComputationError("structure operator failed its defining identity")
    return T


def symmetric_structure_of(form) -> SymmetricStructure:
    Q = _symmetrization(form)
    T = structure_operator(form)
    Ep, _ = eigenspaces(form.P)
    E = Ep.basis_matrix()
    B = E.T @ Q @ E
    S = restrict_operator(T @ T, Ep)
    return SymmetricStructure(B, S)


def seifert_form_from_structure(st: SymmetricStructure) -> EquivariantSeifertForm:
    """``A = 1/2 [[B, BS], [-BS, -BS]]`` with ``P = diag(I, -I)``."""
    n = st.dim
    if n and st.B.det() == 0:
        raise NonInvertibleBeta("beta is degenerate")
    BS = st.B @ st.S
    A = MatQ.block([[st.B, BS], [-BS, -BS]]).scale(Fraction(1, 2))
    P = MatQ.block_diag(MatQ.identity(n), -MatQ.identity(n))
    return EquivariantSeifertForm(A, P)


def is_power_of(f: RatPoly, p: RatPoly) -> bool:
    f, p = f.monic(), p.monic()
    while f.degree >= p.degree and f.degree > 0:
        q, r = divmod(f, p)
        if not r.is_zero():
            return False
        f = q
    return f.degree == 0


def _extend_to_complement(W: Subspace, U: Subspace) -> list[tuple]:
    """Vectors of U's basis completing a basis of W to one of U (W inside U)."""
    chosen = []
    current = W
    for v in U.basis:
        nxt = current + Subspace(U.ambient_dim, [v])
        if nxt.dim > current.dim:
            chosen.append(v)
            current = nxt
    return chosen


def _graph_certificate(st: SymmetricStructure, Wperp: Subspace, C: list[tuple], red: SymmetricStructure, W: Subspace) -> bool:
    """``{(w, [w])}`` is an S-invariant Lagrangian of ``(V, -beta) ⊕ (V', beta')``."""
    n = st.dim
    k = len(C)
    basis_all = list(W.basis) + C

    def cls(w):
        # coordinates of w in W ⊕ span(C), keep the C part
        M = MatQ.from_columns(basis_all, n)
        coords = M.solve(w)
        return coords[W.dim:]

    gens = [tuple(w) + tuple(cls(w)) for w in Wperp.basis]
    big_B = MatQ.block_diag(-st.B, red.B)
    big_S = MatQ.block_diag(st.S, red.S)
    H = Subspace(n + k, gens)
    if 2 * H.dim != n + k:
        return False
    if H.image(big_S) != H:
        return False
    G = restrict_form(big_B, H)
    return all(x == 0 for x in G.entries)


def exponent_reduce(st: SymmetricStructure, p: RatPoly) -> SymmetricStructure:
    """Concordant structure on which ``p(S) = 0``."""
    if st.dim == 0:
        return st
    if not is_power_of(charpoly(st.S), p):
        raise NotPrimary(f"characteristic polynomial is not a power of {p}")
    while st.dim:
        pS = poly_at_matrix(p, st.S)
        if all(x == 0 for x in pS.entries):
            return st
        # nilpotency index N of p(S)
        power, N = pS, 1
        while True:
            nxt = power @ pS
            if all(x == 0 for x in nxt.entries):
                break
            power, N = nxt, N + 1
        n = st.dim
        W = Subspace(n, power.columns())
        Wmat = W.basis_matrix()
        Wperp = kernel(Wmat.T @ st.B)
        C = _extend_to_complement(W, Wperp)
        Cmat = MatQ.from_columns(C, n) if C else MatQ.zeros(n, 0)
        basis_all = MatQ.from_columns(list(W.basis) + C, n)
        cols = []
        for c in C:
            coords = basis_all.solve(st.S.apply(c))
            cols.append(coords[W.dim:])
        k = len(C)
        Sbar = MatQ.from_columns(cols, k) if cols else MatQ.zeros(0, 0)
        Bbar = Cmat.T @ st.B @ Cmat if k else MatQ.zeros(0, 0)
        red = SymmetricStructure(Bbar, Sbar)
        if not _graph_certificate(st, Wperp, C, red, W):
            raise ComputationError("exponent reduction step failed its concordance certificate")
        st = red
    return st


def p_decompose(st: SymmetricStructure) -> list[tuple[RatPoly, SymmetricStructure]]:
    """Generalized eigenspace pieces for each monic irreducible factor p != s of charpoly(S)."""
    return [(p, piece) for p, piece, _ in p_decompose_with_subspaces(st)]


def p_decompose_with_subspaces(st: SymmetricStructure):
    """Like ``p_decompose`` but also returns the subspaces of V carrying each piece."""
    out = []
    for p, _ in factor_rational(charpoly(st.S)) if st.dim else []:
        if p == RatPoly.x():
            continue
        V = generalized_eigenspace(st.S, p)
        out.append((p, SymmetricStructure(restrict_form(st.B, V), restrict_operator(st.S, V)), V))
    return out


class _Field:
    """Arithmetic in ``Q[s]/(p)`` for irreducible p."""

    def __init__(self, p: RatPoly):
        self.p = p.monic()
        self.d = p.degree

    def red(self, a: RatPoly) -> RatPoly:
        return a % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def inv(self, a: RatPoly) -> RatPoly:
        g, u, _ = poly_xgcd(a, self.p)
        if g.degree != 0:
            raise ZeroDivisionError("not invertible in the field")
        return self.red(u)


def _power_sums(p: RatPoly, count: int) -> list[Fraction]:
    """Traces ``tr(s^k)`` in ``Q[s]/(p)`` for k < count, via the companion matrix."""
    d = p.degree
    pm = p.monic()
    comp = [[Fraction(0)] * d for _ in range(d)]
    for i in range(1, d):
        comp[i][i - 1] = Fraction(1)
    for i in range(d):
        comp[i][d - 1] = -pm.coeff(i)
    Cm = MatQ(comp)
    out = []
    M = MatQ.identity(d)
    for _ in range(count):
        out.append(M.trace())
        M = M @ Cm
    return out


def _squarefree_class(x: Fraction) -> int:
    from sympy.ntheory.factor_ import core

    n = x.numerator * x.denominator
    sign = -1 if n < 0 else 1
    return sign * int(core(abs(n)))


def trace_form_invariants(st: SymmetricStructure, p: RatPoly) -> WittSummand:
    """Rank, real-place signatures and discriminant of the ``Q[s]/(p)``-valued form with trace beta."""
    p = p.monic()
    n = st.dim
    pS = poly_at_matrix(p, st.S)
    if any(x != 0 for x in pS.entries):
        raise NotReduced("p(S) does not vanish")
    d = p.degree
    if n % d:
        raise NotReduced("dimension is not a multiple of deg p")
    F = _Field(p)
    # F-basis of V: greedily add vectors whose S-orbit is new
    Spow = [MatQ.identity(n)]
    for _ in range(1, d):
        Spow.append(st.S @ Spow[-1])
    gens = []
    span = Subspace(n)
    for i in range(n):
        e = tuple(Fraction(int(i == j)) for j in range(n))
        if span.contains(e):
            continue
        gens.append(e)
        span = span + Subspace(n, [M.apply(e) for M in Spow])
    r = len(gens)
    if span.dim != n or r * d != n:
        raise ComputationError("failed to build a basis over the residue field")
    ps = _power_sums(p, 2 * d - 1)
    hank = MatQ([[ps[j + k] for k in range(d)] for j in range(d)])

    def bracket(u, v):
        b = [sum((x * y for x, y in zip(Spow[j].apply(u), st.B.apply(v))), Fraction(0)) for j in range(d)]
        return RatPoly(hank.solve(b))

    G = [[bracket(u, v) for v in gens] for u in gens]
    diag = _diagonalize(F, G)
    disc_F = RatPoly((1,))
    for x in diag:
        disc_F = F.mul(disc_F, x)
    sigs = []
    for root in isolate_real_roots(p):
        sigs.append((root, sum(root.sign_of(x) for x in diag)))
    detB = st.B.det() if n else Fraction(1)
    return WittSummand(p, r, n, tuple(sigs), _squarefree_class(detB), disc_F)


def _diagonalize(F: _Field, G: list[list[RatPoly]]) -> list[RatPoly]:
    """Diagonal entries of a symmetric matrix over F after congruence."""
    G = [[F.red(x) for x in row] for row in G]
    r = len(G)
    active = list(range(r))
    diag = []
    while active:
        k = next((i for i in active if not G[i][i].is_zero()), None)
        if k is None:
            pair = next(((i, j) for i in active for j in active if i < j and not G[i][j].is_zero()), None)
            if pair is None:
                raise ComputationError("degenerate form over the residue field")
            i, j = pair
            # e_i <- e_i + e_j makes the diagonal entry 2 G_ij != 0
            for t in range(r):
                G[i][t] = G[i][t] + G[j][t]
            for t in range(r):
                G[t][i] = G[t][i] + G[t][j]
            G[i][i] = F.red(G[i][i])
            k = i
        piv = G[k][k]
        inv = F.inv(piv)
        diag.append(piv)
        active.remove(k)
        for i in active:
            f = F.mul(G[i][k], inv)
            if f.is_zero():
                continue
            for j in active:
                G[i][j] = F.red(G[i][j] - F.mul(f, G[k][j]))
    return diag


def equivariant_witt_class(form) -> EquivariantWittClass:
    Q = form.A + form.A.T
    Ep, Em = eigenspaces(form.P)
    return EquivariantWittClass(restrict_form(Q, Ep), restrict_form(Q, Em))


def equivariant_signature(form) -> int:
    return equivariant_witt_class(form).signature


def witt_class_from_classical(qb: MatQ, knot: MatQ) -> EquivariantWittClass:
    """Class represented by ``diag(2 qb, -2 qb, knot)`` with involution ``diag(I, -I, -I)``."""
    return EquivariantWittClass(qb.scale(2), MatQ.block_diag(qb.scale(-2), knot))


def witt_summands(form) -> list[WittSummand]:
    """Trace-form invariants of every primary piece, in order of p."""
    st = symmetric_structure_of(form)
    out = []
    for p, piece in p_decompose(st):
        out.append(trace_form_invariants(exponent_reduce(piece, p), p))
    return out


def signature_at_root(form, root: RealRoot) -> int:
    """Trace-form signature at a real eigenvalue of S (0 when it is not one)."""
    st = symmetric_structure_of(form)
    for p, piece in p_decompose(st):
        if root.sign_of(p) != 0:
            continue
        summand = trace_form_invariants(exponent_reduce(piece, p), p)
        for r, sig in summand.signatures:
            if r.same_point(root):
                return sig
    return 0


__all__ = [
    "EquivariantWittClass",
    "SymmetricStructure",
    "WittSummand",
    "equivariant_signature",
    "equivariant_witt_class",
    "exponent_reduce",
    "is_power_of",
    "p_decompose",
    "p_decompose_with_subspaces",
    "seifert_form_from_structure",
    "signature_at_root",
    "signature_symmetric",
    "structure_operator",
    "symmetric_structure_of",
    "trace_form_invariants",
    "witt_class_from_classical",
    "witt_summands",
]
