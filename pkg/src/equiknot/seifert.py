"""Equivariant Seifert systems and forms.

A system is a tuple ``(A, P, h, lk)``: the Gram matrix A of a bilinear form
theta, an involution P with ``P^T A P = A^T``, and two covectors (row vectors)
with ``h P = -h`` and ``lk P = lk``.  Dropping the covectors gives a form.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from fractions import Fraction
from math import ceil, gcd
from typing import Sequence

from .errors import BoundTooLargeForBudget, DimensionMismatch, InvalidInput, ShapeMismatch, SingularSymmetrization
from .exact import (
    MatQ,
    Subspace,
    bilinear,
    kernel,
    left_kernel,
    restrict_form,
    signature_symmetric,
    vec_dot,
)

DEFAULT_COEFF_BOUND = 3
DEFAULT_STEP_BUDGET = 10**7


def _vec(v) -> tuple:
    return tuple(Fraction(x) for x in v)


def covector_times(c: Sequence, M: MatQ) -> tuple:
    """Row vector ``c`` times ``M``."""
    return tuple(sum((c[i] * M[i, j] for i in range(M.rows) if c[i]), Fraction(0)) for j in range(M.cols))


@dataclass(frozen=True)
class EquivariantSeifertForm:
    A: MatQ
    P: MatQ

    @property
    def n(self) -> int:
        return self.A.rows

    @property
    def m(self) -> int:
        return self.A.rows // 2

    @property
    def form(self) -> EquivariantSeifertForm:
        return self


@dataclass(frozen=True)
class EquivariantSeifertSystem:
    A: MatQ
    P: MatQ
    h: tuple
    lk: tuple
    name: str | None = field(default=None, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "h", _vec(self.h))
        object.__setattr__(self, "lk", _vec(self.lk))

    @classmethod
    def build(cls, A, P, h=None, lk=None, name=None) -> EquivariantSeifertSystem:
        A = A if isinstance(A, MatQ) else MatQ(A)
        P = P if isinstance(P, MatQ) else MatQ(P)
        n = A.rows
        h = (0,) * n if h is None else h
        lk = (0,) * n if lk is None else lk
        return cls(A, P, h, lk, name)

    @property
    def n(self) -> int:
        return self.A.rows

    @property
    def m(self) -> int:
        return self.A.rows // 2

    @property
    def form(self) -> EquivariantSeifertForm:
        return EquivariantSeifertForm(self.A, self.P)


@dataclass(frozen=True)
class MetabolizerCandidate:
    generators: tuple
    ambient: object = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "generators", tuple(tuple(g) for g in self.generators))

    @property
    def rank(self) -> int:
        return len(self.generators)

    def span(self, n: int) -> Subspace:
        return Subspace(n, self.generators)


@dataclass(frozen=True)
class ComplexityReport:
    m: int
    partial_rank_lower: int
    partial_rank_upper: int
    ac_lower: int
    ac_upper: int
    method: dict
    witness: MetabolizerCandidate | None = None


def _check_shapes(A: MatQ, P: MatQ, covectors: Sequence[Sequence] = ()):
    if not A.is_square() or not P.is_square():
        raise ShapeMismatch("A and P must be square")
    if A.rows != P.rows:
        raise ShapeMismatch(f"A is {A.shape} but P is {P.shape}")
    for c in covectors:
        if len(c) != A.rows:
            raise ShapeMismatch(f"covector of length {len(c)} for a rank-{A.rows} form")


def validate(s) -> list[str]:
    """Names of every violated axiom; empty when ``s`` is a valid system or form."""
    A, P = s.A, s.P
    covs = (s.h, s.lk) if isinstance(s, EquivariantSeifertSystem) else ()
    _check_shapes(A, P, covs)
    n = A.rows
    out = []
    if n % 2:
        out.append("rank is even")
    if P @ P != MatQ.identity(n):
        out.append("ρ is an involution")
    if P.T @ A @ P != A.T:
        out.append("θ(ρ(x),ρ(y))=θ^t(x,y)")
    skew = A - A.T
    # systems are integral, so unimodular means determinant 1; forms live over Q
    if covs:
        if skew.det() != 1:
            out.append("θ−θ^t is unimodular")
    elif skew.det() == 0:
        out.append("θ−θ^t is non-degenerate")
    if covs:
        if not P.is_integral() or not A.is_integral() or any(Fraction(x).denominator != 1 for c in covs for x in c):
            out.append("integral entries")
        if covector_times(s.h, P) != tuple(-x for x in s.h):
            out.append("h∘ρ=−h")
        if covector_times(s.lk, P) != tuple(s.lk):
            out.append("l̃k∘ρ=l̃k")
    return out


def is_valid(s) -> bool:
    return not validate(s)


def orthogonal_sum(s1, s2):
    """Block sum; a system if both inputs are systems, otherwise a form."""
    for s in (s1, s2):
        bad = validate(s)
        if bad:
            raise InvalidInput(f"cannot sum an invalid input: {bad}")
    A = MatQ.block_diag(s1.A, s2.A)
    P = MatQ.block_diag(s1.P, s2.P)
    if isinstance(s1, EquivariantSeifertSystem) and isinstance(s2, EquivariantSeifertSystem):
        return EquivariantSeifertSystem(A, P, s1.h + s2.h, s1.lk + s2.lk)
    return EquivariantSeifertForm(A, P)


def empty_system() -> EquivariantSeifertSystem:
    return EquivariantSeifertSystem(MatQ.zeros(0), MatQ.zeros(0), (), ())


def inverse(s):
    """Group inverse ``(-A^T, P, h, -lk)``."""
    bad = validate(s)
    if bad:
        raise InvalidInput(f"cannot invert an invalid input: {bad}")
    if isinstance(s, EquivariantSeifertSystem):
        name = f"-({s.name})" if s.name else None
        return EquivariantSeifertSystem(-s.A.T, s.P, s.h, tuple(-x for x in s.lk), name)
    return EquivariantSeifertForm(-s.A.T, s.P)


def anti_diagonal(s) -> MetabolizerCandidate:
    """The metabolizer ``{(x, P x)}`` of ``s ⊕ inverse(s)``."""
    n = s.A.rows
    gens = []
    for i in range(n):
        e = [0] * n
        e[i] = 1
        gens.append(tuple(e) + tuple(int(x) if x.denominator == 1 else x for x in s.P.col(i)))
    return MetabolizerCandidate(gens)


def covector_kernel(s) -> Subspace:
    """``ker(h) ∩ ker(lk)``; the whole space for a form."""
    if isinstance(s, EquivariantSeifertSystem):
        return left_kernel([s.h, s.lk], s.n)
    return Subspace.full(s.n)


def eigenspaces(P: MatQ) -> tuple[Subspace, Subspace]:
    I = MatQ.identity(P.rows)
    return kernel(P - I), kernel(P + I)


def verify_metabolizer(s, H: MetabolizerCandidate | Sequence, full: bool = True) -> bool:
    """Whether the span of the generators is a (partial, when ``full`` is false) metabolizer."""
    gens = H.generators if isinstance(H, MetabolizerCandidate) else tuple(tuple(g) for g in H)
    n = s.A.rows
    if any(len(g) != n for g in gens):
        raise DimensionMismatch(f"generators must have length {n}")
    span = Subspace(n, gens)
    if span.image(s.P) != span:
        return False
    basis = span.basis
    for u in basis:
        for v in basis:
            if bilinear(s.A, u, v):
                return False
    if not span.is_subspace_of(covector_kernel(s)):
        return False
    if full and 2 * span.dim != n:
        return False
    return True


def _primitive(v) -> tuple:
    den = 1
    for x in v:
        den = den * x.denominator // gcd(den, x.denominator)
    ints = [int(x * den) for x in v]
    g = 0
    for x in ints:
        g = gcd(g, x)
    g = g or 1
    first = next((x for x in ints if x), 1)
    if first < 0:
        g = -g
    return tuple(x // g for x in ints)


def _lattice_basis(U: Subspace) -> list[tuple]:
    return [_primitive(b) for b in U.basis]


def _coefficient_vectors(dim: int, bound: int):
    """Coefficient tuples with entries in [-bound, bound], first nonzero entry positive, gcd 1."""
    import itertools

    for c in itertools.product(range(-bound, bound + 1), repeat=dim):
        first = next((x for x in c if x), 0)
        if first <= 0:
            continue
        g = 0
        for x in c:
            g = gcd(g, x)
        if g == 1:
            yield c


def step_budget() -> int:
    env = os.environ.get("EQUIKNOT_SEARCH_BUDGET")
    return int(env) if env else DEFAULT_STEP_BUDGET


def _isotropic_eigenvectors(s, U: Subspace, bound: int) -> list[tuple]:
    basis = _lattice_basis(U)
    out = []
    for c in _coefficient_vectors(len(basis), bound):
        v = tuple(sum(ci * b[k] for ci, b in zip(c, basis)) for k in range(s.n))
        v = _primitive([Fraction(x) for x in v])
        if bilinear(s.A, v, v) == 0:
            out.append(v)
    return out


def search_partial_metabolizer(s, target_rank: int, coeff_bound: int = DEFAULT_COEFF_BOUND,
                               budget: int | None = None) -> MetabolizerCandidate | None:
    """Bounded exhaustive search for a partial metabolizer of the given rank.

    Every P-invariant subspace splits into its two eigenspace parts, so
    generators are taken to be eigenvectors of P inside ``ker(h) ∩ ker(lk)``
    with coefficients (in a lattice basis of each eigenspace) bounded by
    ``coeff_bound``.  ``None`` means no witness exists within the bound.
    """
    if target_rank > s.m:
        raise InvalidInput(f"target rank {target_rank} exceeds half rank {s.m}")
    if target_rank == 0:
        return MetabolizerCandidate((), s)
    budget = step_budget() if budget is None else budget
    K = covector_kernel(s)
    Ep, Em = eigenspaces(s.P)
    pieces = [K.intersection(Ep), K.intersection(Em)]
    est = sum((2 * coeff_bound + 1) ** U.dim for U in pieces)
    if est > budget:
        raise BoundTooLargeForBudget(f"{est} coefficient vectors exceed the step budget {budget}")
    cands = sorted(set(_isotropic_eigenvectors(s, pieces[0], coeff_bound)
                       + _isotropic_eigenvectors(s, pieces[1], coeff_bound)))
    steps = [0]
    n = s.n
    A = s.A

    def compatible(v, chosen):
        return all(bilinear(A, v, w) == 0 and bilinear(A, w, v) == 0 for w in chosen)

    def dfs(start, chosen):
        if len(chosen) == target_rank:
            return list(chosen)
        for i in range(start, len(cands)):
            steps[0] += 1
            if steps[0] > budget:
                raise BoundTooLargeForBudget(f"search exceeded the step budget {budget}")
            v = cands[i]
            if not compatible(v, chosen):
                continue
            if Subspace(n, chosen + [v]).dim != len(chosen) + 1:
                continue
            found = dfs(i + 1, chosen + [v])
            if found:
                return found
        return None

    found = dfs(0, [])
    if found is None:
        return None
    cand = MetabolizerCandidate(found, s)
    assert verify_metabolizer(s, cand, full=False)
    return cand


def _isotropy_index(G: MatQ) -> int:
    if G.rows == 0:
        return 0
    p, q, z = signature_symmetric(G)
    return z + min(p, q)


def _is_rational_square(x: Fraction) -> bool:
    from math import isqrt

    if x < 0:
        return False
    return isqrt(x.numerator) ** 2 == x.numerator and isqrt(x.denominator) ** 2 == x.denominator


def _has_isotropic_line(G: MatQ) -> bool | None:
    """Whether the quadratic form G represents zero nontrivially over Q (None if undecided)."""
    n = G.rows
    if n == 0:
        return False
    p, q, z = signature_symmetric(G)
    if z:
        return True
    if p == 0 or q == 0:
        return False
    if n == 2:
        return _is_rational_square(-G.det())
    return None


def complexity_report(s, coeff_bound: int = DEFAULT_COEFF_BOUND, budget: int | None = None) -> ComplexityReport:
    """Bounds on the algebraic complexity ``ac = m - k``, k the largest partial metabolizer rank."""
    m = s.m
    K = covector_kernel(s)
    Ep, Em = eigenspaces(s.P)
    Kp, Km = K.intersection(Ep), K.intersection(Em)
    Q = s.A + s.A.T
    bounds = [(m, "half-rank"), (K.dim, "kernel-dimension")]
    if K.dim > 0:
        if any(bilinear(s.A, u, v) for u in K.basis for v in K.basis):
            bounds.append((K.dim - 1, "form-nonvanishing-on-kernel"))
    iso = _isotropy_index(restrict_form(Q, Kp)) + _isotropy_index(restrict_form(Q, Km))
    bounds.append((iso, "eigenspace-isotropy"))
    try:
        from .signatures import profile

        prof = profile(s.form)
        top = max(abs(v) for v in prof.interval_values)
        bounds.append((m - ceil(Fraction(top, 2)), "signature"))
    except SingularSymmetrization:
        pass
    lines = [_has_isotropic_line(restrict_form(Q, Kp)), _has_isotropic_line(restrict_form(Q, Km))]
    if lines == [False, False]:
        bounds.append((0, "rank-one-isotropy"))
    upper, upper_method = min(bounds, key=lambda b: b[0])
    upper = max(upper, 0)

    lower, lower_method, witness = 0, "trivial", MetabolizerCandidate((), s)
    for k in range(upper, 0, -1):
        try:
            found = search_partial_metabolizer(s, k, coeff_bound, budget)
        except BoundTooLargeForBudget:
            lower_method = f"search budget exhausted at rank {k}"
            break
        if found is not None:
            lower, lower_method, witness = k, f"search(coeff_bound={coeff_bound})", found
            break
    return ComplexityReport(
        m=m,
        partial_rank_lower=lower,
        partial_rank_upper=upper,
        ac_lower=m - upper,
        ac_upper=m - lower,
        method={"ac_lower": upper_method, "ac_upper": lower_method},
        witness=witness,
    )


def delta_theta(form):
    """``det(A - t A^T)`` as a Laurent polynomial, shifted to be symmetric."""
    from .polynomials import LaurentPoly, RatPoly

    n = form.A.rows
    # det(A - t A^T) has degree <= n; interpolate it at n + 1 rational points
    pts = list(range(n + 1))
    vals = [(form.A - form.A.T.scale(t)).det() for t in pts]
    poly = RatPoly()
    for i, (x, y) in enumerate(zip(pts, vals)):
        if not y:
            continue
        term = RatPoly((y,))
        for j, xj in enumerate(pts):
            if j != i:
                term = term * RatPoly((Fraction(-xj, x - xj), Fraction(1, x - xj)))
        poly = poly + term
    return LaurentPoly(poly.coeffs, -(n // 2))


__all__ = [
    "ComplexityReport",
    "EquivariantSeifertForm",
    "EquivariantSeifertSystem",
    "MetabolizerCandidate",
    "anti_diagonal",
    "complexity_report",
    "covector_kernel",
    "covector_times",
    "delta_theta",
    "eigenspaces",
    "empty_system",
    "inverse",
    "is_valid",
    "orthogonal_sum",
    "search_partial_metabolizer",
    "validate",
    "vec_dot",
    "verify_metabolizer",
]
