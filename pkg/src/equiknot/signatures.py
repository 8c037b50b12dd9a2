"""Signatures of the Hermitian pencil of an equivariant Seifert form.

For real lambda the pencil is

    A_lambda = (Q / 2) ((1 - lambda) I - (1 + lambda) P) + i (A - A^T),  Q = A + A^T.

It degenerates exactly at the real eigenvalues of the structure operator S,
so its signature is a step function of lambda.  The profile samples it once
on every open interval between breakpoints and reads jumps and point values
off the neighbouring intervals.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

from .errors import ComputationError, NonnegativeLambda
from .exact import MatQ, charpoly, generalized_eigenspace, restrict_form, signature, signature_hermitian, signature_symmetric
from .polynomials import RatPoly, RealRoot, isolate_real_roots, separate, sort_roots
from .polynomials.roots import cauchy_bound
from .structures import equivariant_signature, symmetric_structure_of


@dataclass(frozen=True)
class SignatureProfile:
    breakpoints: tuple  # of RealRoot, ascending
    interval_values: tuple  # len(breakpoints) + 1 integers
    jumps: tuple  # aligned with breakpoints
    values_at: tuple  # aligned with breakpoints
    samples: tuple  # the rational lambda used on each interval
    sigma: int
    sigma_tilde: int

    def index_of(self, root: RealRoot) -> int | None:
        for i, b in enumerate(self.breakpoints):
            if b.same_point(root):
                return i
        return None

    def jump_at(self, lam) -> int:
        i = self.index_of(_as_root(lam))
        return 0 if i is None else self.jumps[i]

    def value_at(self, lam) -> int:
        """sigma_lambda at any real point: interval value, or the average at a breakpoint."""
        root = _as_root(lam)
        i = self.index_of(root)
        if i is not None:
            return self.values_at[i]
        k = sum(1 for b in self.breakpoints if b.compare(root) < 0)
        return self.interval_values[k]


@dataclass(frozen=True)
class GenusBoundReport:
    max_jump: int
    g4_lower: Fraction
    sc_lower: Fraction
    per_lambda: tuple  # of (RealRoot, jump)
    odd_multiplicity: tuple  # breakpoints != 1 with odd-dimensional eigenspace


def _as_root(lam) -> RealRoot:
    if isinstance(lam, RealRoot):
        return lam
    lam = Fraction(lam)
    return RealRoot(RatPoly((-lam, 1)), lam, lam)


def pencil_at(form, lam) -> tuple[int, int, int]:
    """Inertia of the Hermitian pencil at a rational lambda."""
    lam = Fraction(lam)
    n = form.A.rows
    Q = form.A + form.A.T
    I = MatQ.identity(n)
    R = Q.scale(Fraction(1, 2)) @ (I.scale(1 - lam) - form.P.scale(1 + lam))
    if not R.is_symmetric():
        raise ComputationError("real part of the pencil is not symmetric")
    return signature_hermitian(R, form.A - form.A.T, 1)


def _breakpoints(S: MatQ) -> list[RealRoot]:
    cp = charpoly(S)
    roots = isolate_real_roots(cp) if cp.degree > 0 else []
    one = _as_root(1)
    if not any(r.same_point(one) for r in roots):
        roots = sort_roots(roots + [RealRoot(RatPoly((-1, 1)), Fraction(1), Fraction(1), 0)])
    return separate(roots)


def profile(form) -> SignatureProfile:
    st = symmetric_structure_of(form)
    roots = _breakpoints(st.S)
    cp = charpoly(st.S) * RatPoly((-1, 1))
    bound = cauchy_bound(cp) + 1
    samples = [min(-bound, roots[0].lo - 1)]
    for a, b in zip(roots, roots[1:]):
        samples.append((a.hi + b.lo) / 2)
    samples.append(max(bound, roots[-1].hi + 1))
    values = []
    for lam in samples:
        p, q, z = pencil_at(form, lam)
        if z:
            raise ComputationError(f"pencil degenerate at sample {lam}")
        values.append(p - q)
    jumps, at = [], []
    for i in range(len(roots)):
        left, right = values[i], values[i + 1]
        if (right - left) % 2:
            raise ComputationError("adjacent interval signatures have different parity")
        jumps.append((right - left) // 2)
        at.append((right + left) // 2)
    return SignatureProfile(
        breakpoints=tuple(roots),
        interval_values=tuple(values),
        jumps=tuple(jumps),
        values_at=tuple(at),
        samples=tuple(samples),
        sigma=signature(form.A + form.A.T),
        sigma_tilde=equivariant_signature(form),
    )


def jump_via_eigenspace(form, lam) -> int:
    """``-signature(beta on the generalized lambda-eigenspace of S)``."""
    lam = Fraction(lam)
    st = symmetric_structure_of(form)
    V = generalized_eigenspace(st.S, RatPoly((-lam, 1)))
    if V.dim == 0:
        return 0
    return -signature(restrict_form(st.B, V))


def _rational_sqrt(x: Fraction):
    n, d = x.numerator, x.denominator
    rn, rd = isqrt(n), isqrt(d)
    if rn * rn == n and rd * rd == d:
        return Fraction(rn, rd)
    return None


def levine_tristram(V: MatQ, lam) -> int:
    """Signature of ``(V + V^T) + i sqrt(-lambda) (V - V^T)`` for lambda < 0.

    When ``-lambda`` is not a rational square the realified matrix is replaced
    by its congruent image under ``diag(r I, I)``, in which only ``r^2 = -lambda``
    appears.

    The pencil signature of an equivariant form at a negative lambda equals
    ``levine_tristram(A, 1 / lambda)``: conjugating the pencil by
    ``diag(I / sqrt(-lambda), I)`` on the eigenspaces of P leaves the
    coefficient ``1 / sqrt(-lambda)`` on the skew part.
    """
    lam = Fraction(lam)
    if lam >= 0:
        raise NonnegativeLambda(f"lambda must be negative, got {lam}")
    R = V + V.T
    C = V - V.T
    r = _rational_sqrt(-lam)
    if r is not None:
        p, q, _ = signature_hermitian(R, C, r)
        return p - q
    big = MatQ.block([[R.scale(-lam), C.scale(lam)], [C.scale(-lam), R]])
    p, q, _ = signature_symmetric(big)
    return (p - q) // 2


def pencil_lt(form, lam) -> int:
    """The pencil signature at a negative lambda, computed through ``levine_tristram``."""
    lam = Fraction(lam)
    if lam >= 0:
        raise NonnegativeLambda(f"lambda must be negative, got {lam}")
    return levine_tristram(form.A, 1 / lam)


def genus_bounds(system) -> GenusBoundReport:
    form = system.form
    prof = profile(form)
    one = _as_root(1)
    per = []
    odd = []
    best = 0
    for root, jump in zip(prof.breakpoints, prof.jumps):
        per.append((root, jump))
        if root.same_point(one):
            continue
        best = max(best, abs(jump))
        # breakpoint multiplicity = dimension of the generalized eigenspace
        if root.multiplicity % 2:
            odd.append(root)
            if jump == 0:
                raise ComputationError("odd-dimensional eigenspace with zero jump")
    return GenusBoundReport(
        max_jump=best,
        g4_lower=Fraction(best, 4),
        sc_lower=Fraction(best, 2),
        per_lambda=tuple(per),
        odd_multiplicity=tuple(odd),
    )

