"""Irreducible factorization over Q by Kronecker's method.

Rational roots are stripped first (they come out of exact root isolation), so
Kronecker interpolation only runs on the factor-free remainder of degree >= 4.
The method is exponential; the degree cutoff and candidate budget below make
it fail loudly instead of hanging.
"""

from __future__ import annotations

import itertools
from math import lcm

from ..errors import FactorizationLimit, ZeroPolynomial
from .ratpoly import RatPoly, squarefree_decomposition
from .roots import isolate_real_roots

MAX_DEGREE = 24
CANDIDATE_BUDGET = 2_000_000


def _signed_divisors(n: int) -> list[int]:
    from sympy import divisors

    pos = divisors(abs(n))
    return [d for p in pos for d in (p, -p)]


def _interpolation_basis(points: list[int]):
    """Integer Lagrange basis: ``L_i = num[i] / den`` for a common integer ``den``."""
    basis = []
    for i, a in enumerate(points):
        num = RatPoly((1,))
        d = 1
        for j, b in enumerate(points):
            if j != i:
                num = num * RatPoly((-b, 1))
                d *= a - b
        basis.append((num, d))
    den = lcm(*(abs(d) for _, d in basis))
    nums = []
    for num, d in basis:
        m = den // d
        nums.append([int(c) * m for c in num.coeffs])
    return nums, den


def _find_factor_of_degree(F: RatPoly, k: int) -> RatPoly | None:
    lead = int(F.lc)
    const = int(F.coeff(0))
    pool = sorted(range(-12, 13), key=lambda a: (abs(int(F(a))), abs(a)))
    pool = pool[: 2 * k + 6]
    values = {a: int(F(a)) for a in pool}
    divs = {a: _signed_divisors(values[a]) for a in pool}
    pool.sort(key=lambda a: (len(divs[a]), abs(a)))
    points = pool[: k + 1]
    extra = pool[k + 1:]
    choices = [[d for d in divs[a] if d > 0] if i == 0 else divs[a] for i, a in enumerate(points)]
    total = 1
    for c in choices:
        total *= len(c)
    if total > CANDIDATE_BUDGET:
        raise FactorizationLimit(f"degree-{k} factor search needs {total} candidates (budget {CANDIDATE_BUDGET})")
    nums, den = _interpolation_basis(points)
    for combo in itertools.product(*choices):
        coeffs = [0] * (k + 1)
        for d, num in zip(combo, nums):
            for j, c in enumerate(num):
                coeffs[j] += d * c
        if coeffs[k] == 0 or any(c % den for c in coeffs):
            continue
        g = [c // den for c in coeffs]
        if g[0] == 0 or lead % g[k] or const % g[0]:
            continue
        gp = RatPoly(g)
        if any(values[a] % int(gp(a)) for a in extra if gp(a) != 0):
            continue
        q, r = divmod(F, gp)
        if r.is_zero() and q.degree >= 1:
            return gp
    return None


def _factor_no_rational_roots(F: RatPoly) -> list[RatPoly]:
    """Irreducible factors of a primitive square-free integer polynomial without rational roots."""
    if F.degree <= 3:
        return [F]
    if F.degree > MAX_DEGREE:
        raise FactorizationLimit(f"degree {F.degree} exceeds the factorization cutoff {MAX_DEGREE}")
    for k in range(2, F.degree // 2 + 1):
        g = _find_factor_of_degree(F, k)
        if g is not None:
            rest = F.exact_div(g).integer_poly()
            return _factor_no_rational_roots(g.integer_poly()) + _factor_no_rational_roots(rest)
    return [F]


def factor_rational(f: RatPoly) -> list[tuple[RatPoly, int]]:
    """Monic irreducible factors of ``f`` over Q with multiplicities, sorted by degree then coefficients."""
    if f.is_zero():
        raise ZeroPolynomial("cannot factor the zero polynomial")
    out = []
    for g, mult in squarefree_decomposition(f):
        rest = g
        for r in isolate_real_roots(g):
            if r.is_rational:
                lin = RatPoly((-r.value, 1))
                out.append((lin, mult))
                rest = rest.exact_div(lin)
        if rest.degree >= 1:
            for h in _factor_no_rational_roots(rest.integer_poly()):
                out.append((h.monic(), mult))
    out.sort(key=lambda pm: pm[0].content_free_key())
    return out


def is_irreducible(f: RatPoly) -> bool:
    fs = factor_rational(f)
    return len(fs) == 1 and fs[0][1] == 1
