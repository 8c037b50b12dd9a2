"""The delta transform between symmetric Laurent polynomials in t and polynomials in s,
its inverse, the induced map on roots, and Alexander-polynomial normalization.

With ``t = (1 + x) / (1 - x)`` a symmetric Laurent polynomial of half-width d
becomes ``(1 - x**2)**-d`` times an even polynomial in x; setting ``s = x**2``
gives the transform.
"""

from __future__ import annotations

from fractions import Fraction

from ..errors import ExcludedPoint, NotNormalizable, NotSymmetric, OddResult
from .laurent import LaurentPoly
from .ratpoly import RatPoly, squarefree_decomposition

_ONE_PLUS = RatPoly((1, 1))
_ONE_MINUS = RatPoly((1, -1))


def delta_transform(p: LaurentPoly) -> RatPoly:
    if p.is_zero():
        return RatPoly()
    if not p.is_symmetric():
        raise NotSymmetric(f"{p} is not invariant under t -> 1/t")
    d = p.max_degree
    acc = RatPoly()
    for k, c in p.terms().items():
        acc = acc + c * _ONE_PLUS ** (d + k) * _ONE_MINUS ** (d - k)
    odd = [i for i, c in enumerate(acc.coeffs) if i % 2 and c]
    if odd:
        raise OddResult(f"odd powers {odd} survived the substitution")
    return RatPoly(acc.coeffs[::2])


def delta_inverse(q: RatPoly, half_width: int | None = None) -> LaurentPoly:
    """Inverse transform; ``half_width`` defaults to ``deg q``.

    A symmetric p with ``p(-1) = 0`` transforms to a polynomial of degree
    below its half-width, so recovering p needs the half-width passed in.
    """
    if q.is_zero():
        return LaurentPoly()
    d = q.degree if half_width is None else half_width
    if d < q.degree:
        raise ValueError("half_width must be at least deg q")
    t_minus = RatPoly((-1, 1))
    t_plus = RatPoly((1, 1))
    num = RatPoly()
    for j, c in enumerate(q.coeffs):
        if c:
            num = num + c * t_minus ** (2 * j) * t_plus ** (2 * d - 2 * j)
    num = num * Fraction(1, 4**d)
    return LaurentPoly(num.coeffs, -d)


def mu_root_map(z_re, z_im) -> tuple[Fraction, Fraction]:
    """``((z - 1) / (z + 1))**2`` for a Gaussian rational z."""
    a, b = Fraction(z_re), Fraction(z_im)
    if b == 0 and a in (-1, 0, 1):
        raise ExcludedPoint(f"mu is not defined at {a}")
    # (z - 1)/(z + 1) = (z - 1)(conj z + 1) / |z + 1|^2
    den = (a + 1) ** 2 + b**2
    wr = (a * a + b * b - 1) / den
    wi = (2 * b) / den
    return wr * wr - wi * wi, 2 * wr * wi


def normalize_alexander(f: LaurentPoly) -> LaurentPoly:
    """The unit multiple ``±t**k * f`` that is symmetric and takes the value 1 at t = 1."""
    if f.is_zero():
        raise NotNormalizable("zero polynomial")
    if f.width % 2:
        raise NotNormalizable(f"{f} has odd span")
    g = f.shift(-(f.min_degree + f.max_degree) // 2)
    if not g.is_symmetric():
        raise NotNormalizable(f"no unit multiple of {f} is symmetric")
    v = g(Fraction(1))
    if v not in (1, -1):
        raise NotNormalizable(f"value at 1 is {v}, not a unit")
    return g if v == 1 else -g


def is_square(f: LaurentPoly) -> bool:
    """Whether ``t**k * f`` is the square of a rational polynomial for some k."""
    if f.is_zero():
        return True
    F, _ = f.to_ratpoly()
    if any(m % 2 for _, m in squarefree_decomposition(F)):
        return False
    c = F.lc
    if c <= 0:
        return False
    return _is_square_int(c.numerator) and _is_square_int(c.denominator)


def _is_square_int(n: int) -> bool:
    from math import isqrt

    return n >= 0 and isqrt(n) ** 2 == n
