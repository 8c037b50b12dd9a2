"""Dense univariate polynomials with rational coefficients."""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Sequence


def _frac(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


class RatPoly:
    """Polynomial in one variable, coefficients stored in ascending degree.

    The zero polynomial has an empty coefficient tuple and degree -1.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [_frac(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, key, value):
        raise AttributeError("RatPoly is immutable")

    @classmethod
    def x(cls) -> RatPoly:
        return cls((0, 1))

    @classmethod
    def constant(cls, c) -> RatPoly:
        return cls((c,))

    @classmethod
    def from_roots(cls, roots: Iterable) -> RatPoly:
        out = cls((1,))
        for r in roots:
            out = out * cls((-_frac(r), 1))
        return out

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lc(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def coeff(self, k: int) -> Fraction:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Fraction(0)

    def __call__(self, x):
        acc = 0 * x if not isinstance(x, (int, Fraction)) else Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = RatPoly((other,))
        if not isinstance(other, RatPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(("RatPoly", self.coeffs))

    def __repr__(self):
        return f"RatPoly({[str(c) for c in self.coeffs]})"

    def __str__(self):
        from .text import format_poly

        return format_poly(self)

    def _lift(self, other) -> RatPoly:
        if isinstance(other, RatPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return RatPoly((other,))
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        n = max(len(self.coeffs), len(other.coeffs))
        return RatPoly(self.coeff(i) + other.coeff(i) for i in range(n))

    __radd__ = __add__

    def __neg__(self):
        return RatPoly(-c for c in self.coeffs)

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        if not self.coeffs or not other.coeffs:
            return RatPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return RatPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        result, base = RatPoly((1,)), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __divmod__(self, other):
        other = self._lift(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = other.degree
        lc = other.lc
        if len(rem) - 1 < dq:
            return RatPoly(), self
        quo = [Fraction(0)] * (len(rem) - dq)
        for k in range(len(rem) - 1 - dq, -1, -1):
            c = rem[k + dq] / lc
            quo[k] = c
            if c:
                for j, b in enumerate(other.coeffs):
                    rem[k + j] -= c * b
        return RatPoly(quo), RatPoly(rem[:dq])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def exact_div(self, other) -> RatPoly:
        q, r = divmod(self, other)
        if not r.is_zero():
            raise ArithmeticError("division is not exact")
        return q

    def monic(self) -> RatPoly:
        if self.is_zero():
            return self
        lc = self.lc
        return RatPoly(c / lc for c in self.coeffs)

    def derivative(self) -> RatPoly:
        return RatPoly(i * c for i, c in enumerate(self.coeffs) if i)

    def compose(self, inner: RatPoly) -> RatPoly:
        acc = RatPoly()
        for c in reversed(self.coeffs):
            acc = acc * inner + c
        return acc

    def scale_variable(self, a) -> RatPoly:
        """Return p(a*x)."""
        a = _frac(a)
        return RatPoly(c * a**i for i, c in enumerate(self.coeffs))

    def reflect(self) -> RatPoly:
        """Return p(-x)."""
        return self.scale_variable(-1)

    def primitive_integer(self) -> tuple[list[int], Fraction]:
        """Return ``(ints, c)`` with ``self = c * ints`` and ``ints`` primitive with positive leading coefficient."""
        if self.is_zero():
            return [], Fraction(0)
        den = lcm(*(c.denominator for c in self.coeffs))
        ints = [int(c * den) for c in self.coeffs]
        g = 0
        for v in ints:
            g = gcd(g, v)
        if ints[-1] < 0:
            g = -g
        ints = [v // g for v in ints]
        return ints, Fraction(g, den)

    def integer_poly(self) -> RatPoly:
        return RatPoly(self.primitive_integer()[0])

    def content_free_key(self) -> tuple:
        """Sort key used for deterministic ordering of factors."""
        return (self.degree, tuple(self.coeffs))


def poly_gcd(a: RatPoly, b: RatPoly) -> RatPoly:
    """Monic gcd (zero if both inputs vanish)."""
    while not b.is_zero():
        a, b = b, _prim(a % b)
    return a.monic()


def _prim(p: RatPoly) -> RatPoly:
    # keeps intermediate remainders from accumulating huge denominators
    if p.is_zero():
        return p
    ints, _ = p.primitive_integer()
    return RatPoly(ints)


def poly_xgcd(a: RatPoly, b: RatPoly) -> tuple[RatPoly, RatPoly, RatPoly]:
    """Return ``(g, u, v)`` with ``u*a + v*b = g`` and ``g`` monic."""
    r0, r1 = a, b
    s0, s1 = RatPoly((1,)), RatPoly()
    t0, t1 = RatPoly(), RatPoly((1,))
    while not r1.is_zero():
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if r0.is_zero():
        return r0, s0, t0
    lc = r0.lc
    return r0.monic(), s0 * (1 / lc), t0 * (1 / lc)


def squarefree_decomposition(f: RatPoly) -> list[tuple[RatPoly, int]]:
    """Yun's algorithm: ``f = c * prod(g_i ** m_i)`` with monic, square-free, coprime ``g_i``."""
    from ..errors import ZeroPolynomial

    if f.is_zero():
        raise ZeroPolynomial("squarefree decomposition of the zero polynomial")
    f = f.monic()
    if f.degree < 1:
        return []
    out = []
    fp = f.derivative()
    a = poly_gcd(f, fp)
    b = f.exact_div(a)
    c = fp.exact_div(a)
    d = c - b.derivative()
    i = 1
    while b.degree >= 1:
        g = poly_gcd(b, d)
        if g.degree >= 1:
            out.append((g, i))
        b = b.exact_div(g)
        c = d.exact_div(g)
        d = c - b.derivative()
        i += 1
    return out


def squarefree_part(f: RatPoly) -> RatPoly:
    """Monic product of the distinct irreducible factors of ``f``."""
    out = RatPoly((1,))
    for g, _ in squarefree_decomposition(f):
        out = out * g
    return out


def poly_from_ints(coeffs: Sequence[int]) -> RatPoly:
    return RatPoly(coeffs)
