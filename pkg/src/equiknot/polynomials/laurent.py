"""Laurent polynomials in t with rational coefficients."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable

from .ratpoly import RatPoly, _frac


class LaurentPoly:
    """``sum(coeffs[i] * t**(min_degree + i))`` with no zero coefficient at either end."""

    __slots__ = ("min_degree", "coeffs")

    def __init__(self, coeffs: Iterable = (), min_degree: int = 0):
        cs = [_frac(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        lead = 0
        while lead < len(cs) and cs[lead] == 0:
            lead += 1
        cs = cs[lead:]
        object.__setattr__(self, "coeffs", tuple(cs))
        object.__setattr__(self, "min_degree", min_degree + lead if cs else 0)

    def __setattr__(self, key, value):
        raise AttributeError("LaurentPoly is immutable")

    @classmethod
    def from_dict(cls, terms: dict) -> LaurentPoly:
        terms = {k: v for k, v in terms.items() if v}
        if not terms:
            return cls()
        lo, hi = min(terms), max(terms)
        return cls((terms.get(k, 0) for k in range(lo, hi + 1)), lo)

    @classmethod
    def from_ratpoly(cls, p: RatPoly, shift: int = 0) -> LaurentPoly:
        return cls(p.coeffs, shift)

    @classmethod
    def t(cls) -> LaurentPoly:
        return cls((1,), 1)

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def max_degree(self) -> int:
        return self.min_degree + len(self.coeffs) - 1

    @property
    def width(self) -> int:
        """Span ``max_degree - min_degree`` (0 for monomials and for zero)."""
        return len(self.coeffs) - 1 if self.coeffs else 0

    def coeff(self, k: int) -> Fraction:
        i = k - self.min_degree
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)

    def terms(self) -> dict:
        return {self.min_degree + i: c for i, c in enumerate(self.coeffs) if c}

    def to_ratpoly(self) -> tuple[RatPoly, int]:
        """Return ``(F, k)`` with ``self = t**k * F`` and ``F(0) != 0``."""
        return RatPoly(self.coeffs), self.min_degree

    def __call__(self, x):
        if self.is_zero():
            return Fraction(0)
        return RatPoly(self.coeffs)(x) * x**self.min_degree

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = LaurentPoly((other,))
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.coeffs == other.coeffs and self.min_degree == other.min_degree

    def __hash__(self):
        return hash(("LaurentPoly", self.min_degree, self.coeffs))

    def __repr__(self):
        return f"LaurentPoly({[str(c) for c in self.coeffs]}, min_degree={self.min_degree})"

    def __str__(self):
        from .text import format_laurent

        return format_laurent(self)

    def _lift(self, other):
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return LaurentPoly((other,))
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        out = self.terms()
        for k, v in other.terms().items():
            out[k] = out.get(k, 0) + v
        return LaurentPoly.from_dict(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly((-c for c in self.coeffs), self.min_degree)

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
        prod = RatPoly(self.coeffs) * RatPoly(other.coeffs)
        return LaurentPoly(prod.coeffs, self.min_degree + other.min_degree)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        out = LaurentPoly((1,))
        for _ in range(n):
            out = out * self
        return out

    def shift(self, k: int) -> LaurentPoly:
        """Multiply by ``t**k``."""
        return LaurentPoly(self.coeffs, self.min_degree + k)

    def invert_variable(self) -> LaurentPoly:
        """Return ``p(1/t)``."""
        return LaurentPoly(tuple(reversed(self.coeffs)), -self.max_degree) if self.coeffs else self

    def is_symmetric(self) -> bool:
        return self == self.invert_variable()
