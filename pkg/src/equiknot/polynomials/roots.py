"""Exact real-root isolation with Sturm sequences.

Every root is carried as a half-open interval ``(lo, hi]`` together with a
square-free polynomial that has exactly one root in it.  Rational roots are
detected and stored with ``lo == hi``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from ..errors import ZeroPolynomial
from .ratpoly import RatPoly, poly_gcd, squarefree_decomposition


@lru_cache(maxsize=4096)
def sturm_chain(f: RatPoly) -> tuple[RatPoly, ...]:
    chain = [f, f.derivative()]
    while not chain[-1].is_zero():
        r = -(chain[-2] % chain[-1])
        if r.is_zero():
            break
        # positive rescaling keeps signs and tames coefficient growth
        ints, c = r.primitive_integer()
        chain.append(RatPoly(ints) if c > 0 else -RatPoly(ints))
    if chain[-1].is_zero():
        chain.pop()
    return tuple(chain)


def _sign(x) -> int:
    return (x > 0) - (x < 0)


def sign_variations(chain, x: Fraction) -> int:
    prev = 0
    count = 0
    for p in chain:
        s = _sign(p(x))
        if s:
            if prev and s != prev:
                count += 1
            prev = s
    return count


def count_roots(f: RatPoly, lo: Fraction, hi: Fraction) -> int:
    """Number of distinct real roots of ``f`` in ``(lo, hi]``."""
    if f.degree < 1:
        return 0
    chain = sturm_chain(f)
    return sign_variations(chain, lo) - sign_variations(chain, hi)


def cauchy_bound(f: RatPoly) -> Fraction:
    """Strict upper bound for the absolute value of every complex root."""
    lc = abs(f.lc)
    return 1 + max((abs(c) / lc for c in f.coeffs[:-1]), default=Fraction(0))


def _sign_at(f: RatPoly, x: Fraction) -> int:
    return _sign(f(x))


@dataclass(frozen=True)
class RealRoot:
    """A real algebraic number given by a square-free polynomial and an isolating interval."""

    defining_poly: RatPoly
    lo: Fraction
    hi: Fraction
    multiplicity: int = 1

    @property
    def interval(self) -> tuple[Fraction, Fraction]:
        return (self.lo, self.hi)

    @property
    def is_rational(self) -> bool:
        return self.lo == self.hi

    @property
    def value(self) -> Fraction:
        if not self.is_rational:
            raise ValueError("root is irrational")
        return self.lo

    def refine(self) -> RealRoot:
        """Halve the isolating interval."""
        if self.is_rational:
            return self
        mid = (self.lo + self.hi) / 2
        f = self.defining_poly
        if f(mid) == 0:
            return RealRoot(f, mid, mid, self.multiplicity)
        if count_roots(f, self.lo, mid):
            return RealRoot(f, self.lo, mid, self.multiplicity)
        return RealRoot(f, mid, self.hi, self.multiplicity)

    def refine_to(self, width: Fraction) -> RealRoot:
        r = self
        while not r.is_rational and r.hi - r.lo > width:
            r = r.refine()
        return r

    def approx(self) -> float:
        return float((self.lo + self.hi) / 2)

    def sign_of(self, g: RatPoly) -> int:
        """Exact sign of ``g`` at this root."""
        if self.is_rational:
            return _sign(g(self.lo))
        if g.is_zero():
            return 0
        if g.degree < 1:
            return _sign(g.lc)
        common = poly_gcd(self.defining_poly, g)
        if common.degree >= 1 and count_roots(common, self.lo, self.hi):
            return 0
        r = self
        gsf = g.monic()
        gsf = gsf.exact_div(poly_gcd(gsf, gsf.derivative()))
        while _sign_at(gsf, r.lo) == 0 or count_roots(gsf, r.lo, r.hi):
            r = r.refine()
            if r.is_rational:
                return _sign(g(r.lo))
        return _sign(g((r.lo + r.hi) / 2))

    def same_point(self, other: RealRoot) -> bool:
        if self.is_rational and other.is_rational:
            return self.lo == other.lo
        if self.is_rational:
            return other.defining_poly(self.lo) == 0 and other.lo < self.lo <= other.hi
        if other.is_rational:
            return other.same_point(self)
        lo, hi = max(self.lo, other.lo), min(self.hi, other.hi)
        if lo >= hi:
            return False
        g = poly_gcd(self.defining_poly, other.defining_poly)
        return g.degree >= 1 and count_roots(g, lo, hi) == 1 and \
            count_roots(self.defining_poly, lo, hi) == 1 and count_roots(other.defining_poly, lo, hi) == 1

    def compare(self, other: RealRoot) -> int:
        if self.same_point(other):
            return 0
        a, b = self, other
        while True:
            # distinct points: touching closed intervals already decide the order
            if a.hi <= b.lo:
                return -1
            if b.hi <= a.lo:
                return 1
            if (a.hi - a.lo) >= (b.hi - b.lo):
                a = a.refine()
            else:
                b = b.refine()

    def __lt__(self, other: RealRoot) -> bool:
        return self.compare(other) < 0

    def __str__(self):
        if self.is_rational:
            return str(self.lo)
        return f"root of {self.defining_poly} in ({self.lo}, {self.hi}]"


def _isolate_squarefree(f: RatPoly) -> list[tuple[Fraction, Fraction]]:
    bound = cauchy_bound(f)
    out = []
    stack = [(-bound, bound)]
    while stack:
        lo, hi = stack.pop()
        n = count_roots(f, lo, hi)
        if n == 0:
            continue
        if n == 1:
            out.append((lo, hi))
            continue
        mid = (lo + hi) / 2
        stack.append((mid, hi))
        stack.append((lo, mid))
    out.sort()
    return out


def _rational_in(f_int: RatPoly, lo: Fraction, hi: Fraction):
    """Return the rational root of the integer polynomial in ``(lo, hi]`` if there is one."""
    lead = abs(int(f_int.lc))
    # two rationals with denominators <= lead differ by at least 1/lead**2
    target = Fraction(1, 2 * lead * lead)
    r = RealRoot(f_int, lo, hi)
    if f_int(hi) == 0:
        return hi
    while r.hi - r.lo > target:
        r = r.refine()
        if r.is_rational:
            return r.lo
    cand = ((r.lo + r.hi) / 2).limit_denominator(lead)
    if r.lo < cand <= r.hi and f_int(cand) == 0:
        return cand
    return None


def isolate_real_roots(f: RatPoly, detect_rational: bool = True) -> list[RealRoot]:
    """All distinct real roots of ``f``, ascending, with multiplicities."""
    if f.is_zero():
        raise ZeroPolynomial("cannot isolate roots of the zero polynomial")
    roots = []
    for g, mult in squarefree_decomposition(f):
        gi = g.integer_poly()
        for lo, hi in _isolate_squarefree(gi):
            rat = _rational_in(gi, lo, hi) if detect_rational else None
            if rat is not None:
                roots.append(RealRoot(RatPoly((-rat, 1)), rat, rat, mult))
            else:
                roots.append(RealRoot(gi, lo, hi, mult))
    return sort_roots(roots)


def sort_roots(roots: list[RealRoot]) -> list[RealRoot]:
    from functools import cmp_to_key

    return sorted(roots, key=cmp_to_key(lambda a, b: a.compare(b)))


def separate(roots: list[RealRoot]) -> list[RealRoot]:
    """Refine sorted distinct roots until consecutive closed intervals are disjoint."""
    roots = list(roots)
    changed = True
    while changed:
        changed = False
        for i in range(len(roots) - 1):
            a, b = roots[i], roots[i + 1]
            while a.hi >= b.lo:
                if (a.hi - a.lo) >= (b.hi - b.lo):
                    a = a.refine()
                else:
                    b = b.refine()
                changed = True
            roots[i], roots[i + 1] = a, b
    return roots
