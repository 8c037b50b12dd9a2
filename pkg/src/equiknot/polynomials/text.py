"""Plain-text polynomial format used on the command line.

Terms look like ``c*t^k`` joined by ``+`` and ``-``, for example
``-t + 3 - t^-1`` or ``1/4*s^2 - 5``.  The coefficient is omitted when it is
1 and the variable when k = 0.
"""

from __future__ import annotations

import re
from fractions import Fraction

from ..errors import InvalidInput
from .laurent import LaurentPoly
from .ratpoly import RatPoly


def _format_terms(terms: dict, var: str) -> str:
    if not terms:
        return "0"
    parts = []
    for k in sorted(terms, reverse=True):
        c = terms[k]
        mag = abs(c)
        if k == 0:
            body = str(mag)
        else:
            mono = var if k == 1 else f"{var}^{k}"
            body = mono if mag == 1 else f"{mag}*{mono}"
        if not parts:
            parts.append(("-" if c < 0 else "") + body)
        else:
            parts.append(("- " if c < 0 else "+ ") + body)
    return " ".join(parts)


def format_laurent(p: LaurentPoly, var: str = "t") -> str:
    return _format_terms(p.terms(), var)


def format_poly(p: RatPoly, var: str = "s") -> str:
    return _format_terms({i: c for i, c in enumerate(p.coeffs) if c}, var)


_TERM = re.compile(r"^(?P<coef>\d+(?:/\d+)?)?\*?(?:(?P<var>[a-z])(?:\^(?P<exp>-?\d+))?)?$")


def _parse_terms(text: str, var: str, allow_negative: bool) -> dict:
    src = text.replace(" ", "")
    if not src:
        raise InvalidInput("empty polynomial")
    # split before every sign that is not part of an exponent
    pieces = re.split(r"(?<!\^)(?=[+-])", src)
    terms: dict = {}
    for piece in pieces:
        if not piece:
            continue
        sign = 1
        while piece and piece[0] in "+-":
            if piece[0] == "-":
                sign = -sign
            piece = piece[1:]
        m = _TERM.match(piece)
        if not piece or not m or m.group("coef") is None and m.group("var") is None \
                or "*" in piece and (m.group("coef") is None or m.group("var") is None):
            raise InvalidInput(f"cannot parse term {piece!r} in {text!r}")
        if m.group("var") is not None and m.group("var") != var:
            raise InvalidInput(f"expected variable {var!r}, found {m.group('var')!r}")
        coef = Fraction(m.group("coef")) if m.group("coef") else Fraction(1)
        if m.group("var") is None:
            exp = 0
        else:
            exp = int(m.group("exp")) if m.group("exp") is not None else 1
        if exp < 0 and not allow_negative:
            raise InvalidInput(f"negative exponent in ordinary polynomial {text!r}")
        terms[exp] = terms.get(exp, 0) + sign * coef
    return terms


def parse_laurent(text: str, var: str = "t") -> LaurentPoly:
    return LaurentPoly.from_dict(_parse_terms(text, var, True))


def parse_poly(text: str, var: str = "s") -> RatPoly:
    terms = _parse_terms(text, var, False)
    top = max(terms, default=0)
    return RatPoly(terms.get(i, 0) for i in range(top + 1))
