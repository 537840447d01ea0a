"""The field Q(sqrt d) as ordered pairs of rationals.

A pair ``(x, y)`` stands for ``x + y*sqrt(d)``. Addition is componentwise
and multiplication is ``(x1*x2 + d*y1*y2, x1*y2 + y1*x2)``. Any non-square
rational ``d`` is allowed, negative ones included (d = -1 gives the
Gaussian rationals).
"""

import re
from dataclasses import dataclass
from fractions import Fraction

from .errors import AlgebraError
from .exact import format_rational, is_square_rational, parse_rational


@dataclass(frozen=True)
class QuadExtElem:
    x: Fraction
    y: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "x", Fraction(self.x))
        object.__setattr__(self, "y", Fraction(self.y))

    def is_zero(self):
        return self.x == 0 and self.y == 0


@dataclass(frozen=True)
class ExtensionField:
    d: Fraction

    def __post_init__(self):
        d = Fraction(self.d)
        if is_square_rational(d) is not None:
            raise AlgebraError(f"{d} is the square of a rational; Q(sqrt {d}) would not be a field")
        object.__setattr__(self, "d", d)

    def __call__(self, x, y=0):
        return QuadExtElem(x, y)

    @property
    def zero(self):
        return QuadExtElem(0, 0)

    @property
    def one(self):
        return QuadExtElem(1, 0)

    def norm(self, a):
        """``x^2 - d*y^2``; nonzero for every nonzero element."""
        return a.x * a.x - self.d * a.y * a.y


def qe_arith(F, op, a, b):
    if op == "add":
        return QuadExtElem(a.x + b.x, a.y + b.y)
    if op == "sub":
        return QuadExtElem(a.x - b.x, a.y - b.y)
    if op == "mul":
        return QuadExtElem(a.x * b.x + F.d * a.y * b.y, a.x * b.y + a.y * b.x)
    raise AlgebraError(f"unknown operation {op!r}")


def qe_inverse(F, a):
    if a.is_zero():
        raise AlgebraError("zero has no inverse")
    den = F.norm(a)
    return QuadExtElem(a.x / den, -a.y / den)


def qe_conjugate(F, a):
    return QuadExtElem(a.x, -a.y)


def qe_solve_sqrt(F):
    """Both solutions of ``(x, y)^2 = (d, 0)``: the pairs (0, 1) and (0, -1)."""
    return QuadExtElem(0, 1), QuadExtElem(0, -1)


def qe_format(F, a):
    sign = "-" if a.y < 0 else "+"
    return f"{format_rational(a.x)} {sign} {format_rational(abs(a.y))}*sqrt({format_rational(F.d)})"


_SQRT_TERM = re.compile(r"^(?:(?P<coef>[^*]+)\*)?sqrt\((?P<d>[^)]+)\)$")


def _split_terms(s):
    """Split at top-level + and - signs; signs inside sqrt(...) stay put."""
    terms, start, depth = [], 0, 0
    for i, ch in enumerate(s):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch in "+-" and depth == 0 and i > start:
            terms.append(s[start:i])
            start = i
    terms.append(s[start:])
    if any(t in ("", "+", "-") for t in terms):
        raise AlgebraError(f"cannot parse {s!r}")
    return terms


def qe_parse(F, text):
    """Parse ``"x + y*sqrt(d)"`` (terms in any order, either may be absent) or ``"x,y"``."""
    s = text.replace(" ", "")
    if not s:
        raise AlgebraError("empty element")
    if "," in s:
        parts = s.strip("()").split(",")
        if len(parts) != 2:
            raise AlgebraError(f"expected a pair 'x,y', got {text!r}")
        return QuadExtElem(parse_rational(parts[0]), parse_rational(parts[1]))
    x = y = Fraction(0)
    terms = _split_terms(s)
    for term in terms:
        sign = -1 if term.startswith("-") else 1
        body = term.lstrip("+-")
        m = _SQRT_TERM.match(body)
        if m:
            if parse_rational(m.group("d")) != F.d:
                raise AlgebraError(f"element uses sqrt({m.group('d')}) but the field has d = {F.d}")
            coef = parse_rational(m.group("coef")) if m.group("coef") else Fraction(1)
            y += sign * coef
        else:
            x += sign * parse_rational(body)
    return QuadExtElem(x, y)
