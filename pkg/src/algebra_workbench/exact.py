"""Exact rationals and the small algebras built directly on them.

Rationals are :class:`fractions.Fraction` values (arbitrary-precision
numerator and denominator, always reduced, denominator positive). Complex
numbers used by the solvers are plain Python ``complex`` values.
"""

import cmath
import math
import re
from dataclasses import dataclass
from fractions import Fraction

from .errors import AlgebraError

Rational = Fraction

_RAT_OPS = {
    "add": lambda a, b: a + b,
    "sub": lambda a, b: a - b,
    "mul": lambda a, b: a * b,
    "div": lambda a, b: a / b,
}


def rat_normalize(num, den):
    """Build the reduced fraction ``num/den`` with the sign on the numerator."""
    if den == 0:
        raise AlgebraError("zero denominator")
    return Fraction(int(num), int(den))


def rat_arith(op, a, b):
    try:
        fn = _RAT_OPS[op]
    except KeyError:
        raise AlgebraError(f"unknown rational operation {op!r}") from None
    a, b = Fraction(a), Fraction(b)
    if op == "div" and b == 0:
        raise AlgebraError("rational division by zero")
    return fn(a, b)


def parse_rational(text):
    """Parse ``"num/den"``, an integer, or a decimal literal such as ``"0.25"``."""
    text = text.strip()
    if "/" in text:
        num, _, den = text.partition("/")
        try:
            return rat_normalize(int(num), int(den))
        except ValueError:
            raise AlgebraError(f"not a rational number: {text!r}") from None
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise AlgebraError(f"not a rational number: {text!r}") from None


def format_rational(q):
    return str(Fraction(q))


def is_square_rational(q):
    """Return the nonnegative rational square root of ``q``, or None if it has none."""
    q = Fraction(q)
    if q < 0:
        return None
    rn = math.isqrt(q.numerator)
    rd = math.isqrt(q.denominator)
    if rn * rn == q.numerator and rd * rd == q.denominator:
        return Fraction(rn, rd)
    return None


# -- floating complex ------------------------------------------------------

def complex_polar(z):
    """Return ``(modulus, argument)`` with the argument in (-pi, pi]; zero maps to (0, 0)."""
    z = complex(z)
    if z == 0:
        return 0.0, 0.0
    arg = math.atan2(z.imag, z.real)
    if arg <= -math.pi:
        # atan2(-0.0, x<0) gives -pi
        arg = math.pi
    return abs(z), arg


def nth_roots(c, n):
    """All ``n`` solutions of ``z**n = c``, indexed k = 0..n-1.

    Root k is ``|c|**(1/n) * cis((arg c + 2*pi*k) / n)`` with the principal
    argument, so root 0 is the principal value.
    """
    if not isinstance(n, int) or n < 1:
        raise AlgebraError("root degree must be a positive integer")
    c = complex(c)
    if not (math.isfinite(c.real) and math.isfinite(c.imag)):
        raise AlgebraError("complex value must be finite")
    if c == 0:
        return [0j] * n
    modulus, arg = complex_polar(c)
    r = modulus ** (1.0 / n)
    return [cmath.rect(r, (arg + 2.0 * math.pi * k) / n) for k in range(n)]


def cis(theta):
    return complex(math.cos(theta), math.sin(theta))


_SIG_DIGITS = 13


def _fmt_real(x):
    s = format(x, f".{_SIG_DIGITS}g")
    if s in ("-0", "-0.0"):
        return "0"
    return s


def format_complex(z):
    """Render ``z`` as ``a+bi`` / ``a-bi``.

    Components smaller than 1e-12 of the modulus are printed as 0 so that
    rounding noise never changes the textual output.
    """
    z = complex(z)
    re_, im = z.real, z.imag
    tiny = 1e-12 * abs(z)
    if abs(re_) <= tiny:
        re_ = 0.0
    if abs(im) <= tiny:
        im = 0.0
    re_s = _fmt_real(re_)
    im_s = _fmt_real(abs(im))
    sign = "-" if im < 0 and im_s != "0" else "+"
    return f"{re_s}{sign}{im_s}i"


_NUM = r"(?:\d+\.?\d*(?:[eE][+-]?\d+)?|\.\d+(?:[eE][+-]?\d+)?)"
_COMPLEX_RE = re.compile(
    rf"^(?P<re>[+-]?{_NUM})?(?:(?P<imsign>[+-])?(?P<im>{_NUM})?(?P<unit>[ij]))?$"
)


def parse_complex(text):
    """Parse ``"a+bi"``, ``"a"``, ``"bi"``, ``"-i"`` and the like (``j`` also accepted)."""
    s = text.strip().replace(" ", "")
    m = _COMPLEX_RE.match(s)
    if not s or m is None or (m.group("re") is None and m.group("unit") is None):
        raise AlgebraError(f"not a complex number: {text!r}")
    re_part = float(m.group("re")) if m.group("re") is not None else 0.0
    im_part = 0.0
    if m.group("unit"):
        if m.group("re") is not None and m.group("imsign") is None:
            # "2i": the leading number is the imaginary coefficient
            if m.group("im") is not None:
                raise AlgebraError(f"not a complex number: {text!r}")
            im_part, re_part = re_part, 0.0
        else:
            mag = float(m.group("im")) if m.group("im") is not None else 1.0
            im_part = -mag if m.group("imsign") == "-" else mag
    return complex(re_part, im_part)


# -- quaternions -----------------------------------------------------------

@dataclass(frozen=True)
class Quaternion:
    """``a + b*i + c*j + d*k`` with exact rational coefficients."""

    a: Fraction = Fraction(0)
    b: Fraction = Fraction(0)
    c: Fraction = Fraction(0)
    d: Fraction = Fraction(0)

    def __post_init__(self):
        for name in "abcd":
            object.__setattr__(self, name, Fraction(getattr(self, name)))

    def __add__(self, other):
        return Quaternion(self.a + other.a, self.b + other.b,
                          self.c + other.c, self.d + other.d)

    def __neg__(self):
        return Quaternion(-self.a, -self.b, -self.c, -self.d)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, Quaternion):
            other = Quaternion(other)
        return quat_mul(self, other)

    def conjugate(self):
        return Quaternion(self.a, -self.b, -self.c, -self.d)

    def norm(self):
        """Squared length a^2 + b^2 + c^2 + d^2."""
        return self.a ** 2 + self.b ** 2 + self.c ** 2 + self.d ** 2

    def is_zero(self):
        return self.norm() == 0

    def __str__(self):
        parts = [str(self.a)]
        for coef, unit in ((self.b, "i"), (self.c, "j"), (self.d, "k")):
            sign = "-" if coef < 0 else "+"
            parts.append(f" {sign} {abs(coef)}{unit}")
        return "".join(parts)


Q_ONE = Quaternion(1)
Q_I = Quaternion(0, 1)
Q_J = Quaternion(0, 0, 1)
Q_K = Quaternion(0, 0, 0, 1)


def quat_mul(p, q):
    """Hamilton product, expanded over i*j = k, j*k = i, k*i = j and i^2 = j^2 = k^2 = -1."""
    a1, b1, c1, d1 = p.a, p.b, p.c, p.d
    a2, b2, c2, d2 = q.a, q.b, q.c, q.d
    return Quaternion(
        a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
        a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
        a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
        a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
    )


def quat_inv(q):
    n = q.norm()
    if n == 0:
        raise AlgebraError("zero has no inverse")
    conj = q.conjugate()
    return Quaternion(conj.a / n, conj.b / n, conj.c / n, conj.d / n)


# -- rational 3-vectors ----------------------------------------------------

@dataclass(frozen=True)
class Vec3Q:
    x: Fraction = Fraction(0)
    y: Fraction = Fraction(0)
    z: Fraction = Fraction(0)

    def __post_init__(self):
        for name in "xyz":
            object.__setattr__(self, name, Fraction(getattr(self, name)))

    def __add__(self, other):
        return Vec3Q(self.x + other.x, self.y + other.y, self.z + other.z)

    def __neg__(self):
        return Vec3Q(-self.x, -self.y, -self.z)

    def __sub__(self, other):
        return self + (-other)

    def is_zero(self):
        return self.x == 0 and self.y == 0 and self.z == 0


def cross(u, v):
    return Vec3Q(
        u.y * v.z - u.z * v.y,
        u.z * v.x - u.x * v.z,
        u.x * v.y - u.y * v.x,
    )
