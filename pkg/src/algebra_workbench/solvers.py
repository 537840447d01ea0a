"""Closed-form solution of algebraic equations of degree 1 to 4.

Coefficients are complex and given highest degree first to the ``solve_*``
functions (``alpha*z^n + beta*z^(n-1) + ...``). Square and cube roots are
taken as the k = 0 member of the root set returned by
:func:`~algebra_workbench.exact.nth_roots`. Results are floating point and
sorted by (real, imaginary) part.
"""

import math
from dataclasses import dataclass

from .errors import AlgebraError
from .exact import nth_roots

# relative threshold below which q is treated as zero in the quartic
QUARTIC_Q_EPS = 1e-12
PERFECT_SQUARE_EPS = 1e-9
VIETE_RTOL = 1e-7


@dataclass(frozen=True)
class Poly:
    """Complex polynomial with coefficients in ascending degree."""

    coeffs: tuple

    def __post_init__(self):
        c = [complex(v) for v in self.coeffs]
        while len(c) > 1 and c[-1] == 0:
            c.pop()
        if not c:
            c = [0j]
        object.__setattr__(self, "coeffs", tuple(c))

    @classmethod
    def from_descending(cls, coeffs):
        return cls(tuple(reversed(list(coeffs))))

    @classmethod
    def from_roots(cls, roots, leading=1):
        c = [complex(leading)]
        for r in roots:
            # multiply by (z - r); c is ascending
            nxt = [0j] * (len(c) + 1)
            for i, v in enumerate(c):
                nxt[i + 1] += v
                nxt[i] -= r * v
            c = nxt
        return cls(tuple(c))

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def __call__(self, z):
        acc = 0j
        for c in reversed(self.coeffs):
            acc = acc * z + c
        return acc

    def is_real(self):
        return all(c.imag == 0 for c in self.coeffs)


@dataclass(frozen=True)
class DepressedCubic:
    """``w^3 + p*w + q`` with ``z = w - shift``."""

    p: complex
    q: complex
    shift: complex


@dataclass(frozen=True)
class QuarticWork:
    """Intermediate values of the quartic solution.

    ``z = w - shift`` turns the equation into ``w^4 + p*w^2 + q*w + r``; ``w0``
    is the chosen resolvent root and the equation splits as
    ``w^2 + p/2 + w0 = +-(zeta*w + eta)``. ``w0``, ``zeta`` and ``eta`` are
    None on the biquadratic path (q treated as 0).
    """

    p: complex
    q: complex
    r: complex
    shift: complex
    w0: object
    zeta: object
    eta: object


@dataclass(frozen=True)
class RootCheck:
    max_residual: float
    viete_ok: bool


def _sort_roots(roots):
    return sorted((complex(r) for r in roots), key=lambda z: (round(z.real, 9), round(z.imag, 9)))


def _sqrt(z):
    return nth_roots(z, 2)[0]


def _cbrt(z):
    return nth_roots(z, 3)[0]


def _require_leading(alpha, what):
    alpha = complex(alpha)
    if alpha == 0:
        raise AlgebraError(what)
    return alpha


def solve_linear(alpha, beta):
    alpha = _require_leading(alpha, "degenerate: not a 1st degree equation")
    return -complex(beta) / alpha


def solve_quadratic(alpha, beta, gamma):
    """Roots of ``alpha*z^2 + beta*z + gamma`` and whether the trinomial is a perfect square.

    Uses the reduced form ``z = -p/2 +- sqrt(p^2/4 - q)``; the sign that
    avoids cancellation is evaluated directly and the other root is
    recovered from the product ``q``.
    """
    alpha = _require_leading(alpha, "not quadratic")
    beta, gamma = complex(beta), complex(gamma)
    disc = beta * beta - 4 * alpha * gamma
    scale = max(abs(beta) ** 2, 4 * abs(alpha * gamma))
    perfect = abs(disc) <= PERFECT_SQUARE_EPS * scale if scale > 0 else True
    p, q = beta / alpha, gamma / alpha
    if perfect:
        z = -p / 2
        return (z, z), True
    s = _sqrt(p * p / 4 - q)
    half = -p / 2
    r1 = half + s if abs(half + s) >= abs(half - s) else half - s
    r2 = q / r1 if r1 != 0 else half - s
    roots = _sort_roots([r1, r2])
    return (roots[0], roots[1]), False


def depress_cubic(alpha, beta, gamma, delta):
    alpha = _require_leading(alpha, "not a cubic")
    a = complex(beta) / alpha
    b = complex(gamma) / alpha
    c = complex(delta) / alpha
    p = b - a * a / 3
    q = 2 * a ** 3 / 27 - a * b / 3 + c
    return DepressedCubic(p=p, q=q, shift=a / 3)


def cardano_pairs(p, q):
    """The three ``(u, v)`` pairs with ``u^3 + v^3 = -q`` and ``u*v = -p/3``.

    ``u^3`` is the larger-magnitude root of ``w^2 + q*w - p^3/27 = 0``;
    ``v`` is then fixed by the product condition rather than by a second
    cube root.
    """
    p, q = complex(p), complex(q)
    s = _sqrt(q * q / 4 + p ** 3 / 27)
    w1, w2 = -q / 2 + s, -q / 2 - s
    u3 = w1 if abs(w1) >= abs(w2) else w2
    if u3 == 0:
        # p = q = 0
        return [(0j, 0j)] * 3
    pairs = []
    for u in nth_roots(u3, 3):
        v = -p / (3 * u)
        pairs.append((u, v))
    return pairs


def solve_cubic(alpha, beta, gamma, delta):
    dep = depress_cubic(alpha, beta, gamma, delta)
    return _sort_roots([u + v - dep.shift for u, v in cardano_pairs(dep.p, dep.q)])


def _biquadratic(p, r):
    (y1, y2), _ = solve_quadratic(1, p, r)
    out = []
    for y in (y1, y2):
        s = _sqrt(y)
        out.extend([s, -s])
    return out


def quartic_work(alpha, beta, gamma, delta, epsilon):
    alpha = _require_leading(alpha, "not a quartic")
    a3, a2, a1, a0 = (complex(c) / alpha for c in (beta, gamma, delta, epsilon))
    p = a2 - 3 * a3 ** 2 / 8
    q = a1 - a3 * a2 / 2 + a3 ** 3 / 8
    r = a0 - a3 * a1 / 4 + a3 ** 2 * a2 / 16 - 3 * a3 ** 4 / 256
    shift = a3 / 4
    scale = max(1.0, abs(p) ** 1.5, abs(r) ** 0.75, abs(shift) ** 3)
    if abs(q) <= QUARTIC_Q_EPS * scale:
        return QuarticWork(p, q, r, shift, None, None, None)
    # q^2 = 8w(w^2 + p*w + p^2/4 - r)
    res = solve_cubic(8, 8 * p, 2 * p * p - 8 * r, -q * q)
    w0 = max(res, key=abs)
    zeta = _sqrt(2 * w0)
    eta = -q / (2 * zeta)
    return QuarticWork(p, q, r, shift, w0, zeta, eta)


def solve_quartic(alpha, beta, gamma, delta, epsilon):
    work = quartic_work(alpha, beta, gamma, delta, epsilon)
    if work.w0 is None:
        ws = _biquadratic(work.p, work.r)
    else:
        base = work.p / 2 + work.w0
        (a, b), _ = solve_quadratic(1, -work.zeta, base - work.eta)
        (c, d), _ = solve_quadratic(1, work.zeta, base + work.eta)
        ws = [a, b, c, d]
    return _sort_roots([w - work.shift for w in ws])


def solve_binomial(c, n):
    return _sort_roots(nth_roots(c, n))


def solve(coeffs):
    """Dispatch on degree; ``coeffs`` highest degree first, 2 to 5 of them."""
    coeffs = [complex(c) for c in coeffs]
    solvers = {2: solve_linear, 3: solve_quadratic, 4: solve_cubic, 5: solve_quartic}
    if len(coeffs) not in solvers:
        raise AlgebraError("only degrees 1 to 4 are supported")
    out = solvers[len(coeffs)](*coeffs)
    if len(coeffs) == 2:
        return [out]
    if len(coeffs) == 3:
        return list(out[0])
    return list(out)


def verify_roots(poly, roots):
    """Largest residual ``|poly(root)|`` and whether Viete's relations hold."""
    roots = [complex(r) for r in roots]
    if len(roots) != poly.degree:
        raise AlgebraError(f"expected {poly.degree} roots, got {len(roots)}")
    residual = max((abs(poly(r)) for r in roots), default=0.0)
    lead = poly.coeffs[-1]
    rebuilt = Poly.from_roots(roots, leading=lead).coeffs
    ok = True
    for got, want in zip(rebuilt, poly.coeffs):
        # compare e_k against the signed coefficient ratio, both divided by lead
        g, w = got / lead, want / lead
        if abs(g - w) > VIETE_RTOL * max(1.0, abs(w)):
            ok = False
    return RootCheck(max_residual=residual, viete_ok=ok)


def bisect_real_root(poly, lo, hi, tol=1e-12, max_iter=200):
    """A real root in ``[lo, hi]`` of a real polynomial that changes sign there."""
    if not poly.is_real():
        raise AlgebraError("bisection needs real coefficients")
    lo, hi = float(lo), float(hi)
    flo, fhi = poly(lo).real, poly(hi).real
    if flo == 0:
        return lo
    if fhi == 0:
        return hi
    if math.copysign(1, flo) == math.copysign(1, fhi):
        raise AlgebraError(f"no sign change on [{lo}, {hi}]")
    for _ in range(max_iter):
        mid = (lo + hi) / 2
        fm = poly(mid).real
        if fm == 0:
            return mid
        if math.copysign(1, fm) == math.copysign(1, flo):
            lo, flo = mid, fm
        else:
            hi = mid
        if hi - lo <= tol:
            break
    return (lo + hi) / 2
