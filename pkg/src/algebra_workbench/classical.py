"""Historical recipes: false position, the Babylonian sum/product rules and
table elimination.

Everything runs over :class:`fractions.Fraction`. The Babylonian recipes
need a square root; when the radicand is a rational square the results are
exact and ``exact`` is set, otherwise they are complex floats. Negative
intermediate values are allowed throughout.
"""

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import AlgebraError
from .exact import is_square_rational, nth_roots, parse_rational


@dataclass(frozen=True)
class FalsePosition:
    trial: Fraction
    trial_value: Fraction  # trial * (1 + coeff)
    ratio: Fraction  # b / trial_value
    scaled: Fraction  # trial * ratio, the answer


def false_position(coeff, b):
    """Solve ``x + coeff*x = b`` by scaling a convenient trial value.

    The trial is the denominator of ``coeff`` so that ``coeff*trial`` is whole.
    """
    coeff, b = Fraction(coeff), Fraction(b)
    if 1 + coeff == 0:
        raise AlgebraError("degenerate: 1 + coeff = 0")
    trial = Fraction(coeff.denominator)
    value = trial * (1 + coeff)
    ratio = b / value
    return FalsePosition(trial=trial, trial_value=value, ratio=ratio, scaled=trial * ratio)


@dataclass(frozen=True)
class RootPair:
    x: complex
    y: complex
    exact: bool
    rational: tuple = None  # (x, y) as Fractions when exact


def _sqrt_rational(r):
    """Square root of a rational: (Fraction, True) when exact, else (complex, False)."""
    root = is_square_rational(r)
    if root is not None:
        return root, True
    return nth_roots(complex(float(r)), 2)[0], False


def _pair(x, y, exact):
    if exact:
        return RootPair(complex(x), complex(y), True, (x, y))
    return RootPair(complex(x), complex(y), False, None)


def babylonian_sum_product(a, b):
    """``x + y = a``, ``x*y = b``."""
    a, b = Fraction(a), Fraction(b)
    half = a / 2
    s, exact = _sqrt_rational(half * half - b)
    return _pair(half + s, half - s, exact)


def babylonian_diff_product(a, b):
    """``x - y = a``, ``x*y = b``."""
    a, b = Fraction(a), Fraction(b)
    half = a / 2
    s, exact = _sqrt_rational(half * half + b)
    return _pair(s + half, s - half, exact)


def babylonian_sum_of_squares(sign, a, b):
    """``x + y = a`` (sign "plus") or ``x - y = a`` (sign "minus"), with ``x^2 + y^2 = b``.

    No realness condition is imposed; when ``b/2 < (a/2)^2`` in the plus case
    the outputs are complex.
    """
    a, b = Fraction(a), Fraction(b)
    half = a / 2
    if sign == "plus":
        s, exact = _sqrt_rational(b / 2 - half * half)
        return _pair(half + s, half - s, exact)
    if sign == "minus":
        # x = s + a/2, y = s - a/2 with s^2 = b/2 - (a/2)^2
        s, exact = _sqrt_rational(b / 2 - half * half)
        return _pair(s + half, s - half, exact)
    raise AlgebraError(f"sign must be 'plus' or 'minus', got {sign!r}")


# -- elimination -----------------------------------------------------------

@dataclass(frozen=True)
class LinearSystem:
    a: tuple
    b: tuple

    def __post_init__(self):
        a = tuple(tuple(Fraction(v) for v in row) for row in self.a)
        b = tuple(Fraction(v) for v in self.b)
        if len(a) != len(b):
            raise AlgebraError("number of rows and constants differ")
        if a and any(len(row) != len(a[0]) for row in a):
            raise AlgebraError("rows have different lengths")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)

    @property
    def m(self):
        return len(self.a)

    @property
    def n(self):
        return len(self.a[0]) if self.a else 0

    def satisfied_by(self, x):
        return all(sum(c * v for c, v in zip(row, x)) == rhs for row, rhs in zip(self.a, self.b))


@dataclass(frozen=True)
class EliminationResult:
    kind: str  # "unique", "inconsistent" or "underdetermined"
    solution: list = field(default=None)
    rank: int = 0


def eliminate(system):
    """Gauss-Jordan elimination using only row sums, scaling and interchange.

    The pivot is the first row (from the current one down) with a nonzero
    entry in the column.
    """
    if system.m == 0 or system.n == 0:
        raise AlgebraError("empty system")
    rows = [list(r) + [c] for r, c in zip(system.a, system.b)]
    m, n = system.m, system.n
    rank = 0
    pivots = []
    for col in range(n):
        src = next((i for i in range(rank, m) if rows[i][col] != 0), None)
        if src is None:
            continue
        rows[rank], rows[src] = rows[src], rows[rank]
        piv = rows[rank][col]
        rows[rank] = [v / piv for v in rows[rank]]
        for i in range(m):
            if i != rank and rows[i][col] != 0:
                f = rows[i][col]
                rows[i] = [v - f * w for v, w in zip(rows[i], rows[rank])]
        pivots.append(col)
        rank += 1
        if rank == m:
            break
    if any(all(v == 0 for v in row[:n]) and row[n] != 0 for row in rows):
        return EliminationResult("inconsistent", None, rank)
    if rank < n:
        return EliminationResult("underdetermined", None, rank)
    solution = [Fraction(0)] * n
    for i, col in enumerate(pivots):
        solution[col] = rows[i][n]
    return EliminationResult("unique", solution, rank)


def parse_system(text):
    """One equation per line: coefficients, then ``|``, then the constant. ``#`` starts a comment."""
    a, b = [], []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.count("|") != 1:
            raise AlgebraError(f"line {lineno}: expected 'coefficients | constant'")
        left, right = line.split("|")
        try:
            a.append([parse_rational(t) for t in left.split()])
            b.append(parse_rational(right))
        except AlgebraError as exc:
            raise AlgebraError(f"line {lineno}: {exc}") from None
    if not a:
        raise AlgebraError("empty system")
    return LinearSystem(a, b)


def format_columns(system):
    """The system written column-wise, one equation per column, constants in the last row."""
    cols = [[str(v) for v in row] + [str(c)] for row, c in zip(system.a, system.b)]
    width = max(len(s) for col in cols for s in col)
    lines = []
    for k in range(system.n + 1):
        lines.append(" ".join(col[k].rjust(width) for col in cols))
    return "\n".join(lines) + "\n"
