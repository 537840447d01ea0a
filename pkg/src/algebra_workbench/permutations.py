"""Permutations of {1..n} composed left to right.

The product ``a * b`` applies ``a`` first and then ``b``: ``(a*b)(i) = b(a(i))``.
All input and output is 1-indexed.
"""

import itertools
import re
from dataclasses import dataclass

from .errors import AlgebraError
from .finite import CayleyTable

MAX_TABLE_DEGREE = 5

# Names of the S_3 elements, in lexicographic order of the bottom row.
S3_NAMES = ("α0", "α1", "α2", "α3", "α4", "α5")


@dataclass(frozen=True)
class Permutation:
    """``image[i]`` is where ``i + 1`` goes."""

    image: tuple

    def __post_init__(self):
        image = tuple(int(v) for v in self.image)
        if sorted(image) != list(range(1, len(image) + 1)):
            raise AlgebraError(f"{image} is not a permutation of 1..{len(image)}")
        object.__setattr__(self, "image", image)

    @property
    def n(self):
        return len(self.image)

    @classmethod
    def identity(cls, n):
        return cls(tuple(range(1, n + 1)))

    def __call__(self, i):
        return self.image[i - 1]

    def __mul__(self, other):
        return perm_compose(self, other)

    def inverse(self):
        return perm_inverse(self)

    def fixes(self, point):
        return self.image[point - 1] == point

    def __str__(self):
        return format_perm(self)


def perm_from_rows(top, bottom):
    """The permutation sending ``top[k]`` to ``bottom[k]``; column order is irrelevant."""
    top, bottom = list(top), list(bottom)
    n = len(top)
    expected = list(range(1, n + 1))
    if len(bottom) != n or sorted(top) != expected or sorted(bottom) != expected:
        raise AlgebraError("both rows must be permutations of 1..n of the same length")
    image = [0] * n
    for src, dst in zip(top, bottom):
        image[src - 1] = dst
    return Permutation(tuple(image))


def perm_compose(a, b):
    if a.n != b.n:
        raise AlgebraError(f"degree mismatch: {a.n} vs {b.n}")
    return Permutation(tuple(b.image[a.image[i] - 1] for i in range(a.n)))


def perm_inverse(a):
    image = [0] * a.n
    for i, j in enumerate(a.image, start=1):
        image[j - 1] = i
    return Permutation(tuple(image))


_TWO_ROW = re.compile(r"^\(\s*([\d\s]*?)\s*/\s*([\d\s]*?)\s*\)$")


def parse_perm(text):
    """Parse the two-row form ``"(1 2 3 / 2 1 3)"``."""
    m = _TWO_ROW.match(text.strip())
    if not m:
        raise AlgebraError(f"expected two-row form like '(1 2 3 / 2 1 3)', got {text!r}")
    top = [int(t) for t in m.group(1).split()]
    bottom = [int(t) for t in m.group(2).split()]
    return perm_from_rows(top, bottom)


def format_perm(a):
    top = " ".join(str(i) for i in range(1, a.n + 1))
    bottom = " ".join(str(i) for i in a.image)
    return f"({top} / {bottom})"


def all_permutations(n):
    """S_n in lexicographic order of the bottom row."""
    return [Permutation(p) for p in itertools.permutations(range(1, n + 1))]


def element_name(a):
    """Table name of a permutation: α0..α5 for n = 3, else the bottom row digits."""
    if a.n == 3:
        return S3_NAMES[all_permutations(3).index(a)]
    return "".join(str(i) for i in a.image)


def symmetric_group_table(n):
    """Cayley table of S_n (1 <= n <= 5) in lexicographic order.

    For n = 3 that order is identity, (1 3 2), (2 1 3), (2 3 1), (3 1 2),
    (3 2 1) as bottom rows, named α0..α5.
    """
    if not isinstance(n, int) or not 1 <= n <= MAX_TABLE_DEGREE:
        raise AlgebraError(f"degree must be between 1 and {MAX_TABLE_DEGREE}")
    perms = all_permutations(n)
    index = {p: i for i, p in enumerate(perms)}
    rows = [[index[a * b] for b in perms] for a in perms]
    return CayleyTable(tuple(element_name(p) for p in perms), rows)


def stabilizer(n, fixed):
    """All permutations of degree n leaving every point of ``fixed`` in place."""
    fixed = set(fixed)
    for pt in fixed:
        if not 1 <= pt <= n:
            raise AlgebraError(f"point {pt} is outside 1..{n}")
    return [p for p in all_permutations(n) if all(p.fixes(pt) for pt in fixed)]


# -- motions of an equilateral triangle ------------------------------------

TRIANGLE_NAMES = ("β0", "β1", "β2", "β3", "β4", "β5")

# Each motion as a map of the vertices A, B, C: rest, the reflections in the
# bisectors at A, B and C, then the two rotations.
TRIANGLE_MOTIONS = {
    "β0": {"A": "A", "B": "B", "C": "C"},
    "β1": {"A": "A", "B": "C", "C": "B"},
    "β2": {"A": "C", "B": "B", "C": "A"},
    "β3": {"A": "B", "B": "A", "C": "C"},
    "β4": {"A": "C", "B": "A", "C": "B"},
    "β5": {"A": "B", "B": "C", "C": "A"},
}

# Correspondence between the S_3 names and the motions.
S3_TO_TRIANGLE = {"α0": "β0", "α1": "β1", "α2": "β3", "α3": "β4", "α4": "β5", "α5": "β2"}


def triangle_motion_product(first, second):
    """The motion obtained by performing ``first`` and then ``second``."""
    m1, m2 = TRIANGLE_MOTIONS[first], TRIANGLE_MOTIONS[second]
    combined = {v: m2[m1[v]] for v in "ABC"}
    for name, motion in TRIANGLE_MOTIONS.items():
        if motion == combined:
            return name
    raise AssertionError("motions are closed under composition")


def triangle_group():
    """The motion table in its printed layout, plus the correspondence with S_3.

    In the printed layout the cell in row ``y`` and column ``x`` holds the
    motion "perform x, then y". Read as a Cayley table (row times column)
    this groupoid is isomorphic to ``symmetric_group_table(3)`` via
    ``S3_TO_TRIANGLE``.
    """
    names = TRIANGLE_NAMES
    rows = [[names.index(triangle_motion_product(x, y)) for x in names] for y in names]
    return CayleyTable(names, rows), dict(S3_TO_TRIANGLE)
