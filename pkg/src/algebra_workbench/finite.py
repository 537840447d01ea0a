"""Finite magmas and rings given by composition (Cayley) tables.

Everything here works on element indices internally and reports element
names. Witnesses are always the lexicographically first by index, so every
analysis is deterministic.
"""

import itertools
import re
from collections import Counter
from dataclasses import dataclass, field

from .errors import AlgebraError, TableParseError

SUBGROUP_MAX_N = 12
ORDER_MAX_N = 6


@dataclass(frozen=True)
class CayleyTable:
    """A finite groupoid: entry ``table[i][j]`` is the index of ``elements[i] * elements[j]``."""

    elements: tuple
    table: tuple

    def __post_init__(self):
        elements = tuple(str(e) for e in self.elements)
        rows = tuple(tuple(int(v) for v in row) for row in self.table)
        n = len(elements)
        if n == 0:
            raise AlgebraError("a table needs at least one element")
        if len(set(elements)) != n:
            dup = next(e for e, c in Counter(elements).items() if c > 1)
            raise AlgebraError(f"duplicate element name {dup!r}")
        if len(rows) != n or any(len(row) != n for row in rows):
            raise AlgebraError(f"table must be {n}x{n}")
        for row in rows:
            for v in row:
                if not 0 <= v < n:
                    raise AlgebraError(f"table entry {v} is not an element index")
        object.__setattr__(self, "elements", elements)
        object.__setattr__(self, "table", rows)

    @classmethod
    def from_function(cls, elements, op):
        """Tabulate ``op`` over ``elements``; ``op`` must return members of ``elements``."""
        elements = list(elements)
        index = {e: i for i, e in enumerate(elements)}
        rows = []
        for x in elements:
            row = []
            for y in elements:
                z = op(x, y)
                if z not in index:
                    raise AlgebraError(f"{x!r} * {y!r} = {z!r} leaves the set")
                row.append(index[z])
            rows.append(row)
        return cls(tuple(str(e) for e in elements), rows)

    @property
    def n(self):
        return len(self.elements)

    def index(self, name):
        try:
            return self.elements.index(name)
        except ValueError:
            raise AlgebraError(f"unknown element {name!r}") from None

    def op(self, x, y):
        """Compose two elements given by name."""
        return self.elements[self.table[self.index(x)][self.index(y)]]

    def relabel(self, names):
        """Same table under new element names (``names[i]`` replaces ``elements[i]``)."""
        return CayleyTable(tuple(names), self.table)

    def permuted(self, order):
        """Reorder rows and columns: new element k is old element ``order[k]``."""
        pos = {old: new for new, old in enumerate(order)}
        rows = [[pos[self.table[order[i]][order[j]]] for j in range(self.n)]
                for i in range(self.n)]
        return CayleyTable(tuple(self.elements[i] for i in order), rows)


@dataclass(frozen=True)
class FiniteMap:
    domain_size: int
    codomain_size: int
    image: tuple

    def __post_init__(self):
        image = tuple(int(v) for v in self.image)
        if len(image) != self.domain_size:
            raise AlgebraError("image list must have one entry per domain element")
        for v in image:
            if not 0 <= v < self.codomain_size:
                raise AlgebraError(f"image index {v} outside the codomain")
        object.__setattr__(self, "image", image)


@dataclass(frozen=True)
class StructureReport:
    is_groupoid: bool
    is_semigroup: bool
    is_monoid: bool
    is_group: bool
    is_abelian: bool
    is_commutative: bool
    neutral: object = None
    non_associative_witness: object = None
    non_commutative_witness: object = None
    non_invertible: tuple = ()
    inverses: dict = field(default_factory=dict)

    def flags(self):
        return (self.is_groupoid, self.is_semigroup, self.is_monoid,
                self.is_group, self.is_abelian)


@dataclass(frozen=True)
class RingReport:
    additive_group: bool
    distributive: bool
    distributive_witness: object
    associative_mul: bool
    commutative_mul: bool
    zero: object
    unity: object
    zero_divisors: tuple
    units: tuple
    is_ring: bool
    is_integral: bool
    is_field: bool
    characteristic: object


# -- text format ---------------------------------------------------------

def _strip_comment(line):
    return line.split("#", 1)[0]


def _tokens(line):
    return [(m.group(0), m.start() + 1) for m in re.finditer(r"\S+", _strip_comment(line))]


def _parse_table_lines(lines, inherited=None):
    """Parse one table from ``(lineno, text)`` pairs with blank/comment lines already dropped."""
    if not lines:
        if inherited is None:
            raise TableParseError("empty table")
        raise TableParseError("table section has no rows")
    pos = 0
    lineno, text = lines[0]
    toks = _tokens(text)
    if toks and toks[0][0] == "elements:":
        names = toks[1:]
        pos = 1
    elif toks and toks[0][0].startswith("elements:") and len(toks[0][0]) > 9:
        first, col = toks[0]
        names = [(first[9:], col + 9)] + toks[1:]
        pos = 1
    elif inherited is not None:
        names = None
    else:
        raise TableParseError("expected 'elements:' header", lineno, 1)

    if names is not None:
        if not names:
            raise TableParseError("no element names after 'elements:'", lineno)
        seen = {}
        for name, col in names:
            if name in seen:
                raise TableParseError(f"duplicate element name {name!r}", lineno, col)
            seen[name] = len(seen)
        elements = [name for name, _ in names]
        if inherited is not None and elements != list(inherited):
            raise TableParseError("element list differs from the addition table", lineno)
    else:
        elements = list(inherited)

    index = {e: i for i, e in enumerate(elements)}
    n = len(elements)
    rows = lines[pos:]
    if len(rows) != n:
        where = rows[n][0] if len(rows) > n else (rows[-1][0] if rows else lineno)
        raise TableParseError(f"expected {n} rows, found {len(rows)}", where)
    grid = []
    for lineno, text in rows:
        toks = _tokens(text)
        if len(toks) != n:
            col = toks[n][1] if len(toks) > n else None
            raise TableParseError(f"expected {n} entries, found {len(toks)}", lineno, col)
        row = []
        for name, col in toks:
            if name not in index:
                raise TableParseError(f"unknown element {name!r}", lineno, col)
            row.append(index[name])
        grid.append(row)
    return CayleyTable(tuple(elements), grid)


def _content_lines(text):
    return [(i, line) for i, line in enumerate(text.splitlines(), start=1)
            if _strip_comment(line).strip()]


def parse_table(text):
    """Parse the ``elements:`` header plus n rows of n names."""
    return _parse_table_lines(_content_lines(text))


def parse_ring(text):
    """Parse a ring file: an ``add:`` section followed by a ``mul:`` section.

    The ``mul:`` section may omit its ``elements:`` line, in which case the
    addition table's element list is reused.
    """
    lines = _content_lines(text)
    sections = {}
    current = None
    for lineno, line in lines:
        head = _strip_comment(line).strip()
        if head in ("add:", "mul:"):
            if head in sections:
                raise TableParseError(f"duplicate section {head!r}", lineno, 1)
            if head == "mul:" and "add:" not in sections:
                raise TableParseError("'mul:' section before 'add:'", lineno, 1)
            current = head
            sections[head] = []
            continue
        if current is None:
            raise TableParseError("expected 'add:' section", lineno, 1)
        sections[current].append((lineno, line))
    if "add:" not in sections:
        raise TableParseError("missing 'add:' section")
    if "mul:" not in sections:
        raise TableParseError("missing 'mul:' section")
    add = _parse_table_lines(sections["add:"])
    mul = _parse_table_lines(sections["mul:"], inherited=add.elements)
    return add, mul


def format_table(t):
    lines = ["elements: " + " ".join(t.elements)]
    for row in t.table:
        lines.append(" ".join(t.elements[v] for v in row))
    return "\n".join(lines) + "\n"


def format_ring(add, mul):
    return "add:\n" + format_table(add) + "mul:\n" + format_table(mul)


def parse_map(text):
    """Parse a mapping file into ``(FiniteMap, domain names, codomain names)``.

    Format: a ``domain:`` line, a ``codomain:`` line, then one ``x -> y``
    line per domain element. Every domain element must be mapped exactly once.
    """
    lines = _content_lines(text)
    domain = codomain = None
    images = {}
    for lineno, line in lines:
        toks = _tokens(line)
        head = toks[0][0]
        if head == "domain:":
            domain = [t for t, _ in toks[1:]]
        elif head == "codomain:":
            codomain = [t for t, _ in toks[1:]]
        else:
            if domain is None or codomain is None:
                raise TableParseError("'domain:' and 'codomain:' must come first", lineno, 1)
            if len(toks) != 3 or toks[1][0] != "->":
                raise TableParseError("expected 'x -> y'", lineno, 1)
            (x, xcol), _, (y, ycol) = toks
            if x not in domain:
                raise TableParseError(f"{x!r} is not in the domain", lineno, xcol)
            if y not in codomain:
                raise TableParseError(f"{y!r} is not in the codomain", lineno, ycol)
            if x in images:
                raise TableParseError(f"{x!r} is mapped twice", lineno, xcol)
            images[x] = codomain.index(y)
    if domain is None or codomain is None:
        raise TableParseError("missing 'domain:' or 'codomain:' line")
    for part, names in (("domain", domain), ("codomain", codomain)):
        if not names or len(set(names)) != len(names):
            raise TableParseError(f"{part} must list distinct names")
    unmapped = [x for x in domain if x not in images]
    if unmapped:
        raise AlgebraError(f"not a mapping: no image for {', '.join(unmapped)}")
    fmap = FiniteMap(len(domain), len(codomain), [images[x] for x in domain])
    return fmap, domain, codomain


# -- mappings --------------------------------------------------------------

def classify_map(f):
    injective = len(set(f.image)) == len(f.image)
    surjective = set(f.image) == set(range(f.codomain_size))
    return {"injective": injective, "surjective": surjective,
            "bijective": injective and surjective}


# -- one operation ---------------------------------------------------------

def _neutral_index(t):
    m = t.table
    for e in range(t.n):
        if all(m[x][e] == x and m[e][x] == x for x in range(t.n)):
            return e
    return None


def find_neutral(t):
    """Two-sided neutral element plus the elements that are neutral on one side only."""
    m = t.table
    rng = range(t.n)
    right = [e for e in rng if all(m[x][e] == x for x in rng)]
    left = [e for e in rng if all(m[e][x] == x for x in rng)]
    both = [e for e in right if e in left]
    return {
        "neutral": t.elements[both[0]] if both else None,
        "right_only": [t.elements[e] for e in right if e not in both],
        "left_only": [t.elements[e] for e in left if e not in both],
    }


def _assoc_witness(m, n):
    for x in range(n):
        mx = m[x]
        for y in range(n):
            xy = mx[y]
            my = m[y]
            for z in range(n):
                if mx[my[z]] != m[xy][z]:
                    return x, y, z
    return None


def check_associative(t):
    w = _assoc_witness(t.table, t.n)
    return None if w is None else tuple(t.elements[i] for i in w)


def _inverse_indices(t, e):
    """Map each index to its two-sided inverse index (elements without one are omitted)."""
    m = t.table
    inv = {}
    for x in range(t.n):
        for y in range(t.n):
            if m[x][y] == e and m[y][x] == e:
                inv[x] = y
                break
    return inv


def classify_magma(t):
    m, n = t.table, t.n
    assoc = _assoc_witness(m, n)
    comm = next(((x, y) for x in range(n) for y in range(x + 1, n) if m[x][y] != m[y][x]), None)
    e = _neutral_index(t)
    is_semigroup = assoc is None
    is_monoid = is_semigroup and e is not None
    if e is not None:
        inv = _inverse_indices(t, e)
        non_inv = tuple(t.elements[x] for x in range(n) if x not in inv)
    else:
        inv = {}
        non_inv = t.elements
    is_group = is_monoid and not non_inv
    return StructureReport(
        is_groupoid=True,
        is_semigroup=is_semigroup,
        is_monoid=is_monoid,
        is_group=is_group,
        is_abelian=is_group and comm is None,
        is_commutative=comm is None,
        neutral=None if e is None else t.elements[e],
        non_associative_witness=None if assoc is None else tuple(t.elements[i] for i in assoc),
        non_commutative_witness=None if comm is None else tuple(t.elements[i] for i in comm),
        non_invertible=non_inv,
        inverses={t.elements[x]: t.elements[y] for x, y in inv.items()},
    )


def _require_group(t, what):
    rep = classify_magma(t)
    if not rep.is_group:
        raise AlgebraError(f"{what} requires a group")
    return rep


def solve_in_group(t, a, b):
    """Solve ``a * x = b`` and ``y * a = b``; returns ``{"x": ..., "y": ...}``."""
    rep = _require_group(t, "solving a * x = b")
    a_inv = rep.inverses[a]
    return {"x": t.op(a_inv, b), "y": t.op(b, a_inv)}


def _closure(t, seed, inv):
    m = t.table
    members = set(seed)
    frontier = list(members)
    while frontier:
        new = []
        for x in frontier:
            for cand in [inv[x]] + [m[x][y] for y in members] + [m[y][x] for y in members]:
                if cand not in members:
                    members.add(cand)
                    new.append(cand)
        frontier = new
    return frozenset(members)


def subgroups(t, max_n=SUBGROUP_MAX_N):
    """All subgroups of a group table, smallest first.

    Grows closures outward from the trivial subgroup: every subgroup is the
    closure of some smaller subgroup together with one extra element.
    """
    if t.n > max_n:
        raise AlgebraError(f"subgroup enumeration is limited to n <= {max_n} (got {t.n})")
    _require_group(t, "subgroup enumeration")
    e = _neutral_index(t)
    inv = _inverse_indices(t, e)
    found = {frozenset([e])}
    queue = [frozenset([e])]
    while queue:
        h = queue.pop()
        for g in range(t.n):
            if g in h:
                continue
            k = _closure(t, h | {g}, inv)
            if k not in found:
                found.add(k)
                queue.append(k)
    ordered = sorted(found, key=lambda s: (len(s), sorted(s)))
    return [[t.elements[i] for i in sorted(s)] for s in ordered]


def _power_shape(m, x):
    """Tail length and period of x, x*x, (x*x)*x, ...; an isomorphism invariant."""
    seen = {}
    cur, k = x, 0
    while cur not in seen:
        seen[cur] = k
        cur = m[cur][x]
        k += 1
    return seen[cur], k - seen[cur]


def _signatures(t):
    m, n = t.table, t.n
    e = _neutral_index(t)
    sigs = []
    for x in range(n):
        sigs.append((
            x == e,
            m[x][x] == x,
            _power_shape(m, x),
            sum(1 for y in range(n) if m[x][y] == y),
            sum(1 for y in range(n) if m[y][x] == y),
            sum(1 for y in range(n) for z in range(n) if m[y][z] == x),
        ))
    return sigs


def are_isomorphic(t1, t2):
    """Find a bijection f with f(x*y) = f(x)*f(y), or None.

    Backtracking over assignments; candidates are restricted to elements with
    the same invariant signature (neutrality, power cycle shape, fixed-point
    counts), and every partial assignment is checked on all assigned pairs.
    """
    if t1.n != t2.n:
        return None
    n = t1.n
    s1, s2 = _signatures(t1), _signatures(t2)
    if Counter(s1) != Counter(s2):
        return None
    m1, m2 = t1.table, t2.table
    cands = [[y for y in range(n) if s2[y] == s1[x]] for x in range(n)]
    order = sorted(range(n), key=lambda x: (len(cands[x]), x))
    f = [None] * n
    finv = [None] * n

    def consistent(x):
        # check every pair involving x against the other assigned elements
        for a in range(n):
            if f[a] is None:
                continue
            for p, q in ((x, a), (a, x)):
                c = m1[p][q]
                target = m2[f[p]][f[q]]
                if f[c] is not None:
                    if f[c] != target:
                        return False
                elif finv[target] is not None:
                    return False
        return True

    def search(k):
        if k == n:
            return True
        x = order[k]
        for y in cands[x]:
            if finv[y] is not None:
                continue
            f[x], finv[y] = y, x
            if consistent(x) and search(k + 1):
                return True
            f[x], finv[y] = None, None
        return False

    if not search(0):
        return None
    return {t1.elements[x]: t2.elements[f[x]] for x in range(n)}


def is_isomorphism(t1, t2, mapping):
    """Check that ``mapping`` (name -> name) is a bijection preserving the composition."""
    if t1.n != t2.n or set(mapping) != set(t1.elements):
        return False
    if set(mapping.values()) != set(t2.elements):
        return False
    return all(mapping[t1.op(x, y)] == t2.op(mapping[x], mapping[y])
               for x in t1.elements for y in t1.elements)


# -- two operations ------------------------------------------------------

def residue_ring(m):
    """Addition and multiplication tables of Z_m over elements "0".."m-1"."""
    if not isinstance(m, int) or m < 2:
        raise AlgebraError("modulus must be an integer >= 2")
    names = tuple(str(i) for i in range(m))
    add = CayleyTable(names, [[(i + j) % m for j in range(m)] for i in range(m)])
    mul = CayleyTable(names, [[(i * j) % m for j in range(m)] for i in range(m)])
    return add, mul


def _check_same_elements(add, mul):
    if add.elements != mul.elements:
        raise AlgebraError("addition and multiplication tables have different element lists")


def _characteristic_idx(add, zero, one):
    acc, p = one, 1
    while acc != zero:
        acc = add.table[acc][one]
        p += 1
        if p > add.n:
            raise AlgebraError("repeated sums of the unity never reach zero")
    return p


def characteristic(add, unity):
    """Smallest p >= 1 such that adding the unity to itself p times gives zero."""
    zero = _neutral_index(add)
    if zero is None:
        raise AlgebraError("addition table has no zero element")
    return _characteristic_idx(add, zero, add.index(unity))


def ring_classify(add, mul):
    _check_same_elements(add, mul)
    n = add.n
    A, M = add.table, mul.table
    add_rep = classify_magma(add)
    additive_group = add_rep.is_abelian

    dist_w = None
    for x in range(n):
        for y in range(n):
            for z in range(n):
                if M[x][A[y][z]] != A[M[x][y]][M[x][z]] or M[A[y][z]][x] != A[M[y][x]][M[z][x]]:
                    dist_w = (x, y, z)
                    break
            if dist_w:
                break
        if dist_w:
            break
    distributive = dist_w is None
    is_ring = additive_group and distributive

    mul_rep = classify_magma(mul)
    zero = _neutral_index(add) if additive_group else None
    one = _neutral_index(mul)

    zero_divisors = ()
    units = ()
    if zero is not None:
        zero_divisors = tuple((add.elements[x], add.elements[y])
                              for x in range(n) for y in range(n)
                              if x != zero and y != zero and M[x][y] == zero)
    if one is not None:
        units = tuple(add.elements[x] for x in range(n)
                      if any(M[x][y] == one and M[y][x] == one for y in range(n)))

    nontrivial_unital = is_ring and one is not None and one != zero
    assoc_comm = mul_rep.is_semigroup and mul_rep.is_commutative
    is_integral = nontrivial_unital and assoc_comm and not zero_divisors
    is_field = (nontrivial_unital and assoc_comm
                and all(add.elements[x] in units for x in range(n) if x != zero))

    char = None
    if is_ring and one is not None:
        char = _characteristic_idx(add, zero, one)

    return RingReport(
        additive_group=additive_group,
        distributive=distributive,
        distributive_witness=None if dist_w is None else tuple(add.elements[i] for i in dist_w),
        associative_mul=mul_rep.is_semigroup,
        commutative_mul=mul_rep.is_commutative,
        zero=None if zero is None else add.elements[zero],
        unity=None if one is None else add.elements[one],
        zero_divisors=zero_divisors,
        units=units,
        is_ring=is_ring,
        is_integral=is_integral,
        is_field=is_field,
        characteristic=char,
    )


def find_total_order(add, mul):
    """Search every chain for one compatible with both operations.

    A chain fixes a total order, so reflexivity, transitivity, antisymmetry
    and comparability hold automatically; only ``x <= y => x+z <= y+z`` and
    ``0 <= x, 0 <= y => 0 <= xy`` are tested. Returns the first passing chain
    in lexicographic order of index permutations, or None.
    """
    _check_same_elements(add, mul)
    n = add.n
    if n > ORDER_MAX_N:
        raise AlgebraError(f"order search is limited to n <= {ORDER_MAX_N} (got {n})")
    zero = _neutral_index(add)
    if zero is None:
        raise AlgebraError("addition table has no zero element")
    A, M = add.table, mul.table
    for chain in itertools.permutations(range(n)):
        rank = [0] * n
        for r, x in enumerate(chain):
            rank[x] = r
        ok = all(rank[A[x][z]] <= rank[A[y][z]]
                 for x in range(n) for y in range(n) if rank[x] <= rank[y]
                 for z in range(n))
        if ok:
            nonneg = [x for x in range(n) if rank[zero] <= rank[x]]
            ok = all(rank[zero] <= rank[M[x][y]] for x in nonneg for y in nonneg)
        if ok:
            return [add.elements[x] for x in chain]
    return None
