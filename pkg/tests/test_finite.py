from pathlib import Path

import pytest

from algebra_workbench.errors import AlgebraError, TableParseError
from algebra_workbench.finite import (
    CayleyTable, FiniteMap, are_isomorphic, characteristic, check_associative,
    classify_magma, classify_map, find_neutral, find_total_order, format_table,
    is_isomorphism, parse_map, parse_ring, parse_table, residue_ring, ring_classify,
    solve_in_group, subgroups,
)

DATA = Path(__file__).parent / "data"


def zn(n):
    return CayleyTable.from_function(range(n), lambda a, b: (a + b) % n)


def test_parse_roundtrip():
    text = (DATA / "s3_table.tbl").read_text(encoding="utf-8")
    t = parse_table(text)
    assert t.n == 6
    assert format_table(t) == text
    assert parse_table(format_table(t)) == t


@pytest.mark.parametrize("text, line, column", [
    ("elements: a b\na b\nb\n", 3, None),
    ("elements: a b\na b\nb c\n", 3, 3),
    ("elements: a a\na a\na a\n", 1, 13),
    ("a b\n", 1, 1),
    ("elements: a b\na b\n", 2, None),
])
def test_parse_errors_carry_position(text, line, column):
    with pytest.raises(TableParseError) as info:
        parse_table(text)
    assert info.value.line == line
    if column is not None:
        assert info.value.column == column


def test_comments_and_blank_lines_ignored():
    t = parse_table("# header\nelements: e\n\ne  # only row\n")
    assert t.op("e", "e") == "e"


def test_parse_ring_file():
    add, mul = parse_ring((DATA / "z2_ring.txt").read_text())
    rep = ring_classify(add, mul)
    assert rep.is_field and rep.characteristic == 2


def test_neutral_detection():
    assert find_neutral(zn(4))["neutral"] == "0"
    # x * y = y: every element is a left identity, none is two-sided
    left_zero = CayleyTable.from_function("ab", lambda x, y: y)
    res = find_neutral(left_zero)
    assert res["neutral"] is None
    assert res["left_only"] == ["a", "b"]
    assert res["right_only"] == []


def test_non_associative_witness():
    t = parse_table((DATA / "not_semigroup.tbl").read_text())
    w = check_associative(t)
    assert w is not None
    x, y, z = w
    assert t.op(x, t.op(y, z)) != t.op(t.op(x, y), z)
    rep = classify_magma(t)
    assert rep.is_groupoid and not rep.is_semigroup and not rep.is_group


def test_monoid_that_is_not_group():
    t = CayleyTable.from_function(range(4), lambda a, b: (a * b) % 4)
    rep = classify_magma(t)
    assert rep.is_monoid and not rep.is_group
    assert rep.neutral == "1"
    assert set(rep.non_invertible) == {"0", "2"}


def test_s3_classification():
    t = parse_table((DATA / "s3_table.tbl").read_text(encoding="utf-8"))
    rep = classify_magma(t)
    assert rep.is_group and not rep.is_abelian
    assert rep.inverses["α3"] == "α4"
    assert rep.flags() == (True, True, True, True, False)


def test_solve_in_group():
    t = parse_table((DATA / "s3_table.tbl").read_text(encoding="utf-8"))
    for a in t.elements:
        for b in t.elements:
            sol = solve_in_group(t, a, b)
            assert t.op(a, sol["x"]) == b
            assert t.op(sol["y"], a) == b
    monoid = CayleyTable.from_function(range(4), lambda a, b: (a * b) % 4)
    with pytest.raises(AlgebraError, match="requires a group"):
        solve_in_group(monoid, "2", "0")


def test_subgroups_of_s3_and_z6():
    t = parse_table((DATA / "s3_table.tbl").read_text(encoding="utf-8"))
    subs = subgroups(t)
    assert [len(h) for h in subs] == [1, 2, 2, 2, 3, 6]
    assert ["α0", "α3", "α4"] in subs
    # cyclic group: one subgroup per divisor
    assert [len(h) for h in subgroups(zn(6))] == [1, 2, 3, 6]


def test_subgroup_bound():
    with pytest.raises(AlgebraError, match="n <= 12"):
        subgroups(zn(13))


def test_isomorphism_search():
    z4 = zn(4)
    klein = CayleyTable.from_function(range(4), lambda a, b: a ^ b)
    assert are_isomorphic(z4, klein) is None
    scrambled = z4.permuted([2, 0, 3, 1]).relabel(["p", "q", "r", "s"])
    f = are_isomorphic(z4, scrambled)
    assert f is not None and is_isomorphism(z4, scrambled, f)
    assert are_isomorphic(zn(3), zn(4)) is None


def test_is_isomorphism_rejects_non_bijection():
    z2 = zn(2)
    assert not is_isomorphism(z2, z2, {"0": "0", "1": "0"})
    assert not is_isomorphism(z2, z2, {"0": "1", "1": "0"})


def test_residue_rings():
    add, mul = residue_ring(5)
    rep = ring_classify(add, mul)
    assert rep.is_field and rep.is_integral and rep.characteristic == 5
    add, mul = residue_ring(4)
    rep = ring_classify(add, mul)
    assert rep.is_ring and not rep.is_integral and not rep.is_field
    assert ("2", "2") in rep.zero_divisors
    assert characteristic(add, "1") == 4
    with pytest.raises(AlgebraError):
        residue_ring(1)


def test_non_distributive_pair():
    add, _ = residue_ring(3)
    # max is not distributive over addition mod 3
    mul = CayleyTable.from_function(range(3), lambda a, b: max(a, b))
    rep = ring_classify(add, mul.relabel(add.elements))
    assert not rep.distributive and not rep.is_ring
    assert rep.distributive_witness is not None


def test_trivial_ring_is_not_field():
    add = CayleyTable(("0",), [[0]])
    rep = ring_classify(add, add)
    assert rep.is_ring and not rep.is_field and rep.characteristic == 1


def test_total_order_search():
    add, mul = residue_ring(2)
    assert find_total_order(add, mul) is None
    # a single element is trivially ordered
    z = CayleyTable(("0",), [[0]])
    assert find_total_order(z, z) == ["0"]
    add7, mul7 = residue_ring(7)
    with pytest.raises(AlgebraError, match="n <= 6"):
        find_total_order(add7, mul7)


def test_map_classification():
    fmap, dom, cod = parse_map((DATA / "square_map.txt").read_text())
    assert classify_map(fmap) == {"injective": False, "surjective": True, "bijective": False}
    assert classify_map(FiniteMap(2, 3, (0, 2))) == {
        "injective": True, "surjective": False, "bijective": False}
    assert classify_map(FiniteMap(3, 3, (2, 0, 1)))["bijective"]


def test_map_must_be_total():
    with pytest.raises(AlgebraError, match="not a mapping"):
        parse_map("domain: a b\ncodomain: x\na -> x\n")
    with pytest.raises(TableParseError):
        parse_map("domain: a\ncodomain: x\na -> y\n")
