from fractions import Fraction
from pathlib import Path

import pytest

from algebra_workbench.classical import (
    LinearSystem, babylonian_diff_product, babylonian_sum_of_squares, babylonian_sum_product,
    eliminate, false_position, format_columns, parse_system,
)
from algebra_workbench.errors import AlgebraError

DATA = Path(__file__).parent / "data"
F = Fraction


def test_false_position():
    r = false_position(F(1, 4), 15)
    assert (r.trial, r.trial_value, r.ratio, r.scaled) == (4, 5, 3, 12)
    assert false_position(0, 7).scaled == 7
    assert false_position(F(1, 2), 9).scaled == 6
    with pytest.raises(AlgebraError, match="degenerate"):
        false_position(-1, 3)


def test_sum_product():
    p = babylonian_sum_product(5, 6)
    assert p.exact and p.rational == (3, 2)
    p = babylonian_sum_product(2, 1)
    assert p.rational == (1, 1)
    p = babylonian_sum_product(0, 1)
    assert not p.exact and p.rational is None
    assert abs(p.x - 1j) < 1e-15 and abs(p.y + 1j) < 1e-15


def test_diff_product():
    assert babylonian_diff_product(1, 6).rational == (3, 2)
    assert babylonian_diff_product(0, 4).rational == (2, 2)
    assert babylonian_diff_product(3, 0).rational == (3, 0)


def test_sum_of_squares():
    assert babylonian_sum_of_squares("plus", 7, 25).rational == (4, 3)
    assert babylonian_sum_of_squares("minus", 1, 25).rational == (4, 3)
    assert babylonian_sum_of_squares("plus", 2, 2).rational == (1, 1)
    with pytest.raises(AlgebraError):
        babylonian_sum_of_squares("times", 1, 1)


def test_sum_of_squares_without_real_solution():
    # b/2 < (a/2)^2: no real pair, complex values still satisfy the system
    p = babylonian_sum_of_squares("plus", 4, 2)
    assert not p.exact
    assert abs(p.x + p.y - 4) < 1e-12
    assert abs(p.x ** 2 + p.y ** 2 - 2) < 1e-12


def test_irrational_pair_is_approximate():
    p = babylonian_sum_product(2, -1)
    assert not p.exact
    assert abs(p.x + p.y - 2) < 1e-12 and abs(p.x * p.y + 1) < 1e-12


def test_elimination_unique():
    sys_ = parse_system((DATA / "unique.sys").read_text())
    res = eliminate(sys_)
    assert res.kind == "unique" and res.rank == 3
    assert res.solution == [3, 2, 1]
    assert sys_.satisfied_by(res.solution)


def test_elimination_other_outcomes():
    res = eliminate(parse_system((DATA / "inconsistent.sys").read_text()))
    assert res.kind == "inconsistent" and res.solution is None
    res = eliminate(parse_system((DATA / "underdetermined.sys").read_text()))
    assert res.kind == "underdetermined" and res.rank == 2


def test_elimination_needs_interchange():
    s = LinearSystem([[0, 1], [1, 0]], [5, 7])
    assert eliminate(s).solution == [7, 5]


def test_elimination_fractions():
    s = LinearSystem([[3, 1], [1, 2]], [1, 0])
    assert eliminate(s).solution == [F(2, 5), F(-1, 5)]


def test_wide_and_tall_systems():
    assert eliminate(LinearSystem([[1, 1, 1]], [1])).kind == "underdetermined"
    tall = LinearSystem([[1], [2], [3]], [1, 2, 3])
    assert eliminate(tall).solution == [1]
    assert eliminate(LinearSystem([[1], [1]], [1, 2])).kind == "inconsistent"


def test_system_parsing_errors():
    for bad in ("", "1 2 3\n", "1 2 | 3 | 4\n", "1 x | 2\n", "1 2 | 3\n1 | 2\n"):
        with pytest.raises(AlgebraError):
            parse_system(bad)


def test_column_layout():
    s = LinearSystem([[1, 2], [3, 4]], [5, 6])
    assert format_columns(s) == "1 3\n2 4\n5 6\n"
