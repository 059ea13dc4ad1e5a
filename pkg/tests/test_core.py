"""Square/PartialSquare model: counting, validation, isotopes, pasting."""

import pytest
from hypothesis import given, settings, strategies as st

from quasicomm.core import (
    PartialSquare,
    Square,
    apply_row_isotope,
    check,
    count_commuting,
    is_orthogonal,
    is_self_orthogonal,
    paste,
    square_from_text,
    validate,
)
from quasicomm.errors import ValidationError
from quasicomm.generators import anti_commutative, commutative
from quasicomm.holes import anti_commutative_hole, commutative_hole
from quasicomm.perms import Permutation, random_derangement
from quasicomm.synthesis import witness
from quasicomm.tables import base_square

Z3 = Square([[ (i + j) % 3 for j in range(3)] for i in range(3)])
ANTI3 = Square([[0, 1, 2], [2, 0, 1], [1, 2, 0]])


def test_count_commutative_z3():
    assert count_commuting(Z3) == 9


def test_count_anti_order_3():
    assert count_commuting(ANTI3) == 3


def test_count_base_5():
    assert count_commuting(base_square(5)) == 19


def test_count_partial_skips_hole():
    hole = anti_commutative_hole(12, 6)
    # an anti-commutative hole square commutes only on the visible diagonal
    assert count_commuting(hole) == 6


def test_validate_reports_coordinates():
    report = validate(Square([[0, 0, 1], [1, 2, 0], [2, 1, 2]]))
    assert report
    assert any("row 0" in line for line in report)


def test_validate_ok_is_empty():
    assert validate(Z3) == []


def test_check_raises_on_bad_column():
    cells = [[0, 1, 2], [1, 2, 0], [0, 2, 1]]
    with pytest.raises(ValidationError):
        check(Square(cells))


def test_partial_square_hole_must_be_square_block():
    cells = [[0, 1, None], [1, None, 0], [None, 0, 1]]
    with pytest.raises(ValidationError):
        check(PartialSquare(cells, 1))


def test_hole_symbols_only_outside_hole_rows():
    # a hole symbol appearing inside a hole row breaks the hole condition
    hole = commutative_hole(8, 2)
    grid = [list(r) for r in hole.cells]
    row = grid[6]
    # overwrite a filled cell in a hole row with a hole symbol
    swap_col = next(c for c in range(6) if row[c] is not None)
    row[swap_col] = 7
    assert validate(PartialSquare(grid, 2))


def test_text_round_trip_full():
    text = base_square(7).to_text()
    assert square_from_text(text) == base_square(7)
    assert text.splitlines()[0] == "7"


def test_text_round_trip_partial():
    hole = commutative_hole(9, 3)
    back = square_from_text(hole.to_text())
    assert isinstance(back, PartialSquare)
    assert back.hole_size == 3
    assert back == hole


def test_text_rejects_garbage():
    with pytest.raises(ValidationError):
        square_from_text("not a square")
    with pytest.raises(ValidationError):
        square_from_text("2\n0 1\n")


def test_isotope_swap_rows_of_z3():
    # swapping two rows of the commutative table keeps only the forced
    # count 3: order 3 attains nothing between 3 and 9
    swapped = apply_row_isotope(Z3, Permutation([1, 0, 2]))
    assert count_commuting(swapped) == 3


def test_isotope_identity():
    alpha = Permutation.identity(3)
    assert apply_row_isotope(Z3, alpha) == Z3


@settings(max_examples=40, deadline=None)
@given(st.integers(4, 9), st.integers(0, 2 ** 30))
def test_isotope_round_trip(n, seed):
    alpha = random_derangement(range(n), seed=seed)
    sq = commutative(n)
    back = apply_row_isotope(apply_row_isotope(sq, alpha), alpha.inverse())
    assert back == sq


def test_paste_counts_add_small():
    outer = anti_commutative_hole(7, 3)  # count 4
    inner = commutative(3)  # count 9
    merged = paste(outer, inner)
    assert count_commuting(merged) == 13


def test_paste_counts_add_symmetric():
    outer = commutative_hole(8, 4)  # count 48
    inner = witness(4, 6).square
    assert count_commuting(paste(outer, inner)) == 54


def test_paste_order_one_hole():
    outer = commutative_hole(3, 1)
    inner = Square([[0]])
    merged = paste(outer, inner)
    assert count_commuting(merged) == count_commuting(outer) + 1


def test_paste_size_mismatch():
    with pytest.raises(ValidationError):
        paste(commutative_hole(8, 4), commutative(3))


def test_self_orthogonal_example():
    sq = Square([[(2 * i - j) % 5 for j in range(5)] for i in range(5)])
    assert is_self_orthogonal(sq)
    # a self-orthogonal square is anti-commutative
    assert count_commuting(sq) == 5


def test_orthogonal_basics():
    a = Square([[(i + j) % 3 for j in range(3)] for i in range(3)])
    b = Square([[(i + 2 * j) % 3 for j in range(3)] for i in range(3)])
    assert is_orthogonal(a, b)
    assert not is_orthogonal(a, a)
    assert is_orthogonal(Square([[0]]), Square([[0]]))


def test_transpose_preserves_count():
    for n in (4, 5, 6, 7):
        sq = anti_commutative(n) if n != 2 else commutative(n)
        assert count_commuting(sq.transpose()) == count_commuting(sq)


@settings(max_examples=30, deadline=None)
@given(st.integers(1, 12))
def test_count_parity_and_bounds(n):
    sq = commutative(n)
    c = count_commuting(sq)
    assert c % 2 == n % 2
    assert n <= c <= n * n
