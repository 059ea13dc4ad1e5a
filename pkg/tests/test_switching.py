"""Row cycles and cycle switching: partition structure, the involution,
planted cycles in symmetric squares, and the high-count band."""

import pytest

from quasicomm.core import Square, count_commuting, check
from quasicomm.errors import ConstructionError
from quasicomm.generators import commutative
from quasicomm.holes import commutative_hole
from quasicomm.switching import (
    RowCycle,
    apply_recipe,
    cycle_through_column,
    high_counts,
    row_cycles,
    switch,
    symmetric_with_cycle,
)
from quasicomm.tables import SWITCH_RECIPES, base_count, base_square


def test_row_cycles_of_cyclic_squares():
    # rows 0,1 of Z_4: x -> x + 1 is a single 4-cycle
    cycles = row_cycles(commutative(4), 0, 1)
    assert len(cycles) == 1 and len(cycles[0]) == 4

    # rows 0,3 of Z_6: x -> x + 3 is three 2-cycles
    cycles = row_cycles(commutative(6), 0, 3)
    assert len(cycles) == 3
    assert all(len(c) == 2 for c in cycles)


def test_row_cycles_partition_columns():
    sq = base_square(7)
    for i in range(7):
        for j in range(i + 1, 7):
            cycles = row_cycles(sq, i, j)
            cols = [c for cyc in cycles for c in cyc.columns]
            assert sorted(cols) == list(range(7))
            for cyc in cycles:
                top = {sq.cells[i][c] for c in cyc.columns}
                bot = {sq.cells[j][c] for c in cyc.columns}
                assert top == bot == set(cyc.symbols)


def test_row_cycles_refuse_hole_rows():
    sq = commutative_hole(8, 2)
    with pytest.raises(ConstructionError):
        row_cycles(sq, 5, 6)  # row 6 is inside the hole
    row_cycles(sq, 4, 5)  # last two base rows are fine


def test_symmetric_cycles_meet_both_rows_or_neither():
    for n in (6, 7, 9):
        sq = commutative(n)
        for i in range(n):
            for j in range(i + 1, n):
                for cyc in row_cycles(sq, i, j):
                    inside = {i, j} & set(cyc.columns)
                    assert inside in (set(), {i, j})


def test_switch_reaches_the_published_count():
    sq = base_square(5)
    assert count_commuting(sq) == 19
    switched = switch(sq, cycle_through_column(sq, 1, 2, 0))
    assert count_commuting(switched) == 15


def test_switch_is_an_involution():
    sq = base_square(6)
    cyc = cycle_through_column(sq, 2, 4, 1)
    again = switch(switch(sq, cyc), cyc)
    assert again.cells == sq.cells


def test_switching_a_full_cycle_swaps_the_rows():
    sq = commutative(5)
    cycles = row_cycles(sq, 0, 2)
    assert len(cycles) == 1 and len(cycles[0]) == 5
    swapped = switch(sq, cycles[0])
    assert swapped.cells[0] == sq.cells[2]
    assert swapped.cells[2] == sq.cells[0]


def test_recipes_reach_their_table_counts():
    for (n, k), recipe in SWITCH_RECIPES.items():
        out = apply_recipe(base_square(n), recipe)
        check(out)
        assert count_commuting(out) == k, (n, k)


def test_symmetric_with_cycle_shapes():
    sq, cyc = symmetric_with_cycle(8, "through", 3)
    assert all(sq.cells[i][j] == sq.cells[j][i] for i in range(8)
               for j in range(8))
    assert len(cyc) == 3 and {0, 1} <= set(cyc.columns)
    assert count_commuting(switch(sq, cyc)) == 64 - 12 + 6

    sq, cyc = symmetric_with_cycle(8, "off", 2)
    assert len(cyc) == 2 and not {0, 1} & set(cyc.columns)
    assert count_commuting(switch(sq, cyc)) == 64 - 8


def test_symmetric_with_cycle_rejects_bad_lengths():
    with pytest.raises(ConstructionError):
        symmetric_with_cycle(8, "through", 2)
    with pytest.raises(ConstructionError):
        symmetric_with_cycle(8, "through", 7)
    with pytest.raises(ConstructionError):
        symmetric_with_cycle(8, "off", 6)
    with pytest.raises(ConstructionError):
        symmetric_with_cycle(8, "sideways", 3)


def test_high_counts_band():
    for n, target in [(6, 30), (6, 28), (6, 24), (10, 72)]:
        sq = high_counts(n, target)
        check(sq)
        assert count_commuting(sq) == target


def test_high_counts_rejections():
    with pytest.raises(ConstructionError):
        high_counts(6, 22)  # a = 7 > 2n - 6
    with pytest.raises(ConstructionError):
        high_counts(6, 32)  # a = 2 < 3
    with pytest.raises(ConstructionError):
        high_counts(6, 29)  # odd gap


def test_switch_case_analysis_on_a_symmetric_square():
    # disjoint column set drops the count by 4L; a cycle containing both
    # rows drops it by 4L - 6 when L >= 3 and keeps the square symmetric
    # when L == 2
    for n in (6, 7):
        sq = commutative(n)
        full = n * n
        for i in range(n):
            for j in range(i + 1, n):
                for cyc in row_cycles(sq, i, j):
                    L = len(cyc)
                    out = switch(sq, cyc)
                    got = count_commuting(out)
                    if not {i, j} & set(cyc.columns):
                        assert got == full - 4 * L
                    elif L == 2:
                        assert all(
                            out.cells[a][b] == out.cells[b][a]
                            for a in range(n) for b in range(n)
                        )
                    else:
                        assert got == full - 4 * L + 6


def test_row_cycle_dataclass_is_hashable():
    cyc = RowCycle(i=0, j=1, symbols=(1, 0), columns=(0, 1))
    assert len(cyc) == 2
    assert hash(cyc) == hash(RowCycle(i=0, j=1, symbols=(1, 0), columns=(0, 1)))
