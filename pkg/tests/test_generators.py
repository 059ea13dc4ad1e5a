"""Commutative and anti-commutative generators plus the doubling hole."""

import pytest

from quasicomm.core import check, count_commuting
from quasicomm.errors import ConstructionError
from quasicomm.generators import anti_commutative, commutative, doubling_hole
from quasicomm.perms import Permutation


def test_commutative_counts_all_orders():
    for n in range(1, 65):
        sq = check(commutative(n))
        assert count_commuting(sq) == n * n


def test_commutative_is_cyclic_table():
    sq = commutative(10)
    assert all(sq[i][j] == (i + j) % 10 for i in range(10) for j in range(10))


def test_anti_commutative_counts_all_orders():
    for n in range(1, 65):
        if n == 2:
            continue
        sq = check(anti_commutative(n))
        assert count_commuting(sq) == n


def test_anti_commutative_order_two_refused():
    with pytest.raises(ConstructionError):
        anti_commutative(2)


def test_anti_commutative_odd_closed_form():
    sq = anti_commutative(5)
    assert all(sq[i][j] == (2 * i + j) % 5 for i in range(5) for j in range(5))


def test_generators_reject_nonpositive():
    with pytest.raises(ValueError):
        commutative(0)
    with pytest.raises(ValueError):
        anti_commutative(-1)


def test_doubling_hole_shape_and_count():
    for m in (4, 6, 8):
        base = anti_commutative(m)
        sigma = Permutation([(x + 1) % m for x in range(m)])
        hole = doubling_hole(m, base, sigma)
        check(hole)
        assert hole.n == 2 * m
        assert hole.hole_size == m
        # zero off-diagonal commuting pairs: only the m visible diagonal
        # cells commute
        assert count_commuting(hole) == m


def test_doubling_hole_requires_derangement():
    base = anti_commutative(4)
    with pytest.raises(ConstructionError):
        doubling_hole(4, base, Permutation.identity(4))


def test_doubling_hole_requires_anti_commutative_base():
    with pytest.raises(ConstructionError):
        doubling_hole(3, commutative(3), Permutation([1, 2, 0]))
