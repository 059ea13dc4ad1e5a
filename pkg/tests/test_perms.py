"""Permutations, the beta bound, and derangement sampling."""

import pytest
from hypothesis import given, settings, strategies as st

from quasicomm.holes import commutative_hole
from quasicomm.perms import (
    Permutation,
    beta,
    count_collisions,
    random_derangement,
    sample_low_collision_derangement,
)


def test_beta_small_values():
    # j^2 through j = 2, then floor(j(2j - 3)/(j - 2))
    assert [beta(j) for j in range(1, 8)] == [1, 4, 9, 10, 11, 13, 15]


def test_beta_growth_is_monotone_past_three():
    values = [beta(j) for j in range(3, 50)]
    assert values == sorted(values)


def test_permutation_call_and_inverse():
    p = Permutation([2, 0, 1])
    assert [p(x) for x in range(3)] == [2, 0, 1]
    assert p.compose(p.inverse()) == Permutation.identity(3)
    assert p.inverse().compose(p) == Permutation.identity(3)


def test_permutation_from_cycle():
    p = Permutation.from_cycle(5, (1, 3, 4))
    assert p(1) == 3 and p(3) == 4 and p(4) == 1
    assert p.fixed_points() == {0, 2}
    assert p.support() == {1, 3, 4}
    assert (1, 3, 4) in p.cycles()


def test_permutation_rejects_non_bijection():
    with pytest.raises(ValueError):
        Permutation([0, 0, 1])


def test_is_derangement_of():
    # the support must be exactly the set of moved points
    p = Permutation([0, 2, 1, 4, 3])
    assert p.is_derangement_of({1, 2, 3, 4})
    assert not p.is_derangement_of({1, 2})
    assert Permutation([0, 2, 1, 3]).is_derangement_of({1, 2})
    assert not Permutation.identity(4).is_derangement_of({1, 2})


@settings(max_examples=50, deadline=None)
@given(st.integers(2, 12), st.integers(0, 2 ** 30))
def test_random_derangement_properties(j, seed):
    support = set(range(20 - j, 20))
    p = random_derangement(support, seed=seed, size=20)
    assert p.is_derangement_of(support)
    assert p.fixed_points() >= set(range(20)) - support
    # deterministic per seed
    assert p == random_derangement(support, seed=seed, size=20)


def test_random_derangement_refuses_singleton():
    with pytest.raises(ValueError):
        random_derangement({3}, seed=0, size=5)


def test_count_collisions_diagonal_floor():
    # the diagonal of the support always collides, so the count is at
    # least the support size and shares its parity
    sq = commutative_hole(12, 4)
    support = set(range(5, 8))
    for seed in range(6):
        alpha = random_derangement(support, seed=seed, size=12)
        c = count_collisions(sq, alpha, support)
        assert c >= 3
        assert c % 2 == 1


@settings(max_examples=25, deadline=None)
@given(st.integers(2, 6), st.integers(0, 2 ** 20))
def test_sampler_meets_beta_bound(j, seed):
    sq = commutative_hole(16, 2)
    support = set(range(14 - j, 14))
    alpha, hits = sample_low_collision_derangement(sq, support, seed=seed)
    assert alpha.is_derangement_of(support)
    assert j <= hits <= beta(j)
    assert hits % 2 == j % 2
    assert hits == count_collisions(sq, alpha, support)
