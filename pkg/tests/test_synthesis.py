"""The witness engine: admissibility, route selection, certificates,
the feasibility scan for deranged-row pastes, the large-order threshold
chain, and the rule-closure bookkeeping."""

import pytest

from quasicomm.core import count_commuting, check
from quasicomm.errors import ImpossibleTargetError, InvalidTargetError
from quasicomm.perms import beta
from quasicomm.spectrum import band, spectrum_C
from quasicomm.synthesis import (
    DriverConstants,
    admissible,
    compute_E,
    driver_constants,
    is_admissible,
    kconds_feasible_j,
    replay,
    witness,
)

# counts the general rules cannot reach at each small order; every one of
# them is covered by an embedded square or a recipe instead
RULE_GAPS = {
    4: {6},
    5: {9, 11, 15, 19},
    6: {10, 14, 22},
    7: {11, 17, 31},
    8: {16, 26, 42},
    9: {17, 25, 35, 37, 47, 49, 53, 55},
    10: {28},
}


def test_admissible_wrappers():
    assert admissible(4).members() == (4, 6, 8, 16)
    assert is_admissible(4, 8) and not is_admissible(4, 10)
    assert is_admissible(6, 36) and not is_admissible(6, 34)


def test_kconds_feasible_j_examples():
    assert kconds_feasible_j(12, 5, 90) == 2
    assert kconds_feasible_j(12, 5, 12) is None


def test_kconds_feasible_j_returns_smallest_valid_j():
    for n, m in [(12, 5), (13, 5), (16, 7)]:
        for k in band(n).members():
            j = kconds_feasible_j(n, m, k)
            if j is None:
                continue
            assert 2 <= j <= n - m
            low = k - (n - j - m) * (n - j + m)
            assert beta(j) + m <= low <= j + m * m - 6
            for smaller in range(2, j):
                low = k - (n - smaller - m) * (n - smaller + m)
                assert not (
                    beta(smaller) + m <= low <= smaller + m * m - 6
                )


def test_kconds_window_guarantees_a_hit():
    # whenever the quadratic window argument applies, the scan finds some j
    for n in range(10, 26):
        for m in range(2, n // 2 + 1):
            if 4 + m - m * m + 2 * n > 0:
                continue
            lo = m + beta(n - m)
            hi = n * n - 2 * n - m * m + m + 2
            for k in band(n).members():
                if lo <= k < hi:
                    assert kconds_feasible_j(n, m, k) is not None, (n, m, k)


def test_driver_constants_at_28():
    d = driver_constants(28)
    assert (d.q, d.r) == (14, 9)
    assert (d.x1, d.x2, d.x3, d.x4, d.x5, d.x6, d.x7, d.x8) == (
        28, 204, 43, 547, 48, 657, 602, 778
    )
    assert d.chain_ok()


def test_driver_q_branches():
    assert driver_constants(29).q == 13  # 29 = 4*7 + 1
    assert driver_constants(31).q == 15  # 31 = 4*7 + 3
    assert driver_constants(30).q == 15


def test_driver_constants_refuses_small_orders():
    with pytest.raises(ValueError):
        driver_constants(27)


def test_driver_chain_holds_on_a_sample():
    for n in list(range(28, 200)) + [977, 5000, 9999, 10000]:
        d = driver_constants(n)
        assert isinstance(d, DriverConstants)
        assert d.x2 >= d.x3 and d.x4 >= d.x5 and d.x6 >= d.x7, n
        assert d.x1 == n and d.x8 == n * n - 6


def test_witness_endpoints():
    top = witness(7, 49)
    assert top.trace["rule"] == "commutative"
    assert count_commuting(top.square) == 49

    bottom = witness(7, 7)
    assert bottom.trace["rule"] == "anti-commutative"
    assert count_commuting(bottom.square) == 7


def test_witness_uses_the_published_recipe():
    cert = witness(9, 35)
    assert cert.trace["rule"] == "curated-switches"
    assert cert.trace["params"]["recipe"] == [[1, 3, 0]]
    assert cert.k_recounted == 35


def test_witness_12_90_routes_through_deranged_rows():
    cert = witness(12, 90)
    assert cert.trace["rule"] == "deranged-hole-paste"
    assert cert.trace["params"]["m"] == 6
    assert cert.trace["params"]["j"] == 2
    assert cert.k_recounted == 90
    assert len(cert.trace["children"]) == 1


def test_witness_7_9_falls_back_to_the_walk():
    cert = witness(7, 9)
    assert cert.trace["rule"] == "switching-walk"
    assert cert.k_recounted == 9


def test_witness_refusals():
    with pytest.raises(ImpossibleTargetError) as exc:
        witness(4, 10)
    assert "order-4 exception" in str(exc.value)
    with pytest.raises(ImpossibleTargetError):
        witness(5, 17)
    with pytest.raises(InvalidTargetError) as exc:
        witness(6, 11)  # wrong parity
    assert exc.value.nearest
    with pytest.raises(InvalidTargetError):
        witness(6, 34)  # n^2 - 2
    with pytest.raises(ValueError):
        witness(0, 0)


def test_certificate_shape_and_verify():
    cert = witness(8, 40)
    assert cert.verify()
    data = cert.as_dict()
    assert list(data) == [
        "schema_version", "n", "k_target", "k_recounted",
        "square", "trace", "seed",
    ]
    assert data["n"] == 8 and data["k_target"] == data["k_recounted"] == 40
    assert len(data["square"]) == 8
    check(cert.square)


def test_witness_memoizes_and_replays():
    a = witness(11, 29)
    b = witness(11, 29)
    assert a is b
    assert replay(a)

    other_seed = witness(11, 29, seed=1)
    assert other_seed.k_recounted == 29
    assert replay(other_seed)


def test_witness_seed_changes_only_sampled_routes():
    # deterministic routes ignore the seed entirely
    assert witness(9, 35, seed=5).square.cells == witness(9, 35).square.cells


def test_every_small_order_target_is_reachable():
    for n in range(1, 13):
        for k in spectrum_C(n).members():
            cert = witness(n, k)
            assert cert.verify(), (n, k)


def test_compute_E_misses_exactly_the_curated_counts():
    for n, gaps in RULE_GAPS.items():
        want = frozenset(spectrum_C(n).values - gaps)
        assert compute_E(n) == want, n


def test_compute_E_saturates_from_11():
    for n in range(11, 18):
        assert compute_E(n) == spectrum_C(n).values, n
