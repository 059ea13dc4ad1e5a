"""Squares with a hole at the four commuting-count landmarks.

Each builder returns a square of order n whose top m symbols form a hole.
The fully symmetric one sits at the top of the commuting range with
n^2 - m^2 pairs, the anti-commutative one at the bottom with n - m, and the
two isotope builders land in between: moving j hole rows gives
(n + m - 2j)(n - m), moving j base rows gives (n - j - m)(n - j + m) plus
one pair per surviving coincidence.  Pasting a smaller square into the hole
adds the counts, which is how full squares are assembled later.
"""

from __future__ import annotations

from .completion import complete_symmetric
from .core import PartialSquare, apply_row_isotope, count_commuting
from .cyclic import cyclic_with_fixed_points, narrow_anti_square
from .errors import ConstructionError
from .generators import anti_commutative, doubling_hole
from .perms import Permutation, sample_low_collision_derangement

_SYMMETRIC_CACHE: dict = {}


def commutative_hole(n: int, m: int) -> PartialSquare:
    """Symmetric square of order n with a hole of order m.

    Has n^2 - m^2 commuting pairs, every defined cell agreeing with its
    mirror.  Needs 1 <= m <= n // 2, with m odd when n is odd (the diagonal
    of an odd-order symmetric square cannot host a hole symbol, and an even
    hole order would force one there).  Results are cached per (n, m).
    """
    if not (1 <= m <= n // 2):
        raise ConstructionError(
            f"symmetric square with hole needs 1 <= m <= n // 2, "
            f"got n={n} m={m}"
        )
    if n % 2 and not m % 2:
        raise ConstructionError(
            f"order {n} is odd, so the hole order must be odd, got {m}"
        )
    key = (n, m)
    if key not in _SYMMETRIC_CACHE:
        grid = complete_symmetric(n, m, seed=7 * n + m)
        square = PartialSquare(
            tuple(tuple(row) for row in grid), hole_size=m
        )
        got = count_commuting(square)
        if got != n * n - m * m:
            raise ConstructionError(
                f"symmetric hole for n={n} m={m} recounts to {got}"
            )
        _SYMMETRIC_CACHE[key] = square
    return _SYMMETRIC_CACHE[key]


def anti_commutative_hole(n: int, m: int) -> PartialSquare:
    """Square of order n with a hole of order m and only n - m commuting pairs.

    Three constructions cover the supported shapes: doubling an
    anti-commutative square when n = 2m (m != 2), a reversal seed when
    n <= 3m, and a narrow seed when n = 3m + 2 with m even.
    """
    if n == 2 * m:
        if m == 2:
            raise ConstructionError(
                "no anti-commutative square of order 4 with a hole of order 2"
            )
        sigma = Permutation([(x + 1) % m for x in range(m)])
        return doubling_hole(m, anti_commutative(m), sigma)
    if 2 * m < n <= 3 * m:
        return cyclic_with_fixed_points(n, m, 0)[0]
    if n == 3 * m + 2 and m >= 2 and m % 2 == 0:
        return narrow_anti_square(n, m)
    raise ConstructionError(
        f"no anti-commutative hole construction for n={n} m={m}"
    )


def permuted_symmetric_hole(n: int, m: int, j: int) -> PartialSquare:
    """Symmetric hole square with j hole rows cycled out of place.

    Each displaced hole row stops commuting with every base row, and no new
    coincidence can appear, so the result has (n + m - 2j)(n - m) commuting
    pairs for any 2 <= j <= m.
    """
    if not (2 <= j <= m):
        raise ConstructionError(
            f"cycling hole rows needs 2 <= j <= m, got j={j} m={m}"
        )
    base = commutative_hole(n, m)
    alpha = Permutation.from_cycle(n, tuple(range(n - j, n)))
    square = apply_row_isotope(base, alpha.inverse())
    got = count_commuting(square)
    want = (n + m - 2 * j) * (n - m)
    if got != want:
        raise ConstructionError(
            f"cycled hole rows for n={n} m={m} j={j} recount to {got}, "
            f"expected {want}"
        )
    return square


def collided_symmetric_hole(n: int, m: int, j: int, seed: int = 0):
    """Symmetric hole square with j base rows deranged, keeping coincidences.

    Returns (square, i) where i counts the coincidences the derangement
    leaves among the moved rows, diagonal included, so the square has
    (n - j - m)(n - j + m) + i commuting pairs.  The derangement is sampled
    to keep i small; i has the parity of j and never exceeds beta(j).
    """
    if not (2 <= j <= n - m):
        raise ConstructionError(
            f"deranging base rows needs 2 <= j <= n - m, got j={j}"
        )
    base = commutative_hole(n, m)
    support = range(n - m - j, n - m)
    alpha, hits = sample_low_collision_derangement(base, support, seed=seed)
    square = apply_row_isotope(base, alpha.inverse())
    got = count_commuting(square)
    want = (n - j - m) * (n - j + m) + hits
    if got != want:
        raise ConstructionError(
            f"deranged base rows for n={n} m={m} j={j} recount to {got}, "
            f"expected {want}"
        )
    return square, hits
