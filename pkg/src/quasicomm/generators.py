"""Whole-spectrum endpoints: fully commutative and anti-commutative squares.

A commutative square has all n^2 pairs commuting; the cyclic table i+j does
it.  An anti-commutative square has only the n diagonal pairs.  For odd n the
table 2i+j works directly.  For even n >= 8 we double an anti-commutative
square of half the order into a partial square with a hole (doubling_hole)
and paste another anti-commutative square into the hole.  Orders 4 and 6 come
from tables (no closed form covers them: order 2 has no anti-commutative
square at all, and the doubling base would need order 2 or 3 with special
care), and order 2 is refused.
"""

from __future__ import annotations

from .core import PartialSquare, Square, check, count_commuting
from .errors import ConstructionError
from .perms import Permutation
from .tables import anti_square


def commutative(n: int) -> Square:
    """The cyclic table x*y = x+y mod n; every pair commutes."""
    if n < 1:
        raise ValueError("order must be positive")
    return Square(tuple(tuple((i + j) % n for j in range(n)) for i in range(n)))


def anti_commutative(n: int) -> Square:
    """A square of order n in which only the diagonal pairs commute."""
    if n < 1:
        raise ValueError("order must be positive")
    if n == 1:
        return Square(((0,),))
    if n == 2:
        raise ConstructionError(
            "no anti-commutative square of order 2 exists (both off-diagonal "
            "cells of a 2x2 square hold the same pair of symbols)"
        )
    if n % 2 == 1:
        sq = Square(tuple(tuple((2 * i + j) % n for j in range(n)) for i in range(n)))
    elif n in (4, 6):
        sq = anti_square(n)
    else:
        m = n // 2
        sigma = Permutation([(x + 1) % m for x in range(m)])
        hole = doubling_hole(m, anti_commutative(m), sigma)
        from .core import paste

        sq = paste(hole, anti_commutative(m))
    if count_commuting(sq) != n:
        raise ConstructionError(f"anti-commutative construction for order {n} recounts wrong")
    return sq


def doubling_hole(m: int, base: Square, sigma: Permutation) -> PartialSquare:
    """Double an anti-commutative square of order m into a partial square
    of order 2m with a hole of order m and only its m diagonal pairs commuting.

    With I = 0..m-1 and hole symbols H = m..2m-1:

        cell(i, j)     = m + base[i][j]        for i, j in I
        cell(i, m+j)   = sigma(base[i][j])     for i in I
        cell(m+i, j)   = base[j][i]            for j in I

    An off-diagonal pair inside I x I commutes only if base does (never);
    a mixed pair (i, m+j) commutes only where sigma fixes base[i][j] (never,
    since sigma is a derangement).  Hole pairs are undefined, so the count is
    exactly m.
    """
    if base.n != m or base.hole_size:
        raise ConstructionError(f"doubling base must be a full square of order {m}")
    if count_commuting(base) != m:
        raise ConstructionError("doubling base must be anti-commutative")
    if sigma.n != m or sigma.support() != set(range(m)):
        raise ConstructionError("sigma must be a derangement of the base symbols")
    n = 2 * m
    rows = [[None] * n for _ in range(n)]
    for i in range(m):
        for j in range(m):
            rows[i][j] = m + base.cells[i][j]
            rows[i][m + j] = sigma(base.cells[i][j])
            rows[m + i][j] = base.cells[j][i]
    out = check(PartialSquare(rows, m))
    got = count_commuting(out)
    if got != m:
        raise ConstructionError(f"doubled hole recounts to {got}, expected {m}")
    return out
