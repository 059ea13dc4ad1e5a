"""Independent brute-force checks for the desk-scale claims.

Everything here recomputes facts from scratch, sharing no construction code
with the rest of the package: a cell-by-cell enumerator for the tiny orders
where every square can be visited, and a random switching walk for orders
where only sampling is feasible.  The enumerator can sweep cells row-major
or column-major; the two orders visit squares differently, so agreeing
histograms are a real cross-check and not the same loop twice.
"""

from __future__ import annotations

import random
from collections import Counter

from .core import Square

_ENUM_CAP = 5


def _check_enum_order(n: int) -> None:
    if not 1 <= n <= _ENUM_CAP:
        raise ValueError(
            f"exhaustive enumeration is capped at order {_ENUM_CAP}; got {n}"
        )


def enumerate_all(n: int, order: str = "row"):
    """Yield every Latin square of order n by exhaustive backtracking.

    order picks the cell sweep: "row" for row-major, "column" for
    column-major.  Hard-capped at order 5; order 6 already has about
    8 * 10^8 squares.
    """
    _check_enum_order(n)
    for rows in _squares(n, order):
        yield Square(rows)


def commuting_histogram(n: int, order: str = "row") -> Counter:
    """Histogram {commuting count: number of squares} over all squares."""
    _check_enum_order(n)
    hist: Counter = Counter()
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    for rows in _squares(n, order):
        c = n
        for i, j in pairs:
            if rows[i][j] == rows[j][i]:
                c += 2
        hist[c] += 1
    return hist


def support(n: int, order: str = "row") -> tuple:
    """Sorted commuting counts attained by squares of order n."""
    return tuple(sorted(commuting_histogram(n, order)))


def _squares(n: int, order: str):
    """Yield every Latin square of order n as a list of row lists."""
    if order == "row":
        cells = [(r, c) for r in range(n) for c in range(n)]
    elif order == "column":
        cells = [(r, c) for c in range(n) for r in range(n)]
    else:
        raise ValueError(f"unknown sweep order {order!r}")
    rows = [[0] * n for _ in range(n)]
    row_free = [(1 << n) - 1] * n
    col_free = [(1 << n) - 1] * n
    last = len(cells) - 1

    def fill(at: int):
        r, c = cells[at]
        free = row_free[r] & col_free[c]
        while free:
            bit = free & -free
            free ^= bit
            rows[r][c] = bit.bit_length() - 1
            if at == last:
                yield rows
            else:
                row_free[r] ^= bit
                col_free[c] ^= bit
                yield from fill(at + 1)
                row_free[r] ^= bit
                col_free[c] ^= bit

    yield from fill(0)


def sampled_support(n: int, samples: int, seed: int = 0) -> frozenset:
    """Counts observed along a random switching walk at orders 6 through 8.

    The spot-check companion to the exhaustive range: every returned count
    must lie in the admissible band, and in particular the walk must never
    see n^2 - 2 or n^2 - 4.
    """
    if not 6 <= n <= 8:
        raise ValueError(f"sampled support covers orders 6 through 8; got {n}")
    return frozenset(sampled_counts(n, samples, seed))


def sampled_counts(n: int, samples: int, seed: int = 0) -> Counter:
    """Commuting counts along a random switching walk of the given length.

    Starts from the cyclic table of Z_n and repeatedly swaps a random row
    cycle between two random rows, a move that keeps the square Latin.  The
    walk reimplements the cycle swap directly so the sample is independent
    of the construction modules it is used to check.
    """
    rng = random.Random(seed)
    rows = [[(i + j) % n for j in range(n)] for i in range(n)]
    hist: Counter = Counter()
    for _ in range(samples):
        i, j = rng.sample(range(n), 2)
        col_of = {rows[i][c]: c for c in range(n)}
        start = rng.randrange(n)
        c = start
        cols = []
        while True:
            cols.append(c)
            c = col_of[rows[j][c]]
            if c == start:
                break
        for c in cols:
            rows[i][c], rows[j][c] = rows[j][c], rows[i][c]
        count = n
        for x in range(n):
            for y in range(x + 1, n):
                if rows[x][y] == rows[y][x]:
                    count += 2
        hist[count] += 1
    return hist
