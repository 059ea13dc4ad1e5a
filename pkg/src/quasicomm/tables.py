"""Curated squares with known commuting counts, embedded as data.

BASE_SQUARES holds one square per order 4..10 whose count is awkward to reach
by the general routes; SWITCH_RECIPES lists row-cycle switches that turn a
base square into one with another such count.  A recipe entry (i, j, c) means
"switch rows i and j along the row cycle whose column set contains c", applied
left to right.  ANTI_SQUARES holds anti-symmetric squares (exactly the n
diagonal pairs commute) for the two orders where no closed form is used; both
were found once by constrained search and are frozen here.

Everything is validated at import time and recounted by tests; nothing in
this module is trusted without a recount.
"""

from .core import Square, check, count_commuting

# order -> (commuting count, rows)
BASE_SQUARES = {
    4: (6, (
        (2, 0, 3, 1),
        (1, 3, 2, 0),
        (0, 2, 1, 3),
        (3, 1, 0, 2),
    )),
    5: (19, (
        (0, 1, 3, 4, 2),
        (1, 3, 4, 2, 0),
        (3, 0, 2, 1, 4),
        (4, 2, 1, 0, 3),
        (2, 4, 0, 3, 1),
    )),
    6: (22, (
        (1, 2, 3, 4, 5, 0),
        (2, 3, 4, 5, 0, 1),
        (3, 4, 5, 0, 1, 2),
        (0, 5, 2, 1, 4, 3),
        (4, 0, 1, 2, 3, 5),
        (5, 1, 0, 3, 2, 4),
    )),
    7: (31, (
        (0, 1, 2, 3, 4, 5, 6),
        (1, 2, 0, 4, 3, 6, 5),
        (2, 0, 1, 5, 6, 3, 4),
        (3, 4, 5, 6, 0, 1, 2),
        (6, 3, 4, 0, 5, 2, 1),
        (4, 5, 6, 1, 2, 0, 3),
        (5, 6, 3, 2, 1, 4, 0),
    )),
    8: (42, (
        (1, 2, 3, 4, 5, 6, 7, 0),
        (2, 3, 4, 5, 6, 7, 0, 1),
        (3, 4, 5, 6, 7, 0, 1, 2),
        (4, 5, 6, 7, 0, 1, 2, 3),
        (5, 6, 7, 0, 1, 2, 3, 4),
        (0, 7, 2, 1, 4, 3, 6, 5),
        (7, 0, 1, 3, 2, 4, 5, 6),
        (6, 1, 0, 2, 3, 5, 4, 7),
    )),
    9: (55, (
        (1, 2, 3, 4, 5, 6, 7, 8, 0),
        (2, 3, 4, 5, 6, 7, 8, 0, 1),
        (3, 4, 5, 6, 7, 8, 0, 1, 2),
        (4, 5, 6, 7, 8, 0, 1, 2, 3),
        (5, 0, 7, 8, 3, 1, 2, 6, 4),
        (0, 7, 8, 3, 1, 2, 6, 4, 5),
        (8, 6, 0, 1, 2, 3, 4, 5, 7),
        (7, 8, 1, 2, 0, 4, 5, 3, 6),
        (6, 1, 2, 0, 4, 5, 3, 7, 8),
    )),
    10: (28, (
        (1, 2, 3, 4, 5, 6, 7, 8, 9, 0),
        (2, 3, 4, 5, 6, 7, 8, 9, 0, 1),
        (3, 4, 5, 6, 7, 8, 9, 0, 1, 2),
        (0, 5, 2, 7, 4, 9, 6, 1, 8, 3),
        (5, 6, 7, 8, 9, 0, 1, 2, 3, 4),
        (9, 0, 1, 2, 3, 4, 5, 6, 7, 8),
        (8, 9, 0, 1, 2, 3, 4, 5, 6, 7),
        (7, 8, 9, 0, 1, 2, 3, 4, 5, 6),
        (6, 7, 8, 9, 0, 1, 2, 3, 4, 5),
        (4, 1, 6, 3, 8, 5, 0, 7, 2, 9),
    )),
}

# (order, target count) -> switches applied to BASE_SQUARES[order]
SWITCH_RECIPES = {
    (5, 9): ((1, 2, 0), (3, 4, 0)),
    (5, 11): ((1, 2, 0), (3, 4, 2)),
    (5, 15): ((1, 2, 0),),
    (6, 10): ((1, 5, 0),),
    (6, 14): ((1, 2, 0), (4, 5, 1)),
    (7, 11): ((1, 2, 0), (3, 5, 0)),
    (7, 17): ((3, 5, 0),),
    (8, 16): ((1, 2, 0), (3, 5, 1)),
    (8, 26): ((2, 3, 0),),
    (9, 17): ((1, 2, 0), (3, 4, 0)),
    (9, 25): ((1, 2, 0), (3, 5, 2)),
    (9, 35): ((1, 3, 0),),
    (9, 37): ((1, 6, 0),),
    (9, 47): ((1, 8, 0),),
    (9, 49): ((1, 8, 3),),
    (9, 53): ((1, 8, 1),),
}

# order -> rows of an anti-symmetric square (count == order)
ANTI_SQUARES = {
    4: (
        (0, 1, 2, 3),
        (2, 3, 0, 1),
        (3, 2, 1, 0),
        (1, 0, 3, 2),
    ),
    6: (
        (0, 1, 2, 3, 4, 5),
        (2, 0, 1, 4, 5, 3),
        (1, 2, 0, 5, 3, 4),
        (4, 5, 3, 0, 1, 2),
        (5, 3, 4, 2, 0, 1),
        (3, 4, 5, 1, 2, 0),
    ),
}


def base_square(n: int) -> Square:
    count, rows = BASE_SQUARES[n]
    return Square(rows)


def base_count(n: int) -> int:
    return BASE_SQUARES[n][0]


def anti_square(n: int) -> Square:
    return Square(ANTI_SQUARES[n])


def _check_tables():
    for n, (count, rows) in BASE_SQUARES.items():
        sq = check(Square(rows))
        got = count_commuting(sq)
        if got != count:
            raise AssertionError(f"embedded order-{n} square recounts to {got}, table says {count}")
    for n, rows in ANTI_SQUARES.items():
        sq = check(Square(rows))
        got = count_commuting(sq)
        if got != n:
            raise AssertionError(f"embedded order-{n} anti-symmetric square recounts to {got}")


_check_tables()
