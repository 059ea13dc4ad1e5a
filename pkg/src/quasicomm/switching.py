"""Row-cycle switching and the symmetric squares built to be switched.

Two rows of a square induce a permutation on symbols, sending each row-i
entry to the row-j entry below it.  Swapping the two rows along the columns
of one cycle of that permutation keeps the square Latin.  On a symmetric
square the effect on the commuting count depends only on how the cycle's
column set C meets {i, j}: switching a cycle of length L with C disjoint
from {i, j} drops the count from n^2 to n^2 - 4L, the 2-cycle with
C = {i, j} preserves symmetry outright, and a longer cycle through both
(columns i and j always share a cycle when the square is symmetric) drops
it to n^2 - 4L + 6.

That turns the top of the commuting range into a dial: to hit n^2 - 2a,
switch an off-cycle of length a/2 when a is even, or a through-cycle of
length (a + 3) / 2 when a is odd.  symmetric_with_cycle builds a symmetric
square whose first two rows carry a cycle of the requested kind, and
high_counts turns the dial.
"""

from __future__ import annotations

from dataclasses import dataclass

from .completion import complete_symmetric
from .core import PartialSquare, Square, check, count_commuting
from .errors import ConstructionError


@dataclass(frozen=True)
class RowCycle:
    """One cycle of the row-i-to-row-j symbol permutation.

    symbols[t] sits in row i at columns[t], and the permutation maps it to
    symbols[(t + 1) % len], which sits in row i at columns[(t + 1) % len].
    """

    i: int
    j: int
    symbols: tuple
    columns: tuple

    def __len__(self) -> int:
        return len(self.symbols)


def row_cycles(s, i: int, j: int) -> list[RowCycle]:
    """All cycles of the symbol permutation between rows i and j.

    Ordered by smallest member column; each cycle starts at that column.
    Rows inside a hole have undefined cells and are refused.
    """
    n = s.n
    cut = n - s.hole_size
    if i == j or not (0 <= i < cut and 0 <= j < cut):
        raise ConstructionError(
            f"row cycles need two distinct rows below {cut}, got {i} and {j}"
        )
    col_of = {s.cells[i][c]: c for c in range(n)}
    seen = set()
    out = []
    for c0 in range(n):
        if c0 in seen:
            continue
        cols = []
        syms = []
        c = c0
        while c not in seen:
            seen.add(c)
            cols.append(c)
            syms.append(s.cells[i][c])
            c = col_of[s.cells[j][c]]
        out.append(RowCycle(i=i, j=j, symbols=tuple(syms), columns=tuple(cols)))
    return out


def cycle_through_column(s, i: int, j: int, c: int) -> RowCycle:
    """The row cycle between rows i and j whose column set contains c."""
    for cyc in row_cycles(s, i, j):
        if c in cyc.columns:
            return cyc
    raise ConstructionError(f"no cycle of rows {i}, {j} meets column {c}")


def switch(s, cyc: RowCycle):
    """Swap rows cyc.i and cyc.j along cyc.columns; returns a new square."""
    rows = [list(r) for r in s.cells]
    i, j = cyc.i, cyc.j
    for c in cyc.columns:
        rows[i][c], rows[j][c] = rows[j][c], rows[i][c]
    cells = tuple(tuple(r) for r in rows)
    if s.hole_size:
        out = PartialSquare(cells, hole_size=s.hole_size)
    else:
        out = Square(cells)
    return check(out)


def apply_recipe(s, recipe):
    """Apply (i, j, c) switch steps left to right; see tables.SWITCH_RECIPES."""
    for i, j, c in recipe:
        s = switch(s, cycle_through_column(s, i, j, c))
    return s


def symmetric_with_cycle(n: int, kind: str, length: int, seed: int = 0):
    """Symmetric square whose rows 0 and 1 carry a cycle of the given shape.

    kind "through" places a cycle of the given length through columns 0 and 1
    (3 <= length <= n - 2); kind "off" places it on columns 2..length+1, away
    from both (2 <= length <= n - 3).  Row 0 is the identity row, so the
    cycle structure of rows 0 and 1 is exactly the cycle structure of row 1
    as a permutation; the leftover columns close up in 2- and 3-cycles.
    Returns the square together with the planted cycle.
    """
    if kind == "through":
        if not 3 <= length <= n - 2:
            raise ConstructionError(
                f"a through cycle needs 3 <= length <= n - 2, got {length}"
            )
        parts = [list(range(length))]
        rest = list(range(length, n))
    elif kind == "off":
        if not 2 <= length <= n - 3:
            raise ConstructionError(
                f"an off cycle needs 2 <= length <= n - 3, got {length}"
            )
        parts = [[2 + t for t in range(length)]]
        anchor = [0, 1] if n % 2 == 0 else [0, 1, length + 2]
        rest = [c for c in range(n) if c not in parts[0] and c not in anchor]
        if len(rest) == 1:
            anchor.append(rest.pop())
        parts.append(anchor)
    else:
        raise ConstructionError(f"unknown cycle kind {kind!r}")
    if len(rest) == 1:
        raise ConstructionError(
            f"cannot close up a single leftover column for n={n} "
            f"kind={kind} length={length}"
        )
    while rest:
        take = 3 if len(rest) % 2 else 2
        parts.append(rest[:take])
        rest = rest[take:]

    image = list(range(n))
    for part in parts:
        for a, b in zip(part, part[1:] + part[:1]):
            image[a] = b
    row0 = tuple(range(n))
    row1 = tuple(image)
    grid = complete_symmetric(n, 0, fixed_rows=(row0, row1), seed=seed)
    square = check(Square(tuple(tuple(r) for r in grid)))
    cyc = cycle_through_column(square, 0, 1, parts[0][0])
    if len(cyc) != length:
        raise ConstructionError(
            f"completion disturbed the planned cycle for n={n} "
            f"kind={kind} length={length}"
        )
    return square, cyc


def high_counts(n: int, target: int, seed: int = 0) -> Square:
    """Square of order n with commuting count n^2 - 2a for 3 <= a <= 2n - 6."""
    gap = n * n - target
    if gap % 2:
        raise ConstructionError(
            f"count {target} is out of reach: n^2 - {target} is odd"
        )
    a = gap // 2
    if not 3 <= a <= 2 * n - 6:
        raise ConstructionError(
            f"count {target} is outside the switching band for order {n}"
        )
    if a % 2:
        base, cyc = symmetric_with_cycle(n, "through", (a + 3) // 2, seed=seed)
    else:
        base, cyc = symmetric_with_cycle(n, "off", a // 2, seed=seed)
    out = switch(base, cyc)
    got = count_commuting(out)
    if got != target:
        raise ConstructionError(
            f"switched square recounts to {got}, expected {target}"
        )
    return out
