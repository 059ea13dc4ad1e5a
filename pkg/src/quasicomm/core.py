"""Squares, partial squares with a hole, and the commuting-pair count.

A square of order n is an n x n grid over symbols 0..n-1 in which every row
and every column contains each symbol exactly once.  A partial square with a
hole of order m leaves the bottom-right m x m block empty: writing
H = {n-m, ..., n-1} for the hole symbols and I for the rest, the cells H x H
are empty, rows and columns of H contain each symbol of I exactly once, and
symbols of H appear only inside the I x I block.  That shape is exactly what
lets a full square of order m be pasted into the hole later.

Cells are stored as a tuple of row tuples with None for an empty cell, so
squares hash and compare by value and never mutate in place.
"""

from __future__ import annotations

from .errors import ValidationError


class Square:
    """An n x n Latin square (full: hole size 0) over symbols 0..n-1."""

    hole_size = 0

    def __init__(self, cells):
        rows = tuple(tuple(row) for row in cells)
        n = len(rows)
        if n == 0:
            raise ValidationError("empty grid")
        for i, row in enumerate(rows):
            if len(row) != n:
                raise ValidationError(f"row {i} has length {len(row)}, expected {n}")
        self.n = n
        self.cells = rows

    def __eq__(self, other):
        return (
            isinstance(other, Square)
            and self.cells == other.cells
            and self.hole_size == other.hole_size
        )

    def __hash__(self):
        return hash((self.hole_size, self.cells))

    def __getitem__(self, i):
        return self.cells[i]

    def __repr__(self):
        return f"{type(self).__name__}(n={self.n})"

    def transpose(self) -> "Square":
        flipped = tuple(zip(*self.cells))
        if isinstance(self, PartialSquare):
            return PartialSquare(flipped, self.hole_size)
        return Square(flipped)

    def to_text(self) -> str:
        """Serialize: first line is the order, then one line per row, '.' for empty."""
        lines = [str(self.n)]
        for row in self.cells:
            lines.append(" ".join("." if v is None else str(v) for v in row))
        return "\n".join(lines) + "\n"


class PartialSquare(Square):
    """A square of order n with an empty hole on the top m symbols."""

    def __init__(self, cells, hole_size: int):
        super().__init__(cells)
        if not 1 <= hole_size <= self.n:
            raise ValidationError(f"hole size {hole_size} out of range for order {self.n}")
        self.hole_size = hole_size

    @property
    def hole(self) -> range:
        return range(self.n - self.hole_size, self.n)


def square_from_text(text: str) -> Square:
    """Parse the serialization produced by Square.to_text."""
    lines = [ln for ln in text.strip().splitlines() if ln.strip()]
    if not lines:
        raise ValidationError("empty input")
    try:
        n = int(lines[0])
    except ValueError:
        raise ValidationError(f"first line must be the order, got {lines[0]!r}") from None
    if len(lines) != n + 1:
        raise ValidationError(f"expected {n} rows after the header, got {len(lines) - 1}")
    cells = []
    for ln in lines[1:]:
        row = []
        for tok in ln.split():
            row.append(None if tok == "." else int(tok))
        cells.append(row)
    holes = sum(1 for row in cells for v in row if v is None)
    if holes:
        m = _isqrt_exact(holes)
        if m is None:
            raise ValidationError(f"{holes} empty cells do not form a square hole")
        sq = PartialSquare(cells, m)
    else:
        sq = Square(cells)
    check(sq)
    return sq


def _isqrt_exact(v: int):
    r = int(v**0.5)
    for cand in (r - 1, r, r + 1):
        if cand >= 0 and cand * cand == v:
            return cand
    return None


def validate(s: Square) -> list[str]:
    """Return a list of violation descriptions; an empty list means s is valid.

    For a full square this checks the Latin property.  For a partial square it
    additionally checks the hole shape: the H x H block is empty, nothing else
    is, rows and columns of H each carry the symbols of I exactly once, and no
    hole symbol strays outside the I x I block.
    """
    n = s.n
    m = s.hole_size
    cut = n - m
    problems = []
    for i, row in enumerate(s.cells):
        for j, v in enumerate(row):
            if v is None:
                if not (i >= cut and j >= cut):
                    problems.append(f"cell ({i},{j}) is empty outside the hole")
            elif not 0 <= v < n:
                problems.append(f"cell ({i},{j}) holds {v}, not a symbol of 0..{n - 1}")
            elif i >= cut and j >= cut:
                problems.append(f"cell ({i},{j}) inside the hole is filled")
            elif v >= cut and (i >= cut or j >= cut):
                problems.append(f"hole symbol {v} at ({i},{j}) lies outside the base block")
    if problems:
        return problems
    for i, row in enumerate(s.cells):
        want = set(range(n)) if i < cut else set(range(cut))
        got = [v for v in row if v is not None]
        if len(got) != len(set(got)):
            problems.append(f"row {i} repeats a symbol")
        elif set(got) != want:
            problems.append(f"row {i} carries the wrong symbol set")
    for j in range(n):
        col = [s.cells[i][j] for i in range(n) if s.cells[i][j] is not None]
        want = set(range(n)) if j < cut else set(range(cut))
        if len(col) != len(set(col)):
            problems.append(f"column {j} repeats a symbol")
        elif set(col) != want:
            problems.append(f"column {j} carries the wrong symbol set")
    return problems


def check(s: Square) -> Square:
    """Raise ValidationError on the first violation; return s unchanged if fine."""
    problems = validate(s)
    if problems:
        raise ValidationError(problems[0])
    return s


def count_commuting(s: Square) -> int:
    """Number of ordered pairs (x, y), both cells defined, with x*y == y*x.

    Every defined diagonal pair commutes with itself, so for a full square the
    count is at least n and has the parity of n (off-diagonal pairs come in
    mirror twos).
    """
    check(s)
    cells = s.cells
    n = s.n
    total = n if s.hole_size == 0 else n - s.hole_size
    for i in range(n):
        row = cells[i]
        for j in range(i + 1, n):
            v = row[j]
            if v is not None and v == cells[j][i]:
                total += 2
    return total


def apply_row_isotope(s: Square, alpha) -> Square:
    """Relabel row indices: output row alpha(x) is input row x.

    alpha may be a Permutation or any sequence mapping index -> image.  For a
    partial square the caller must keep the hole rows inside the hole, or the
    result will fail validation.
    """
    image = alpha.image if hasattr(alpha, "image") else tuple(alpha)
    if sorted(image) != list(range(s.n)):
        raise ValidationError("row isotope is not a permutation of the row indices")
    rows: list = [None] * s.n
    for x in range(s.n):
        rows[image[x]] = s.cells[x]
    if isinstance(s, PartialSquare):
        return check(PartialSquare(rows, s.hole_size))
    return check(Square(rows))


def paste(outer: PartialSquare, inner: Square) -> Square:
    """Fill the hole of outer with inner, relabelled onto the hole symbols.

    Symbol v of inner becomes hole symbol (n - m) + v.  Commuting pairs add:
    the filled square has count_commuting(outer) + count_commuting(inner),
    because every pair with at least one coordinate outside the hole is
    untouched and the hole block's pairs are exactly inner's pairs.
    """
    if not isinstance(outer, PartialSquare):
        raise ValidationError("outer square has no hole to paste into")
    m = outer.hole_size
    if inner.n != m or inner.hole_size != 0:
        raise ValidationError(
            f"inner square must be a full square of order {m}, got order {inner.n}"
        )
    base = outer.n - m
    rows = [list(row) for row in outer.cells]
    for a in range(m):
        for b in range(m):
            rows[base + a][base + b] = base + inner.cells[a][b]
    return check(Square(rows))


def is_orthogonal(a: Square, b: Square) -> bool:
    """True when the superposition of a and b hits every ordered pair once."""
    if a.n != b.n or a.hole_size or b.hole_size:
        raise ValidationError("orthogonality is defined for full squares of equal order")
    seen = set()
    for i in range(a.n):
        for j in range(a.n):
            seen.add((a.cells[i][j], b.cells[i][j]))
    return len(seen) == a.n * a.n


def is_self_orthogonal(s: Square) -> bool:
    """True when s is orthogonal to its own transpose."""
    return is_orthogonal(s, s.transpose())
