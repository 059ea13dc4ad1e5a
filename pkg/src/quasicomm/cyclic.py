"""Squares with a hole grown from a diagonally cyclic seed.

The base symbols form the ring Z_k with k = n - m, and the hole symbols ride
along unchanged when a row is shifted: the cell at (x + 1, y + 1) always
holds the successor of the cell at (x, y), with hole symbols fixed.  A whole
square is therefore determined by a seed: its first row, plus the value each
hole row takes in column 0.

Three conditions make the expansion a valid square with a hole.  The base
part of the first row must be a partial orthomorphism of Z_k (injective, with
injective displacements), the hole columns of row 0 must pick up exactly the
base symbols the orthomorphism misses, and the hole rows must start on
exactly the displacements it misses.

The payoff is count control.  A hole row k+i commutes with every base row
when its column-0 value equals the row-0 value of column k+i, and with none
otherwise, so a seed with j such coincidences has exactly (n-m)(2j+1)
commuting pairs once the base diagonal is counted.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import PartialSquare, check, count_commuting
from .errors import ConstructionError, SeedConditionError


@dataclass(frozen=True)
class Seed:
    """First row and hole-row starts of a diagonally cyclic square.

    row0 holds the n values of row 0; positions k..n-1 are the hole columns.
    col0 holds the column-0 value of each hole row, in row order.
    """

    n: int
    m: int
    row0: tuple
    col0: tuple


def is_partial_orthomorphism(theta: dict, modulus: int) -> bool:
    """True when theta is injective and x -> theta(x) - x is injective mod modulus."""
    values = list(theta.values())
    if len(set(values)) != len(values):
        return False
    diffs = [(v - x) % modulus for x, v in theta.items()]
    return len(set(diffs)) == len(diffs)


def expand_seed(seed: Seed) -> PartialSquare:
    """Expand a seed to the full square, checking the three seed conditions."""
    n, m = seed.n, seed.m
    k = n - m
    if not (1 <= m < n):
        raise ConstructionError(f"seed needs 1 <= m < n, got n={n} m={m}")
    if len(seed.row0) != n or len(seed.col0) != m:
        raise ConstructionError("seed rows have the wrong length")

    theta = {}
    fsyms = []
    for d in range(k):
        v = seed.row0[d]
        if 0 <= v < k:
            theta[d] = v
        elif k <= v < n:
            fsyms.append(v)
        else:
            raise SeedConditionError(1, f"row-0 value {v} out of range")
    if len(fsyms) != m or len(set(fsyms)) != m:
        raise SeedConditionError(
            1, "base part of row 0 must show each hole symbol exactly once"
        )
    if not is_partial_orthomorphism(theta, k):
        raise SeedConditionError(
            1, "base part of row 0 is not a partial orthomorphism"
        )

    row0f = seed.row0[k:]
    if set(row0f) != set(range(k)) - set(theta.values()):
        raise SeedConditionError(
            2, "hole columns of row 0 must cover the base symbols row 0 misses"
        )
    diffs = {(v - x) % k for x, v in theta.items()}
    if set(seed.col0) != set(range(k)) - diffs:
        raise SeedConditionError(
            3, "hole rows must start on the displacements row 0 misses"
        )

    cells = [[None] * n for _ in range(n)]
    for x in range(k):
        row = cells[x]
        for y in range(k):
            v = seed.row0[(y - x) % k]
            row[y] = v if v >= k else (v + x) % k
        for t in range(m):
            row[k + t] = (row0f[t] + x) % k
    for t in range(m):
        start = seed.col0[t]
        row = cells[k + t]
        for y in range(k):
            row[y] = (start + y) % k
    square = PartialSquare(tuple(tuple(r) for r in cells), hole_size=m)
    check(square)
    return square


@dataclass(frozen=True)
class Skeleton:
    """Reusable part of the reversal seed for given n and m.

    row0 is the finished first row.  free_values lists, in increasing order,
    the base symbols available as hole-row starts; overlap is its prefix of
    values below m, the only ones that can coincide with their own row index.
    """

    n: int
    m: int
    row0: tuple
    free_values: tuple
    overlap: tuple


def reversal_skeleton(n: int, m: int) -> Skeleton:
    """Seed skeleton whose orthomorphism reverses an interval of Z_k.

    Needs 3m >= n (so the hole symbols can fill the first row around the
    reversed interval) and 2m < n.
    """
    k = n - m
    c = (k + 1) // 2
    if m < c or 2 * m >= n:
        raise ConstructionError(
            f"reversal skeleton needs (n - m + 1) // 2 <= m < n / 2, "
            f"got n={n} m={m}"
        )
    row0 = []
    for x in range(k):
        if x < c:
            row0.append(k + x)
        elif x < c + k - m:
            row0.append((c - 1 - x) % k)
        else:
            row0.append(x + m)
    row0.extend(range(m))
    taken = {(c - 1 - 2 * x) % k for x in range(c, c + k - m)}
    free = tuple(sorted(set(range(k)) - taken))
    overlap = tuple(v for v in free if v < m)
    return Skeleton(n=n, m=m, row0=tuple(row0), free_values=free, overlap=overlap)


def cyclic_square(n: int, m: int, starts) -> PartialSquare:
    """Square from the reversal skeleton with the given hole-row starts.

    starts must be a permutation of the skeleton's free values; entry i with
    starts[i] == i makes hole row k+i commute with every base row.
    """
    sk = reversal_skeleton(n, m)
    starts = tuple(starts)
    if sorted(starts) != list(sk.free_values):
        raise ConstructionError(
            "hole-row starts must be a permutation of the skeleton's free values"
        )
    return expand_seed(Seed(n=n, m=m, row0=sk.row0, col0=starts))


def cyclic_with_fixed_points(n: int, m: int, j: int):
    """Square from the reversal skeleton with exactly j commuting hole rows.

    Returns (square, starts).  The square has (n - m) * (2 * j + 1) commuting
    pairs.  Feasible j: at most len(overlap), and not len(overlap) - 1 when
    that would leave a single forced coincidence (j == m - 1).
    """
    sk = reversal_skeleton(n, m)
    s = len(sk.overlap)
    if j > s or (j < s and j > m - 2):
        raise ConstructionError(
            f"cannot place exactly {j} commuting hole rows for n={n} m={m} "
            f"(at most {s}, and {m - 1} of {m} is never possible)"
        )
    fixed = set(sk.overlap[:j])
    rest_idx = [i for i in range(m) if i not in fixed]
    rest_val = [v for v in sk.free_values if v not in fixed]
    L = len(rest_idx)
    starts = None
    for shift in range(max(L, 1)):
        trial = {i: rest_val[(t + shift) % L] for t, i in enumerate(rest_idx)}
        if all(v != i for i, v in trial.items()):
            full = {i: i for i in fixed}
            full.update(trial)
            starts = tuple(full[i] for i in range(m))
            break
        if L == 0:
            starts = tuple(i for i in sk.overlap[:j])
            break
    if starts is None:
        raise ConstructionError(
            f"no coincidence-free assignment of hole-row starts for "
            f"n={n} m={m} j={j}"
        )
    square = expand_seed(Seed(n=n, m=m, row0=sk.row0, col0=starts))
    got = count_commuting(square)
    want = (n - m) * (2 * j + 1)
    if got != want:
        raise ConstructionError(
            f"seed expansion for n={n} m={m} j={j} has {got} commuting "
            f"pairs, expected {want}"
        )
    return square, starts


def narrow_anti_square(n: int, m: int) -> PartialSquare:
    """Anti-commutative square with a hole for orders n = 3m + 2, m even.

    Covers hole orders too small for the reversal skeleton.  The first row
    packs the hole symbols at the front, pins column m to symbol 1, and walks
    the remaining columns backwards; hole-row starts are matched greedily so
    no hole row commutes.  The result has exactly n - m commuting pairs.
    """
    k = n - m
    if m < 2 or m % 2 or n != 3 * m + 2:
        raise ConstructionError(
            f"narrow anti-commutative seed needs n = 3m + 2 with m even, "
            f"got n={n} m={m}"
        )
    row0 = []
    for x in range(k):
        if x < m:
            row0.append(k + x)
        elif x == m:
            row0.append(1)
        else:
            row0.append((m - x) % k)
    row0f = sorted(set(range(k)) - {1} - {(m - x) % k for x in range(m + 1, k)})
    row0.extend(row0f)
    diffs = {(1 - m) % k} | {(m - 2 * x) % k for x in range(m + 1, k)}
    values = sorted(set(range(k)) - diffs)

    col0 = [None] * m
    left = list(values)
    for i in range(m):
        pick = None
        for v in left:
            if v != row0f[i]:
                pick = v
                break
        if pick is None:
            for t in range(i):
                if col0[t] != row0f[i] and left[0] != row0f[t]:
                    pick, col0[t] = col0[t], left[0]
                    left[0] = None
                    break
            left = [v for v in left if v is not None]
            if pick is None:
                raise ConstructionError(
                    f"could not avoid commuting hole rows for n={n} m={m}"
                )
        else:
            left.remove(pick)
        col0[i] = pick

    square = expand_seed(Seed(n=n, m=m, row0=tuple(row0), col0=tuple(col0)))
    got = count_commuting(square)
    if got != n - m:
        raise ConstructionError(
            f"narrow seed for n={n} m={m} has {got} commuting pairs, "
            f"expected {n - m}"
        )
    return square
