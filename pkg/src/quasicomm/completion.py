"""Randomized completion of symmetric squares.

Used for two jobs: building a symmetric square with an empty hole on the top
m symbols, and extending two fixed rows to a full symmetric square.  Both
reduce to the same search: pick every representative cell (i, j) with i <= j,
mirror it to (j, i), and keep rows and columns Latin.

The diagonal is pinned first, from the counting facts a symmetric square must
obey.  Symbol s appears on the diagonal with the parity of its total number
of occurrences (off-diagonal occurrences pair up by symmetry): n for a base
symbol, n - m for a hole symbol.  A base symbol also appears inside the base
block only n - 2m times, which caps its diagonal count; with m = n/2 the
diagonal is forced to consist of hole symbols alone.

The remaining cells form an exact-cover instance: one item per cell, one item
per (line, symbol) pair, where line r means row r and column r at once (they
hold the same symbols by symmetry).  An option places symbol s at (i, j) and
covers the cell item plus (i, s) and (j, s).  Algorithm X with the usual
fewest-options branching handles the tight instances (hole order near n/2)
that defeat cell-ordered backtracking.  Attempts restart with a fresh
diagonal and a fresh shuffle when a node budget runs out.
"""

from __future__ import annotations

import random
import sys

from .errors import CompletionError


class _Budget(Exception):
    pass


def complete_symmetric(
    n: int,
    m: int = 0,
    fixed_rows=(),
    seed: int = 0,
    restarts: int = 400,
    node_budget: int = 10_000,
):
    """Return a symmetric n x n grid (list of lists, None inside the hole).

    m is the hole order (0 for none; hole symbols are the top m).  fixed_rows
    pins the first rows verbatim, and their mirrors pin the matching columns.
    Raises CompletionError when every restart fails.
    """
    rng = random.Random(seed)
    cut = n - m
    fr = len(fixed_rows)
    if fr > cut:
        raise CompletionError("fixed rows may not reach into the hole")

    base = [[None] * n for _ in range(n)]
    for i, row in enumerate(fixed_rows):
        if len(row) != n:
            raise CompletionError("fixed rows must have full length")
        for j, v in enumerate(row):
            for a, b in ((i, j), (j, i)):
                if base[a][b] is not None and base[a][b] != v:
                    raise CompletionError("fixed rows are not symmetric-consistent")
                base[a][b] = v
    for i in range(n):
        seen = set()
        for v in base[i]:
            if v is None:
                continue
            if v in seen:
                raise CompletionError(f"fixed rows repeat symbol {v} in line {i}")
            seen.add(v)

    for _attempt in range(restarts):
        grid = [row[:] for row in base]
        diag = _sample_diagonal(n, m, grid, rng)
        if diag is None:
            continue
        for i, v in diag.items():
            grid[i][i] = v
        if _exact_cover_fill(n, cut, grid, rng, node_budget):
            return grid
    raise CompletionError(
        f"could not complete a symmetric square of order {n} with hole {m} "
        f"after {restarts} restarts"
    )


def _sample_diagonal(n, m, grid, rng):
    """Pick values for the free diagonal cells, or None to signal a resample.

    Chooses per-symbol diagonal multiplicities honouring parity and caps,
    then maps the multiset onto positions avoiding column conflicts.
    """
    cut = n - m
    slots = [i for i in range(cut) if grid[i][i] is None]
    have = {}
    for i in range(cut):
        v = grid[i][i]
        if v is not None:
            have[v] = have.get(v, 0) + 1
    cap = {}
    counts = {}
    for s in range(n):
        cap[s] = max(0, n - 2 * m) if s < cut else n - m
        total_parity = (n if s < cut else n - m) % 2
        counts[s] = (total_parity - have.get(s, 0)) % 2
        if have.get(s, 0) + counts[s] > cap[s]:
            return None
    rest = len(slots) - sum(counts.values())
    if rest < 0 or rest % 2:
        return None
    for _ in range(rest // 2):
        pool = [s for s in range(n) if have.get(s, 0) + counts[s] + 2 <= cap[s]]
        if not pool:
            return None
        counts[rng.choice(pool)] += 2
    bag = []
    for s, c in counts.items():
        bag.extend([s] * c)
    col_used = [
        {grid[r][i] for r in range(n) if grid[r][i] is not None} for i in range(n)
    ]
    for _ in range(20):
        rng.shuffle(bag)
        taken = list(bag)
        assign = {}
        ok = True
        for i in slots:
            choice = None
            for idx, s in enumerate(taken):
                if s not in col_used[i]:
                    choice = idx
                    break
            if choice is None:
                ok = False
                break
            assign[i] = taken.pop(choice)
        if ok:
            return assign
    return None


def _exact_cover_fill(n, cut, grid, rng, node_budget):
    """Fill the open cells of grid in place; True on success."""
    line_used = []
    for i in range(n):
        mask = 0
        for v in grid[i]:
            if v is not None:
                mask |= 1 << v
        line_used.append(mask)

    cells = [
        (i, j)
        for i in range(n)
        for j in range(i + 1, n)
        if not (i >= cut and j >= cut) and grid[i][j] is None
    ]

    # exact-cover model: items are cells and (line, symbol) slots
    options: list[tuple[int, int, int]] = []
    for (i, j) in cells:
        hi = n if i < cut and j < cut else cut
        free = ~(line_used[i] | line_used[j])
        for s in range(hi):
            if free >> s & 1:
                options.append((i, j, s))
    rng.shuffle(options)

    X: dict = {("c", i, j): set() for (i, j) in cells}
    for i in range(n):
        top = n if i < cut else cut
        for s in range(top):
            if not line_used[i] >> s & 1:
                X[("l", i, s)] = set()
    Y = {}
    for oid, (i, j, s) in enumerate(options):
        items = (("c", i, j), ("l", i, s), ("l", j, s))
        if any(it not in X for it in items):
            continue
        Y[oid] = items
        for it in items:
            X[it].add(oid)

    budget = [node_budget]
    old_limit = sys.getrecursionlimit()
    sys.setrecursionlimit(max(old_limit, 4 * len(cells) + 1000))
    try:
        picked = _solve(X, Y, rng, budget)
    except _Budget:
        return False
    finally:
        sys.setrecursionlimit(old_limit)
    if picked is None:
        return False
    for oid in picked:
        i, j, s = options[oid]
        grid[i][j] = grid[j][i] = s
    return True


def _solve(X, Y, rng, budget):
    if not X:
        return []
    best = None
    best_len = None
    for it, opts in X.items():
        ln = len(opts)
        if best_len is None or ln < best_len:
            best, best_len = it, ln
            if ln <= 1:
                break
    if best_len == 0:
        return None
    candidates = sorted(X[best])
    if len(candidates) > 1:
        rng.shuffle(candidates)
    for oid in candidates:
        budget[0] -= 1
        if budget[0] < 0:
            raise _Budget
        removed = _select(X, Y, oid)
        sub = _solve(X, Y, rng, budget)
        _deselect(X, Y, oid, removed)
        if sub is not None:
            sub.append(oid)
            return sub
    return None


def _select(X, Y, oid):
    removed = []
    for it in Y[oid]:
        for other in X[it]:
            for it2 in Y[other]:
                if it2 != it:
                    X[it2].discard(other)
        removed.append(X.pop(it))
    return removed


def _deselect(X, Y, oid, removed):
    for it in reversed(Y[oid]):
        X[it] = removed.pop()
        for other in X[it]:
            for it2 in Y[other]:
                if it2 != it:
                    X[it2].add(other)
