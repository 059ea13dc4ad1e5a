"""Permutations, derangements, and the collision budget beta.

beta(j) bounds how many coincidences a well-chosen derangement of j symbols
can be forced to produce: beta(j) = j*j for j <= 2 and floor(j(2j-3)/(j-2))
afterwards.  A random derangement of j points creates an expected
j(2j-3)/(j-2) coincidences of the kind counted below, so sampling until the
count lands at or under beta(j) terminates fast.
"""

from __future__ import annotations

import itertools
import random

from .errors import ConstructionError


def beta(j: int) -> int:
    if j < 0:
        raise ValueError("beta is defined for nonnegative arguments")
    if j <= 2:
        return j * j
    return (j * (2 * j - 3)) // (j - 2)


class Permutation:
    """A bijection on 0..n-1, stored by its image tuple."""

    def __init__(self, image):
        img = tuple(image)
        if sorted(img) != list(range(len(img))):
            raise ValueError(f"not a permutation image: {img}")
        self.image = img
        self.n = len(img)

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(range(n))

    @classmethod
    def from_cycle(cls, n: int, cycle) -> "Permutation":
        """The permutation of 0..n-1 acting as the given cycle, fixing the rest."""
        img = list(range(n))
        cyc = list(cycle)
        for a, b in zip(cyc, cyc[1:] + cyc[:1]):
            img[a] = b
        return cls(img)

    def __call__(self, x: int) -> int:
        return self.image[x]

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.image == other.image

    def __hash__(self):
        return hash(self.image)

    def __repr__(self):
        return f"Permutation({list(self.image)})"

    def inverse(self) -> "Permutation":
        img = [0] * self.n
        for x, y in enumerate(self.image):
            img[y] = x
        return Permutation(img)

    def compose(self, other: "Permutation") -> "Permutation":
        """self after other: x -> self(other(x))."""
        return Permutation(tuple(self.image[other.image[x]] for x in range(self.n)))

    def support(self) -> set[int]:
        return {x for x, y in enumerate(self.image) if x != y}

    def fixed_points(self) -> set[int]:
        return {x for x, y in enumerate(self.image) if x == y}

    def cycles(self) -> list[tuple[int, ...]]:
        """Nontrivial cycles, each starting at its smallest element."""
        seen = set()
        out = []
        for start in range(self.n):
            if start in seen or self.image[start] == start:
                continue
            cyc = [start]
            seen.add(start)
            x = self.image[start]
            while x != start:
                cyc.append(x)
                seen.add(x)
                x = self.image[x]
            out.append(tuple(cyc))
        return out

    def is_derangement_of(self, support) -> bool:
        sup = set(support)
        return all(self.image[x] != x for x in sup) and all(
            self.image[x] == x for x in range(self.n) if x not in sup
        )


def random_derangement(support, seed=None, *, size=None, rng=None) -> Permutation:
    """A uniformly random permutation of `support` without fixed points.

    Fixes every index outside support.  `size` widens the ambient range when
    the permutation must act on more points than max(support)+1.
    """
    sup = sorted(support)
    if len(sup) < 2:
        raise ValueError("a derangement needs at least two points")
    if rng is None:
        rng = random.Random(seed)
    n = size if size is not None else sup[-1] + 1
    img = list(range(n))
    while True:
        shuffled = sup[:]
        rng.shuffle(shuffled)
        if all(a != b for a, b in zip(sup, shuffled)):
            break
    for a, b in zip(sup, shuffled):
        img[a] = b
    return Permutation(img)


def count_collisions(sq, alpha: Permutation, support) -> int:
    """|{(x, y) in support^2 : sq[alpha(x)][y] == sq[alpha(y)][x]}|.

    The |support| diagonal pairs always collide, so the count is at least
    |support| and shares its parity.
    """
    sup = sorted(support)
    cells = sq.cells
    total = 0
    for x in sup:
        ax = alpha(x)
        for y in sup:
            if cells[ax][y] == cells[alpha(y)][x]:
                total += 1
    return total


def sample_low_collision_derangement(sq, support, budget: int = 64, seed=None):
    """Sample derangements of support until one collides at most beta(j) times.

    Returns (alpha, collisions).  After the budget is spent, supports of at
    most nine points fall back to an exhaustive scan for the minimum; larger
    ones raise, which has not been observed in practice.
    """
    sup = sorted(support)
    j = len(sup)
    bound = beta(j)
    rng = random.Random(seed)
    best = None
    for _ in range(budget):
        alpha = random_derangement(sup, rng=rng, size=sq.n)
        c = count_collisions(sq, alpha, sup)
        if c <= bound:
            return alpha, c
        if best is None or c < best[1]:
            best = (alpha, c)
    if j <= 9:
        for perm in itertools.permutations(sup):
            if any(a == b for a, b in zip(sup, perm)):
                continue
            img = list(range(sq.n))
            for a, b in zip(sup, perm):
                img[a] = b
            alpha = Permutation(img)
            c = count_collisions(sq, alpha, sup)
            if c <= bound:
                return alpha, c
    raise ConstructionError(
        f"no derangement of {j} points with at most {bound} collisions "
        f"found in {budget} samples (best seen: {best[1]})"
    )
