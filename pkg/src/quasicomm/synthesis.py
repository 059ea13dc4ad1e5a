"""Witness construction: a square of order n with exactly k commuting pairs.

The engine validates the target against the attainable set, then walks a
fixed strategy list until one route lands:

  1. the two endpoints (commutative and anti-commutative squares),
  2. curated base squares and their switch recipes for small orders,
  3. paste routes, which build a square with a hole whose own count is
     controlled, then fill the hole recursively with a witness for the
     leftover count, and
  4. the switching band near the top, with a seeded switching walk as the
     last resort for the few small targets no direct route reaches.

Every certificate records the route tree and is recounted from scratch
before it is returned; replaying a certificate reruns the construction from
(n, k, seed) and must reproduce the square cell for cell.

compute_E mirrors the recursive step of the spectrum theorem: the set of
counts the general routes prove attainable for order n, assuming all smaller
orders are settled.  It uses the mathematical reach of each route, which for
two of them (anti-commutative holes at every order, arbitrary derangement
collision counts) is wider than what witness() can build directly; witness
covers the difference with its curated squares and the walk.  driver_constants
packages the four interval bounds that make compute_E(n) cover everything
from order 28 on.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .core import Square, check, count_commuting, paste
from .errors import (
    ConstructionError,
    ImpossibleTargetError,
    InvalidTargetError,
)
from .generators import anti_commutative, commutative
from .holes import (
    anti_commutative_hole,
    collided_symmetric_hole,
    commutative_hole,
    permuted_symmetric_hole,
)
from .cyclic import cyclic_with_fixed_points
from .perms import beta
from .spectrum import band, spectrum_C
from .switching import apply_recipe, high_counts, row_cycles, switch
from .tables import BASE_SQUARES, SWITCH_RECIPES, base_square

SCHEMA_VERSION = 1


def admissible(n: int):
    """The attainable commuting counts for order n, as an AdmissibleSet."""
    return spectrum_C(n)


def is_admissible(n: int, k: int) -> bool:
    """True when some square of order n has exactly k commuting pairs."""
    return k in spectrum_C(n)


@dataclass(frozen=True)
class WitnessCertificate:
    """A constructed square, its recount, and the route tree that built it."""

    n: int
    k_target: int
    k_recounted: int
    square: Square
    trace: dict
    seed: int

    def as_dict(self) -> dict:
        return {
            "schema_version": SCHEMA_VERSION,
            "n": self.n,
            "k_target": self.k_target,
            "k_recounted": self.k_recounted,
            "square": [list(row) for row in self.square.cells],
            "trace": self.trace,
            "seed": self.seed,
        }

    def verify(self) -> bool:
        """Revalidate the square and recount it against the target."""
        check(self.square)
        got = count_commuting(self.square)
        return got == self.k_recounted == self.k_target


_MEMO: dict = {}


def witness(n: int, k: int, seed: int = 0) -> WitnessCertificate:
    """A certificate for a square of order n with exactly k commuting pairs.

    Raises InvalidTargetError when k is outside the admissible band and
    ImpossibleTargetError for the two small-order exceptions.  Deterministic
    per (n, k, seed) and memoized.
    """
    key = (n, k, seed)
    if key not in _MEMO:
        _MEMO[key] = _build(n, k, seed, {})
    return _MEMO[key]


def replay(cert: WitnessCertificate) -> bool:
    """Rerun the construction from scratch and compare with the certificate."""
    fresh = _build(cert.n, cert.k_target, cert.seed, {})
    return fresh.as_dict() == cert.as_dict()


def _build(n: int, k: int, seed: int, memo: dict) -> WitnessCertificate:
    key = (n, k)
    if key in memo:
        return memo[key]
    if n < 1:
        raise ValueError("orders start at 1")
    if k not in band(n):
        raise InvalidTargetError(n, k, spectrum_C(n).nearest(k))
    if k not in spectrum_C(n):
        raise ImpossibleTargetError(n, k)
    square, trace = _attempt(n, k, seed, memo)
    got = count_commuting(square)
    if got != k:
        raise ConstructionError(
            f"witness for n={n} k={k} recounts to {got}"
        )
    cert = WitnessCertificate(
        n=n, k_target=k, k_recounted=got, square=square, trace=trace, seed=seed
    )
    memo[key] = cert
    return cert


def _paste_inner(n, m, ell, seed, memo, outer, rule, params):
    inner = _build(m, ell, seed, memo)
    square = paste(outer, inner.square)
    trace = {"rule": rule, "params": params, "children": [inner.trace]}
    return square, trace


def _attempt(n: int, k: int, seed: int, memo: dict):
    if k == n * n:
        return commutative(n), {"rule": "commutative", "params": {}, "children": []}
    if k == n:
        return (
            anti_commutative(n),
            {"rule": "anti-commutative", "params": {}, "children": []},
        )
    if n in BASE_SQUARES and k == BASE_SQUARES[n][0]:
        return (
            base_square(n),
            {"rule": "curated-base", "params": {}, "children": []},
        )
    if (n, k) in SWITCH_RECIPES:
        recipe = SWITCH_RECIPES[(n, k)]
        return (
            apply_recipe(base_square(n), recipe),
            {
                "rule": "curated-switches",
                "params": {"recipe": [list(step) for step in recipe]},
                "children": [],
            },
        )

    # anti-commutative hole, then a witness for the leftover pasted inside
    for m in range(n // 2, 0, -1):
        if not _anti_hole_supported(n, m):
            continue
        ell = k - (n - m)
        if ell in spectrum_C(m):
            return _paste_inner(
                n, m, ell, seed, memo,
                anti_commutative_hole(n, m),
                "anti-hole-paste", {"m": m},
            )

    # deranged base rows over a symmetric hole, collision count absorbed
    for m in _kconds_orders(n):
        j = kconds_feasible_j(n, m, k)
        if j is None:
            continue
        outer, hits = collided_symmetric_hole(n, m, j, seed=seed)
        ell = k - (n - j - m) * (n - j + m) - hits
        if ell not in spectrum_C(m):
            raise ConstructionError(
                f"collision leftover {ell} fell outside order {m} for "
                f"n={n} k={k} j={j}"
            )
        return _paste_inner(
            n, m, ell, seed, memo, outer,
            "deranged-hole-paste", {"m": m, "j": j, "i": hits},
        )

    # fully symmetric hole
    for m in range(1, n // 2 + 1):
        if n % 2 and m % 2 == 0:
            continue
        ell = k - (n * n - m * m)
        if ell in spectrum_C(m):
            return _paste_inner(
                n, m, ell, seed, memo,
                commutative_hole(n, m),
                "symmetric-hole-paste", {"m": m},
            )

    # cyclic seed with j commuting hole rows
    for m in range((n + 2) // 3, (n - 1) // 2 + 1):
        if 2 * m >= n:
            continue
        km = n - m
        s = max(2 * m - km, m - 1 - (km - 2) // 4)
        for j in range(0, s + 1):
            if j < s and j > m - 2:
                continue
            ell = k - (2 * j + 1) * (n - m)
            if ell in spectrum_C(m):
                return _paste_inner(
                    n, m, ell, seed, memo,
                    cyclic_with_fixed_points(n, m, j)[0],
                    "cyclic-hole-paste", {"m": m, "j": j},
                )

    # symmetric hole with j hole rows cycled away
    for m in range(1, n // 2 + 1):
        if n % 2 and m % 2 == 0:
            continue
        for j in range(2, m + 1):
            ell = k - (n + m - 2 * j) * (n - m)
            if ell in spectrum_C(m):
                return _paste_inner(
                    n, m, ell, seed, memo,
                    permuted_symmetric_hole(n, m, j),
                    "cycled-hole-paste", {"m": m, "j": j},
                )

    # the switching band below n^2
    gap = n * n - k
    if n >= 6 and gap % 2 == 0 and 3 <= gap // 2 <= 2 * n - 6:
        return (
            high_counts(n, k, seed=seed),
            {"rule": "switching-band", "params": {"a": gap // 2}, "children": []},
        )

    return _walk(n, k, seed)


def _anti_hole_supported(n: int, m: int) -> bool:
    if n == 2 * m:
        return m != 2
    if 2 * m < n <= 3 * m:
        return True
    return n == 3 * m + 2 and m >= 2 and m % 2 == 0


def _kconds_orders(n: int):
    """Hole orders to try for the collision route: q, r, then the rest."""
    out = []
    for m in [_driver_q(n), _driver_r(n)] + list(range(n // 2, 0, -1)):
        if not 1 <= m <= n // 2 or m in (4, 5) or (n % 2 and m % 2 == 0):
            continue
        if m not in out:
            out.append(m)
    return out


def _driver_q(n: int) -> int:
    if n % 2 == 0:
        return n // 2
    if n % 4 == 3:
        return (n - 1) // 2
    return (n - 3) // 2


def _driver_r(n: int) -> int:
    r = (n - 1) // 3
    if n % 2 and r % 2 == 0:
        r -= 1
    return r


def kconds_feasible_j(n: int, m: int, k: int):
    """Smallest j making the collision route land on k, or None.

    Needs beta(j) + m <= k - (n-j-m)(n-j+m) <= j + m^2 - 6 for some j
    in 2..n-m; any collision count the derangement sampler produces then
    leaves a leftover the order-m spectrum contains.
    """
    for j in range(2, n - m + 1):
        slack = k - (n - j - m) * (n - j + m)
        if beta(j) + m <= slack <= j + m * m - 6:
            return j
    return None


def _walk(n: int, k: int, seed: int):
    """Seeded switching walk, the fallback for targets no route reaches."""
    rng = random.Random(seed * 1_000_003 + n * 10_007 + k)
    starts = [("commutative", commutative(n))]
    if n != 2:
        starts.insert(0, ("anti-commutative", anti_commutative(n)))
    if n in BASE_SQUARES:
        starts.append(("curated-base", base_square(n)))
    starts.sort(key=lambda pair: abs(count_commuting(pair[1]) - k))
    for label, start in starts:
        for restart in range(12):
            cur = start
            cur_gap = abs(count_commuting(cur) - k)
            for step in range(2500):
                i, j = rng.sample(range(n), 2)
                cycles = row_cycles(cur, i, j)
                cyc = cycles[rng.randrange(len(cycles))]
                if len(cyc) == n and len(cycles) == 1:
                    continue
                nxt = switch(cur, cyc)
                gap = abs(count_commuting(nxt) - k)
                if gap <= cur_gap:
                    cur, cur_gap = nxt, gap
                if cur_gap == 0:
                    return cur, {
                        "rule": "switching-walk",
                        "params": {
                            "start": label,
                            "restart": restart,
                            "steps": step + 1,
                        },
                        "children": [],
                    }
    raise ConstructionError(
        f"no construction route reaches k={k} at order {n}"
    )


@dataclass(frozen=True)
class DriverConstants:
    """The four interval bounds behind the large-order coverage argument.

    For orders of at least 28 the intervals [x1, x2], [x3, x4], [x5, x6]
    and [x7, x8] chain together (x2 >= x3, x4 >= x5, x6 >= x7) and stretch
    from n to n^2 - 6, so with the top value n^2 every admissible count is
    reached: the first interval by anti-commutative-hole pasting, the middle
    two by the collision route with hole orders q and r, the last by
    symmetric-hole pasting.
    """

    n: int
    q: int
    r: int
    x1: int
    x2: int
    x3: int
    x4: int
    x5: int
    x6: int
    x7: int
    x8: int

    def chain_ok(self) -> bool:
        return self.x2 >= self.x3 and self.x4 >= self.x5 and self.x6 >= self.x7


def driver_constants(n: int) -> DriverConstants:
    """Interval bounds for order n; defined from order 28 up."""
    if n < 28:
        raise ValueError("driver constants cover orders 28 and up")
    q = _driver_q(n)
    r = _driver_r(n)

    def f1(a, b):
        return b + (a - b) * (2 * a - 2 * b - 3) // (a - b - 2)

    def f2(a, b):
        return a * a - 2 * a - b * b + b + 1

    return DriverConstants(
        n=n, q=q, r=r,
        x1=n,
        x2=n + q * q - q - 6,
        x3=f1(n, q),
        x4=f2(n, q),
        x5=f1(n, r),
        x6=f2(n, r),
        x7=n * n - q * q + q,
        x8=n * n - 6,
    )


def compute_E(n: int) -> frozenset:
    """Counts the general routes prove attainable for order n.

    Assumes every order up to n // 2 attains its full spectrum, which is the
    induction hypothesis of the spectrum theorem.  Equals the attainable set
    for every n from 11 on; at order 10 the closure misses exactly {28},
    which the curated order-10 square covers.
    """
    if n < 1:
        raise ValueError("orders start at 1")
    D = band(n).values
    out = {n * n}
    if n != 2:
        out.add(n)
    inner_sets = {m: spectrum_C(m).values for m in range(1, n // 2 + 1)}

    for m, inner in inner_sets.items():
        if n % 2 == 0 or m % 2:
            for ell in inner:
                out.add(n * n - m * m + ell)
            for j in range(2, m + 1):
                gain = (n + m - 2 * j) * (n - m)
                for ell in inner:
                    out.add(gain + ell)
        if n > 2 and (n, m) != (4, 2):
            for ell in inner:
                out.add(n - m + ell)
        if (n + 2) // 3 <= m and 2 * m < n:
            km = n - m
            s = max(2 * m - km, m - 1 - (km - 2) // 4)
            for j in range(0, s + 1):
                gain = (2 * j + 1) * (n - m)
                for ell in inner:
                    out.add(gain + ell)

    for m in inner_sets:
        if m in (4, 5) or (n % 2 and m % 2 == 0):
            continue
        for k in D:
            if k not in out and kconds_feasible_j(n, m, k) is not None:
                out.add(k)

    if n >= 6:
        for a in range(3, 2 * n - 5):
            out.add(n * n - 2 * a)

    return frozenset(out & D)
