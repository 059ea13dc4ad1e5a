"""The two spectra: counts per order, and orders per proportion.

A square of order n commutes on its diagonal and in mirrored off-diagonal
pairs, so its commuting count lies in {n, n + 2, ..., n^2}.  The top of the
band is rigid: n^2 - 2 and n^2 - 4 never occur, and orders 4 and 5 each miss
one more value (10 and 17).  Everything else is attained, which makes the
attainable set for order n

    {n, n + 2, ..., n^2 - 6} plus n^2,

minus the small-order exceptions.  spectrum_C packages that set.

The second spectrum fixes a proportion q = a/b in lowest terms and asks
which orders n admit a square commuting on exactly q of its n^2 cell pairs.
Scaling forces n to be a multiple of sqrt(kb), where k is the squarefree
part of b; writing n = x * sqrt(kb) the count is x^2 * k * a, and the band
constraints above turn into lower bounds and a parity rule on x.  kq
packages that: an arithmetic progression of orders, thinned by parity and
the two small-order exceptions.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt

from .core import count_commuting
from .errors import InvalidTargetError


@dataclass(frozen=True)
class AdmissibleSet:
    """Attainable commuting counts for squares of one order."""

    n: int
    values: frozenset

    def __contains__(self, k: int) -> bool:
        return k in self.values

    def __iter__(self):
        return iter(self.members())

    def __len__(self) -> int:
        return len(self.values)

    def members(self) -> tuple:
        return tuple(sorted(self.values))

    def nearest(self, k: int, width: int = 3) -> list:
        """The width members closest to k, for error messages."""
        return sorted(sorted(self.values, key=lambda v: (abs(v - k), v))[:width])

    def require(self, k: int) -> int:
        """Return k, or raise InvalidTargetError when it is not attainable."""
        if k not in self.values:
            raise InvalidTargetError(self.n, k, self.nearest(k))
        return k


def band(n: int) -> AdmissibleSet:
    """The generic band {n, n+2, ..., n^2 - 6} plus n^2, before exceptions."""
    values = set(range(n, n * n - 5, 2))
    values.add(n * n)
    return AdmissibleSet(n=n, values=frozenset(values))


def spectrum_C(n: int) -> AdmissibleSet:
    """Exactly the commuting counts attained by squares of order n."""
    if n < 1:
        raise ValueError("orders start at 1")
    values = set(band(n).values)
    if n == 4:
        values.discard(10)
    if n == 5:
        values.discard(17)
    return AdmissibleSet(n=n, values=frozenset(values))


@dataclass(frozen=True)
class KqSet:
    """Orders whose squares can commute on exactly a/b of their cell pairs.

    Members are n = x * step for integer x >= x_min, with x even when
    even_only is set, skipping the orders in excluded.  count_at gives the
    commuting count that realizes the proportion at a member order.
    """

    a: int
    b: int
    k: int
    step: int
    x_min: int
    even_only: bool
    excluded: tuple

    def __contains__(self, n: int) -> bool:
        if n < 1 or n % self.step or n in self.excluded:
            return False
        x = n // self.step
        if x < self.x_min:
            return False
        return not (self.even_only and x % 2)

    def count_at(self, n: int) -> int:
        if n not in self:
            raise ValueError(f"order {n} does not attain proportion {self.a}/{self.b}")
        x = n // self.step
        return x * x * self.k * self.a

    def members(self, limit: int) -> tuple:
        return tuple(
            n for n in range(self.step, limit + 1, self.step) if n in self
        )


def kq(a: int, b: int) -> KqSet:
    """The set of orders attaining commuting proportion a/b (0 < a/b <= 1)."""
    if a < 1 or b < 1 or a > b:
        raise ValueError("the proportion must satisfy 0 < a/b <= 1")
    if gcd(a, b) != 1:
        raise ValueError("the proportion must be in lowest terms")

    k = 1
    rest = b
    p = 2
    while p * p <= rest:
        e = 0
        while rest % p == 0:
            rest //= p
            e += 1
        if e % 2:
            k *= p
        p += 1
    k *= rest  # leftover prime appears once

    step = isqrt(k * b)
    if a == b:
        return KqSet(a=a, b=b, k=k, step=1, x_min=1, even_only=False, excluded=())

    x = 1
    while x * x * a * a * k < b:
        x += 1
    x_min = x
    x = 1
    while x * x * k * (b - a) < 6:
        x += 1
    x_min = max(x_min, x)
    even_only = (a - b) % 2 != 0 and k % 2 != 0

    excluded = []
    for n, missing in ((4, 10), (5, 17)):
        if n % step == 0:
            x = n // step
            if x >= x_min and not (even_only and x % 2):
                if x * x * k * a == missing:
                    excluded.append(n)
    return KqSet(
        a=a, b=b, k=k, step=step, x_min=x_min,
        even_only=even_only, excluded=tuple(excluded),
    )


def kq_members(a: int, b: int, limit: int) -> tuple:
    """Orders up to limit attaining commuting proportion a/b."""
    return kq(a, b).members(limit)


def proportion(s) -> Fraction:
    """The commuting count of s as a fraction of its n^2 cell pairs."""
    return Fraction(count_commuting(s), s.n * s.n)
