"""Exception types shared across the package."""


class QuasicommError(Exception):
    """Base class for errors raised by this package."""


class ValidationError(QuasicommError):
    """A square failed a structural check (Latin property, hole shape, ...)."""


class InvalidTargetError(QuasicommError):
    """The requested commuting count is outside the admissible set for the order."""

    def __init__(self, n: int, k: int, nearest: list[int]):
        self.n = n
        self.k = k
        self.nearest = nearest
        near = ", ".join(str(v) for v in nearest)
        super().__init__(
            f"no quasigroup of order {n} can have {k} commuting pairs; "
            f"nearest admissible counts: {near}"
        )


class ImpossibleTargetError(QuasicommError):
    """The target lies in D(n) but is provably unattainable (orders 4 and 5)."""

    def __init__(self, n: int, k: int):
        self.n = n
        self.k = k
        super().__init__(
            f"no quasigroup of order {n} has exactly {k} commuting pairs "
            f"(the order-{n} exception)"
        )


class ConstructionError(QuasicommError):
    """An internal construction step failed to produce the promised object."""


class CompletionError(ConstructionError):
    """Backtracking completion exhausted its restart budget."""


class SeedConditionError(QuasicommError):
    """A diagonally cyclic seed violates one of its three defining conditions."""

    def __init__(self, condition: int, detail: str):
        self.condition = condition
        super().__init__(f"seed condition {condition} violated: {detail}")
