from __future__ import annotations


class BettiVector(tuple):
    """Betti numbers ``b_0 .. b_d`` indexed by homological degree."""

    def __new__(cls, values=()):
        values = tuple(values)
        for b in values:
            if not isinstance(b, int) or isinstance(b, bool) or b < 0:
                raise ValueError(f"Betti numbers must be nonnegative ints, got {b!r}")
        return super().__new__(cls, values)

    @property
    def top_degree(self) -> int:
        return len(self) - 1

    def euler(self) -> int:
        return sum((-1) ** i * b for i, b in enumerate(self))

    def is_palindromic(self) -> bool:
        return tuple(self) == tuple(reversed(self))

    def __repr__(self):
        return f"BettiVector({tuple(self)!r})"
