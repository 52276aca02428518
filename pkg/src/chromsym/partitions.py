"""Integer partitions, compositions, diagrams, and the dominance order."""

from __future__ import annotations

from collections import Counter
from collections.abc import Iterable, Iterator

from .errors import EmptyPartitionError, UnequalWeightError


class Partition:
    """A weakly decreasing tuple of positive integers.

    The empty partition (of 0) is allowed everywhere. Instances hash and
    compare like their part tuples, so dicts keyed by Partition can also be
    probed with plain tuples.
    """

    __slots__ = ("parts",)

    def __init__(self, parts: Iterable[int] = ()):
        p = tuple(int(x) for x in parts)
        for i, x in enumerate(p):
            if x < 1:
                raise ValueError(f"partition parts must be >= 1, got {x}")
            if i and p[i - 1] < x:
                raise ValueError(f"partition parts must be weakly decreasing, got {p}")
        self.parts = p

    @property
    def n(self) -> int:
        """The weight, i.e. the sum of the parts."""
        return sum(self.parts)

    @property
    def length(self) -> int:
        """Number of parts."""
        return len(self.parts)

    def multiplicity(self, size: int) -> int:
        """Number of parts equal to `size`."""
        return self.parts.count(size)

    def multiplicities(self) -> Counter:
        """Counter mapping each part size to its multiplicity."""
        return Counter(self.parts)

    def to_json(self) -> list[int]:
        return list(self.parts)

    @classmethod
    def from_json(cls, data: Iterable[int]) -> "Partition":
        return cls(data)

    def __iter__(self):
        return iter(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def __bool__(self) -> bool:
        return bool(self.parts)

    def __eq__(self, other) -> bool:
        if isinstance(other, Partition):
            return self.parts == other.parts
        if isinstance(other, (tuple, list)):
            return self.parts == tuple(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.parts)

    def __repr__(self) -> str:
        return f"Partition{self.parts}"


class Composition:
    """A finite sequence of positive integers where order matters."""

    __slots__ = ("parts",)

    def __init__(self, parts: Iterable[int] = ()):
        p = tuple(int(x) for x in parts)
        for x in p:
            if x < 1:
                raise ValueError(f"composition parts must be >= 1, got {x}")
        self.parts = p

    @property
    def n(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def __bool__(self) -> bool:
        return bool(self.parts)

    def __eq__(self, other) -> bool:
        if isinstance(other, Composition):
            return self.parts == other.parts
        if isinstance(other, (tuple, list)):
            return self.parts == tuple(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.parts)

    def __repr__(self) -> str:
        return f"Composition{self.parts}"


class Diagram:
    """The cells of a partition shape.

    Cells are (row, column) pairs, 1-indexed, rows numbered from the top and
    columns from the left. Cell (r, c) is present iff c <= shape[r - 1].
    """

    __slots__ = ("shape", "cells")

    def __init__(self, shape):
        self.shape = aspartition(shape)
        self.cells = frozenset(
            (r, c)
            for r, row_len in enumerate(self.shape.parts, start=1)
            for c in range(1, row_len + 1)
        )

    def __contains__(self, cell) -> bool:
        return cell in self.cells

    def __len__(self) -> int:
        return len(self.cells)

    def __repr__(self) -> str:
        return f"Diagram({self.shape!r})"


def aspartition(parts) -> Partition:
    """Coerce a Partition, tuple, or other iterable of ints to a Partition."""
    if isinstance(parts, Partition):
        return parts
    return Partition(parts)


def sort_to_partition(kappa) -> Partition:
    """Rearrange the parts of a composition into weakly decreasing order."""
    if isinstance(kappa, Composition):
        kappa = kappa.parts
    return Partition(sorted(kappa, reverse=True))


def dominates(lam, mu) -> bool:
    """True iff every prefix sum of `lam` is >= the matching prefix sum of `mu`.

    Both arguments must be partitions of the same weight; shorter ones are
    padded with zeros.
    """
    lam = aspartition(lam)
    mu = aspartition(mu)
    if lam.n != mu.n:
        raise UnequalWeightError(
            f"dominance compares partitions of equal weight, got {lam.n} and {mu.n}"
        )
    acc_l = acc_m = 0
    for i in range(max(len(lam), len(mu))):
        acc_l += lam.parts[i] if i < len(lam) else 0
        acc_m += mu.parts[i] if i < len(mu) else 0
        if acc_l < acc_m:
            return False
    return True


def is_balanced(lam) -> bool:
    """True iff the largest part exceeds the smallest by at most one."""
    lam = aspartition(lam)
    if not lam:
        raise EmptyPartitionError("balancedness is undefined for the empty partition")
    return lam.parts[0] <= lam.parts[-1] + 1


def partitions_of(
    n: int, max_part: int | None = None, max_length: int | None = None
) -> Iterator[Partition]:
    """Yield the partitions of n in reverse-lexicographic (descending) order.

    Optional `max_part` and `max_length` restrict the largest part and the
    number of parts. The descending order makes triangular solves against the
    dominance order a forward substitution.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    cap = n if max_part is None else min(max_part, n)
    slots = n if max_length is None else max_length

    def rec(remaining, largest, room):
        if remaining == 0:
            yield ()
            return
        if room == 0 or largest == 0:
            return
        for first in range(min(largest, remaining), 0, -1):
            # once the tail cannot absorb the rest, smaller first parts cannot either
            if remaining - first > first * (room - 1):
                break
            for rest in rec(remaining - first, first, room - 1):
                yield (first, *rest)

    for parts in rec(n, cap, slots):
        yield Partition(parts)
