"""Integer partitions: duals, largest-part removal, exponent notation."""
from __future__ import annotations

from typing import Iterable, Iterator, Tuple

__all__ = ["Partition", "EmptyPartitionError", "partitions_of_weight"]


class EmptyPartitionError(Exception):
    """Raised when removing a part from the empty partition."""


class Partition:
    """A weakly decreasing tuple of positive integers.

    Parts are stored in descending order and zero parts are dropped at
    construction, so equal partitions compare equal structurally.
    """

    __slots__ = ("_parts",)

    def __init__(self, parts: Iterable[int] = ()):
        cleaned = sorted((int(p) for p in parts), reverse=True)
        if cleaned and cleaned[-1] < 0:
            raise ValueError("partition parts must be nonnegative")
        self._parts = tuple(p for p in cleaned if p > 0)

    @property
    def parts(self) -> Tuple[int, ...]:
        return self._parts

    @property
    def weight(self) -> int:
        return sum(self._parts)

    def largest(self) -> int:
        return self._parts[0] if self._parts else 0

    def __len__(self):
        return len(self._parts)

    def __iter__(self):
        return iter(self._parts)

    def __bool__(self):
        return bool(self._parts)

    def __eq__(self, other):
        if isinstance(other, Partition):
            return self._parts == other._parts
        return NotImplemented

    def __hash__(self):
        return hash(self._parts)

    def __repr__(self):
        return "Partition(%s)" % list(self._parts)

    def dual(self) -> "Partition":
        """The transposed Young diagram: column counts become parts."""
        if not self._parts:
            return Partition()
        counts = [0] * self._parts[0]
        for p in self._parts:
            for i in range(p):
                counts[i] += 1
        return Partition(counts)

    def remove_largest_part(self) -> "Partition":
        """Drop one copy of the largest part."""
        if not self._parts:
            raise EmptyPartitionError("cannot remove a part from the empty partition")
        return Partition(self._parts[1:])

    def runs(self) -> Tuple[Tuple[int, int], ...]:
        """Distinct part sizes with multiplicities, sizes descending."""
        out = []
        for p in self._parts:
            if out and out[-1][0] == p:
                out[-1][1] += 1
            else:
                out.append([p, 1])
        return tuple((k, l) for k, l in out)

    def runs_ascending(self) -> Tuple[Tuple[int, int], ...]:
        """Distinct part sizes with multiplicities, sizes ascending."""
        return tuple(reversed(self.runs()))

    def exponent_notation(self) -> str:
        return "{%s}" % " ".join("%d^%d" % (k, l) for k, l in self.runs())

    def to_json(self) -> list:
        return list(self._parts)


def partitions_of_weight(n: int) -> Iterator[Partition]:
    """All partitions of n, in descending lexicographic order."""
    if n < 0:
        raise ValueError("weight must be nonnegative")

    def gen(remaining, cap):
        if remaining == 0:
            yield ()
            return
        for first in range(min(remaining, cap), 0, -1):
            for rest in gen(remaining - first, first):
                yield (first,) + rest

    for parts in gen(n, n):
        yield Partition(parts)
