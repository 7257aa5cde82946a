"""Staircases: finite downward-closed subsets of N^2, i.e. integer partitions.

A staircase is stored as its weakly decreasing tuple of row lengths.  Row j
(the second coordinate) has ``parts[j]`` cells, so the cell set is
``{(i, j) : 0 <= j < height, 0 <= i < parts[j]}``.  The empty tuple encodes
the empty staircase.
"""

from __future__ import annotations

MAX_ENUM_SIZE = 40


class StandardSet:
    """A staircase with precomputed shape statistics.

    Attributes:
        parts: weakly decreasing tuple of positive row lengths.
        size: number of cells.
        height: number of rows.
        width: length of the longest row (0 for the empty staircase).
        s1: sum of first coordinates over all cells.
        s2: sum of second coordinates over all cells.

    Instances are treated as immutable; all derived quantities are fixed at
    construction time.
    """

    __slots__ = ("parts", "size", "height", "width", "s1", "s2")

    def __init__(self, parts=()):
        parts = tuple(int(p) for p in parts)
        for i, p in enumerate(parts):
            if p <= 0:
                raise ValueError(f"parts must be positive, got {p} at index {i}")
            if i > 0 and parts[i - 1] < p:
                raise ValueError(f"not weakly decreasing at index {i}")
        self.parts = parts
        self.size = sum(parts)
        self.height = len(parts)
        self.width = parts[0] if parts else 0
        self.s1 = sum(p * (p - 1) // 2 for p in parts)
        self.s2 = sum(j * p for j, p in enumerate(parts))

    def cells(self):
        """Yield the cells (i, j) of the staircase, row by row."""
        for j, p in enumerate(self.parts):
            for i in range(p):
                yield (i, j)

    def transpose(self):
        """Conjugate staircase: the image of the cell set under (i, j) -> (j, i)."""
        cols = [0] * self.width
        for p in self.parts:
            for i in range(p):
                cols[i] += 1
        return StandardSet(cols)

    def moments(self):
        """Coordinate sums (S1, S2) over all cells."""
        return (self.s1, self.s2)

    def contains(self, cell):
        i, j = cell
        return 0 <= j < self.height and 0 <= i < self.parts[j]

    def encode(self):
        """Text form: comma-separated parts, '-' for the empty staircase."""
        return ",".join(str(p) for p in self.parts) if self.parts else "-"

    @classmethod
    def parse(cls, text):
        """Inverse of encode()."""
        text = text.strip()
        if text == "-":
            return cls(())
        try:
            parts = [int(piece) for piece in text.split(",")]
        except ValueError:
            raise ValueError(f"bad staircase encoding {text!r}") from None
        return cls(parts)

    def __eq__(self, other):
        return isinstance(other, StandardSet) and self.parts == other.parts

    def __hash__(self):
        return hash(self.parts)

    def __str__(self):
        return self.encode()

    def __repr__(self):
        return f"StandardSet({list(self.parts)})"


def shape_stats(delta):
    """(size, height, width) of a staircase."""
    return (delta.size, delta.height, delta.width)


def enumerate_staircases(m):
    """All staircases with m cells, in reverse-lexicographic order on parts.

    The first element is the single row [m], the last the single column
    [1]*m.  Bounded at m <= 40 so every derived statistic stays small.
    """
    if m < 0:
        raise ValueError(f"size must be non-negative, got {m}")
    if m > MAX_ENUM_SIZE:
        raise ValueError(f"size bound exceeded: {m} > {MAX_ENUM_SIZE}")
    if m == 0:
        return [StandardSet(())]
    out = []
    parts = [m]
    while True:
        out.append(StandardSet(parts))
        # find the rightmost part that can shrink, then redistribute greedily
        k = len(parts) - 1
        while k >= 0 and parts[k] == 1:
            k -= 1
        if k < 0:
            break
        cap = parts[k] - 1
        parts = parts[:k] + [cap]
        remaining = m - sum(parts)
        while remaining > 0:
            take = min(cap, remaining)
            parts.append(take)
            remaining -= take
    return out
