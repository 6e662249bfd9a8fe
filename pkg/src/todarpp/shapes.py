"""Partitions, conjugates with extended indexing, and bounded reverse plane
partitions.

Index conventions: rows i and columns j of a shape are 1-based.  Extended
accessors continue a partition outside its support the way the staircase
geometry needs: parts are c for i <= 0 and 0 for i > r, column heights are r
for j <= 0 and 0 for j > c.
"""

from __future__ import annotations

from typing import Iterator


class PartitionShape:
    """A weakly decreasing tuple of positive integers."""

    __slots__ = ("parts",)

    def __init__(self, parts=()):
        parts = tuple(int(p) for p in parts)
        for a, b in zip(parts, parts[1:]):
            if a < b:
                raise ValueError(f"parts must be weakly decreasing, got {parts}")
        if parts and parts[-1] <= 0:
            raise ValueError(f"parts must be positive, got {parts}")
        object.__setattr__(self, "parts", parts)

    @staticmethod
    def from_string(text: str) -> "PartitionShape":
        text = text.strip()
        if not text:
            return PartitionShape()
        return PartitionShape(int(p) for p in text.split(","))

    @property
    def rows(self) -> int:
        return len(self.parts)

    @property
    def cols(self) -> int:
        return self.parts[0] if self.parts else 0

    def size(self) -> int:
        return sum(self.parts)

    def conjugate(self) -> "PartitionShape":
        return PartitionShape(
            sum(1 for p in self.parts if p >= j) for j in range(1, self.cols + 1)
        )

    def part_ext(self, i: int) -> int:
        """Part i, extended by c for i <= 0 and 0 beyond the last row."""
        if i <= 0:
            return self.cols
        if i > self.rows:
            return 0
        return self.parts[i - 1]

    def conj_ext(self, j: int) -> int:
        """Conjugate part j, extended by r for j <= 0 and 0 beyond the last column."""
        if j <= 0:
            return self.rows
        return sum(1 for p in self.parts if p >= j)

    def contains(self, i: int, j: int) -> bool:
        return 1 <= i <= self.rows and 1 <= j <= self.parts[i - 1]

    def cells(self) -> Iterator[tuple]:
        for i, p in enumerate(self.parts, start=1):
            for j in range(1, p + 1):
                yield (i, j)

    def __iter__(self):
        return iter(self.parts)

    def __len__(self):
        return len(self.parts)

    def __eq__(self, other):
        if isinstance(other, PartitionShape):
            return self.parts == other.parts
        if isinstance(other, tuple):
            return self.parts == other
        return NotImplemented

    def __hash__(self):
        return hash(self.parts)

    def __str__(self):
        return ",".join(str(p) for p in self.parts)

    def __repr__(self):
        return f"PartitionShape({self.parts})"


class RppTable:
    """A filling of a shape, weakly increasing along rows and columns,
    entries in [0, n]."""

    __slots__ = ("shape", "bound", "entries")

    def __init__(self, shape: PartitionShape, bound: int, entries):
        entries = tuple(tuple(int(x) for x in row) for row in entries)
        if len(entries) != shape.rows:
            raise ValueError(f"expected {shape.rows} rows, got {len(entries)}")
        for i, row in enumerate(entries):
            if len(row) != shape.parts[i]:
                raise ValueError(f"row {i + 1} has length {len(row)}, expected {shape.parts[i]}")
            for j, v in enumerate(row):
                if not 0 <= v <= bound:
                    raise ValueError(f"entry {v} at ({i + 1},{j + 1}) outside [0, {bound}]")
                if j > 0 and row[j - 1] > v:
                    raise ValueError(f"row {i + 1} not weakly increasing")
                if i > 0 and j < len(entries[i - 1]) and entries[i - 1][j] > v:
                    raise ValueError(f"column {j + 1} not weakly increasing")
        object.__setattr__(self, "shape", shape)
        object.__setattr__(self, "bound", bound)
        object.__setattr__(self, "entries", entries)

    def entry(self, i: int, j: int) -> int:
        return self.entries[i - 1][j - 1]

    def trace(self, l: int) -> int:
        """Sum of entries on the diagonal j - i = l."""
        total = 0
        for i, row in enumerate(self.entries, start=1):
            j = i + l
            if 1 <= j <= len(row):
                total += row[j - 1]
        return total

    def size(self) -> int:
        return sum(sum(row) for row in self.entries)

    def to_json(self):
        return [list(row) for row in self.entries]

    def __eq__(self, other):
        if not isinstance(other, RppTable):
            return NotImplemented
        return (self.shape, self.bound, self.entries) == (other.shape, other.bound, other.entries)

    def __hash__(self):
        return hash((self.shape, self.bound, self.entries))

    def __str__(self):
        return "/".join(" ".join(str(v) for v in row) for row in self.entries)

    def __repr__(self):
        return f"RppTable({self})"


def empty_rpp(shape: PartitionShape, bound: int) -> RppTable:
    return RppTable(shape, bound, [[0] * p for p in shape.parts])


def enumerate_rpp(shape: PartitionShape, bound: int) -> Iterator[RppTable]:
    """Stream every reverse plane partition of the shape with parts <= bound.

    Cells are filled in row-major order, each entry running from
    max(left neighbor, upper neighbor) to the bound, so tables come out in
    lexicographic order without duplicates and with O(cells) state.
    """
    if bound < 0:
        raise ValueError("bound must be nonnegative")
    r = shape.rows
    if r == 0:
        yield RppTable(shape, bound, [])
        return
    parts = shape.parts
    rows = [[0] * p for p in parts]
    cells = [(i, j) for i in range(r) for j in range(parts[i])]

    def lo(i, j):
        left = rows[i][j - 1] if j > 0 else 0
        up = rows[i - 1][j] if i > 0 and j < parts[i - 1] else 0
        return max(left, up)

    def fill(k: int):
        if k == len(cells):
            yield RppTable(shape, bound, [row[:] for row in rows])
            return
        i, j = cells[k]
        for v in range(lo(i, j), bound + 1):
            rows[i][j] = v
            yield from fill(k + 1)
        rows[i][j] = 0

    yield from fill(0)


def rpp_count(shape: PartitionShape, bound: int) -> int:
    return sum(1 for _ in enumerate_rpp(shape, bound))


def shapes_with_at_most(cells: int) -> Iterator[PartitionShape]:
    """All nonempty partitions with size <= cells, in (size, lex) order."""
    for n in range(1, cells + 1):
        yield from _partitions_of(n)


def _partitions_of(n: int, cap: int | None = None) -> Iterator[PartitionShape]:
    if cap is None:
        cap = n
    if n == 0:
        yield PartitionShape()
        return
    for first in range(min(n, cap), 0, -1):
        for rest in _partitions_of(n - first, first):
            yield PartitionShape((first,) + rest.parts)
