"""Regular staircase subsets of Z^2 in matrix coordinates and their weighted
lattice paths.

Matrix coordinates: i grows southward, j eastward; paths take north steps
(i -> i-1) and east steps (j -> j+1).  A lattice is the set
{(i, j) : i_top <= i <= i_bot, j >= eta(i)} for a weakly decreasing west
profile eta, with an east column guard j_max beyond which queries fail loudly
instead of silently truncating.

Vertical edges are weighted from a Toda solution: the diagonal through the
north endpoint enters the lattice either at a west boundary point (i-n, j-n),
giving weight a^(i-n, j-n)_n, or else the diagonal through the south endpoint
enters at a north boundary point (i+1-m, j-m) with m >= 1, giving weight
b^(i+1-m, j-m)_m.  For weakly decreasing profiles exactly one rule applies.
Horizontal edges have weight 1.
"""

from __future__ import annotations

from typing import Iterator, NamedTuple

from .errors import DomainError, PreconditionError, WindowError
from .algebra.scalar import Scalar, ONE_SCALAR, ZERO_SCALAR
from .shapes import PartitionShape


class BoundaryFlags(NamedTuple):
    west: bool
    north: bool
    corner: bool
    interior: bool


class RegularLattice:
    __slots__ = ("i_top", "i_bot", "profile", "j_min", "j_max")

    def __init__(self, i_top: int, profile, j_max: int, j_min: int | None = None):
        profile = tuple(int(x) for x in profile)
        if not profile:
            raise ValueError("empty row window")
        for a, b in zip(profile, profile[1:]):
            if b > a:
                raise ValueError(f"west profile must be weakly decreasing, got {profile}")
        object.__setattr__(self, "i_top", i_top)
        object.__setattr__(self, "i_bot", i_top + len(profile) - 1)
        object.__setattr__(self, "profile", profile)
        object.__setattr__(self, "j_min", min(profile) if j_min is None else j_min)
        object.__setattr__(self, "j_max", j_max)
        if j_max < profile[0]:
            raise ValueError("column window ends west of the top row's profile")

    def eta(self, i: int) -> int:
        if not self.i_top <= i <= self.i_bot:
            raise DomainError(f"row {i} outside the window [{self.i_top}, {self.i_bot}]")
        return self.profile[i - self.i_top]

    def member(self, i: int, j: int) -> bool:
        if i < self.i_top or i > self.i_bot:
            return False
        if j < self.profile[i - self.i_top]:
            return False
        if j > self.j_max:
            raise WindowError(
                f"point ({i},{j}) lies in the lattice but beyond the column window {self.j_max}"
            )
        return True

    def boundary_class(self, p) -> BoundaryFlags:
        i, j = p
        if not self.member(i, j):
            raise DomainError(f"({i},{j}) is not in the lattice")
        west = not self.member(i, j - 1)
        north = not self.member(i - 1, j)
        return BoundaryFlags(west, north, west and north, not (west or north))

    def is_convex_corner(self, p) -> bool:
        i, j = p
        return self.member(i, j) and self.boundary_class(p).corner

    def x_of(self, j: int) -> int:
        """Row of the north boundary point of column j."""
        if j > self.j_max:
            raise WindowError(f"column {j} beyond the window {self.j_max}")
        for i in range(self.i_top, self.i_bot + 1):
            if self.profile[i - self.i_top] <= j:
                return i
        raise DomainError(f"column {j} does not meet the lattice window")

    def y_of(self, i: int) -> int:
        """Column of the west boundary point of row i."""
        return self.eta(i)

    def delete_corner(self, p) -> "RegularLattice":
        i, j = p
        if not self.is_convex_corner(p):
            raise PreconditionError(f"({i},{j}) is not a convex corner")
        if j + 1 > self.j_max:
            raise WindowError("deleting the corner would empty the row within the window")
        profile = list(self.profile)
        profile[i - self.i_top] += 1
        return RegularLattice(self.i_top, profile, self.j_max, self.j_min)

    def points(self) -> Iterator[tuple]:
        for i in range(self.i_top, self.i_bot + 1):
            for j in range(self.eta(i), self.j_max + 1):
                yield (i, j)

    def to_json(self):
        return {
            "rowWindow": [self.i_top, self.i_bot],
            "profile": list(self.profile),
            "colWindow": [self.j_min, self.j_max],
        }

    def __eq__(self, other):
        if not isinstance(other, RegularLattice):
            return NotImplemented
        return (self.i_top, self.profile, self.j_max) == (other.i_top, other.profile, other.j_max)

    def __repr__(self):
        return f"RegularLattice(rows [{self.i_top},{self.i_bot}], profile {self.profile}, j<= {self.j_max})"


def lattice_from_partition(shape: PartitionShape, margin: int = 0) -> RegularLattice:
    """The staircase region of a partition: row i has west boundary at
    c - lambda_{r-i} (parts extended by c above the shape, 0 below)."""
    if margin < 0:
        raise ValueError("margin must be nonnegative")
    r, c = shape.rows, shape.cols
    profile = [c - shape.part_ext(r - i) for i in range(0, r + margin + 1)]
    return RegularLattice(0, profile, c + margin, 0)


class LatticePath:
    """A start point plus a string of 'N'/'E' steps."""

    __slots__ = ("start", "steps")

    def __init__(self, start, steps: str = ""):
        if set(steps) - {"N", "E"}:
            raise ValueError(f"steps must be over N/E, got {steps!r}")
        object.__setattr__(self, "start", (int(start[0]), int(start[1])))
        object.__setattr__(self, "steps", steps)

    def points(self) -> Iterator[tuple]:
        i, j = self.start
        yield (i, j)
        for s in self.steps:
            if s == "N":
                i -= 1
            else:
                j += 1
            yield (i, j)

    @property
    def end(self) -> tuple:
        i, j = self.start
        n = self.steps.count("N")
        return (i - n, j + len(self.steps) - n)

    def to_json(self):
        return {"start": list(self.start), "steps": self.steps}

    def __eq__(self, other):
        if not isinstance(other, LatticePath):
            return NotImplemented
        return self.start == other.start and self.steps == other.steps

    def __hash__(self):
        return hash((self.start, self.steps))

    def __repr__(self):
        return f"LatticePath({self.start}, {self.steps!r})"


def is_vertex_disjoint(paths) -> bool:
    seen = set()
    for p in paths:
        for pt in p.points():
            if pt in seen:
                return False
            seen.add(pt)
    return True


def tuple_to_json(paths):
    return [p.to_json() for p in paths]


# -- weights ------------------------------------------------------------------


def vertical_edge_weight(lattice: RegularLattice, sol, north_point) -> Scalar:
    """Weight of the vertical edge whose north endpoint is the given point."""
    i, j = north_point
    if not lattice.member(i, j) or not lattice.member(i + 1, j):
        raise DomainError(f"vertical edge below ({i},{j}) is not inside the lattice")
    k = 0
    while lattice.member(i - k - 1, j - k - 1):
        k += 1
    entry = (i - k, j - k)
    if lattice.boundary_class(entry).west:
        return _scalar(sol.a(entry[0], entry[1], k))
    m = 0
    while lattice.member(i - m, j - m - 1):
        m += 1
    entry = (i + 1 - m, j - m)
    if m >= 1 and lattice.boundary_class(entry).north:
        return _scalar(sol.b(entry[0], entry[1], m))
    raise DomainError(
        f"no weight rule applies to the edge below ({i},{j}); profile not weakly decreasing?"
    )


def edge_weight(lattice: RegularLattice, sol, edge) -> Scalar:
    """Weight of a unit edge given as a pair of endpoints."""
    (i1, j1), (i2, j2) = edge
    if not lattice.member(i1, j1) or not lattice.member(i2, j2):
        raise DomainError(f"edge {edge} has an endpoint outside the lattice")
    if abs(i1 - i2) + abs(j1 - j2) != 1:
        raise DomainError(f"{edge} is not a unit edge")
    if i1 == i2:
        return ONE_SCALAR
    north = (min(i1, i2), j1)
    return vertical_edge_weight(lattice, sol, north)


def path_weight(lattice: RegularLattice, sol, path: LatticePath) -> Scalar:
    """Product of edge weights along the path; 1 for the empty path."""
    weight = ONE_SCALAR
    i, j = path.start
    if not lattice.member(i, j):
        raise DomainError(f"path start ({i},{j}) outside the lattice")
    for s in path.steps:
        if s == "N":
            i -= 1
            if not lattice.member(i, j):
                raise DomainError(f"path leaves the lattice at ({i},{j})")
            weight = weight * vertical_edge_weight(lattice, sol, (i, j))
        else:
            j += 1
            if not lattice.member(i, j):
                raise DomainError(f"path leaves the lattice at ({i},{j})")
    return weight


def g_sum(lattice: RegularLattice, sol, frm, to, method: str = "dp") -> Scalar:
    """Sum of path weights over all north/east paths from frm to to."""
    i1, j1 = frm
    i2, j2 = to
    if not lattice.member(i1, j1):
        raise DomainError(f"({i1},{j1}) is not in the lattice")
    if not lattice.member(i2, j2):
        raise DomainError(f"({i2},{j2}) is not in the lattice")
    if method == "enumerate":
        total = ZERO_SCALAR
        for path in enum_paths(lattice, frm, to):
            total = total + path_weight(lattice, sol, path)
        return total
    if method != "dp":
        raise ValueError(f"unknown g_sum method {method!r}")
    if (i1, j1) == (i2, j2):
        return ONE_SCALAR
    if i2 > i1 or j2 < j1:
        return ZERO_SCALAR
    acc: dict = {(i1, j1): ONE_SCALAR}
    for i in range(i1, i2 - 1, -1):
        for j in range(j1, j2 + 1):
            if (i, j) == (i1, j1):
                continue
            if not lattice.member(i, j):
                continue
            total = ZERO_SCALAR
            west = acc.get((i, j - 1))
            if west is not None:
                total = total + west
            south = acc.get((i + 1, j))
            if south is not None:
                total = total + south * vertical_edge_weight(lattice, sol, (i, j))
            if not total.is_zero():
                acc[(i, j)] = total
    return acc.get((i2, j2), ZERO_SCALAR)


def enum_paths(lattice: RegularLattice, frm, to) -> Iterator[LatticePath]:
    """All north/east paths from frm to to inside the lattice."""
    i1, j1 = frm
    i2, j2 = to
    if not lattice.member(i1, j1) or not lattice.member(i2, j2):
        raise DomainError("path endpoints must lie in the lattice")
    if i2 > i1 or j2 < j1:
        return

    def walk(i, j, steps):
        if (i, j) == (i2, j2):
            yield LatticePath((i1, j1), "".join(steps))
            return
        if i > i2 and lattice.member(i - 1, j):
            steps.append("N")
            yield from walk(i - 1, j, steps)
            steps.pop()
        if j < j2 and lattice.member(i, j + 1):
            steps.append("E")
            yield from walk(i, j + 1, steps)
            steps.pop()

    yield from walk(i1, j1, [])


def ni_endpoints(lattice: RegularLattice, s: int, t: int, n: int):
    """Endpoint pattern of the non-intersecting n-tuples rooted at (s, t)."""
    ys = lattice.y_of(s)
    xt = lattice.x_of(t)
    return [((s + k, ys + k), (xt + k, t + k)) for k in range(n)]


def enum_ni_tuples(lattice: RegularLattice, s: int, t: int, n: int) -> Iterator[tuple]:
    """Stream the vertex-disjoint tuples (P_0, ..., P_{n-1}) where P_k runs
    from (s+k, y(s)+k) to (x(t)+k, t+k)."""
    if not lattice.member(s, t):
        raise DomainError(f"({s},{t}) is not in the lattice")
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        yield ()
        return
    ends = ni_endpoints(lattice, s, t, n)
    for frm, to in ends:
        if not lattice.member(*frm) or not lattice.member(*to):
            raise WindowError(f"tuple endpoint {frm}->{to} outside the lattice window")

    used: set = set()
    chosen: list = []

    def place(k: int):
        if k == n:
            yield tuple(chosen)
            return
        frm, to = ends[k]
        for path in enum_paths(lattice, frm, to):
            pts = list(path.points())
            if any(p in used for p in pts):
                continue
            used.update(pts)
            chosen.append(path)
            yield from place(k + 1)
            chosen.pop()
            used.difference_update(pts)

    yield from place(0)


def _scalar(x) -> Scalar:
    return x if isinstance(x, Scalar) else Scalar(x)
