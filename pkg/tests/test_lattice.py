"""Lattice geometry, boundary classification, edge weights, path sums."""

import random

import pytest
from hypothesis import given, settings, strategies as st

from todarpp.algebra import Scalar, ONE_SCALAR
from todarpp.errors import DomainError, PreconditionError
from todarpp.lattice import (
    LatticePath, RegularLattice, enum_ni_tuples, enum_paths, g_sum,
    is_vertex_disjoint, lattice_from_partition, path_weight,
    vertical_edge_weight, edge_weight,
)
from todarpp.shapes import PartitionShape
from todarpp.toda import (
    SampleFunction, ab_from_f, random_sample_function, with_nonsingular_f,
)


class SymbolSolution:
    """Distinguishable formal values per site, for pinning down which rule fired."""

    def a(self, s, t, n):
        return Scalar.variable(f"a({s},{t})", n)

    def b(self, s, t, n):
        return Scalar.variable(f"b({s},{t})", n)


SYM = SymbolSolution()


def quarter_plane(size=8):
    return RegularLattice(0, [0] * (size + 1), size, 0)


def test_lattice_from_partition_profile():
    lat = lattice_from_partition(PartitionShape((2, 1)), margin=1)
    assert lat.eta(0) == 1 and lat.eta(1) == 0 and lat.eta(2) == 0
    empty = lattice_from_partition(PartitionShape(), margin=3)
    assert all(empty.eta(i) == 0 for i in range(0, 4))
    fig3 = lattice_from_partition(PartitionShape((5, 4, 4, 2, 1)), margin=4)
    assert [fig3.eta(i) for i in range(0, 6)] == [4, 3, 1, 1, 0, 0]


def test_boundary_classes():
    qp = quarter_plane()
    c = qp.boundary_class((0, 0))
    assert c.corner and c.west and c.north
    n = qp.boundary_class((0, 5))
    assert n.north and not n.west and not n.corner
    lat = lattice_from_partition(PartitionShape((2, 1)), margin=1)
    assert lat.boundary_class((0, 1)).corner
    assert lat.boundary_class((1, 0)).corner
    assert not lat.boundary_class((1, 1)).west
    with pytest.raises(DomainError):
        qp.boundary_class((-1, 0))


def test_x_of_y_of():
    lat = lattice_from_partition(PartitionShape((2, 1)), margin=1)
    assert lat.x_of(0) == 1
    assert lat.x_of(1) == 0
    assert lat.y_of(0) == 1
    qp = quarter_plane()
    assert all(qp.x_of(j) == 0 for j in range(0, 6))
    with pytest.raises(DomainError):
        RegularLattice(0, [3, 2], 5).x_of(1)


def test_delete_corner():
    qp = quarter_plane(4)
    smaller = qp.delete_corner((0, 0))
    assert smaller.eta(0) == 1 and smaller.eta(1) == 0
    assert not smaller.member(0, 0)
    lat = lattice_from_partition(PartitionShape((2, 1)), margin=1)
    bigger = lat.delete_corner((0, 1))
    assert bigger.eta(0) == 2
    with pytest.raises(PreconditionError):
        qp.delete_corner((1, 1))


FIG2 = RegularLattice(-1, [4, 4, 3, 1, 1, 0, 0], 5)


def test_edge_weights_figure_instance():
    w = vertical_edge_weight(FIG2, SYM, (2, 1))
    assert w == Scalar.variable("a(2,1)", 0)
    w = vertical_edge_weight(FIG2, SYM, (2, 3))
    assert w == Scalar.variable("b(2,2)", 1)
    w = vertical_edge_weight(FIG2, SYM, (4, 0))
    assert w == Scalar.variable("a(4,0)", 0)
    w = vertical_edge_weight(FIG2, SYM, (4, 1))
    assert w == Scalar.variable("b(4,0)", 1)
    assert edge_weight(FIG2, SYM, ((3, 2), (3, 3))) == ONE_SCALAR
    with pytest.raises(DomainError):
        edge_weight(FIG2, SYM, ((0, 3), (1, 3)))


def rule_a_applies(lat, i, j):
    n = 0
    while True:
        if not lat.member(i - n, j - n):
            return None
        if lat.boundary_class((i - n, j - n)).west:
            return n
        n += 1


def rule_b_applies(lat, i, j):
    m = 0
    while True:
        if not lat.member(i + 1 - m, j - m):
            return None
        if lat.boundary_class((i + 1 - m, j - m)).north:
            return m
        m += 1


def random_profile(rng, rows=5, width=6):
    vals = sorted((rng.randint(0, width) for _ in range(rows)), reverse=True)
    return RegularLattice(0, vals, width + rows + 2, 0)


def test_exactly_one_weight_rule():
    rng = random.Random(7)
    for _ in range(25):
        lat = random_profile(rng)
        for i in range(lat.i_top, lat.i_bot):
            for j in range(lat.eta(i + 1), lat.j_max + 1):
                if not (lat.member(i, j) and lat.member(i + 1, j)):
                    continue
                a_n = rule_a_applies(lat, i, j)
                b_m = rule_b_applies(lat, i, j)
                assert (a_n is None) != (b_m is None), (lat.profile, i, j)
                if b_m is not None:
                    assert b_m >= 1
                # and the implementation applies the same rule
                w = vertical_edge_weight(lat, SYM, (i, j))
                fam = next(iter(w.variables())).family
                assert fam.startswith("a" if a_n is not None else "b")


def test_each_diagonal_one_boundary_point():
    rng = random.Random(11)
    for _ in range(25):
        lat = random_profile(rng)
        west = {}
        north = {}
        for (i, j) in lat.points():
            flags = lat.boundary_class((i, j))
            d = j - i
            if flags.west:
                assert d not in west, "two west boundary points on one diagonal"
                west[d] = (i, j)
            if flags.north:
                assert d not in north, "two north boundary points on one diagonal"
                north[d] = (i, j)
        for d in set(west) & set(north):
            same = west[d] == north[d]
            assert same == lat.is_convex_corner(west[d])


def test_path_weight_examples():
    qp = quarter_plane()

    def body(f):
        sol = ab_from_f(f)
        assert path_weight(qp, sol, LatticePath((2, 2), "")) == ONE_SCALAR
        assert path_weight(qp, sol, LatticePath((2, 2), "E")) == ONE_SCALAR
        # two north steps from (s+n+1, t+n) = (2,1) for the corner (0,0), n=1:
        # lower edge a^(0,0)_1, upper edge b^(0,0)_1
        assert vertical_edge_weight(qp, sol, (1, 1)) == sol.a(0, 0, 1)
        assert vertical_edge_weight(qp, sol, (0, 1)) == sol.b(0, 0, 1)
        assert path_weight(qp, sol, LatticePath((2, 1), "NN")) == sol.a(0, 0, 1) * sol.b(0, 0, 1)

    with_nonsingular_f(random.Random(3), ((0, 10), (0, 10)), body)


def test_g_sum_trivial_cases():
    qp = quarter_plane()

    def body(f):
        sol = ab_from_f(f)
        assert g_sum(qp, sol, (3, 2), (3, 2)) == ONE_SCALAR
        assert g_sum(qp, sol, (3, 2), (3, 4)) == ONE_SCALAR
        assert g_sum(qp, sol, (3, 2), (4, 4)).is_zero()
        assert g_sum(qp, sol, (3, 2), (2, 1)).is_zero()

    with_nonsingular_f(random.Random(5), ((0, 10), (0, 10)), body)


def test_g_sum_corner_case_two_step():
    # south-west to north-east across the corner diagonal of the quarter plane:
    # g((n+1, n) -> (n, n+1)) = a^(0,0)_n + b^(0,0)_{n+1}
    qp = quarter_plane()

    def body(f):
        sol = ab_from_f(f)
        for n in (1, 2, 3):
            got = g_sum(qp, sol, (n + 1, n), (n, n + 1))
            assert got == sol.a(0, 0, n) + sol.b(0, 0, n + 1)

    with_nonsingular_f(random.Random(9), ((0, 10), (0, 10)), body)


def test_g_sum_dp_matches_enumeration():
    rng = random.Random(13)
    for _ in range(6):
        lat = random_profile(rng, rows=4, width=4)
        pts = list(lat.points())
        frm = rng.choice([p for p in pts if p[0] >= lat.i_bot - 1])
        to = rng.choice([p for p in pts if p[0] <= frm[0] and p[1] >= frm[1]])

        def body(f):
            sol = ab_from_f(f)
            dp = g_sum(lat, sol, frm, to)
            brute = g_sum(lat, sol, frm, to, method="enumerate")
            assert dp == brute

        with_nonsingular_f(rng, ((0, 14), (0, 14)), body)


def test_transfer_recurrence():
    lat = quarter_plane(5)

    def body(f):
        sol = ab_from_f(f)
        frm = (4, 0)
        for p in [(2, 2), (3, 1), (1, 3)]:
            i, j = p
            total = g_sum(lat, sol, frm, p)
            west = g_sum(lat, sol, frm, (i, j - 1)) if j > 0 else Scalar(0)
            south = g_sum(lat, sol, frm, (i + 1, j))
            w = vertical_edge_weight(lat, sol, p)
            assert total == west + south * w

    with_nonsingular_f(random.Random(21), ((0, 12), (0, 12)), body)


def test_lemma_corner_deletion_invariance():
    rng = random.Random(31)
    trials = 0
    while trials < 10:
        lat = random_profile(rng, rows=4, width=4)
        corners = [p for p in lat.points() if lat.is_convex_corner(p)]
        if not corners:
            continue
        corner = rng.choice(corners)
        smaller = lat.delete_corner(corner)
        d = corner[0] - corner[1]
        pts = [p for p in smaller.points() if p[0] - p[1] != d]

        def body(f):
            sol = ab_from_f(f)
            pairs = 0
            for _ in range(40):
                frm = rng.choice(pts)
                to = rng.choice(pts)
                if to[0] > frm[0] or to[1] < frm[1]:
                    continue
                before = g_sum(lat, sol, frm, to)
                after = g_sum(smaller, sol, frm, to)
                assert before == after, (lat.profile, corner, frm, to)
                pairs += 1
                if pairs >= 6:
                    break

        with_nonsingular_f(rng, ((0, 16), (0, 16)), body)
        trials += 1


def test_enum_paths_counts():
    qp = quarter_plane()
    paths = list(enum_paths(qp, (2, 0), (0, 2)))
    assert len(paths) == 6  # binomial(4, 2)
    assert all(p.end == (0, 2) for p in paths)
    assert len(set(p.steps for p in paths)) == 6


def test_enum_ni_tuples_small():
    qp = quarter_plane()
    assert list(enum_ni_tuples(qp, 2, 2, 0)) == [()]
    singles = list(enum_ni_tuples(qp, 2, 2, 1))
    assert len(singles) == len(list(enum_paths(qp, (2, 0), (0, 2))))
    pairs = list(enum_ni_tuples(qp, 2, 2, 2))
    # oracle: filter the full cartesian product by vertex-disjointness
    p0 = list(enum_paths(qp, (2, 0), (0, 2)))
    p1 = list(enum_paths(qp, (3, 1), (1, 3)))
    brute = [
        (a, b) for a in p0 for b in p1 if is_vertex_disjoint((a, b))
    ]
    assert len(pairs) == len(brute)
    assert set((a.steps, b.steps) for a, b in pairs) == set(
        (a.steps, b.steps) for a, b in brute
    )
    for tup in pairs:
        assert is_vertex_disjoint(tup)
