"""Dark rays, portions, depth certificates, and the boundary census.

Derived expectations are frozen from the brute-force oracles in
oracles.py, which recount darkness straight from the blocking
definition.
"""

from __future__ import annotations

import random
from fractions import Fraction

import pytest

from darkgallery.darkness import (
    GuardSet,
    boundary_census,
    collinear_groups,
    dark_portions,
    darkness_at,
    find_collinear_triple,
    find_concurrent_dark_rays,
    has_j_dark,
    max_darkness,
    min_depth,
)
from darkgallery.fixtures import builtin_fixture
from darkgallery.geometry import ConvexPolygon, Point2, centroid

import oracles
from conftest import (
    distinct_interior_points,
    random_affine_map,
    random_convex_polygon,
    random_interior_point,
)

TRIANGLE = ConvexPolygon([Point2(0, 0), Point2(8, 0), Point2(4, 8)])
HALF = Fraction(1, 2)


def test_guard_set_rejects_duplicates():
    with pytest.raises(ValueError):
        GuardSet([Point2(0, 0), Point2(0, 0)])


# --- collinear grouping -----------------------------------------------------

def test_three_generic_guards_make_three_lines():
    lines = collinear_groups([Point2(0, 0), Point2(4, 0), Point2(0, 4)])
    assert len(lines) == 3
    assert all(len(gl.members) == 2 for gl in lines)


def test_collinear_guards_merge_into_one_line():
    lines = collinear_groups([Point2(0, 0), Point2(1, 0), Point2(2, 0)])
    assert len(lines) == 1
    assert [m for m in lines[0].members] == [Point2(0, 0), Point2(1, 0), Point2(2, 0)]


def test_square_fixture_grouping_matches_pairwise_oracle():
    _, gset = builtin_fixture("square")
    lib = sorted(tuple(sorted((str(m.x), str(m.y)) for m in gl.members))
                 for gl in collinear_groups(gset))
    orc = sorted(tuple(sorted((str(m.x), str(m.y)) for m in members))
                 for members in oracles.group_lines_oracle(gset.guards).values())
    assert lib == orc


def test_every_guard_pair_lies_in_exactly_one_line():
    rng = random.Random(5)
    for _ in range(10):
        P = random_convex_polygon(rng, 4)
        guards = distinct_interior_points(rng, P, 6)
        guards.append(guards[0] + (guards[1] - guards[0]) * HALF)  # force a triple
        lines = collinear_groups(guards)
        seen = set()
        for gl in lines:
            ms = list(gl.members)
            for i in range(len(ms)):
                for j in range(i + 1, len(ms)):
                    pair = frozenset((ms[i], ms[j]))
                    assert pair not in seen
                    seen.add(pair)
        g = len(guards)
        assert len(seen) == g * (g - 1) // 2


# --- dark portions ----------------------------------------------------------

def portioned(members):
    lines = collinear_groups(members)
    assert len(lines) == 1
    return dark_portions(lines[0])


def test_two_member_line_has_two_unbounded_portions():
    ports = portioned([Point2(0, 0), Point2(1, 0)])
    unbounded = [p for p in ports if p.blocked_count == 1]
    assert len(unbounded) == 2


def test_three_member_line_blocked_counts_match_definition():
    guards = [Point2(0, 0), Point2(1, 0), Point2(2, 0)]
    ports = portioned(guards)
    ends = [p for p in ports if p.blocked_count == 2]
    gaps = [p for p in ports if p.blocked_count == 1]
    assert len(ends) == 2 and len(gaps) == 2
    # the definition agrees: beyond the last member two guards are hidden,
    # in a gap exactly one is
    assert oracles.darkness_oracle(guards, Point2(3, 0)) == 2
    assert oracles.darkness_oracle(guards, Point2(-1, 0)) == 2
    assert oracles.darkness_oracle(guards, Point2(HALF, 0)) == 1
    assert oracles.darkness_oracle(guards, Point2(Fraction(3, 2), 0)) == 1


def test_four_member_line_blocked_counts():
    guards = [Point2(i, 0) for i in range(4)]
    ports = portioned(guards)
    assert sorted(p.blocked_count for p in ports) == [2, 2, 2, 3, 3]
    assert oracles.darkness_oracle(guards, Point2(9, 0)) == 3
    assert oracles.darkness_oracle(guards, Point2(Fraction(3, 2), 0)) == 2


# --- darkness at a point ----------------------------------------------------

def test_vertex_guards_leave_centroid_bright():
    guards = list(TRIANGLE.vertices)
    c = centroid(guards)
    assert darkness_at(TRIANGLE, guards, c).darkness == 0


def test_one_blocker_one_dark_guard():
    big = ConvexPolygon([Point2(-1, -1), Point2(9, -1), Point2(9, 1), Point2(-1, 1)])
    w = darkness_at(big, [Point2(0, 0), Point2(1, 0)], Point2(2, 0))
    assert w.darkness == 1
    assert w.darkness == oracles.darkness_oracle([Point2(0, 0), Point2(1, 0)], Point2(2, 0))


def test_two_blockers_two_dark_guards():
    big = ConvexPolygon([Point2(-1, -1), Point2(9, -1), Point2(9, 1), Point2(-1, 1)])
    guards = [Point2(0, 0), Point2(1, 0), Point2(2, 0)]
    assert darkness_at(big, guards, Point2(3, 0)).darkness == 2


def test_darkness_at_a_guard_point_sees_itself():
    big = ConvexPolygon([Point2(-1, -1), Point2(9, -1), Point2(9, 1), Point2(-1, 1)])
    guards = [Point2(0, 0), Point2(1, 0), Point2(2, 0)]
    # the guard at (2,0) is hidden from (0,0) but sees itself and (1,0)
    w = darkness_at(big, guards, Point2(2, 0))
    assert w.darkness == 1


def test_witness_invariants_on_random_scenes():
    rng = random.Random(31)
    for _ in range(8):
        P = random_convex_polygon(rng, rng.randint(3, 5))
        guards = distinct_interior_points(rng, P, rng.randint(3, 6))
        w = max_darkness(P, guards)
        assert P.contains(w.point)
        assert w.darkness == sum(count for _line, count in w.contributing_lines)
        assert w.darkness == oracles.darkness_oracle(guards, w.point)


# --- maximum darkness and depth certificates --------------------------------

def test_vertex_guards_have_no_dark_point():
    assert max_darkness(TRIANGLE, list(TRIANGLE.vertices)).darkness == 0


def test_centroid_guard_adds_exactly_one_level_of_darkness():
    guards = list(TRIANGLE.vertices) + [centroid(TRIANGLE.vertices)]
    assert max_darkness(TRIANGLE, guards).darkness == 1
    assert oracles.max_darkness_oracle(TRIANGLE, guards)[0] == 1


def test_five_guards_four_cover_a_triangle():
    # two vertex guards joined by an edge guard, a fifth on the segment
    # from the third vertex to the edge guard: every interior dark
    # portion hides exactly one guard
    P = ConvexPolygon([Point2(0, 0), Point2(4, 0), Point2(2, 4)])
    guards = [Point2(0, 0), Point2(4, 0), Point2(2, 4), Point2(1, 0),
              Point2(Fraction(3, 2), 2)]
    cert = min_depth(P, guards)
    assert cert.g == 5
    assert cert.max_darkness == 1
    assert cert.min_depth == 4
    # points beside the edge guard are hidden from exactly one guard
    assert darkness_at(P, guards, Point2(2, 0)).darkness == 1
    assert darkness_at(P, guards, Point2(HALF, 0)).darkness == 1


def test_min_depth_matches_exhaustive_oracle_on_random_scenes():
    rng = random.Random(47)
    for trial in range(6):
        P = random_convex_polygon(rng, rng.randint(3, 5))
        guards = distinct_interior_points(rng, P, rng.randint(2, 6))
        if trial % 2 == 0:
            guards.append(guards[0] + (guards[1] - guards[0]) * Fraction(1, 3))
        if trial % 3 == 0:
            guards.append(P.vertices[0])
        dark, _ = oracles.max_darkness_oracle(P, guards)
        cert = min_depth(P, guards)
        assert cert.max_darkness == dark
        assert cert.min_depth == len(guards) - dark
        assert 1 <= cert.min_depth <= cert.g


def test_min_depth_rejects_outside_guard():
    with pytest.raises(ValueError):
        min_depth(TRIANGLE, [Point2(100, 100)])


def test_certificates_ignore_guard_order():
    rng = random.Random(13)
    P = random_convex_polygon(rng, 4)
    guards = distinct_interior_points(rng, P, 7)
    guards.append(guards[0] + (guards[1] - guards[0]) * HALF)
    base = min_depth(P, guards)
    for _ in range(4):
        rng.shuffle(guards)
        again = min_depth(P, guards)
        assert again.min_depth == base.min_depth
        assert again.max_darkness == base.max_darkness
        assert again.witness.point == base.witness.point


def test_certificates_survive_affine_maps():
    rng = random.Random(17)
    for _ in range(5):
        P = random_convex_polygon(rng, rng.randint(3, 5))
        guards = distinct_interior_points(rng, P, 5)
        guards.append(guards[0] + (guards[1] - guards[0]) * HALF)
        base = min_depth(P, guards)
        apply, _, _ = random_affine_map(rng)
        Q = ConvexPolygon([apply(v) for v in P.vertices])
        mapped = [apply(g) for g in guards]
        moved = min_depth(Q, mapped)
        assert moved.min_depth == base.min_depth
        assert moved.max_darkness == base.max_darkness


# --- j-dark queries ----------------------------------------------------------

def test_generic_interior_guard_is_never_2_dark():
    rng = random.Random(3)
    T = random_convex_polygon(rng, 3)
    guards = list(T.vertices) + [random_interior_point(rng, T)]
    assert not oracles.has_collinear_triple(guards)
    found, witness = has_j_dark(T, guards, 2)
    assert not found and witness is None


def test_too_many_guards_force_a_2_dark_point():
    rng = random.Random(21)
    for _ in range(3):
        T = random_convex_polygon(rng, 3)
        guards = distinct_interior_points(rng, T, 11)  # beyond the 4n-2 bound
        found, witness = has_j_dark(T, guards, 2)
        assert found
        assert oracles.darkness_oracle(guards, witness.point) >= 2
        assert T.contains(witness.point)


def test_more_guards_than_vertices_force_a_dark_point():
    rng = random.Random(23)
    for n in (3, 4, 5):
        P = random_convex_polygon(rng, n)
        guards = distinct_interior_points(rng, P, n + 1)
        found, witness = has_j_dark(P, guards, 1)
        assert found
        assert oracles.darkness_oracle(guards, witness.point) >= 1


def test_guard_triangle_with_two_interior_guards_is_2_dark():
    rng = random.Random(29)
    for _ in range(10):
        T = random_convex_polygon(rng, 3)
        guards = list(T.vertices) + distinct_interior_points(rng, T, 2)
        if oracles.has_collinear_triple(guards):
            continue
        found, _ = has_j_dark(T, guards, 2)
        assert found


def test_edge_guard_plus_segment_guard_avoids_2_dark():
    # the one five-guard shape that a guard triangle admits: a guard on
    # a polygon edge between two corner guards, and a fifth on the
    # segment from the opposite corner to it
    P = ConvexPolygon([Point2(0, 0), Point2(4, 0), Point2(2, 4)])
    guards = [Point2(0, 0), Point2(4, 0), Point2(2, 4), Point2(1, 0),
              Point2(Fraction(3, 2), 2)]
    found, _ = has_j_dark(P, guards, 2)
    assert not found


# --- collinearity / concurrency helpers --------------------------------------

def test_find_collinear_triple():
    assert find_collinear_triple(
        [Point2(0, 0), Point2(1, 0), Point2(2, 0), Point2(5, 7)]) == (0, 1, 2)
    assert find_collinear_triple([Point2(0, 0), Point2(1, 0), Point2(0, 1)]) is None


def test_find_concurrent_dark_rays():
    # three guard pairs aimed so their outward rays all pass the origin
    conc = [Point2(1, 1), Point2(2, 2), Point2(1, -1), Point2(2, -2),
            Point2(-1, 0), Point2(-2, 0)]
    hit = find_concurrent_dark_rays(conc)
    assert hit is not None
    point, count = hit
    assert point == Point2(0, 0)
    assert count == 3
    assert find_concurrent_dark_rays([Point2(0, 0), Point2(1, 0), Point2(0, 1)]) is None


# --- boundary census ----------------------------------------------------------

SQUARE = ConvexPolygon([Point2(0, 0), Point2(4, 0), Point2(4, 4), Point2(0, 4)])


def test_census_guards_at_vertices_plus_alternating_edges():
    guards = list(SQUARE.vertices) + [Point2(2, 0), Point2(2, 4)]
    cen = boundary_census(SQUARE, guards)
    assert cen.applicable
    assert cen.boundary_total == 6
    assert cen.darkened == 4
    assert cen.identity_holds
    assert sorted(str(w) for w in cen.edge_weights) == ["1", "1", "2", "2"]
    # oracle recount agrees edge by edge
    weights, darkedges, shrunken_ok = oracles.census_oracle(SQUARE, guards)
    assert weights == cen.edge_weights
    assert shrunken_ok
    assert sum(1 for d in darkedges if d) == 4
    assert all(len(d) <= 1 for d in darkedges)


def test_census_one_interior_guard_per_edge():
    guards = [Point2(2, 0), Point2(4, 2), Point2(2, 4), Point2(0, 2)]
    cen = boundary_census(SQUARE, guards)
    assert cen.applicable
    assert cen.boundary_total == 4
    assert cen.darkened == 0
    assert cen.identity_holds


def test_census_flags_a_2_dark_vertex():
    # both endpoints guarded on the bottom edge plus one interior guard
    # on each remaining edge: the apex is hidden from both sides
    T = ConvexPolygon([Point2(0, 0), Point2(6, 0), Point2(3, 6)])
    guards = [Point2(0, 0), Point2(6, 0), Point2(Fraction(9, 2), 3), Point2(Fraction(3, 2), 3)]
    cen = boundary_census(T, guards)
    assert not cen.applicable
    assert "2-dark" in " ".join(cen.reasons)
    # raw counts are still reported
    assert sorted(str(w) for w in cen.edge_weights) == ["1", "3/2", "3/2"]
    assert cen.boundary_total == 4
    assert cen.darkened_vertices == [2]  # the apex, counted once
    assert not cen.identity_holds
    assert max_darkness(T, guards).point == Point2(3, 6)


def test_census_requires_a_guard_on_every_edge():
    T = ConvexPolygon([Point2(0, 0), Point2(6, 0), Point2(3, 6)])
    cen = boundary_census(T, [Point2(3, 0), Point2(Fraction(9, 2), 3)])
    assert not cen.applicable
    assert any("edge" in r for r in cen.reasons)


def test_census_total_is_sum_of_edge_weights():
    rng = random.Random(41)
    for _ in range(6):
        P = random_convex_polygon(rng, rng.randint(3, 6))
        guards = []
        for i, v in enumerate(P.vertices):
            u = P.vertices[(i + 1) % len(P.vertices)]
            guards.append(v + (u - v) * Fraction(rng.randint(1, 7), 8))
            if rng.random() < 0.5:
                guards.append(v)
        cen = boundary_census(P, guards)
        assert cen.boundary_total == sum(cen.edge_weights, Fraction(0))
        weights, _, shrunken_ok = oracles.census_oracle(P, guards)
        assert weights == cen.edge_weights
        assert shrunken_ok
