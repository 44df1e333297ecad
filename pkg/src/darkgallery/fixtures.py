"""Built-in reference placements with exactly-verified coverage depth.

Three worked configurations, each pushing a region to the deepest
coverage its guard count allows (one short of the count itself):

* ``triangle_fixture`` -- 10 guards 9-covering a near-equilateral
  triangle, built from three seed guards replicated by an exact
  one-third turn around the centre.
* ``square_fixture``   -- 14 guards 13-covering a square: two interior
  guards plus a corner cluster replicated by quarter turns.
* ``wedge_fixture``    -- 10 guards 9-covering an unbounded wedge,
  obtained from the triangle placement by a projective map that blows
  the triangle open into the wedge (see ``_drop_horizon``).

Every coordinate is rational, so the certificates in ``darkness`` are
exact; the test suite re-verifies all three placements from scratch.
"""

from __future__ import annotations

from fractions import Fraction

from .darkness import GuardSet
from .geometry import ConvexPolygon, Point2, Wedge

# Rational stand-in for sqrt(3): 13775/7953 differs from the real thing
# by ~1.3e-9.  Nothing below depends on it actually squaring to 3 -- it
# only shapes the triangle and wedge, and every incidence the verifier
# checks is exact in these coordinates.
ROOT3 = Fraction(13775, 7953)


def _third_turn(p: Point2) -> Point2:
    """Linear map of order three fixing the origin.

    For any value of ROOT3 this matrix cubes to the identity, so the
    seed guards below are replicated into exact orbits of size three;
    when ROOT3*ROOT3 == 3 it would be rotation by 120 degrees.  It maps
    each corner of the fixture triangle to the next one exactly.
    """
    return Point2(-p.x / 2 - ROOT3 * p.y / 2, 3 * p.x / (2 * ROOT3) - p.y / 2)


def _quarter_turn(p: Point2) -> Point2:
    """Rotation by 90 degrees about the origin (exact)."""
    return Point2(-p.y, p.x)


# Seed guards for the triangle: one just above the bottom edge, one on
# the bottom edge, one deeper inside.  Their one-third-turn orbits plus
# the centre make 10 guards whose dark rays all leave the triangle
# before meeting each other.
_TRIANGLE_SEEDS = (
    Point2(Fraction(-10257, 100), -97),
    Point2(Fraction(-513, 5), -100),
    Point2(-118, -49),
)

# Corner cluster for the square: a guard near the corner diagonal, one
# close to the left edge, one exactly on it.  Quarter-turn orbits give
# three guards per corner; two interior guards complete the set.
_SQUARE_SEEDS = (
    Point2(-180, -180),
    Point2(-198, Fraction(-1377, 10)),
    Point2(-200, -135),
)

_APEX = Point2(0, 200)
_BASE_Y = Fraction(-100)

# Apex-to-horizon distance for the wedge map: the triangle's base lies
# at depth 300 below the apex, and the horizon line sits 1/100 below
# the base so that guards on the base itself still map to finite points.
_HORIZON_DEPTH = Fraction(300) + Fraction(1, 100)


def triangle_region() -> ConvexPolygon:
    """The fixture triangle: base on y = -100, apex at (0, 200).

    With ROOT3 exactly sqrt(3) it would be equilateral; the rational
    stand-in makes it imperceptibly lopsided and keeps every vertex
    rational.
    """
    half = Fraction(300) / ROOT3
    return ConvexPolygon([
        Point2(-half, _BASE_Y),
        Point2(half, _BASE_Y),
        _APEX,
    ])


def wedge_region() -> Wedge:
    """The fixture wedge: triangle apex plus its two edges, unbounded.

    Edge directions are the primitive integer forms of (-1, -ROOT3) and
    (1, -ROOT3), i.e. the triangle's apex edges continued forever.
    """
    return Wedge(_APEX, Point2(-ROOT3.denominator, -ROOT3.numerator),
                 Point2(ROOT3.denominator, -ROOT3.numerator))


def square_region() -> ConvexPolygon:
    """The fixture square with corners (+-200, +-200)."""
    return ConvexPolygon([
        Point2(-200, -200),
        Point2(200, -200),
        Point2(200, 200),
        Point2(-200, 200),
    ])


def _drop_horizon(p: Point2) -> Point2:
    """Projective map opening the fixture triangle into the wedge.

    The map is a perspectivity centred at the apex: it fixes the apex,
    maps every line through the apex to itself, and sends the
    horizontal line at depth _HORIZON_DEPTH below the apex to infinity.
    Points above that horizon keep their betweenness relations, so the
    blocking structure of a guard set -- which guard hides which from
    where -- survives the map, while the triangle (which lies strictly
    above the horizon) stretches to cover the entire wedge.
    """
    depth = _APEX.y - p.y
    t = _HORIZON_DEPTH - depth
    if t <= 0:
        raise ValueError("point %r lies on or below the horizon" % (p,))
    return Point2(_HORIZON_DEPTH * p.x / t,
                  _APEX.y - _HORIZON_DEPTH * depth / t)


def triangle_fixture():
    """(triangle, 10 guards) with exact minimum depth 9."""
    guards = list(_TRIANGLE_SEEDS)
    guards += [_third_turn(p) for p in _TRIANGLE_SEEDS]
    guards += [_third_turn(_third_turn(p)) for p in _TRIANGLE_SEEDS]
    guards.append(Point2(0, 0))
    return triangle_region(), GuardSet(guards)


def square_fixture():
    """(square, 14 guards) with exact minimum depth 13."""
    guards = [Point2(-65, -120), Point2(65, 120)]
    cluster = list(_SQUARE_SEEDS)
    for _ in range(4):
        guards.extend(cluster)
        cluster = [_quarter_turn(p) for p in cluster]
    return square_region(), GuardSet(guards)


def wedge_fixture():
    """(wedge, 10 guards) with exact minimum depth 9.

    The guards are the triangle fixture's guards pushed through
    ``_drop_horizon``; the test suite certifies the result directly on
    the wedge, independently of the map's correctness argument.
    """
    _, tri_guards = triangle_fixture()
    return wedge_region(), GuardSet([_drop_horizon(g) for g in tri_guards])


FIXTURES = {
    "triangle": triangle_fixture,
    "square": square_fixture,
    "wedge": wedge_fixture,
}


def builtin_fixture(name: str):
    """Look up a built-in placement by name; raises on unknown names."""
    try:
        build = FIXTURES[name]
    except KeyError:
        raise ValueError(
            "unknown fixture %r (choose from %s)"
            % (name, ", ".join(sorted(FIXTURES)))
        ) from None
    return build()
