"""Exact 2-D geometry kernel built on rational arithmetic.

Everything in here works over ``fractions.Fraction`` so that orientation
tests, intersections and containment queries are decided exactly.  Floats
are rejected at construction time: if you need to import measured data,
convert it to rationals yourself and own the rounding.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable, Optional, Sequence, Union

Rat = Fraction
RatLike = Union[int, Fraction, str]


def as_rat(value: RatLike) -> Rat:
    """Coerce to an exact rational.  Floats raise TypeError on purpose."""
    if isinstance(value, float):
        raise TypeError(
            "float %r is not allowed here; pass int, Fraction or 'p/q' string"
            % (value,)
        )
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    raise TypeError("cannot interpret %r as a rational number" % (value,))


class Point2:
    """Immutable exact point (also used as a 2-vector)."""

    __slots__ = ("x", "y")

    def __init__(self, x: RatLike, y: RatLike):
        object.__setattr__(self, "x", as_rat(x))
        object.__setattr__(self, "y", as_rat(y))

    def __setattr__(self, name, value):
        raise AttributeError("Point2 is immutable")

    def __eq__(self, other):
        if not isinstance(other, Point2):
            return NotImplemented
        return self.x == other.x and self.y == other.y

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self):
        return hash((self.x, self.y))

    def __add__(self, other: "Point2") -> "Point2":
        return Point2(self.x + other.x, self.y + other.y)

    def __sub__(self, other: "Point2") -> "Point2":
        return Point2(self.x - other.x, self.y - other.y)

    def __mul__(self, scalar: RatLike) -> "Point2":
        s = as_rat(scalar)
        return Point2(self.x * s, self.y * s)

    __rmul__ = __mul__

    def __neg__(self) -> "Point2":
        return Point2(-self.x, -self.y)

    def __repr__(self):
        return "Point2(%s, %s)" % (self.x, self.y)

    def cross(self, other: "Point2") -> Rat:
        return self.x * other.y - self.y * other.x

    def dot(self, other: "Point2") -> Rat:
        return self.x * other.x + self.y * other.y

    def norm2(self) -> Rat:
        return self.x * self.x + self.y * self.y

    def is_zero(self) -> bool:
        return self.x == 0 and self.y == 0


ORIGIN = Point2(0, 0)


def cross(o: Point2, a: Point2, b: Point2) -> Rat:
    """Signed area*2 of triangle (o, a, b)."""
    return (a - o).cross(b - o)


def orientation(o: Point2, a: Point2, b: Point2) -> int:
    """+1 if o->a->b turns left, -1 if right, 0 if collinear."""
    c = cross(o, a, b)
    if c > 0:
        return 1
    if c < 0:
        return -1
    return 0


def collinear(o: Point2, a: Point2, b: Point2) -> bool:
    return cross(o, a, b) == 0


def strictly_between(a: Point2, p: Point2, b: Point2) -> bool:
    """True when p lies on the open segment (a, b)."""
    if not collinear(a, p, b):
        return False
    d = b - a
    t = (p - a).dot(d)
    return 0 < t < d.dot(d)


def on_segment(p: Point2, a: Point2, b: Point2) -> bool:
    """True when p lies on the closed segment [a, b]."""
    if not collinear(a, p, b):
        return False
    d = b - a
    if d.is_zero():
        return p == a
    t = (p - a).dot(d)
    return 0 <= t <= d.dot(d)


def midpoint(a: Point2, b: Point2) -> Point2:
    return Point2((a.x + b.x) / 2, (a.y + b.y) / 2)


def lerp(a: Point2, b: Point2, t: RatLike) -> Point2:
    t = as_rat(t)
    return Point2(a.x + t * (b.x - a.x), a.y + t * (b.y - a.y))


def primitive_direction(d: Point2) -> Point2:
    """Scale a nonzero rational vector to a canonical primitive integer
    vector (gcd 1, positive x, or x == 0 and positive y)."""
    if d.is_zero():
        raise ValueError("zero vector has no direction")
    nx, ny = d.x.numerator, d.y.numerator
    dx, dy = d.x.denominator, d.y.denominator
    # common integer form: multiply by lcm of denominators
    ax = nx * dy
    ay = ny * dx
    g = gcd(abs(ax), abs(ay))
    ax //= g
    ay //= g
    if ax < 0 or (ax == 0 and ay < 0):
        ax, ay = -ax, -ay
    return Point2(ax, ay)


class _LineRelation:
    """Singleton markers for degenerate line/line configurations."""

    __slots__ = ("_name",)

    def __init__(self, name):
        self._name = name

    def __repr__(self):
        return self._name


PARALLEL = _LineRelation("PARALLEL")
COINCIDENT = _LineRelation("COINCIDENT")


class Line:
    """Oriented line a*x + b*y = c through two distinct points.

    The positive side (side() == +1) is the left side when walking from
    the first defining point to the second.
    """

    __slots__ = ("a", "b", "c")

    def __init__(self, a: RatLike, b: RatLike, c: RatLike):
        a, b, c = as_rat(a), as_rat(b), as_rat(c)
        if a == 0 and b == 0:
            raise ValueError("degenerate line: a == b == 0")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "c", c)

    def __setattr__(self, name, value):
        raise AttributeError("Line is immutable")

    @classmethod
    def through(cls, p: Point2, q: Point2) -> "Line":
        if p == q:
            raise ValueError("need two distinct points to span a line")
        a = p.y - q.y
        b = q.x - p.x
        return cls(a, b, a * p.x + b * p.y)

    def eval(self, p: Point2) -> Rat:
        return self.a * p.x + self.b * p.y - self.c

    def side(self, p: Point2) -> int:
        v = self.eval(p)
        if v > 0:
            return 1
        if v < 0:
            return -1
        return 0

    def contains(self, p: Point2) -> bool:
        return self.eval(p) == 0

    def direction(self) -> Point2:
        return Point2(self.b, -self.a)

    def __repr__(self):
        return "Line(%s, %s, %s)" % (self.a, self.b, self.c)


def line_intersection(l1: Line, l2: Line):
    """Intersection point of two lines, or PARALLEL / COINCIDENT."""
    det = l1.a * l2.b - l2.a * l1.b
    if det == 0:
        # same line iff the coefficient triples are proportional
        if l1.a * l2.c == l2.a * l1.c and l1.b * l2.c == l2.b * l1.c:
            return COINCIDENT
        return PARALLEL
    x = (l1.c * l2.b - l2.c * l1.b) / det
    y = (l1.a * l2.c - l2.a * l1.c) / det
    return Point2(x, y)


def segments_intersect(a: Point2, b: Point2, c: Point2, d: Point2) -> bool:
    """Closed segments [a,b] and [c,d] share at least one point."""
    o1 = orientation(a, b, c)
    o2 = orientation(a, b, d)
    o3 = orientation(c, d, a)
    o4 = orientation(c, d, b)
    if o1 != o2 and o3 != o4:
        return True
    if o1 == 0 and on_segment(c, a, b):
        return True
    if o2 == 0 and on_segment(d, a, b):
        return True
    if o3 == 0 and on_segment(a, c, d):
        return True
    if o4 == 0 and on_segment(b, c, d):
        return True
    return False


class Halfplane:
    """Closed halfplane: the set of points p with line.eval(p) >= 0.

    Built from an oriented line; keeps the left side of p -> q.
    """

    __slots__ = ("line",)

    def __init__(self, line: Line):
        object.__setattr__(self, "line", line)

    def __setattr__(self, name, value):
        raise AttributeError("Halfplane is immutable")

    @classmethod
    def left_of(cls, p: Point2, q: Point2) -> "Halfplane":
        return cls(Line.through(p, q))

    def contains(self, p: Point2, strict: bool = False) -> bool:
        v = self.line.eval(p)
        return v > 0 if strict else v >= 0

    def __repr__(self):
        return "Halfplane(%r)" % (self.line,)


class HalfplaneResult:
    """Outcome of intersecting halfplanes.

    status is one of 'empty', 'bounded', 'unbounded'.  For 'bounded'
    regions with interior, ``vertices`` lists the corners in ccw order.
    Lower-dimensional intersections (a point, a segment, a line) are
    reported with the vertices that were found on them.
    """

    __slots__ = ("status", "vertices")

    def __init__(self, status: str, vertices: Sequence[Point2]):
        self.status = status
        self.vertices = list(vertices)

    def __repr__(self):
        return "HalfplaneResult(%r, %d vertices)" % (self.status, len(self.vertices))


def _clip_line_by_halfplanes(anchor: Point2, d: Point2, halfplanes, skip=None):
    """Clip the full line anchor + t*d (t in R) against closed halfplanes.

    Returns (lo, hi) with None meaning unbounded on that end, or None if
    the clipped set is empty.  skip is an index to leave out.
    """
    lo = None  # type: Optional[Rat]
    hi = None  # type: Optional[Rat]
    for i, h in enumerate(halfplanes):
        if i == skip:
            continue
        ln = h.line
        denom = ln.a * d.x + ln.b * d.y
        num = ln.c - (ln.a * anchor.x + ln.b * anchor.y)
        if denom == 0:
            if num > 0:  # line entirely outside this halfplane
                return None
            continue
        t = num / denom
        if denom > 0:
            if lo is None or t > lo:
                lo = t
        else:
            if hi is None or t < hi:
                hi = t
    if lo is not None and hi is not None and lo > hi:
        return None
    return (lo, hi)


def halfplane_intersection(halfplanes: Sequence[Halfplane]) -> HalfplaneResult:
    """Intersect a small set of closed halfplanes exactly.

    Not a sweep -- quadratic in the number of halfplanes, which is fine
    for the handful of constraints this library ever feeds it.
    """
    hs = list(halfplanes)
    if not hs:
        return HalfplaneResult("unbounded", [])

    # candidate corners: pairwise line intersections inside everything
    corners = []
    seen = set()
    n = len(hs)
    for i in range(n):
        for j in range(i + 1, n):
            p = line_intersection(hs[i].line, hs[j].line)
            if not isinstance(p, Point2):
                continue
            if p in seen:
                continue
            if all(h.contains(p) for h in hs):
                seen.add(p)
                corners.append(p)

    feasible = bool(corners)
    if not feasible:
        # no corners: region may still be a strip / halfplane / empty
        for i, h in enumerate(hs):
            ln = h.line
            anchor = _point_on_line(ln)
            if _clip_line_by_halfplanes(anchor, ln.direction(), hs, skip=None) is not None:
                feasible = True
                break
    if not feasible:
        return HalfplaneResult("empty", [])

    # unbounded iff the recession cone contains a nonzero direction; any
    # such cone touches the boundary direction of one of the constraints
    for h in hs:
        d = h.line.direction()
        for cand in (d, -d):
            if all(hh.line.a * cand.x + hh.line.b * cand.y >= 0 for hh in hs):
                return HalfplaneResult("unbounded", _hull_or_all(corners))

    return HalfplaneResult("bounded", _hull_or_all(corners))


def _point_on_line(ln: Line) -> Point2:
    if ln.b != 0:
        return Point2(0, ln.c / ln.b)
    return Point2(ln.c / ln.a, 0)


def _hull_or_all(points):
    if len(points) < 3:
        return list(points)
    return convex_hull(points).corners


class HullResult:
    """Convex hull with a label for every input point.

    labels[i] is 'corner' (extreme point), 'edge' (on the hull boundary
    but not extreme) or 'interior'.  corners are in ccw order starting
    from the lexicographically smallest.  degenerate is True when all
    inputs are collinear (fewer than 3 corners).
    """

    __slots__ = ("corners", "labels", "degenerate")

    def __init__(self, corners, labels, degenerate):
        self.corners = corners
        self.labels = labels
        self.degenerate = degenerate


def convex_hull(points: Sequence[Point2]) -> HullResult:
    """Monotone-chain convex hull over exact coordinates."""
    pts = list(points)
    if not pts:
        return HullResult([], [], True)

    order = sorted(set(pts), key=lambda p: (p.x, p.y))
    if len(order) == 1:
        return HullResult([order[0]], ["corner" if p == order[0] else "corner" for p in pts], True)

    def build(seq):
        chain = []
        for p in seq:
            while len(chain) >= 2 and orientation(chain[-2], chain[-1], p) <= 0:
                chain.pop()
            chain.append(p)
        return chain

    lower = build(order)
    upper = build(reversed(order))
    corners = lower[:-1] + upper[:-1]
    degenerate = len(corners) < 3
    if degenerate:
        corners = [order[0], order[-1]]

    corner_set = set(corners)
    labels = []
    if degenerate:
        a, b = corners[0], corners[-1]
        for p in pts:
            labels.append("corner" if p in corner_set else "edge")
        return HullResult(corners, labels, True)

    m = len(corners)
    for p in pts:
        if p in corner_set:
            labels.append("corner")
            continue
        lab = "interior"
        for i in range(m):
            if on_segment(p, corners[i], corners[(i + 1) % m]):
                lab = "edge"
                break
        labels.append(lab)
    return HullResult(corners, labels, False)


def centroid(points: Sequence[Point2]) -> Point2:
    pts = list(points)
    if not pts:
        raise ValueError("centroid of nothing")
    sx = sum((p.x for p in pts), Fraction(0))
    sy = sum((p.y for p in pts), Fraction(0))
    n = len(pts)
    return Point2(sx / n, sy / n)


class ConvexPolygon:
    """Strictly convex polygon, vertices in ccw order.

    Rejects anything with repeated, collinear or clockwise vertices: the
    constructions downstream rely on every vertex being a proper corner.
    """

    __slots__ = ("vertices",)

    def __init__(self, vertices: Iterable[Point2]):
        vs = list(vertices)
        if len(vs) < 3:
            raise ValueError("a polygon needs at least 3 vertices")
        n = len(vs)
        for i in range(n):
            o = orientation(vs[i], vs[(i + 1) % n], vs[(i + 2) % n])
            if o < 0:
                raise ValueError("vertices must wind counterclockwise")
            if o == 0:
                raise ValueError(
                    "degenerate corner at index %d (repeated or collinear vertices)"
                    % ((i + 1) % n)
                )
        object.__setattr__(self, "vertices", vs)

    def __setattr__(self, name, value):
        raise AttributeError("ConvexPolygon is immutable")

    def __len__(self):
        return len(self.vertices)

    def __repr__(self):
        return "ConvexPolygon(%d vertices)" % len(self.vertices)

    def edges(self):
        vs = self.vertices
        n = len(vs)
        for i in range(n):
            yield vs[i], vs[(i + 1) % n]

    def halfplanes(self):
        return [Halfplane.left_of(a, b) for a, b in self.edges()]

    def where(self, p: Point2) -> str:
        """'interior', 'boundary' or 'exterior'."""
        on_edge = False
        for a, b in self.edges():
            s = orientation(a, b, p)
            if s < 0:
                return "exterior"
            if s == 0:
                on_edge = True
        return "boundary" if on_edge else "interior"

    def contains(self, p: Point2, closed: bool = True) -> bool:
        w = self.where(p)
        if w == "interior":
            return True
        return closed and w == "boundary"

    def clip_line(self, anchor: Point2, d: Point2):
        """Parameter interval of {anchor + t*d} inside the closed polygon.

        Returns (t_min, t_max) or None when the line misses the polygon.
        """
        if d.is_zero():
            raise ValueError("zero direction")
        res = _clip_line_by_halfplanes(anchor, d, self.halfplanes())
        if res is None:
            return None
        lo, hi = res
        # a line through a bounded region always leaves it on both sides
        assert lo is not None and hi is not None
        return (lo, hi)

    def clip_ray(self, anchor: Point2, d: Point2):
        """Like clip_line but for the ray t >= 0.  None when it misses."""
        res = self.clip_line(anchor, d)
        if res is None:
            return None
        lo, hi = res
        lo = max(lo, Fraction(0))
        if lo > hi:
            return None
        return (lo, hi)

    def bounding_box(self):
        xs = [v.x for v in self.vertices]
        ys = [v.y for v in self.vertices]
        return (min(xs), min(ys), max(xs), max(ys))

    def area2(self) -> Rat:
        """Twice the signed area (positive for ccw input)."""
        total = Fraction(0)
        for a, b in self.edges():
            total += a.cross(b)
        return total


class Wedge:
    """Unbounded convex region: apex plus the cone between two rays.

    The two edge directions are stored so that cross(first, second) > 0,
    i.e. the region is swept ccw from the first ray to the second and the
    opening angle is < 180 degrees.
    """

    __slots__ = ("apex", "dir1", "dir2")

    def __init__(self, apex: Point2, dir1: Point2, dir2: Point2):
        if dir1.is_zero() or dir2.is_zero():
            raise ValueError("wedge edge directions must be nonzero")
        c = dir1.cross(dir2)
        if c == 0:
            raise ValueError("wedge edges must not be parallel")
        if c < 0:
            dir1, dir2 = dir2, dir1
        object.__setattr__(self, "apex", apex)
        object.__setattr__(self, "dir1", dir1)
        object.__setattr__(self, "dir2", dir2)

    def __setattr__(self, name, value):
        raise AttributeError("Wedge is immutable")

    def __repr__(self):
        return "Wedge(apex=%r)" % (self.apex,)

    def halfplanes(self):
        # inside = left of (apex -> apex+dir1) and left of (apex+dir2 -> apex)
        return [
            Halfplane.left_of(self.apex, self.apex + self.dir1),
            Halfplane.left_of(self.apex + self.dir2, self.apex),
        ]

    def where(self, p: Point2) -> str:
        s1 = self.dir1.cross(p - self.apex)
        s2 = (p - self.apex).cross(self.dir2)
        if s1 < 0 or s2 < 0:
            return "exterior"
        if s1 == 0 or s2 == 0:
            return "boundary"
        return "interior"

    def contains(self, p: Point2, closed: bool = True) -> bool:
        w = self.where(p)
        if w == "interior":
            return True
        return closed and w == "boundary"

    def clip_line(self, anchor: Point2, d: Point2):
        """Interval of the line inside the wedge; ends may be None (open)."""
        if d.is_zero():
            raise ValueError("zero direction")
        return _clip_line_by_halfplanes(anchor, d, self.halfplanes())

    def clip_ray(self, anchor: Point2, d: Point2):
        res = self.clip_line(anchor, d)
        if res is None:
            return None
        lo, hi = res
        if lo is None or lo < 0:
            lo = Fraction(0)
        if hi is not None and lo > hi:
            return None
        return (lo, hi)


class SimplePolygon:
    """Simple (non-self-intersecting) polygon, ccw, possibly reflex.

    Validation is the straightforward quadratic pass over edge pairs.
    """

    __slots__ = ("vertices",)

    def __init__(self, vertices: Iterable[Point2]):
        vs = list(vertices)
        n = len(vs)
        if n < 3:
            raise ValueError("a polygon needs at least 3 vertices")
        if len(set(vs)) != n:
            raise ValueError("repeated vertex")
        for i in range(n):
            a, b = vs[i], vs[(i + 1) % n]
            if a == b:
                raise ValueError("zero-length edge")
            for j in range(i + 1, n):
                c, d = vs[j], vs[(j + 1) % n]
                if j == i or (j + 1) % n == i or (i + 1) % n == j:
                    # adjacent edges may continue straight through the shared
                    # vertex (a "straight" vertex) but must not fold back
                    if collinear(a, b, c) and collinear(a, b, d):
                        if (i + 1) % n == j:  # edge j leaves where edge i ends
                            into, out = b - a, d - c
                        else:  # edge j arrives where edge i starts
                            into, out = a - c, b - a
                        if into.dot(out) < 0:
                            raise ValueError("adjacent edges overlap")
                    continue
                if segments_intersect(a, b, c, d):
                    raise ValueError("edges %d and %d cross" % (i, j))
        area2 = sum((vs[i].cross(vs[(i + 1) % n]) for i in range(n)), Fraction(0))
        if area2 <= 0:
            raise ValueError("vertices must wind counterclockwise")
        object.__setattr__(self, "vertices", vs)

    def __setattr__(self, name, value):
        raise AttributeError("SimplePolygon is immutable")

    def __len__(self):
        return len(self.vertices)

    def __repr__(self):
        return "SimplePolygon(%d vertices)" % len(self.vertices)

    def edges(self):
        vs = self.vertices
        n = len(vs)
        for i in range(n):
            yield vs[i], vs[(i + 1) % n]

    def area2(self) -> Rat:
        total = Fraction(0)
        for a, b in self.edges():
            total += a.cross(b)
        return total

    def where(self, p: Point2) -> str:
        for a, b in self.edges():
            if on_segment(p, a, b):
                return "boundary"
        # exact crossing-number test with a horizontal ray to the right
        inside = False
        for a, b in self.edges():
            if (a.y > p.y) != (b.y > p.y):
                # x coordinate where edge crosses the horizontal line
                t = (p.y - a.y) / (b.y - a.y)
                xc = a.x + t * (b.x - a.x)
                if xc > p.x:
                    inside = not inside
        return "interior" if inside else "exterior"

    def contains(self, p: Point2, closed: bool = True) -> bool:
        w = self.where(p)
        if w == "interior":
            return True
        return closed and w == "boundary"

    def bounding_box(self):
        xs = [v.x for v in self.vertices]
        ys = [v.y for v in self.vertices]
        return (min(xs), min(ys), max(xs), max(ys))

    def is_convex(self) -> bool:
        vs = self.vertices
        n = len(vs)
        return all(
            orientation(vs[i], vs[(i + 1) % n], vs[(i + 2) % n]) > 0 for i in range(n)
        )
