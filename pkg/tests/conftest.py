"""Shared generators and reporting glue for the test suite.

Everything here is deterministic given an explicit random.Random: tests
construct their own rng with a fixed seed so failures replay exactly.
"""

from __future__ import annotations

import functools
import random
from fractions import Fraction
from typing import List

from darkgallery.geometry import ConvexPolygon, Point2, SimplePolygon


# --- random geometry -------------------------------------------------------

def _chain_deltas(rng: random.Random, vals: List[int]) -> List[int]:
    lo, hi = vals[0], vals[-1]
    a, b = [lo], [lo]
    for v in vals[1:-1]:
        (a if rng.random() < 0.5 else b).append(v)
    a.append(hi)
    b.append(hi)
    out = [a[i + 1] - a[i] for i in range(len(a) - 1)]
    out += [b[i] - b[i + 1] for i in range(len(b) - 1)]
    return out


def _angular_cmp(u: Point2, v: Point2) -> int:
    def half(w):
        return 0 if (w.y, w.x) > (0, 0) else 1

    h = half(u) - half(v)
    if h:
        return h
    c = u.cross(v)
    return -1 if c > 0 else (1 if c < 0 else 0)


def random_convex_polygon(rng: random.Random, n: int, size: int = 420) -> ConvexPolygon:
    """Random strictly convex n-gon with integer coordinates (Valtr)."""
    while True:
        xs = sorted(rng.randint(0, size) for _ in range(n))
        ys = sorted(rng.randint(0, size) for _ in range(n))
        dx = _chain_deltas(rng, xs)
        dy = _chain_deltas(rng, ys)
        rng.shuffle(dy)
        vecs = [Point2(a, b) for a, b in zip(dx, dy) if a or b]
        if len(vecs) < n:
            continue
        vecs.sort(key=functools.cmp_to_key(_angular_cmp))
        if any(vecs[i].cross(vecs[i + 1]) == 0 for i in range(len(vecs) - 1)):
            continue  # parallel steps would make collinear vertices
        pts, cur = [], Point2(0, 0)
        for v in vecs:
            pts.append(cur)
            cur = cur + v
        lo = Point2(min(p.x for p in pts), min(p.y for p in pts))
        pts = [p - lo for p in pts]
        try:
            return ConvexPolygon(pts)
        except ValueError:
            continue


def random_star_polygon(rng: random.Random, n: int, size: int = 60) -> SimplePolygon:
    """Random simple polygon: n distinct points angularly sorted about
    an interior origin.  Reflex-rich but never self-intersecting."""
    while True:
        pts = set()
        while len(pts) < n:
            x = rng.randint(-size, size)
            y = rng.randint(-size, size)
            if (x, y) != (0, 0) and abs(x) + abs(y) > size // 4:
                pts.add((x, y))
        order = sorted((Point2(x, y) for x, y in pts), key=functools.cmp_to_key(_angular_cmp))
        if any(order[i].cross(order[(i + 1) % n]) == 0 for i in range(n)):
            continue  # two points on one ray from the origin
        try:
            return SimplePolygon(order)
        except ValueError:
            continue


def random_interior_point(rng: random.Random, poly: ConvexPolygon, grain: int = 64) -> Point2:
    """Strictly interior point: positive random convex combination of
    the vertices (exact rational weights, denominator <= n * grain)."""
    weights = [rng.randint(1, grain) for _ in poly.vertices]
    total = sum(weights)
    x = sum((v.x * w for v, w in zip(poly.vertices, weights)), Fraction(0))
    y = sum((v.y * w for v, w in zip(poly.vertices, weights)), Fraction(0))
    return Point2(x / total, y / total)


def distinct_interior_points(rng: random.Random, poly: ConvexPolygon, count: int,
                             grain: int = 64) -> List[Point2]:
    out: List[Point2] = []
    seen = set()
    while len(out) < count:
        p = random_interior_point(rng, poly, grain)
        if p not in seen:
            seen.add(p)
            out.append(p)
    return out


def random_affine_map(rng: random.Random):
    """Orientation-preserving rational affine map as (apply, matrix, shift)."""
    while True:
        a, b, c, d = (Fraction(rng.randint(-8, 8), rng.randint(1, 4)) for _ in range(4))
        if a * d - b * c > 0:
            break
    e = Fraction(rng.randint(-100, 100), rng.randint(1, 8))
    f = Fraction(rng.randint(-100, 100), rng.randint(1, 8))

    def apply(p: Point2) -> Point2:
        return Point2(a * p.x + b * p.y + e, c * p.x + d * p.y + f)

    return apply, (a, b, c, d), (e, f)


# --- acceptance reporting ---------------------------------------------------

ACCEPTANCE_LINES: List[str] = []


def record_acceptance(line: str) -> None:
    ACCEPTANCE_LINES.append(line)


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
