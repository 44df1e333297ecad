"""Sampled depth checks where exact certification is out of reach.

Inside a simple polygon the walls block sight as well as the guards, and
there is no arrangement shortcut like the convex case's dark-portion
bookkeeping.  What we can still do exactly is decide visibility between
two given points: clip the open segment against every boundary edge,
then test the midpoint of each sub-interval against the closed polygon.
``sample_depth`` runs that predicate over a deterministic sample set and
reports the worst depth it saw.

The default samples are not a blind grid.  Every report includes the
polygon vertices, the guard positions, and the crossing points and
crossing-free gap midpoints of the dark rays (computed on the convex
hull, where the exact machinery applies, then filtered to the polygon):
those are the points where coverage is most likely to dip.  Grid or
seeded-random samples are layered on top via the sampler spec.

Every verdict is exact.  Bulk scans run through a float prefilter
first: coordinates are correctly-rounded floats, so any orientation
value whose magnitude clears a certified error margin has the sign of
the true rational value, and only the pairs inside the margin fall back
to the rational predicates.  The fast path and the plain loop therefore
produce identical reports.

A sampled report can prove a placement bad (a witness below target) but
never certifies it good -- that asymmetry is inherent, and callers
should treat ``min_sampled_depth`` as an upper bound on the true
minimum depth.
"""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Iterable, List, Optional, Sequence, Tuple, Union

import numpy as np

from .darkness import GuardSet, _Analysis
from .geometry import (
    ConvexPolygon,
    Point2,
    SimplePolygon,
    convex_hull,
    strictly_between,
)

AnyPolygon = Union[ConvexPolygon, SimplePolygon]

# resolution of the rational coordinates drawn by the seeded sampler
_RANDOM_GRID = 1 << 20

# Float sign-certainty margin: with every |coordinate| <= M stored as a
# correctly-rounded float, an orientation-style value (two differences
# multiplied and subtracted) accumulates absolute error below 2^-47*M^2,
# so anything larger than M^2 * 2^-46 in magnitude has the true sign.
_CERT_SHIFT = 46

# below this many point*vertex (or point*guard) products, the plain
# exact loops beat the cost of building numpy arrays
_FAST_MIN_WORK = 4096


def _floats(values: List) -> Optional["np.ndarray"]:
    try:
        return np.array([float(v) for v in values], dtype=np.float64)
    except OverflowError:
        return None


def _contains_mask(P: AnyPolygon, pts: Sequence[Point2]) -> List[bool]:
    """[P.contains(p) for p in pts], float-prefiltered for bulk inputs.

    The float pass settles points whose membership is certain by the
    sign margin; boundary-grazing points (and anything else inside the
    margin) are re-decided exactly, so the result matches the plain
    loop bit for bit.
    """
    verts = P.vertices
    if len(pts) * len(verts) < _FAST_MIN_WORK:
        return [P.contains(p) for p in pts]
    px = _floats([p.x for p in pts])
    py = _floats([p.y for p in pts])
    ax = _floats([v.x for v in verts])
    ay = _floats([v.y for v in verts])
    if px is None or py is None or ax is None or ay is None:
        return [P.contains(p) for p in pts]
    bx = np.roll(ax, -1)
    by = np.roll(ay, -1)
    m = max(
        1.0,
        float(np.max(np.abs(px))),
        float(np.max(np.abs(py))),
        float(np.max(np.abs(ax))),
        float(np.max(np.abs(ay))),
    )
    cert = m * m * 2.0 ** -_CERT_SHIFT
    ex = bx - ax
    ey = by - ay
    # orientation of each point against each (ccw) edge
    o = ex[None, :] * (py[:, None] - ay[None, :]) - ey[None, :] * (px[:, None] - ax[None, :])
    if isinstance(P, ConvexPolygon):
        inside = (o > cert).all(axis=1)
        certain = inside | (o < -cert).any(axis=1)
    else:
        # ray-parity: count edges certainly crossed by the ray x -> +inf
        eps = m * 2.0 ** -_CERT_SHIFT
        pyc = py[:, None]
        lo = np.minimum(ay, by)[None, :]
        hi = np.maximum(ay, by)[None, :]
        strict = (pyc > lo + eps) & (pyc < hi - eps)
        loose = (pyc > lo - eps) & (pyc < hi + eps)
        upward = (by > ay)[None, :]
        crossing = strict & np.where(upward, o > cert, o < -cert)
        # shaky rows: the ray passes within the margin of an endpoint or
        # a horizontal edge, or the point sits within the margin of an
        # edge line it is level with -- parity can't be trusted there
        shaky = (loose & ~strict) | (strict & (np.abs(o) <= cert))
        certain = ~shaky.any(axis=1)
        inside = (crossing.sum(axis=1) % 2).astype(bool)
    return [
        bool(inside[i]) if certain[i] else P.contains(pts[i])
        for i in range(len(pts))
    ]


def _depths_fast(P: AnyPolygon, gset: GuardSet, pts: Sequence[Point2]) -> Optional[List[int]]:
    """Exact depths for a batch of samples, or None for tiny workloads.

    Preconditions: every sample lies in the closed polygon (the guards
    are validated by the caller).  The float pass certifies the clear
    wall crossings, clear misses, and clear non-collinearities; every
    pair it cannot certify is re-decided by the exact predicates, so
    the output equals [depth_at_sample(P, gset, p) for p in pts].
    """
    guards = gset.guards
    if len(pts) * len(guards) < _FAST_MIN_WORK:
        return None
    verts = P.vertices
    px = _floats([p.x for p in pts])
    py = _floats([p.y for p in pts])
    gx = _floats([g.x for g in guards])
    gy = _floats([g.y for g in guards])
    ax = _floats([v.x for v in verts])
    ay = _floats([v.y for v in verts])
    if any(a is None for a in (px, py, gx, gy, ax, ay)):
        return None
    m = max(1.0, *(float(np.max(np.abs(a))) for a in (px, py, gx, gy, ax, ay)))
    cert = m * m * 2.0 ** -_CERT_SHIFT
    convex = isinstance(P, ConvexPolygon)
    if not convex:
        bx = np.roll(ax, -1)
        by = np.roll(ay, -1)
        ex = bx - ax
        ey = by - ay
        # side of each edge's line each sample falls on: guard-independent
        c4 = ex[None, :] * (py[:, None] - ay[None, :]) - ey[None, :] * (px[:, None] - ax[None, :])
        p4 = c4 > cert
        n4 = c4 < -cert
    depths = np.zeros(len(pts), dtype=np.int64)
    for gi, q in enumerate(guards):
        qx = gx[gi]
        qy = gy[gi]
        dx = px - qx
        dy = py - qy
        if convex:
            # segment inside iff endpoints inside, which holds by precondition
            vis = np.ones(len(pts), dtype=bool)
            wall_unsure = np.zeros(len(pts), dtype=bool)
        else:
            c1 = dx[:, None] * (ay[None, :] - qy) - dy[:, None] * (ax[None, :] - qx)
            c2 = dx[:, None] * (by[None, :] - qy) - dy[:, None] * (bx[None, :] - qx)
            c3 = (ex * (qy - ay) - ey * (qx - ax))[None, :]
            p1 = c1 > cert
            n1 = c1 < -cert
            p2 = c2 > cert
            n2 = c2 < -cert
            p3 = c3 > cert
            n3 = c3 < -cert
            # certain transversal crossing of an open edge: invisible
            crossing = ((p1 & n2) | (n1 & p2)) & ((p3 & n4) | (n3 & p4))
            # certain miss: edge strictly one side of the segment's line,
            # or both endpoints strictly one side of the edge's line
            miss = (p1 & p2) | (n1 & n2) | (p3 & p4) | (n3 & n4)
            vis = ~crossing.any(axis=1)
            wall_unsure = vis & ~miss.all(axis=1)
        # guard-blocking: only a guard exactly on the segment's line can
        # block, so certain non-collinearity rules a blocker out
        crh = (gx - qx)[None, :] * dy[:, None] - (gy - qy)[None, :] * dx[:, None]
        maybe = np.abs(crh) <= cert
        maybe[:, gi] = False
        for s in np.nonzero(wall_unsure)[0]:
            vis[s] = _segment_inside(P, q, pts[s])
        for s in np.nonzero(vis & maybe.any(axis=1))[0]:
            p = pts[s]
            for hi_ in np.nonzero(maybe[s])[0]:
                h = guards[hi_]
                if h != p and strictly_between(q, h, p):
                    vis[s] = False
                    break
        depths += vis
    return [int(v) for v in depths]


def _segment_inside(P: AnyPolygon, q: Point2, p: Point2) -> bool:
    """Does the open segment (q, p) stay inside the closed polygon?

    Touching the boundary is allowed; leaving it is not.  The segment
    changes sides only where it meets a boundary edge, so it suffices to
    collect every meeting parameter and probe one interior point of
    each gap.
    """
    if p == q:
        return P.contains(p)
    if isinstance(P, ConvexPolygon):
        # convex region: the segment is inside iff its endpoints are
        return P.contains(p) and P.contains(q)
    d = p - q
    dd = d.dot(d)
    cuts = {Fraction(0), Fraction(1)}
    for a, b in P.edges():
        e = b - a
        den = d.cross(e)
        if den != 0:
            w = a - q
            t = w.cross(e) / den
            s = w.cross(d) / den
            if 0 <= t <= 1 and 0 <= s <= 1:
                cuts.add(t)
        elif e.cross(q - a) == 0:
            # collinear edge: both endpoint parameters bound the overlap
            for end in (a, b):
                t = (end - q).dot(d) / dd
                if 0 < t < 1:
                    cuts.add(t)
    ts = sorted(cuts)
    for t0, t1 in zip(ts, ts[1:]):
        mid = t0 + (t1 - t0) / 2
        probe = Point2(q.x + mid * d.x, q.y + mid * d.y)
        if P.where(probe) == "exterior":
            return False
    return True


def visible(P: AnyPolygon, guards, q: Point2, p: Point2) -> bool:
    """Can a guard at q see the point p inside P?

    True when the open segment stays in the closed polygon (grazing a
    reflex vertex or running along an edge still counts) and no other
    guard stands strictly between the two.  Symmetric in p and q.
    """
    gset = GuardSet.coerce(guards)
    if not _segment_inside(P, q, p):
        return False
    if p != q:
        for h in gset.guards:
            if h != q and h != p and strictly_between(q, h, p):
                return False
    return True


def depth_at_sample(P: AnyPolygon, guards, p: Point2) -> int:
    """Number of guards that see p (exact, wall- and guard-blocking)."""
    gset = GuardSet.coerce(guards)
    return sum(1 for q in gset.guards if visible(P, gset, q, p))


class SampleReport:
    """Outcome of a sampled depth scan.

    samples: list of (point, depth) in scan order, duplicates removed;
    min_sampled_depth: the smallest depth seen;
    failing_samples: the points below the requested target (empty when
    no target was given).
    """

    __slots__ = ("samples", "min_sampled_depth", "failing_samples")

    def __init__(self, samples, target=None):
        samples = list(samples)
        if not samples:
            raise ValueError("a sample report needs at least one sample")
        object.__setattr__(self, "samples", samples)
        object.__setattr__(
            self, "min_sampled_depth", min(depth for _, depth in samples)
        )
        failing = []
        if target is not None:
            failing = [p for p, depth in samples if depth < target]
        object.__setattr__(self, "failing_samples", failing)

    def __setattr__(self, name, value):
        raise AttributeError("SampleReport is immutable")

    def __repr__(self):
        return "SampleReport(%d samples, min depth %d)" % (
            len(self.samples),
            self.min_sampled_depth,
        )


def _suspicious_points(P: AnyPolygon, gset: GuardSet) -> List[Point2]:
    """Dark-ray crossing points and gap midpoints that land inside P.

    The rays are analyzed on the convex hull of P, where the exact
    dark-portion machinery applies (walls ignored), because a depth dip
    in the polygon can only happen at guard blockings, and those live on
    the hull's dark-ray arrangement.
    """
    hull = convex_hull(list(P.vertices) + list(gset.guards))
    region = ConvexPolygon(hull.corners)
    analysis = _Analysis(region, gset)
    cands = [
        analysis.scene.unscale(xn, yn, den)
        for _total, xn, yn, den, _contr in analysis.candidates()
    ]
    out = [pt for pt, ok in zip(cands, _contains_mask(P, cands)) if ok]
    out.sort(key=lambda v: (v.x, v.y))
    return out


def _grid_points(P: AnyPolygon, resolution: int) -> List[Point2]:
    if resolution < 1:
        raise ValueError("grid resolution must be at least 1")
    minx, miny, maxx, maxy = P.bounding_box()
    cands = [
        Point2(
            minx + (maxx - minx) * Fraction(i, resolution),
            miny + (maxy - miny) * Fraction(j, resolution),
        )
        for i in range(resolution + 1)
        for j in range(resolution + 1)
    ]
    return [pt for pt, ok in zip(cands, _contains_mask(P, cands)) if ok]


def _random_points(P: AnyPolygon, seed: int, count: int) -> List[Point2]:
    if count < 0:
        raise ValueError("sample count cannot be negative")
    minx, miny, maxx, maxy = P.bounding_box()
    rng = random.Random(seed)
    out = []
    budget = 64 * count + 64  # thin polygons reject a lot; stay finite
    while len(out) < count and budget > 0:
        budget -= 1
        x = minx + (maxx - minx) * Fraction(rng.randrange(_RANDOM_GRID + 1), _RANDOM_GRID)
        y = miny + (maxy - miny) * Fraction(rng.randrange(_RANDOM_GRID + 1), _RANDOM_GRID)
        pt = Point2(x, y)
        if P.contains(pt):
            out.append(pt)
    return out


def _sampler_points(P: AnyPolygon, sampler) -> List[Point2]:
    if sampler is None:
        return []
    if isinstance(sampler, (list, tuple)) and sampler and sampler[0] == "grid":
        (_, resolution) = sampler
        return _grid_points(P, int(resolution))
    if isinstance(sampler, (list, tuple)) and sampler and sampler[0] == "random":
        (_, seed, count) = sampler
        return _random_points(P, int(seed), int(count))
    if isinstance(sampler, (list, tuple)) and sampler and sampler[0] == "points":
        (_, pts) = sampler
        out = []
        for p in pts:
            if isinstance(p, Point2):
                out.append(p)
            else:
                x, y = p
                out.append(Point2(x, y))
        for p, ok in zip(out, _contains_mask(P, out)):
            if not ok:
                raise ValueError("sample point %r lies outside the polygon" % (p,))
        return out
    raise ValueError(
        "sampler must be None, ('grid', resolution), ('random', seed, count) "
        "or ('points', iterable), got %r" % (sampler,)
    )


def sample_depth(P: AnyPolygon, guards, sampler=None, target: Optional[int] = None) -> SampleReport:
    """Depth at a deterministic set of sample points of the closed P.

    The scan always covers the polygon vertices, the guard positions,
    and the dark-ray crossing points and gap midpoints inside P; the
    sampler spec adds more.  With a target, samples below it are
    collected as failing witnesses.
    """
    gset = GuardSet.coerce(guards)
    for g in gset.guards:
        if not P.contains(g):
            raise ValueError("guard %r lies outside the polygon" % (g,))
    pts: List[Point2] = []
    pts.extend(P.vertices)
    pts.extend(gset.guards)
    pts.extend(_suspicious_points(P, gset))
    pts.extend(_sampler_points(P, sampler))
    seen = set()
    unique: List[Point2] = []
    for p in pts:
        if p not in seen:
            seen.add(p)
            unique.append(p)
    depths = _depths_fast(P, gset, unique)
    if depths is None:
        depths = [depth_at_sample(P, gset, p) for p in unique]
    return SampleReport(list(zip(unique, depths)), target=target)
