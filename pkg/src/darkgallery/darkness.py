"""Exact certification of coverage depth when guards block each other.

Model: a guard q sees a point p unless some other guard stands strictly
between q and p.  A point is j-dark when at least j distinct guards are
blocked from it; the coverage depth at p is (number of guards) minus its
darkness, and the certificates below report the exact minimum depth over
a closed convex region (polygon or wedge).

Strategy: all guards blocked from p lie on lines through p that carry at
least two guards, so darkness is a sum of per-line counts that are
piecewise constant along each line.  The verifier scales the whole scene
to integer coordinates, enumerates the "dark portions" of every line
carrying >= 2 guards, clips them to the region, and evaluates darkness at
a complete set of candidate points: one representative per crossing-free
portion piece, every pairwise crossing of clipped portions from distinct
lines, and every guard position.  A vectorized int64 prefilter discards
the bulk of non-crossing portion pairs whenever the coordinate magnitudes
make the products provably overflow-free; everything that survives is
confirmed with exact big-integer arithmetic.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import List, Optional, Sequence, Tuple, Union

import numpy as np

from .geometry import (
    ConvexPolygon,
    Line,
    Point2,
    Wedge,
    on_segment,
    primitive_direction,
    strictly_between,
)

Region = Union[ConvexPolygon, Wedge]

# int64 stays exact below this coordinate magnitude: the largest
# intermediate product is 8*M^2 and 8*(2**28)**2 = 2**59 < 2**63
_NUMPY_COORD_LIMIT = 1 << 28
_NUMPY_MIN_ITEMS = 48


class GuardSet:
    """Ordered collection of pairwise-distinct guard positions."""

    __slots__ = ("guards",)

    def __init__(self, guards: Sequence[Point2]):
        gs = list(guards)
        if not gs:
            raise ValueError("need at least one guard")
        for g in gs:
            if not isinstance(g, Point2):
                raise TypeError("guards must be Point2, got %r" % (g,))
        if len(set(gs)) != len(gs):
            raise ValueError("guards cannot be co-located")
        object.__setattr__(self, "guards", tuple(gs))

    def __setattr__(self, name, value):
        raise AttributeError("GuardSet is immutable")

    def __len__(self):
        return len(self.guards)

    def __iter__(self):
        return iter(self.guards)

    def __getitem__(self, i):
        return self.guards[i]

    def __repr__(self):
        return "GuardSet(%d guards)" % len(self.guards)

    @classmethod
    def coerce(cls, guards) -> "GuardSet":
        if isinstance(guards, cls):
            return guards
        return cls(guards)


class GuardLine:
    """A maximal set of >= 2 collinear guards and their carrier line."""

    __slots__ = ("carrier", "members", "member_indices")

    def __init__(self, carrier: Line, members, member_indices):
        self.carrier = carrier
        self.members = list(members)
        self.member_indices = list(member_indices)

    def __len__(self):
        return len(self.members)

    def __repr__(self):
        return "GuardLine(%d members)" % len(self.members)


class DarkPortion:
    """Maximal sub-interval of a guard line with a constant blocked count.

    The interval is expressed in the parameterization p(t) = anchor + t*axis
    where anchor is the line's first member and axis points toward its last.
    Bounds are open at guard positions; None means unbounded.
    """

    __slots__ = ("line", "lo", "hi", "blocked_count")

    def __init__(self, line: GuardLine, lo, hi, blocked_count: int):
        self.line = line
        self.lo = lo
        self.hi = hi
        self.blocked_count = blocked_count

    def __repr__(self):
        return "DarkPortion((%s, %s), blocked=%d)" % (self.lo, self.hi, self.blocked_count)


class DarknessWitness:
    """A point with its exact darkness and the per-line breakdown."""

    __slots__ = ("point", "darkness", "contributing_lines")

    def __init__(self, point: Point2, darkness: int, contributing_lines):
        self.point = point
        self.darkness = darkness
        self.contributing_lines = list(contributing_lines)

    def __repr__(self):
        return "DarknessWitness(%r, darkness=%d)" % (self.point, self.darkness)


class DepthCertificate:
    """Exact minimum coverage depth over a region with a witness point."""

    __slots__ = ("g", "min_depth", "max_darkness", "witness")

    def __init__(self, g: int, max_darkness: int, witness: DarknessWitness):
        self.g = g
        self.max_darkness = max_darkness
        self.min_depth = g - max_darkness
        self.witness = witness

    def __repr__(self):
        return "DepthCertificate(g=%d, min_depth=%d)" % (self.g, self.min_depth)


class BoundaryCensus:
    """Per-edge guard weights and darkened-vertex bookkeeping.

    edge_weights[i] counts guards on edge i: interior guards count 1,
    a guard sitting on a vertex contributes 1/2 to each incident edge.
    boundary_total is the sum (every boundary guard counted once) and
    identity_holds records whether boundary_total == n + darkened/2.
    """

    __slots__ = (
        "edge_weights",
        "edge_dark_rays",
        "darkened",
        "darkened_vertices",
        "boundary_total",
        "n",
        "applicable",
        "reasons",
        "identity_holds",
    )

    def __init__(self, edge_weights, edge_dark_rays, darkened_vertices, n, applicable, reasons):
        self.edge_weights = list(edge_weights)
        self.edge_dark_rays = list(edge_dark_rays)
        self.darkened_vertices = list(darkened_vertices)
        self.darkened = len(self.darkened_vertices)
        self.boundary_total = sum(self.edge_weights, Fraction(0))
        self.n = n
        self.applicable = applicable
        self.reasons = list(reasons)
        self.identity_holds = self.boundary_total == n + Fraction(self.darkened, 2)

    def __repr__(self):
        return "BoundaryCensus(total=%s, darkened=%d, applicable=%r)" % (
            self.boundary_total,
            self.darkened,
            self.applicable,
        )


# ---------------------------------------------------------------------------
# scene scaling: everything becomes integers


def _coord_denominators(region, guards):
    dens = []
    if isinstance(region, ConvexPolygon):
        for v in region.vertices:
            dens.append(v.x.denominator)
            dens.append(v.y.denominator)
    elif isinstance(region, Wedge):
        dens.append(region.apex.x.denominator)
        dens.append(region.apex.y.denominator)
    elif region is not None:
        raise TypeError("region must be ConvexPolygon or Wedge, got %r" % (region,))
    for g in guards:
        dens.append(g.x.denominator)
        dens.append(g.y.denominator)
    return dens


def _int_direction(d: Point2):
    """Reduce a rational direction to primitive integers, same orientation."""
    m = lcm(d.x.denominator, d.y.denominator)
    ix, iy = int(d.x * m), int(d.y * m)
    g = gcd(ix, iy)
    return ix // g, iy // g


class _Scene:
    """Region and guards rescaled by a common factor to integer coords."""

    __slots__ = ("scale", "gx", "gy", "halfplanes", "region", "max_abs")

    def __init__(self, region, guards):
        self.region = region
        self.scale = lcm(*_coord_denominators(region, guards))
        s = self.scale
        self.gx = [int(g.x * s) for g in guards]
        self.gy = [int(g.y * s) for g in guards]
        hps = []
        if isinstance(region, ConvexPolygon):
            vs = [(int(v.x * s), int(v.y * s)) for v in region.vertices]
            n = len(vs)
            for i in range(n):
                (px, py), (qx, qy) = vs[i], vs[(i + 1) % n]
                a = py - qy
                b = qx - px
                hps.append((a, b, a * px + b * py))
            corner_mag = max(max(abs(x), abs(y)) for x, y in vs)
        elif isinstance(region, Wedge):
            ax, ay = int(region.apex.x * s), int(region.apex.y * s)
            # reduce edge directions to primitive integers, keeping their
            # orientation (the sign decides which side is inside)
            d1x, d1y = _int_direction(region.dir1)
            d2x, d2y = _int_direction(region.dir2)
            hps.append((-d1y, d1x, -d1y * ax + d1x * ay))
            hps.append((d2y, -d2x, d2y * ax - d2x * ay))
            corner_mag = max(abs(ax), abs(ay), abs(d1x), abs(d1y), abs(d2x), abs(d2y))
        else:
            corner_mag = 0
        self.halfplanes = hps
        guard_mag = max(max(abs(x) for x in self.gx), max(abs(y) for y in self.gy))
        self.max_abs = max(corner_mag, guard_mag)

    def unscale(self, xn, yn, den) -> Point2:
        s = self.scale
        return Point2(Fraction(xn, den * s), Fraction(yn, den * s))


def _clip_ray_int(ax, ay, dx, dy, halfplanes):
    """Clip {anchor + t*d : t >= 0} against integer halfplanes ax+by>=c.

    Returns ((lo_n, lo_d), (hi_n, hi_d) or None) with positive
    denominators, or None when the intersection is empty.
    """
    lo_n, lo_d = 0, 1
    hi_n = hi_d = None
    for a, b, c in halfplanes:
        den = a * dx + b * dy
        num = c - (a * ax + b * ay)
        if den == 0:
            if num > 0:
                return None
            continue
        if den > 0:
            # t >= num/den
            if num * lo_d > lo_n * den:
                lo_n, lo_d = num, den
        else:
            # t <= num/den == (-num)/(-den)
            n2, d2 = -num, -den
            if hi_n is None or n2 * hi_d < hi_n * d2:
                hi_n, hi_d = n2, d2
    if hi_n is not None and lo_n * hi_d > hi_n * lo_d:
        return None
    return ((lo_n, lo_d), None if hi_n is None else (hi_n, hi_d))


# ---------------------------------------------------------------------------
# collinear structure


def _group_collinear(gx, gy):
    """Group guard indices by carrier line.

    Returns a list of (dx, dy, c, members) where (dx, dy) is the primitive
    direction, c = dx*y - dy*x for every point on the line, and members is
    a list of (t, index) sorted by the integer parameter t along (dx, dy)
    measured from the lowest-index member.
    """
    lines = {}
    n = len(gx)
    for i in range(n):
        xi, yi = gx[i], gy[i]
        for j in range(i + 1, n):
            ux, uy = gx[j] - xi, gy[j] - yi
            g = gcd(abs(ux), abs(uy))
            ux //= g
            uy //= g
            if ux < 0 or (ux == 0 and uy < 0):
                ux, uy = -ux, -uy
            key = (ux, uy, ux * yi - uy * xi)
            members = lines.get(key)
            if members is None:
                lines[key] = {i, j}
            else:
                members.add(i)
                members.add(j)

    out = []
    for (ux, uy, c), members in lines.items():
        idx = sorted(members)
        a = idx[0]
        axp, ayp = gx[a], gy[a]
        withparam = []
        for i in idx:
            # deltas between lattice points of the line are exact integer
            # multiples of its primitive direction
            t = (gx[i] - axp) // ux if ux != 0 else (gy[i] - ayp) // uy
            withparam.append((t, i))
        withparam.sort()
        base = withparam[0][0]  # rebase so the first member sits at t = 0
        out.append((ux, uy, c, [(t - base, i) for t, i in withparam]))
    # deterministic order independent of guard numbering
    out.sort(key=lambda rec: (rec[0], rec[1], rec[2]))
    return out


def collinear_groups(guards) -> List[GuardLine]:
    """Maximal groups of >= 2 collinear guards, each with its carrier."""
    gset = GuardSet.coerce(guards)
    scale = lcm(*_coord_denominators(None, gset.guards))
    gx = [int(g.x * scale) for g in gset.guards]
    gy = [int(g.y * scale) for g in gset.guards]
    out = []
    for ux, uy, c, members in _group_collinear(gx, gy):
        idxs = [i for _, i in members]
        pts = [gset.guards[i] for i in idxs]
        out.append(GuardLine(Line.through(pts[0], pts[-1]), pts, idxs))
    return out


def dark_portions(line: GuardLine) -> List[DarkPortion]:
    """Constant-darkness intervals of a guard line.

    Parameterized by p(t) = first_member + t*axis with axis the primitive
    direction toward the last member.  The two unbounded ends block m-1
    guards; each gap between consecutive members blocks m-2.  Gaps that
    block nothing (m == 2) are omitted.
    """
    m = len(line.members)
    axis = primitive_direction(line.members[-1] - line.members[0])
    dd = axis.dot(axis)
    params = [(p - line.members[0]).dot(axis) / dd for p in line.members]
    out = [DarkPortion(line, None, params[0], m - 1)]
    if m >= 3:
        for i in range(m - 1):
            out.append(DarkPortion(line, params[i], params[i + 1], m - 2))
    out.append(DarkPortion(line, params[-1], None, m - 1))
    return out


# ---------------------------------------------------------------------------
# the exact verifier core


class _Analysis:
    """Scaled scene plus the dark-portion pieces clipped to the region.

    A piece is the in-region part of one dark portion, re-anchored at a
    member guard so its parameter interval starts at 0:

        (ax, ay, dx, dy, lon, lod, lo_strict,
         hin, hid, hi_strict, blocked, line_id)

    Bounds are rationals lon/lod <= t <= hin/hid with positive
    denominators; hin is None when the region leaves the piece unbounded
    (wedges).  lo_strict/hi_strict mark open ends (guard positions).
    Only pieces blocking >= 1 guard are kept.
    """

    def __init__(self, region: Region, gset: GuardSet):
        for g in gset.guards:
            if not region.contains(g):
                raise ValueError("guard %r lies outside the region" % (g,))
        self.gset = gset
        self.scene = _Scene(region, gset.guards)
        self.lines = _group_collinear(self.scene.gx, self.scene.gy)
        self._public_lines = None
        self._crossings = None

        pieces = []
        gx, gy = self.scene.gx, self.scene.gy
        hps = self.scene.halfplanes
        for line_id, (ux, uy, c, members) in enumerate(self.lines):
            m = len(members)
            first, last = members[0][1], members[-1][1]
            spans = [
                (first, -ux, -uy, None, m - 1),
                (last, ux, uy, None, m - 1),
            ]
            if m >= 3:
                for (t0, i0), (t1, _) in zip(members, members[1:]):
                    spans.append((i0, ux, uy, t1 - t0, m - 2))
            for anchor, dx, dy, length, blocked in spans:
                clip = _clip_ray_int(gx[anchor], gy[anchor], dx, dy, hps)
                if clip is None:
                    continue
                (lon, lod), hi = clip
                lo_strict = lon == 0  # open at the anchoring guard
                if hi is None:
                    hin = hid = None
                else:
                    hin, hid = hi
                hi_strict = False
                if length is not None and (hin is None or hin >= length * hid):
                    hin, hid, hi_strict = length, 1, True  # open at far guard
                if hin is not None:
                    d = lon * hid - hin * lod
                    if d > 0 or (d == 0 and (lo_strict or hi_strict)):
                        continue
                pieces.append(
                    (gx[anchor], gy[anchor], dx, dy,
                     lon, lod, lo_strict, hin, hid, hi_strict, blocked, line_id)
                )
        self.pieces = pieces

    # -- public-facing line objects -------------------------------------
    def public_lines(self) -> List[GuardLine]:
        if self._public_lines is None:
            out = []
            for ux, uy, c, members in self.lines:
                idxs = [i for _, i in members]
                pts = [self.gset.guards[i] for i in idxs]
                out.append(GuardLine(Line.through(pts[0], pts[-1]), pts, idxs))
            self._public_lines = out
        return self._public_lines

    # -- darkness at an exact rational point (scaled frame) --------------
    def darkness_at_scaled(self, xn: int, yn: int, den: int):
        """(darkness, [(line_id, count)]) at the point (xn/den, yn/den)."""
        total = 0
        contributions = []
        gx, gy = self.scene.gx, self.scene.gy
        for line_id, (ux, uy, c, members) in enumerate(self.lines):
            if ux * yn - uy * xn != c * den:
                continue
            m = len(members)
            a = members[0][1]
            # parameter of the query along (ux, uy) vs integer member params
            tn = (xn - gx[a] * den) * ux + (yn - gy[a] * den) * uy
            td = (ux * ux + uy * uy) * den
            below = 0
            at = False
            for t, _ in members:
                s = t * td
                if tn > s:
                    below += 1
                elif tn == s:
                    at = True
                    break
                else:
                    break
            if at:
                cnt = (m - 1) - (1 if below > 0 else 0) - (1 if m - 1 - below > 0 else 0)
            elif below == 0 or below == m:
                cnt = m - 1
            else:
                cnt = m - 2
            if cnt > 0:
                total += cnt
                contributions.append((line_id, cnt))
        return total, contributions

    # -- pairwise crossings of pieces ------------------------------------
    def _confirm(self, i, j):
        """Exact crossing test of pieces i and j.

        Returns (un, vn, D) with D > 0 (params un/D on i, vn/D on j) when
        the pieces truly cross, else None.
        """
        p = self.pieces[i]
        q = self.pieces[j]
        D = p[2] * q[3] - p[3] * q[2]
        if D == 0:
            return None
        ex = q[0] - p[0]
        ey = q[1] - p[1]
        un = ex * q[3] - ey * q[2]
        vn = ex * p[3] - ey * p[2]
        if D < 0:
            D, un, vn = -D, -un, -vn
        s = un * p[5] - p[4] * D
        if s < 0 or (s == 0 and p[6]):
            return None
        if p[7] is not None:
            s = un * p[8] - p[7] * D
            if s > 0 or (s == 0 and p[9]):
                return None
        s = vn * q[5] - q[4] * D
        if s < 0 or (s == 0 and q[6]):
            return None
        if q[7] is not None:
            s = vn * q[8] - q[7] * D
            if s > 0 or (s == 0 and q[9]):
                return None
        return (un, vn, D)

    def _piece_boxes(self):
        """Conservative integer cell boxes, one per piece.

        The pieces' joint extent is divided into 1024 columns and rows
        and every endpoint is floored onto that grid with exact rational
        arithmetic, so two pieces whose true spans overlap always land
        in overlapping cell ranges.  An unbounded end spills into a
        sentinel cell past the grid edge.  Cell numbers stay tiny no
        matter how large the scene coordinates are, which is the point:
        the pair scan keeps a vectorized prefilter even when the
        coordinates themselves are too big for int64 products.
        """
        # endpoints as unreduced rationals (numerator, positive denominator):
        # no gcd normalization anywhere, comparisons cross-multiply instead
        spans = []
        for ax, ay, dx, dy, lon, lod, _ls, hin, hid, _hs, _b, _lid in self.pieces:
            e0 = (ax * lod + dx * lon, ay * lod + dy * lon, lod)
            if hin is None:
                e1 = None
            else:
                e1 = (ax * hid + dx * hin, ay * hid + dy * hin, hid)
            spans.append((e0, e1, dx, dy))

        def smaller(a, b):
            return a if a[0] * b[1] < b[0] * a[1] else b

        def larger(a, b):
            return a if a[0] * b[1] > b[0] * a[1] else b

        mnx = mxx = (spans[0][0][0], spans[0][0][2])
        mny = mxy = (spans[0][0][1], spans[0][0][2])
        for e0, e1, _dx, _dy in spans:
            for e in (e0, e1) if e1 is not None else (e0,):
                mnx = smaller(mnx, (e[0], e[2]))
                mxx = larger(mxx, (e[0], e[2]))
                mny = smaller(mny, (e[1], e[2]))
                mxy = larger(mxy, (e[1], e[2]))
        spanx = (mxx[0] * mnx[1] - mnx[0] * mxx[1], mxx[1] * mnx[1])
        spany = (mxy[0] * mny[1] - mny[0] * mxy[1], mxy[1] * mny[1])
        en, ed = larger(spanx, spany)
        if en == 0:
            en, ed = 1, 1
        cells = 1024

        def cell(vn, vd, lo):
            # floor of ((vn/vd - lo) * cells / extent); vn/vd >= lo always
            return (vn * lo[1] - lo[0] * vd) * cells * ed // (vd * lo[1] * en)

        n = len(spans)
        lox = np.empty(n, dtype=np.int64)
        hix = np.empty(n, dtype=np.int64)
        loy = np.empty(n, dtype=np.int64)
        hiy = np.empty(n, dtype=np.int64)
        for k, (e0, e1, dx, dy) in enumerate(spans):
            cx = cell(e0[0], e0[2], mnx)
            cy = cell(e0[1], e0[2], mny)
            if e1 is None:
                lox[k], hix[k] = (cx, cells + 1) if dx > 0 else (-1, cx)
                if dx == 0:
                    lox[k] = hix[k] = cx
                loy[k], hiy[k] = (cy, cells + 1) if dy > 0 else (-1, cy)
                if dy == 0:
                    loy[k] = hiy[k] = cy
            else:
                c1x = cell(e1[0], e1[2], mnx)
                c1y = cell(e1[1], e1[2], mny)
                lox[k], hix[k] = min(cx, c1x), max(cx, c1x)
                loy[k], hiy[k] = min(cy, c1y), max(cy, c1y)
        return lox, hix, loy, hiy

    def crossings(self):
        """All in-region crossing points of pieces from distinct lines.

        Returns (points, events): points maps a normalized homogeneous
        point key (xn, yn, den) to the set of piece indices through it;
        events maps a piece index to its crossing parameters.
        """
        if self._crossings is not None:
            return self._crossings
        pieces = self.pieces
        R = len(pieces)
        points = {}
        events = {}

        def note(i, j, un, vn, D):
            pi = pieces[i]
            xn = pi[0] * D + un * pi[2]
            yn = pi[1] * D + un * pi[3]
            g = gcd(gcd(abs(xn), abs(yn)), D)
            key = (xn // g, yn // g, D // g)
            s = points.get(key)
            if s is None:
                points[key] = {i, j}
            else:
                s.add(i)
                s.add(j)
            events.setdefault(i, []).append(Fraction(un, D))
            events.setdefault(j, []).append(Fraction(vn, D))

        if R >= _NUMPY_MIN_ITEMS:
            lox, hix, loy, hiy = self._piece_boxes()
            lid = np.array([p[11] for p in pieces], dtype=np.int64)
            # sign tests need int64 products of the coordinates themselves,
            # so they only join in when the scene is small enough
            exact64 = self.scene.max_abs < _NUMPY_COORD_LIMIT
            if exact64:
                ax = np.array([p[0] for p in pieces], dtype=np.int64)
                ay = np.array([p[1] for p in pieces], dtype=np.int64)
                dx = np.array([p[2] for p in pieces], dtype=np.int64)
                dy = np.array([p[3] for p in pieces], dtype=np.int64)
            for i in range(R - 1):
                jx = slice(i + 1, R)
                mask = (
                    (lox[jx] <= hix[i])
                    & (lox[i] <= hix[jx])
                    & (loy[jx] <= hiy[i])
                    & (loy[i] <= hiy[jx])
                    & (lid[jx] != lid[i])
                )
                if exact64:
                    D = dx[i] * dy[jx] - dy[i] * dx[jx]
                    ex = ax[jx] - ax[i]
                    ey = ay[jx] - ay[i]
                    un = ex * dy[jx] - ey * dx[jx]
                    vn = ex * dy[i] - ey * dx[i]
                    sgn = np.sign(D)
                    mask &= (D != 0) & (un * sgn >= 0) & (vn * sgn >= 0)
                for off in np.nonzero(mask)[0]:
                    j = i + 1 + int(off)
                    hit = self._confirm(i, j)
                    if hit is not None:
                        note(i, j, *hit)
        else:
            for i in range(R - 1):
                li = pieces[i][11]
                for j in range(i + 1, R):
                    if pieces[j][11] == li:
                        continue
                    hit = self._confirm(i, j)
                    if hit is not None:
                        note(i, j, *hit)

        self._crossings = (points, events)
        return self._crossings

    # -- candidate enumeration -------------------------------------------
    def candidates(self):
        """(darkness, xn, yn, den, contributions) over the complete
        candidate set: crossings, guard points, piece representatives."""
        points, events = self.crossings()
        out = []

        for xn, yn, den in points:
            total, contr = self.darkness_at_scaled(xn, yn, den)
            out.append((total, xn, yn, den, contr))

        gx, gy = self.scene.gx, self.scene.gy
        for i in range(len(gx)):
            total, contr = self.darkness_at_scaled(gx[i], gy[i], 1)
            out.append((total, gx[i], gy[i], 1, contr))

        # Representatives of crossing-free sub-pieces.  Darkness there is
        # exactly the piece's blocked count: after subdividing at every
        # crossing parameter no other portion passes through a sub-piece
        # interior, and no guard can lie on a piece at all (a guard
        # collinear with a line's members would itself be a member).
        for idx, piece in enumerate(self.pieces):
            ax, ay, dx, dy, lon, lod, lo_strict, hin, hid, hi_strict, blocked, line_id = piece
            lo = Fraction(lon, lod)
            hi = None if hin is None else Fraction(hin, hid)
            cuts = sorted(set(events.get(idx, [])))
            bounds = [lo] + [t for t in cuts if lo < t and (hi is None or t < hi)]
            reps = []
            single = False
            if hi is None:
                for a, b in zip(bounds, bounds[1:]):
                    reps.append((a + b) / 2)
                reps.append(bounds[-1] + 1)
            elif lo == hi:
                reps.append(lo)  # single-point piece (both ends closed)
                single = True
            else:
                bounds.append(hi)
                for a, b in zip(bounds, bounds[1:]):
                    reps.append((a + b) / 2)
            for t in reps:
                xn = ax * t.denominator + t.numerator * dx
                yn = ay * t.denominator + t.numerator * dy
                if single:
                    total, contr = self.darkness_at_scaled(xn, yn, t.denominator)
                    out.append((total, xn, yn, t.denominator, contr))
                else:
                    out.append((blocked, xn, yn, t.denominator, [(line_id, blocked)]))
        return out

    def witness_from(self, total, xn, yn, den, contr) -> DarknessWitness:
        pub = self.public_lines()
        point = self.scene.unscale(xn, yn, den)
        lines = [(pub[line_id], cnt) for line_id, cnt in contr]
        return DarknessWitness(point, total, lines)

    def piece_representative(self, piece):
        """A parameter value interior to the piece (or its single point)."""
        lon, lod, hin, hid = piece[4], piece[5], piece[7], piece[8]
        lo = Fraction(lon, lod)
        if hin is None:
            return lo + 1
        hi = Fraction(hin, hid)
        if lo == hi:
            return lo
        return (lo + hi) / 2


def max_darkness(region: Region, guards) -> DarknessWitness:
    """Exact maximum darkness over the closed region, with witness.

    Ties between witness points are broken by lexicographic point order,
    so the certificate does not depend on guard ordering.
    """
    gset = GuardSet.coerce(guards)
    analysis = _Analysis(region, gset)
    best = None
    for cand in analysis.candidates():
        total, xn, yn, den, contr = cand
        key = (-total, Fraction(xn, den), Fraction(yn, den))
        if best is None or key < best[0]:
            best = (key, cand)
    return analysis.witness_from(*best[1])


def darkness_at(region: Region, guards, p: Point2) -> DarknessWitness:
    """Exact darkness at one point of the closed region."""
    gset = GuardSet.coerce(guards)
    if not region.contains(p):
        raise ValueError("query point %r lies outside the region" % (p,))
    analysis = _Analysis(region, gset)
    s = analysis.scene.scale
    xq, yq = p.x * s, p.y * s
    den = lcm(xq.denominator, yq.denominator)
    xn, yn = int(xq * den), int(yq * den)
    total, contr = analysis.darkness_at_scaled(xn, yn, den)
    return analysis.witness_from(total, xn, yn, den, contr)


def min_depth(region: Region, guards) -> DepthCertificate:
    """Certificate for the minimum number of guards seeing any point."""
    gset = GuardSet.coerce(guards)
    witness = max_darkness(region, gset)
    return DepthCertificate(len(gset), witness.darkness, witness)


def has_j_dark(region: Region, guards, j: int):
    """(found, witness) for a point of the region with darkness >= j.

    Early-exits where it can: a portion whose own blocked count reaches j
    settles it immediately, and the crossing scan stops at the first
    confirmed hit of sufficient darkness.
    """
    if j < 1:
        raise ValueError("j must be a positive integer")
    gset = GuardSet.coerce(guards)
    analysis = _Analysis(region, gset)

    # pieces whose own blocked count already reaches j
    for piece in analysis.pieces:
        if piece[10] < j:
            continue
        t = analysis.piece_representative(piece)
        xn = piece[0] * t.denominator + t.numerator * piece[2]
        yn = piece[1] * t.denominator + t.numerator * piece[3]
        total, contr = analysis.darkness_at_scaled(xn, yn, t.denominator)
        return True, analysis.witness_from(total, xn, yn, t.denominator, contr)

    # guard positions (3+ collinear guards darken the middle ones' spots)
    gx, gy = analysis.scene.gx, analysis.scene.gy
    for i in range(len(gx)):
        total, contr = analysis.darkness_at_scaled(gx[i], gy[i], 1)
        if total >= j:
            return True, analysis.witness_from(total, gx[i], gy[i], 1, contr)

    if j == 1:
        return False, None

    # otherwise the darkness must stack up at a portion crossing
    pieces = analysis.pieces
    R = len(pieces)
    for i in range(R - 1):
        li = pieces[i][11]
        for jdx in range(i + 1, R):
            if pieces[jdx][11] == li:
                continue
            hit = analysis._confirm(i, jdx)
            if hit is None:
                continue
            un, vn, D = hit
            xn = pieces[i][0] * D + un * pieces[i][2]
            yn = pieces[i][1] * D + un * pieces[i][3]
            total, contr = analysis.darkness_at_scaled(xn, yn, D)
            if total >= j:
                return True, analysis.witness_from(total, xn, yn, D, contr)
    return False, None


# ---------------------------------------------------------------------------
# general-position diagnostics


def find_collinear_triple(guards):
    """Indices of three collinear guards, or None."""
    gset = GuardSet.coerce(guards)
    scale = lcm(*_coord_denominators(None, gset.guards))
    gx = [int(g.x * scale) for g in gset.guards]
    gy = [int(g.y * scale) for g in gset.guards]
    for _, _, _, members in _group_collinear(gx, gy):
        if len(members) >= 3:
            return tuple(i for _, i in members[:3])
    return None


def find_concurrent_dark_rays(guards):
    """A point where dark rays from >= 3 distinct guard lines meet.

    The scan is plane-wide (no region clipping).  Returns (point, count)
    for the lexicographically smallest such point, or None.
    """
    gset = GuardSet.coerce(guards)
    scale = lcm(*_coord_denominators(None, gset.guards))
    gx = [int(g.x * scale) for g in gset.guards]
    gy = [int(g.y * scale) for g in gset.guards]
    lines = _group_collinear(gx, gy)

    # every dark ray lies in one of the two unbounded ends of its line
    rays = []
    for line_id, (ux, uy, c, members) in enumerate(lines):
        first, last = members[0][1], members[-1][1]
        rays.append((gx[first], gy[first], -ux, -uy, line_id))
        rays.append((gx[last], gy[last], ux, uy, line_id))

    R = len(rays)
    max_abs = max(
        (max(abs(r[0]), abs(r[1]), abs(r[2]), abs(r[3])) for r in rays), default=0
    )
    points = {}

    def note(i, j, un, D):
        xn = rays[i][0] * D + un * rays[i][2]
        yn = rays[i][1] * D + un * rays[i][3]
        g = gcd(gcd(abs(xn), abs(yn)), D)
        key = (xn // g, yn // g, D // g)
        s = points.get(key)
        if s is None:
            points[key] = {rays[i][4], rays[j][4]}
        else:
            s.add(rays[i][4])
            s.add(rays[j][4])

    def confirm(i, j):
        axi, ayi, dxi, dyi, _ = rays[i]
        axj, ayj, dxj, dyj, _ = rays[j]
        D = dxi * dyj - dyi * dxj
        if D == 0:
            return None
        ex, ey = axj - axi, ayj - ayi
        un = ex * dyj - ey * dxj
        vn = ex * dyi - ey * dxi
        if D < 0:
            D, un, vn = -D, -un, -vn
        if un <= 0 or vn <= 0:  # rays are open at their roots
            return None
        return (un, D)

    if R >= _NUMPY_MIN_ITEMS and max_abs < _NUMPY_COORD_LIMIT:
        ax = np.array([r[0] for r in rays], dtype=np.int64)
        ay = np.array([r[1] for r in rays], dtype=np.int64)
        dx = np.array([r[2] for r in rays], dtype=np.int64)
        dy = np.array([r[3] for r in rays], dtype=np.int64)
        lid = np.array([r[4] for r in rays], dtype=np.int64)
        for i in range(R - 1):
            jx = slice(i + 1, R)
            D = dx[i] * dy[jx] - dy[i] * dx[jx]
            ex = ax[jx] - ax[i]
            ey = ay[jx] - ay[i]
            un = ex * dy[jx] - ey * dx[jx]
            vn = ex * dy[i] - ey * dx[i]
            sgn = np.sign(D)
            mask = (D != 0) & (lid[jx] != lid[i]) & (un * sgn > 0) & (vn * sgn > 0)
            for off in np.nonzero(mask)[0]:
                j = i + 1 + int(off)
                hit = confirm(i, j)
                if hit is not None:
                    note(i, j, *hit)
    else:
        for i in range(R - 1):
            for j in range(i + 1, R):
                if rays[i][4] == rays[j][4]:
                    continue
                hit = confirm(i, j)
                if hit is not None:
                    note(i, j, *hit)

    hits = [
        (Fraction(xn, den * scale), Fraction(yn, den * scale), len(ids))
        for (xn, yn, den), ids in points.items()
        if len(ids) >= 3
    ]
    if not hits:
        return None
    hits.sort()
    x, y, count = hits[0]
    return Point2(x, y), count


# ---------------------------------------------------------------------------
# boundary census


def boundary_census(polygon: ConvexPolygon, guards) -> BoundaryCensus:
    """Count boundary guards per edge and darkened vertices.

    A vertex is darkened when, along one of its incident edges, some
    guard hides behind another: at least two guards on that edge away
    from the vertex itself, so the nearer blocks the farther.

    The identity boundary_total == n + darkened/2 is checked exactly; it
    is only guaranteed when every guard is on the boundary, every edge
    carries a guard in its interior or guards at both endpoints, and the
    placement has no 2-dark point.  Violations are reported in `reasons`
    and flip `applicable` to False while the raw counts stay available.
    """
    gset = GuardSet.coerce(guards)
    vs = polygon.vertices
    n = len(vs)
    reasons = []

    for g in gset.guards:
        w = polygon.where(g)
        if w == "exterior":
            raise ValueError("guard %r lies outside the polygon" % (g,))
        if w == "interior":
            reasons.append("guard %r is not on the boundary" % (g,))

    guard_at = set(gset.guards)
    vertex_guard = [v in guard_at for v in vs]
    edge_interior = []  # per edge: guards strictly inside it
    for a, b in polygon.edges():
        edge_interior.append([g for g in gset.guards if strictly_between(a, g, b)])

    weights = []
    ray_counts = []
    for i in range(n):
        w = Fraction(len(edge_interior[i]))
        at_a = vertex_guard[i]
        at_b = vertex_guard[(i + 1) % n]
        if at_a:
            w += Fraction(1, 2)
        if at_b:
            w += Fraction(1, 2)
        weights.append(w)
        # dark rays running along the edge: every guard but the extreme
        # one hides somebody toward each endpoint, except from the
        # endpoint itself
        m = len(edge_interior[i]) + (1 if at_a else 0) + (1 if at_b else 0)
        if m >= 2:
            ray_counts.append(2 * m - 2 - (1 if at_a else 0) - (1 if at_b else 0))
        else:
            ray_counts.append(0)
        if not edge_interior[i] and not (at_a and at_b):
            reasons.append(
                "edge %d has no interior guard and lacks guards at both endpoints" % i
            )

    darkened = []
    for i, v in enumerate(vs):
        for a, b in ((vs[i], vs[(i + 1) % n]), (vs[i - 1], vs[i])):
            others = [g for g in gset.guards if g != v and on_segment(g, a, b)]
            if len(others) >= 2:
                darkened.append(i)
                break

    dark2, _ = has_j_dark(polygon, gset, 2)
    if dark2:
        reasons.append("placement has a 2-dark point")

    return BoundaryCensus(weights, ray_counts, darkened, n, not reasons, reasons)
