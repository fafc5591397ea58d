"""Plane curves: rectilinear lattice polygons and sampled smooth curves.

Also the numeric conormal lift of a sampled curve into J^1(S^1) and the
identification of the unit cotangent bundle of the plane with J^1(S^1).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np


class CurveError(ValueError):
    pass


class NotClosed(CurveError):
    pass


class NotAxisAligned(CurveError):
    pass


class CollinearSegments(CurveError):
    """Two segments on one horizontal or vertical line (degenerate tangency)."""


class TooFewCorners(CurveError):
    pass


class DegenerateSample(CurveError):
    pass


class ZeroCovector(CurveError):
    pass


@dataclass(frozen=True)
class RectCurve:
    """Closed axis-parallel lattice polygon in general position.

    The corner order is the orientation of the curve.  Construct through
    :func:`validate_rect` to get the invariants checked.
    """

    corners: tuple

    def __len__(self):
        return len(self.corners)

    def segments(self):
        """Yield ``(start, end)`` corner pairs in traversal order."""
        n = len(self.corners)
        for i in range(n):
            yield self.corners[i], self.corners[(i + 1) % n]

    def directions(self):
        """Unit direction of each segment as an integer pair."""
        out = []
        for (x0, y0), (x1, y1) in self.segments():
            out.append(((x1 > x0) - (x1 < x0), (y1 > y0) - (y1 < y0)))
        return out

    def turns(self):
        """Turn sign at each corner: +1 left (ccw), -1 right.

        ``turns()[i]`` is the turn made at corner ``i``, i.e. from the segment
        ending there to the segment starting there.
        """
        d = self.directions()
        n = len(d)
        return [d[i - 1][0] * d[i][1] - d[i - 1][1] * d[i][0] for i in range(n)]

    def to_json(self):
        return {"type": "rect", "corners": [list(c) for c in self.corners]}


def validate_rect(corners):
    """Check and normalize a corner list into a :class:`RectCurve`."""
    pts = []
    for c in corners:
        x, y = c
        if int(x) != x or int(y) != y:
            raise NotAxisAligned(f"corner {c!r} is not a lattice point")
        pts.append((int(x), int(y)))
    if len(pts) >= 2 and pts[0] == pts[-1]:
        pts.pop()  # tolerate an explicitly repeated first corner
    if len(pts) < 4:
        if len(pts) >= 2:
            _check_axis(pts, closed=False)
        raise TooFewCorners(f"need at least 4 corners, got {len(pts)}")
    _check_axis(pts, closed=True)
    n = len(pts)
    horiz = [pts[i][1] == pts[(i + 1) % n][1] for i in range(n)]
    for i in range(n):
        if horiz[i] == horiz[(i + 1) % n]:
            raise NotAxisAligned(f"segments {i} and {(i + 1) % n} are parallel; corners must alternate")
    if n % 2:
        raise NotClosed("odd number of corners cannot alternate horizontal/vertical")
    ys, xs = {}, {}
    for i in range(n):
        x0, y0 = pts[i]
        if horiz[i]:
            if y0 in ys:
                raise CollinearSegments(f"segments {ys[y0]} and {i} both lie on y={y0}")
            ys[y0] = i
        else:
            if x0 in xs:
                raise CollinearSegments(f"segments {xs[x0]} and {i} both lie on x={x0}")
            xs[x0] = i
    return RectCurve(tuple(pts))


def _check_axis(pts, closed):
    n = len(pts)
    last = n if closed else n - 1
    for i in range(last):
        (x0, y0), (x1, y1) = pts[i], pts[(i + 1) % n]
        if (x0 == x1) == (y0 == y1):
            if x0 == x1:
                raise CurveError(f"repeated corner {pts[i]!r}")
            if not closed or i < n - 1:
                raise NotAxisAligned(f"segment {pts[i]!r} -> {pts[(i + 1) % n]!r} is not axis-parallel")
            raise NotClosed(f"last corner {pts[i]!r} does not connect axis-parallel to the first")


def whitney_index(c):
    """Degree of the Gauss map: (left turns - right turns) / 4."""
    return sum(c.turns()) // 4


def reverse(c):
    return RectCurve(tuple(reversed(c.corners)))


def double_points(c):
    """Transverse self-intersections, as a sorted list of lattice points."""
    hs, vs = [], []
    for (x0, y0), (x1, y1) in c.segments():
        if y0 == y1:
            hs.append((min(x0, x1), max(x0, x1), y0))
        else:
            vs.append((x0, min(y0, y1), max(y0, y1)))
    pts = []
    for xa, xb, y in hs:
        for x, ya, yb in vs:
            if xa < x < xb and ya < y < yb:
                pts.append((x, y))
    return sorted(pts)


def winding_number(c, point):
    """Winding number of the curve around a point not on it (ray casting to +x)."""
    px, py = point
    w = 0
    for (x0, y0), (x1, y1) in c.segments():
        if x0 != x1:
            continue
        if x0 > px and min(y0, y1) <= py < max(y0, y1):
            w += 1 if y1 > y0 else -1
    return w


# -- sampled curves and the conormal lift -------------------------------------

@dataclass(frozen=True)
class SampledCurve:
    points: tuple

    def to_json(self):
        return {"type": "sampled", "points": [list(p) for p in self.points]}


@dataclass(frozen=True)
class CotangentPoint:
    q1: float
    q2: float
    p1: float
    p2: float


@dataclass(frozen=True)
class J1Point:
    theta: float
    y: float
    z: float


def sampled(points):
    pts = tuple((float(a), float(b)) for a, b in points)
    if len(pts) < 3:
        raise DegenerateSample("need at least 3 samples")
    return SampledCurve(pts)


def _normalize_angle(t):
    t = math.fmod(t, 2 * math.pi)
    if t < 0:
        t += 2 * math.pi
    if t >= 2 * math.pi:
        t = 0.0
    return t


def st_to_j1(p):
    """Map a point of the unit cotangent bundle of the plane to J^1(S^1)."""
    if p.p1 == 0 and p.p2 == 0:
        raise ZeroCovector("covector is zero")
    theta = _normalize_angle(math.atan2(p.p2, p.p1))
    c, s = math.cos(theta), math.sin(theta)
    return J1Point(theta, -p.q1 * s + p.q2 * c, p.q1 * c + p.q2 * s)


def tangent_angles(c):
    pts = np.asarray(c.points, dtype=float)
    chords = np.roll(pts, -1, axis=0) - pts
    if np.any(np.all(chords == 0, axis=1)):
        raise DegenerateSample("consecutive samples coincide")
    return np.arctan2(chords[:, 1], chords[:, 0])


def conormal_lift_arrays(c):
    """Vectorized lift: arrays ``(theta, y, z)`` with theta unwrapped."""
    pts = np.asarray(c.points, dtype=float)
    phi = tangent_angles(c)
    q1, q2 = pts[:, 0], pts[:, 1]
    theta = np.unwrap(phi) + math.pi / 2
    z = -q1 * np.sin(phi) + q2 * np.cos(phi)
    y = -q1 * np.cos(phi) - q2 * np.sin(phi)
    return theta, y, z


def conormal_lift(c):
    """Lift each sample, with tangent angle taken from the chord to the next sample."""
    theta, y, z = conormal_lift_arrays(c)
    return [J1Point(_normalize_angle(t), float(b), float(a)) for t, b, a in zip(theta, y, z)]


def conormal_covector(c):
    """Unit conormal covectors (rotated tangents) as CotangentPoints."""
    phi = tangent_angles(c)
    return [CotangentPoint(q[0], q[1], -math.sin(f), math.cos(f)) for q, f in zip(c.points, phi)]


def legendrian_defect(c):
    """Max over samples of |dz - y dtheta| along the lifted polygon.

    Differences are taken cyclically from each sample to the next; for a
    fine sampling of a smooth immersion the defect is O(h^2).
    """
    theta, y, z = conormal_lift_arrays(c)
    turns = round((theta[-1] - theta[0]) / (2 * math.pi))
    dtheta = np.diff(theta, append=theta[0] + 2 * math.pi * turns)
    dz = np.diff(z, append=z[0])
    return float(np.max(np.abs(dz - y * dtheta)))


def circle(n, radius=1.0, center=(0.0, 0.0)):
    t = np.linspace(0.0, 2 * math.pi, n, endpoint=False)
    return SampledCurve(tuple(zip(center[0] + radius * np.cos(t), center[1] + radius * np.sin(t))))


def curve_from_json(data):
    kind = data.get("type")
    if kind == "rect":
        return validate_rect([tuple(c) for c in data["corners"]])
    if kind == "sampled":
        return sampled(data["points"])
    raise CurveError(f"unknown curve type {kind!r}")
