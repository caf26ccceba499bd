"""Planar geometric kernel: points, segments, circular arcs, closed boundary chains.

Lengths are measured in units where the reference hexagon has unit distance
between opposite sides.  Predicates use the absolute distance tolerance
``EPS``; derived identities (isometry invariance, on-circle residuals) are
expected to hold to ``EPS_IDENT``.  Intersection results are ordered
ascending by y then x so constructions are reproducible bit for bit.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence, Union

import numpy as np

EPS = 1e-10         # distance tolerance for predicates and tangency snapping
EPS_IDENT = 1e-12   # tolerance on derived identities
MIN_FEATURE = 1e-12 # below this, segments/arcs are considered degenerate
TWO_PI = 2.0 * math.pi


class Point(NamedTuple):
    x: float
    y: float

    def __add__(self, other):  # type: ignore[override]
        return Point(self.x + other[0], self.y + other[1])

    def __sub__(self, other):
        return Point(self.x - other[0], self.y - other[1])

    def __mul__(self, k):  # type: ignore[override]
        return Point(self.x * k, self.y * k)

    __rmul__ = __mul__

    def __neg__(self):
        return Point(-self.x, -self.y)

    def dot(self, other) -> float:
        return self.x * other[0] + self.y * other[1]

    def cross(self, other) -> float:
        return self.x * other[1] - self.y * other[0]

    def norm(self) -> float:
        return math.hypot(self.x, self.y)


def unit(angle: float) -> Point:
    return Point(math.cos(angle), math.sin(angle))


def dist(p, q) -> float:
    return math.hypot(p[0] - q[0], p[1] - q[1])


def angle_of(v) -> float:
    return math.atan2(v[1], v[0])


def norm_angle(a: float) -> float:
    """Normalize to (-pi, pi]."""
    a = math.fmod(a, TWO_PI)
    if a > math.pi:
        a -= TWO_PI
    elif a <= -math.pi:
        a += TWO_PI
    return a


def ccw_delta(a0: float, a1: float) -> float:
    """Counterclockwise sweep from angle a0 to a1, in [0, 2*pi)."""
    return (a1 - a0) % TWO_PI


# line arguments are passed as a pair of distinct points, per the kernel API
Line = tuple[Point, Point]


@dataclass(frozen=True)
class LineSeg:
    a: Point
    b: Point

    def __post_init__(self):
        if dist(self.a, self.b) <= MIN_FEATURE:
            raise ValueError("degenerate segment: endpoints coincide")

    @property
    def start(self) -> Point:
        return self.a

    @property
    def end(self) -> Point:
        return self.b

    @property
    def length(self) -> float:
        return dist(self.a, self.b)

    def direction(self) -> Point:
        d = self.b - self.a
        n = d.norm()
        return Point(d.x / n, d.y / n)

    def reversed(self) -> "LineSeg":
        return LineSeg(self.b, self.a)


@dataclass(frozen=True)
class CircArc:
    """Circular arc from start_angle to end_angle around center.

    ``ccw=True`` sweeps counterclockwise.  The sweep magnitude is in
    (0, 2*pi); a full circle must be split into at least two arcs.
    """

    center: Point
    radius: float
    start_angle: float
    end_angle: float
    ccw: bool = True

    def __post_init__(self):
        if not self.radius > EPS:
            raise ValueError("arc radius must exceed tolerance")
        if abs(self.sweep) <= 0.0 or abs(self.sweep) >= TWO_PI:
            raise ValueError("arc sweep magnitude must lie in (0, 2*pi)")

    @property
    def sweep(self) -> float:
        """Signed sweep: positive for ccw, negative for cw."""
        d = ccw_delta(self.start_angle, self.end_angle)
        if self.ccw:
            return d if d > 0.0 else TWO_PI
        d = ccw_delta(self.end_angle, self.start_angle)
        return -(d if d > 0.0 else TWO_PI)

    def point_at_angle(self, ang: float) -> Point:
        return Point(self.center.x + self.radius * math.cos(ang),
                     self.center.y + self.radius * math.sin(ang))

    @property
    def start(self) -> Point:
        return self.point_at_angle(self.start_angle)

    @property
    def end(self) -> Point:
        return self.point_at_angle(self.end_angle)

    def angles(self, n: int) -> np.ndarray:
        return self.start_angle + np.linspace(0.0, 1.0, n) * self.sweep

    def contains_angle(self, ang: float, tol: float = 1e-12) -> bool:
        d = ccw_delta(self.start_angle, ang)
        s = ccw_delta(self.start_angle, self.end_angle) if self.ccw else None
        if self.ccw:
            return d <= s + tol or d >= TWO_PI - tol
        d = ccw_delta(ang, self.start_angle)
        s = ccw_delta(self.end_angle, self.start_angle)
        return d <= s + tol or d >= TWO_PI - tol

    def reversed(self) -> "CircArc":
        return CircArc(self.center, self.radius, self.end_angle,
                       self.start_angle, not self.ccw)


@dataclass(frozen=True)
class Polyline:
    """A run of line segments stored compactly as a vertex array.

    Semantically equivalent to a list of LineSeg elements; used where a
    boundary piece is a finely sampled smooth curve.
    """

    points: np.ndarray  # (n, 2), n >= 2

    def __post_init__(self):
        pts = np.asarray(self.points, dtype=float)
        if pts.ndim != 2 or pts.shape[1] != 2 or pts.shape[0] < 2:
            raise ValueError("polyline needs an (n>=2, 2) vertex array")
        object.__setattr__(self, "points", pts)

    @property
    def start(self) -> Point:
        return Point(*self.points[0])

    @property
    def end(self) -> Point:
        return Point(*self.points[-1])

    def reversed(self) -> "Polyline":
        return Polyline(self.points[::-1].copy())


Element = Union[LineSeg, CircArc, Polyline]


@dataclass(frozen=True)
class Isometry:
    """Plane isometry: optional reflection across the x-axis, then rotation
    about the origin, then translation."""

    rotation: float = 0.0
    translation: tuple[float, float] = (0.0, 0.0)
    reflect: bool = False

    def apply_point(self, p) -> Point:
        x, y = p[0], p[1]
        if self.reflect:
            y = -y
        c, s = math.cos(self.rotation), math.sin(self.rotation)
        return Point(c * x - s * y + self.translation[0],
                     s * x + c * y + self.translation[1])

    def apply_many(self, pts: np.ndarray) -> np.ndarray:
        pts = np.asarray(pts, dtype=float)
        if self.reflect:
            pts = pts * np.array([1.0, -1.0])
        c, s = math.cos(self.rotation), math.sin(self.rotation)
        rot = np.array([[c, -s], [s, c]])
        return pts @ rot.T + np.asarray(self.translation)


def apply_isometry(iso: Isometry, obj):
    """Transform a Point, element, or BoundaryChain by an isometry.

    Reflections reverse traversal order of chains so the counterclockwise
    invariant is preserved.
    """
    if isinstance(obj, Point) or (isinstance(obj, tuple) and len(obj) == 2):
        return iso.apply_point(obj)
    if isinstance(obj, LineSeg):
        return LineSeg(iso.apply_point(obj.a), iso.apply_point(obj.b))
    if isinstance(obj, Polyline):
        return Polyline(iso.apply_many(obj.points))
    if isinstance(obj, CircArc):
        c = iso.apply_point(obj.center)
        if iso.reflect:
            a0, a1 = -obj.start_angle + iso.rotation, -obj.end_angle + iso.rotation
            return CircArc(c, obj.radius, a0, a1, not obj.ccw)
        return CircArc(c, obj.radius, obj.start_angle + iso.rotation,
                       obj.end_angle + iso.rotation, obj.ccw)
    if isinstance(obj, BoundaryChain):
        elems = [apply_isometry(iso, e) for e in obj.elements]
        if iso.reflect:
            elems = [_reverse_element(e) for e in reversed(elems)]
        return BoundaryChain(elems)
    raise TypeError(f"cannot transform {type(obj)!r}")


def _reverse_element(e: Element) -> Element:
    return e.reversed()


def element_start(e: Element) -> Point:
    return e.start


def element_end(e: Element) -> Point:
    return e.end


class BoundaryChain:
    """Closed, counterclockwise-oriented sequence of segments, arcs, and
    polylines bounding a planar region.

    The empty chain represents a vanished region (area 0).
    """

    def __init__(self, elements: Iterable[Element], validate: bool = True):
        self.elements: list[Element] = list(elements)
        self._polygon_cache: dict[float, np.ndarray] = {}
        if validate and self.elements:
            self._check_closed()
            if self.signed_area() < 0:
                raise ValueError("chain must be oriented counterclockwise")

    @classmethod
    def empty(cls) -> "BoundaryChain":
        return cls([])

    @property
    def is_empty(self) -> bool:
        return not self.elements

    def _check_closed(self):
        for e, nxt in zip(self.elements, self.elements[1:] + self.elements[:1]):
            if dist(e.end, nxt.start) > EPS:
                raise ValueError("chain is not closed")

    def is_closed(self) -> bool:
        try:
            self._check_closed()
        except ValueError:
            return False
        return True

    def reversed_elements(self) -> list[Element]:
        return [e.reversed() for e in reversed(self.elements)]

    def signed_area(self) -> float:
        """Green's-theorem area: shoelace over element endpoints plus the
        signed circular-segment correction r^2 (phi - sin phi)/2 per arc."""
        if self.is_empty:
            return 0.0
        total = 0.0
        for e in self.elements:
            if isinstance(e, Polyline):
                pts = e.points
                total += 0.5 * float(np.sum(pts[:-1, 0] * pts[1:, 1]
                                            - pts[1:, 0] * pts[:-1, 1]))
            else:
                a, b = e.start, e.end
                total += 0.5 * (a.x * b.y - b.x * a.y)
                if isinstance(e, CircArc):
                    phi = e.sweep
                    seg = e.radius * e.radius * (abs(phi) - math.sin(abs(phi))) / 2.0
                    total += math.copysign(seg, phi)
        return total

    def area(self) -> float:
        return chain_area(self)

    def vertices(self) -> list[Point]:
        return [e.start for e in self.elements]

    def polygon(self, max_sagitta: float = EPS / 4) -> np.ndarray:
        """Polygonal approximation within max_sagitta of the true boundary."""
        key = max_sagitta
        cached = self._polygon_cache.get(key)
        if cached is not None:
            return cached
        parts = []
        for e in self.elements:
            if isinstance(e, LineSeg):
                parts.append(np.array([[e.a.x, e.a.y]]))
            elif isinstance(e, Polyline):
                parts.append(e.points[:-1])
            else:
                n = _arc_samples(e, max_sagitta)
                angs = e.angles(n)[:-1]
                parts.append(np.stack([e.center.x + e.radius * np.cos(angs),
                                       e.center.y + e.radius * np.sin(angs)], axis=1))
        poly = np.vstack(parts) if parts else np.empty((0, 2))
        self._polygon_cache[key] = poly
        return poly


def _arc_samples(arc: CircArc, max_sagitta: float) -> int:
    ratio = max(1.0 - max_sagitta / arc.radius, -1.0)
    dtheta = 2.0 * math.acos(ratio) if ratio < 1.0 else 0.1
    return max(2, int(math.ceil(abs(arc.sweep) / max(dtheta, 1e-9))) + 1)


def chain_area(chain: BoundaryChain) -> float:
    """Enclosed area of a valid chain; raises on a non-closed or
    self-intersecting chain."""
    if chain.is_empty:
        return 0.0
    if not chain.is_closed():
        raise ValueError("invalid chain")
    if len(chain.elements) <= 64 and _self_intersects(chain):
        raise ValueError("invalid chain")
    return abs(chain.signed_area())


def _self_intersects(chain: BoundaryChain) -> bool:
    # O(n^2) segment pair test on a coarse polygonization; small chains only
    poly = chain.polygon(max_sagitta=1e-6)
    n = len(poly)
    if n > 4096 or n < 3:
        return False
    a = poly
    b = np.roll(poly, -1, axis=0)
    for i in range(n):
        p, r = a[i], b[i] - a[i]
        jmax = n if i > 0 else n - 1  # skip the shared-endpoint neighbours
        for j in range(i + 2, jmax):
            q0, s0 = a[j], b[j] - a[j]
            den = r[0] * s0[1] - r[1] * s0[0]
            if abs(den) < 1e-18:
                continue
            d0 = q0 - p
            t = (d0[0] * s0[1] - d0[1] * s0[0]) / den
            w = (d0[0] * r[1] - d0[1] * r[0]) / den
            if 1e-9 < t < 1 - 1e-9 and 1e-9 < w < 1 - 1e-9:
                return True
    return False


def points_in_polygon(pts: np.ndarray, poly: np.ndarray) -> np.ndarray:
    """Even-odd membership of pts (m,2) against a closed polygon (n,2)."""
    pts = np.atleast_2d(np.asarray(pts, dtype=float))
    x, y = pts[:, 0], pts[:, 1]
    inside = np.zeros(len(pts), dtype=bool)
    x0, y0 = poly[:, 0], poly[:, 1]
    x1, y1 = np.roll(x0, -1), np.roll(y0, -1)
    # chunk over edges to bound memory for large polygons
    step = max(1, int(4_000_000 / max(len(pts), 1)))
    for lo in range(0, len(poly), step):
        sl = slice(lo, min(lo + step, len(poly)))
        ex0, ey0, ex1, ey1 = x0[sl], y0[sl], x1[sl], y1[sl]
        cond = (ey0[None, :] > y[:, None]) != (ey1[None, :] > y[:, None])
        with np.errstate(divide="ignore", invalid="ignore"):
            xs = ex0 + (y[:, None] - ey0) * (ex1 - ex0) / (ey1 - ey0)
        hits = cond & (x[:, None] < xs)
        inside ^= (np.count_nonzero(hits, axis=1) % 2).astype(bool)
    return inside


def _seg_distance(p, a, b) -> float:
    ab = (b[0] - a[0], b[1] - a[1])
    ap = (p[0] - a[0], p[1] - a[1])
    den = ab[0] * ab[0] + ab[1] * ab[1]
    t = 0.0 if den == 0 else max(0.0, min(1.0, (ap[0] * ab[0] + ap[1] * ab[1]) / den))
    q = (a[0] + t * ab[0], a[1] + t * ab[1])
    return math.hypot(p[0] - q[0], p[1] - q[1])


def element_distance(p, e: Element) -> float:
    if isinstance(e, LineSeg):
        return _seg_distance(p, e.a, e.b)
    if isinstance(e, Polyline):
        pts = e.points
        d = pts[1:] - pts[:-1]
        ap = np.asarray([p[0], p[1]]) - pts[:-1]
        den = np.einsum("ij,ij->i", d, d)
        t = np.clip(np.einsum("ij,ij->i", ap, d) / np.where(den == 0, 1, den), 0, 1)
        q = pts[:-1] + t[:, None] * d
        return float(np.min(np.hypot(q[:, 0] - p[0], q[:, 1] - p[1])))
    ang = math.atan2(p[1] - e.center.y, p[0] - e.center.x)
    if e.contains_angle(ang):
        return abs(dist(p, e.center) - e.radius)
    return min(dist(p, e.start), dist(p, e.end))


def point_in_chain(chain: BoundaryChain, p) -> str:
    """Classify a point as 'inside', 'boundary', or 'outside' the chain,
    with a boundary band of width EPS."""
    if chain.is_empty:
        return "outside"
    if min(element_distance(p, e) for e in chain.elements) <= EPS:
        return "boundary"
    poly = chain.polygon()
    return "inside" if bool(points_in_polygon(np.array([p]), poly)[0]) else "outside"


def convexity_check(chain: BoundaryChain, angle_tol: float = 1e-9) -> bool:
    """True iff the chain bounds a convex region: every junction and every
    interior polyline vertex turns left (within angle_tol) and every arc
    bulges outward (is traversed ccw for a ccw chain)."""
    if chain.is_empty:
        return True
    elems = chain.elements if chain.signed_area() >= 0 else chain.reversed_elements()
    tangents = []  # (start_tangent, end_tangent)
    total_turn = 0.0
    for e in elems:
        if isinstance(e, LineSeg):
            d = math.atan2(e.b.y - e.a.y, e.b.x - e.a.x)
            tangents.append((d, d))
        elif isinstance(e, CircArc):
            if not e.ccw:
                return False  # inward-bulging arc
            t0 = e.start_angle + math.pi / 2
            t1 = e.end_angle + math.pi / 2
            tangents.append((t0, t1))
            total_turn += e.sweep
        else:
            d = np.diff(e.points, axis=0)
            angs = np.arctan2(d[:, 1], d[:, 0])
            turns = (np.diff(angs) + math.pi) % TWO_PI - math.pi
            if np.any(turns < -angle_tol):
                return False
            total_turn += float(np.sum(turns))
            tangents.append((float(angs[0]), float(angs[-1])))
    for (t_in, t_out), (n_in, _) in zip(tangents, tangents[1:] + tangents[:1]):
        turn = norm_angle(n_in - t_out)
        if turn < -angle_tol:
            return False
        total_turn += turn
    return abs(total_turn - TWO_PI) < 1e-6


# ---------------------------------------------------------------------------
# intersections and tangency feet

def circle_circle_intersection(c1, r1: float, c2, r2: float) -> list[Point]:
    """Intersection points of two circles, ordered ascending by (y, x).

    Tangency within EPS yields exactly one point; identical circles raise.
    """
    if not (r1 > 0 and r2 > 0):
        raise ValueError("radii must be positive")
    d = dist(c1, c2)
    if d <= EPS and abs(r1 - r2) <= EPS:
        raise ValueError("degenerate: identical circles")
    if abs(d - (r1 + r2)) <= EPS or (abs(d - abs(r1 - r2)) <= EPS and d > EPS):
        # external or internal tangency: single point along the center line
        sgn = 1.0 if abs(d - (r1 + r2)) <= EPS else math.copysign(1.0, r1 - r2)
        t = r1 / d * sgn
        return [Point(c1[0] + t * (c2[0] - c1[0]), c1[1] + t * (c2[1] - c1[1]))]
    if d > r1 + r2 or d < abs(r1 - r2):
        return []
    a = (d * d + r1 * r1 - r2 * r2) / (2 * d)
    h = math.sqrt(max(r1 * r1 - a * a, 0.0))
    ex = ((c2[0] - c1[0]) / d, (c2[1] - c1[1]) / d)
    bx, by = c1[0] + a * ex[0], c1[1] + a * ex[1]
    p1 = Point(bx - h * ex[1], by + h * ex[0])
    p2 = Point(bx + h * ex[1], by - h * ex[0])
    return sorted([p1, p2], key=lambda p: (p.y, p.x))


def circle_line_intersection(c, r: float, line: Line) -> list[Point]:
    """Intersections of a circle with the infinite line through two points,
    ordered ascending by (y, x); tangency yields the perpendicular foot."""
    p0, p1 = line
    if dist(p0, p1) <= MIN_FEATURE:
        raise ValueError("line points must be distinct")
    if not r > 0:
        raise ValueError("radius must be positive")
    foot = foot_of_perpendicular(c, line)
    h = dist(foot, c)
    if abs(h - r) <= EPS:
        return [foot]
    if h > r:
        return []
    half = math.sqrt(max(r * r - h * h, 0.0))
    d = Point(p1[0] - p0[0], p1[1] - p0[1])
    n = d.norm()
    d = Point(d.x / n, d.y / n)
    return sorted([foot - half * d, foot + half * d], key=lambda p: (p.y, p.x))


def foot_of_perpendicular(p, line: Line) -> Point:
    """Closest point to p on the infinite line through two points."""
    a, b = line
    if dist(a, b) <= MIN_FEATURE:
        raise ValueError("line points must be distinct")
    ab = Point(b[0] - a[0], b[1] - a[1])
    t = ((p[0] - a[0]) * ab.x + (p[1] - a[1]) * ab.y) / (ab.x ** 2 + ab.y ** 2)
    return Point(a[0] + t * ab.x, a[1] + t * ab.y)


def tangent_points(p, center, radius: float) -> list[Point]:
    """Tangency points of the tangent lines from p to a circle; for p on the
    circle (within EPS) the single tangency is p itself."""
    d = dist(p, center)
    if d < radius - EPS:
        return []
    if abs(d - radius) <= EPS:
        return [Point(p[0], p[1])]
    base = math.atan2(p[1] - center[1], p[0] - center[0])
    spread = math.acos(min(radius / d, 1.0))
    return [Point(center[0] + radius * math.cos(base + s * spread),
                  center[1] + radius * math.sin(base + s * spread))
            for s in (+1.0, -1.0)]


def minor_arc(center, p_start, p_end, radius: float | None = None) -> CircArc:
    """Arc through the smaller sweep from p_start to p_end around center."""
    r = dist(center, p_start) if radius is None else radius
    a0 = math.atan2(p_start[1] - center[1], p_start[0] - center[0])
    a1 = math.atan2(p_end[1] - center[1], p_end[0] - center[0])
    ccw = ccw_delta(a0, a1) <= math.pi
    return CircArc(Point(*center), r, a0, a1, ccw)


# ---------------------------------------------------------------------------
# support function of a convex chain

@dataclass
class SupportTable:
    """Piecewise support function of a convex region over outward-normal
    angle: h(phi) = a cos(phi) + b sin(phi) + r on each piece, where (a, b)
    is a boundary vertex (r = 0) or an arc center (r = its radius)."""

    breaks: np.ndarray  # (m+1,) increasing, spanning one full turn
    ax: np.ndarray
    ay: np.ndarray
    rr: np.ndarray

    def _piece(self, phis: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        phis = np.asarray(phis, dtype=float)
        lo = self.breaks[0]
        ph = (phis - lo) % TWO_PI + lo
        idx = np.clip(np.searchsorted(self.breaks, ph, side="right") - 1,
                      0, len(self.rr) - 1)
        return ph, idx

    def __call__(self, phis: np.ndarray) -> np.ndarray:
        ph, idx = self._piece(phis)
        return self.ax[idx] * np.cos(ph) + self.ay[idx] * np.sin(ph) + self.rr[idx]

    def boundary_points(self, phis: np.ndarray) -> np.ndarray:
        """Boundary point whose outward normal is phi."""
        ph, idx = self._piece(phis)
        return np.stack([self.ax[idx] + self.rr[idx] * np.cos(ph),
                         self.ay[idx] + self.rr[idx] * np.sin(ph)], axis=-1)


def support_table(chain: BoundaryChain) -> SupportTable:
    """Gauss-map support table of a convex ccw chain (cached on the chain).

    Raises when the chain is not convex (the Gauss map must be monotone)."""
    cached = getattr(chain, "_support_table", None)
    if cached is not None:
        return cached
    widths, axs, ays, rrs = [], [], [], []

    def add(width, a, b, r):
        widths.append(max(width, 0.0))
        axs.append(a)
        ays.append(b)
        rrs.append(r)

    norm_in, norm_out, emit = [], [], []
    for e in chain.elements:
        if isinstance(e, LineSeg):
            d = e.direction()
            nu = math.atan2(d.y, d.x) - math.pi / 2
            norm_in.append(nu)
            norm_out.append(nu)
            emit.append([])
        elif isinstance(e, CircArc):
            if not e.ccw:
                raise ValueError("support table requires a convex chain")
            norm_in.append(e.start_angle)
            norm_out.append(e.start_angle + e.sweep)
            emit.append([(e.sweep, e.center.x, e.center.y, e.radius)])
        else:
            dd = np.diff(e.points, axis=0)
            nus = np.arctan2(dd[:, 1], dd[:, 0]) - math.pi / 2
            steps = (np.diff(nus) + math.pi) % TWO_PI - math.pi
            if np.any(steps < -1e-6):
                raise ValueError("support table requires a convex chain")
            pieces = [(max(float(s), 0.0), float(v[0]), float(v[1]), 0.0)
                      for s, v in zip(steps, e.points[1:-1])]
            norm_in.append(float(nus[0]))
            norm_out.append(float(nus[-1]))
            emit.append(pieces)

    n = len(chain.elements)
    for i in range(n):
        for w, a, b, r in emit[i]:
            add(w, a, b, r)
        j = (i + 1) % n
        turn = norm_angle(norm_in[j] - norm_out[i])
        if turn < -1e-6:
            raise ValueError("support table requires a convex chain")
        v = chain.elements[i].end
        add(turn, v.x, v.y, 0.0)

    widths_arr = np.asarray(widths)
    if abs(float(np.sum(widths_arr)) - TWO_PI) > 1e-6:
        raise ValueError("support table requires a convex chain")
    breaks = norm_in[0] + np.concatenate([[0.0], np.cumsum(widths_arr)])
    keep = widths_arr > 0.0
    table = SupportTable(
        breaks=np.concatenate([breaks[:-1][keep], [breaks[-1]]]),
        ax=np.asarray(axs)[keep], ay=np.asarray(ays)[keep],
        rr=np.asarray(rrs)[keep])
    chain._support_table = table  # type: ignore[attr-defined]
    return table


# ---------------------------------------------------------------------------
# serialization

def chain_to_dict(chain: BoundaryChain) -> dict:
    out = []
    for e in chain.elements:
        if isinstance(e, LineSeg):
            out.append({"type": "segment", "a": [e.a.x, e.a.y], "b": [e.b.x, e.b.y]})
        elif isinstance(e, CircArc):
            out.append({"type": "arc", "center": [e.center.x, e.center.y],
                        "radius": e.radius, "start_angle": e.start_angle,
                        "end_angle": e.end_angle,
                        "orientation": "ccw" if e.ccw else "cw"})
        else:
            out.append({"type": "polyline", "points": e.points.tolist()})
    return {"elements": out}


def chain_from_dict(data: dict) -> BoundaryChain:
    elems: list[Element] = []
    for rec in data["elements"]:
        kind = rec["type"]
        if kind == "segment":
            elems.append(LineSeg(Point(*rec["a"]), Point(*rec["b"])))
        elif kind == "arc":
            elems.append(CircArc(Point(*rec["center"]), rec["radius"],
                                 rec["start_angle"], rec["end_angle"],
                                 rec["orientation"] == "ccw"))
        elif kind == "polyline":
            elems.append(Polyline(np.asarray(rec["points"], dtype=float)))
        else:
            raise ValueError(f"unknown element type {kind!r}")
    return BoundaryChain(elems)
