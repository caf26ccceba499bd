"""Construction of the slanted hexagon covers and their reduction regions.

Frame: a regular hexagon centered at the origin with unit distance between
opposite sides, corner A_1 at (0, 1/sqrt(3)), corners labeled clockwise
A, B, C, D, E, F from the top.  A copy of the hexagon rotated
counterclockwise by 30 degrees + sigma supplies two cut lines that truncate
the corners at C and E, plus the two parallel chords near F and B that run
at unit distance from the cuts.  Successive covers:

* ``pal``      -- hexagon with the C and E corners cut off,
* ``sprague``  -- pal minus the three unit-arc regions C_S, E_S, A_S,
* ``full``     -- sprague minus the reflection regions A_H (near corner A)
                  and E_H (near corner E), defined for sigma < 10 degrees.

Every landmark (C_2, F_3, G, K, J, T, U, ...) is exposed in a registry so
the identities that define the construction (unit tangency distances,
arc incidences) can be asserted directly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache

import numpy as np

from .geometry import (EPS, BoundaryChain, CircArc, Isometry, LineSeg, Point,
                       Polyline, angle_of, ccw_delta, dist, minor_arc,
                       norm_angle, tangent_points, unit)

SQRT3 = math.sqrt(3.0)
PI = math.pi
SIGMA_MAX = PI / 6       # slant angle upper limit (30 degrees)
SIGMA_EH_MAX = PI / 18   # E_H region exists below 10 degrees

# hexagon corners, clockwise from the top
CORNER = {
    "A_1": Point(0.0, 1.0 / SQRT3),
    "B_1": Point(0.5, 0.5 / SQRT3),
    "C_1": Point(0.5, -0.5 / SQRT3),
    "D_1": Point(0.0, -1.0 / SQRT3),
    "E_1": Point(-0.5, -0.5 / SQRT3),
    "F_1": Point(-0.5, 0.5 / SQRT3),
}
M_POINT = Point(-0.25, -SQRT3 / 4)  # midpoint of edge ED
HALF_EDGE = 0.5 / SQRT3

# outward normal angle of each hexagon edge line
EDGE_NORMAL = {"AB": PI / 3, "BC": 0.0, "CD": -PI / 3,
               "DE": -2 * PI / 3, "EF": PI, "FA": 2 * PI / 3}


def edge_frame(name: str) -> tuple[Point, Point]:
    """(foot of apothem, unit direction) parametrizing a hexagon edge line."""
    nu = EDGE_NORMAL[name]
    return 0.5 * unit(nu), unit(nu + PI / 2)


@dataclass(frozen=True)
class SlantAngle:
    """Slant angle of the rotated hexagon copy, in radians, within [0, 30deg)."""

    sigma: float

    def __post_init__(self):
        if not 0.0 <= self.sigma < SIGMA_MAX:
            raise ValueError("slant angle must satisfy 0 <= sigma < 30 degrees")

    @property
    def degrees(self) -> float:
        return math.degrees(self.sigma)

    @classmethod
    def from_degrees(cls, deg: float) -> "SlantAngle":
        return cls(math.radians(deg))


def as_sigma(value) -> float:
    """Accept a SlantAngle or plain radians; validate the range."""
    sig = value.sigma if isinstance(value, SlantAngle) else float(value)
    if not 0.0 <= sig < SIGMA_MAX:
        raise ValueError("slant angle must satisfy 0 <= sigma < 30 degrees")
    return sig


class CoverStage(str, Enum):
    HEXAGON = "hexagon"
    PAL = "pal"
    SPRAGUE = "sprague"
    FULL = "full"


@dataclass
class Landmarks:
    """Named construction points plus the derived scalars theta and tau."""

    points: dict[str, Point]
    theta: float | None = None
    tau: float | None = None

    def __getitem__(self, key: str) -> Point:
        return self.points[key]

    def __contains__(self, key: str) -> bool:
        return key in self.points

    def to_dict(self) -> dict:
        out = {k: [p.x, p.y] for k, p in self.points.items()}
        extra = {}
        if self.theta is not None:
            extra["theta"] = self.theta
        if self.tau is not None:
            extra["tau"] = self.tau
        return {"points": out, **extra}


def _line_line(n1: Point, c1: float, n2: Point, c2: float) -> Point:
    det = n1.x * n2.y - n1.y * n2.x
    return Point((c1 * n2.y - c2 * n1.y) / det, (n1.x * c2 - n2.x * c1) / det)


def _on_edge_roots(center: Point, edge: str, slack: float = 1e-9) -> list[tuple[float, Point]]:
    """Unit-circle intersections with a hexagon edge, kept to the segment."""
    q, d = edge_frame(edge)
    qc = q - center
    b = d.dot(qc)
    disc = b * b - (qc.dot(qc) - 1.0)
    if disc < 0:
        return []
    s = math.sqrt(disc)
    out = []
    for t in (-b - s, -b + s):
        if abs(t) <= HALF_EDGE + slack:
            out.append((t, q + t * d))
    return out


def _circ_circ_near(c1: Point, c2: Point, near: Point) -> Point:
    delta = c2 - c1
    d = delta.norm()
    a = d / 2.0
    h = math.sqrt(max(1.0 - a * a, 0.0))
    base = c1 + 0.5 * delta
    off = Point(-delta.y / d * h, delta.x / d * h)
    p1, p2 = base + off, base - off
    return p1 if dist(p1, near) <= dist(p2, near) else p2


def hexagon_chain() -> BoundaryChain:
    order = ["A_1", "F_1", "E_1", "D_1", "C_1", "B_1"]
    pts = [CORNER[k] for k in order]
    return BoundaryChain([LineSeg(a, b) for a, b in zip(pts, pts[1:] + pts[:1])])


def build_hexagon() -> tuple[BoundaryChain, Landmarks]:
    """Width-1 regular hexagon and its corner registry."""
    pts = dict(CORNER)
    pts["M"] = M_POINT
    return hexagon_chain(), Landmarks(points=pts)


def _base_landmarks(sig: float) -> Landmarks:
    """All landmarks of the cut construction and the Sprague regions."""
    n_c = unit(sig - PI / 6)        # normal of the cut line at corner C
    n_e = unit(sig - 5 * PI / 6)    # normal of the cut line at corner E
    pts = dict(CORNER)
    pts["M"] = M_POINT
    pts["C_3"] = _line_line(n_c, 0.5, unit(EDGE_NORMAL["BC"]), 0.5)
    pts["C_2"] = _line_line(n_c, 0.5, unit(EDGE_NORMAL["CD"]), 0.5)
    pts["E_3"] = _line_line(n_e, 0.5, unit(EDGE_NORMAL["DE"]), 0.5)
    pts["E_2"] = _line_line(n_e, 0.5, unit(EDGE_NORMAL["EF"]), 0.5)
    pts["F_3"] = _line_line(n_c, -0.5, unit(EDGE_NORMAL["EF"]), 0.5)
    pts["F_2"] = _line_line(n_c, -0.5, unit(EDGE_NORMAL["FA"]), 0.5)
    pts["B_3"] = _line_line(n_e, -0.5, unit(EDGE_NORMAL["AB"]), 0.5)
    pts["B_2"] = _line_line(n_e, -0.5, unit(EDGE_NORMAL["BC"]), 0.5)
    # tangency feet of the unit arcs (distance-1 parallels make these exact)
    pts["K"] = pts["F_3"] + n_c
    pts["I"] = pts["B_3"] + n_e
    pts["H"] = Point(-0.5, pts["C_3"].y)
    roots = _on_edge_roots(pts["F_3"], "CD")
    if not roots:
        raise ValueError("unit arc around F_3 misses edge DC")
    pts["G"] = min(roots)[1]  # the root toward D
    pts["J"] = _circ_circ_near(pts["B_3"], pts["C_3"], CORNER["E_1"])
    pts["P"] = pts["G"] + unit(2 * PI / 3)
    pts["Q"] = pts["E_3"] + unit(PI / 3)
    pts["X"] = _circ_circ_near(pts["G"], pts["E_3"], CORNER["A_1"])
    theta = norm_angle(angle_of(pts["G"] - pts["F_3"])
                       - angle_of(CORNER["D_1"] - CORNER["E_1"]))
    tau = dist(M_POINT, pts["E_3"])
    return Landmarks(points=pts, theta=theta, tau=tau)


# ---------------------------------------------------------------------------
# the unit-segment family near corner A

def point_L(s: float) -> Point:
    """Endpoint on line DC of the unit segment from line EF whose direction
    makes angle -s with edge ED (so the segment through F_3 and G sits at
    s = -theta)."""
    if not -PI / 4 <= s <= PI / 4:
        raise ValueError("parameter out of construction range")
    w = math.cos(s) + math.sin(s) / SQRT3 - SQRT3 / 2
    p = Point(-0.5 + math.cos(PI / 6 + s), w - math.sin(PI / 6 + s))
    q, d = edge_frame("CD")
    if abs(d.dot(p - q)) > HALF_EDGE + 1e-6:
        raise ValueError("parameter out of construction range")
    return p


def point_N(t: float) -> Point:
    """Point on edge DE at signed distance t from the midpoint M, positive
    toward E (so N(tau) = E_3)."""
    if abs(t) > HALF_EDGE + 1e-12:
        raise ValueError("parameter out of edge range")
    return M_POINT - t * unit(-PI / 6)


def point_X(s: float, t: float) -> Point:
    """Intersection of the unit circles centered on L(s) and N(t) nearer
    the top corner."""
    lp, np_ = point_L(s), point_N(t)
    if dist(lp, np_) > 2.0:
        raise ValueError("circles are disjoint")
    return _circ_circ_near(lp, np_, CORNER["A_1"])


def invert_X(p) -> tuple[float, float]:
    """Recover (s, t) with point_X(s, t) = p for a point near corner A."""
    s_arr, t_arr = _invert_many(np.array([[p[0], p[1]]]))
    return float(s_arr[0]), float(t_arr[0])


def _invert_many(pts: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    pts = np.asarray(pts, dtype=float)
    # s: unit circle around p meets line DC; take the root toward D
    q, d = edge_frame("CD")
    rel = pts - np.array([q.x, q.y])
    proj = rel @ np.array([d.x, d.y])
    disc = proj * proj - (np.einsum("ij,ij->i", rel, rel) - 1.0)
    if np.any(disc < 0):
        raise ValueError("point outside construction region")
    root = proj - np.sqrt(disc)
    far = proj + np.sqrt(disc)
    use_far = np.abs(root) > HALF_EDGE + 1e-9
    root = np.where(use_far, far, root)
    if np.any(np.abs(root) > HALF_EDGE + 1e-9):
        raise ValueError("point outside construction region")
    lx = q.x + root * d.x
    s = np.arccos(np.clip(lx + 0.5, -1.0, 1.0)) - PI / 6
    # t: unit circle around p meets line DE; take the root nearer M
    q2, d2 = edge_frame("DE")  # d2 points toward D, so t = -parameter
    rel2 = pts - np.array([q2.x, q2.y])
    proj2 = rel2 @ np.array([d2.x, d2.y])
    disc2 = proj2 * proj2 - (np.einsum("ij,ij->i", rel2, rel2) - 1.0)
    if np.any(disc2 < 0):
        raise ValueError("point outside construction region")
    r1, r2 = proj2 - np.sqrt(disc2), proj2 + np.sqrt(disc2)
    t = np.where(np.abs(r1) <= np.abs(r2), -r1, -r2)
    if np.any(np.abs(t) > HALF_EDGE + 1e-9):
        raise ValueError("point outside construction region")
    return s, t


def _point_X_many(s: np.ndarray, t: np.ndarray) -> np.ndarray:
    w = np.cos(s) + np.sin(s) / SQRT3 - SQRT3 / 2
    lx = -0.5 + np.cos(PI / 6 + s)
    ly = w - np.sin(PI / 6 + s)
    md = unit(-PI / 6)
    nx = M_POINT.x - t * md.x
    ny = M_POINT.y - t * md.y
    dx, dy = nx - lx, ny - ly
    dd = np.hypot(dx, dy)
    h = np.sqrt(np.maximum(1.0 - 0.25 * dd * dd, 0.0))
    bx, by = lx + 0.5 * dx, ly + 0.5 * dy
    ox, oy = -dy / dd * h, dx / dd * h
    p_plus = np.stack([bx + ox, by + oy], axis=1)
    p_minus = np.stack([bx - ox, by - oy], axis=1)
    a = np.array([CORNER["A_1"].x, CORNER["A_1"].y])
    d_plus = np.einsum("ij,ij->i", p_plus - a, p_plus - a)
    d_minus = np.einsum("ij,ij->i", p_minus - a, p_minus - a)
    return np.where((d_plus <= d_minus)[:, None], p_plus, p_minus)


def compute_theta_tau(sigma) -> tuple[float, float]:
    """Half-ranges of the (s, t) parameters: theta is the angle of the
    segment F_3 G against edge ED (L(-theta) = G) and tau = |M E_3|
    (N(tau) = E_3)."""
    lm = _base_landmarks(as_sigma(sigma))
    return lm.theta, lm.tau


# ---------------------------------------------------------------------------
# taut paths

def _taut_from_circle_point(a: Point, b: Point, center: Point,
                            samples: int = 1000) -> list[tuple]:
    """Shortest path from a (on the unit circle around center) to b (outside)
    that stays outside that circle: the straight segment when it clears the
    circle, else a wrap arc from a plus the tangent segment to b."""
    ts = np.linspace(0.0, 1.0, samples)
    chord = np.array([a.x, a.y]) + ts[:, None] * np.array([b.x - a.x, b.y - a.y])
    dmin = np.min(np.hypot(chord[:, 0] - center.x, chord[:, 1] - center.y))
    if dmin >= 1.0 - 1e-12:
        return [("seg", a, b)]
    cands = []
    for v in tangent_points(b, center, 1.0):
        arc = minor_arc(center, a, v)
        length = abs(arc.sweep) + dist(v, b)
        cands.append((length, v, arc))
    assert cands, "tangent construction failed"
    _, v, arc = min(cands, key=lambda c: c[0])
    return [("arc", center, a, v, arc.ccw), ("seg", v, b)]


@dataclass
class _TautData:
    """Plane pieces of the shortest path near corner A and its image."""

    regime: str                   # "straight" or "wrap"
    x_tt: Point                   # X(theta, tau)
    x_00: Point                   # X(0, 0)
    wrap_center: Point | None     # L(theta) when wrapping
    wrap_exit: Point | None       # tangent point W on circle(L(theta))
    image_end: Point              # X(-theta, -t_W) (equals P when straight)
    image_points: np.ndarray      # polyline X(0,0) -> image_end


def _refine_image(seg_a: Point, seg_b: Point, start: Point, end: Point,
                  tol: float = 1e-11, n0: int = 512, max_rounds: int = 16) -> np.ndarray:
    """Image under (s,t) -> (-s,-t) of the straight piece seg_a -> seg_b,
    refined until the mid-point sagitta of every chord is below tol."""
    fr = np.linspace(0.0, 1.0, n0)
    ab = np.array([seg_b.x - seg_a.x, seg_b.y - seg_a.y])
    a = np.array([seg_a.x, seg_a.y])

    def image_of(fractions):
        pts = a + fractions[:, None] * ab
        s, t = _invert_many(pts)
        return _point_X_many(-s, -t)

    img = image_of(fr)
    for _ in range(max_rounds):
        mid_fr = 0.5 * (fr[:-1] + fr[1:])
        mid_img = image_of(mid_fr)
        chord_mid = 0.5 * (img[:-1] + img[1:])
        sag = np.hypot(*(mid_img - chord_mid).T)
        bad = sag > tol
        if not np.any(bad):
            break
        new_fr = np.sort(np.concatenate([fr, mid_fr[bad]]))
        fr = new_fr
        img = image_of(fr)
    img[0] = [start.x, start.y]
    img[-1] = [end.x, end.y]
    return img


def _taut_data(lm: Landmarks) -> _TautData | None:
    theta, tau = lm.theta, lm.tau
    if theta < 1e-9:
        return None
    x_tt = point_X(theta, tau)
    x_00 = point_X(0.0, 0.0)
    l_th = point_L(theta)
    pieces = _taut_from_circle_point(x_tt, x_00, l_th)
    if pieces[0][0] == "seg":
        image = _refine_image(x_00, x_tt, x_00, lm["P"])
        return _TautData("straight", x_tt, x_00, None, None, lm["P"], image)
    _, _, _, w, _ = pieces[0]
    s_w, t_w = invert_X(w)
    image_end = point_X(-theta, -t_w)
    image = _refine_image(x_00, w, x_00, image_end)
    return _TautData("wrap", x_tt, x_00, l_th, w, image_end, image)


# ---------------------------------------------------------------------------
# reduction regions

def _region_CS(lm: Landmarks) -> BoundaryChain:
    k, g, c2 = lm["K"], lm["G"], lm["C_2"]
    if dist(k, g) < 1e-11:
        return BoundaryChain.empty()
    return BoundaryChain([minor_arc(lm["F_3"], k, g),
                          LineSeg(g, c2), LineSeg(c2, k)])


def _region_ES(lm: Landmarks) -> BoundaryChain:
    e2, i, j, h = lm["E_2"], lm["I"], lm["J"], lm["H"]
    if dist(i, j) < 1e-11 or dist(j, h) < 1e-11:
        return BoundaryChain.empty()
    return BoundaryChain([LineSeg(e2, i), minor_arc(lm["B_3"], i, j),
                          minor_arc(lm["C_3"], j, h), LineSeg(h, e2)])


def _region_AS(lm: Landmarks) -> BoundaryChain:
    q, x, p, a1 = lm["Q"], lm["X"], lm["P"], CORNER["A_1"]
    return BoundaryChain([LineSeg(q, a1), LineSeg(a1, p),
                          minor_arc(lm["G"], p, x), minor_arc(lm["E_3"], x, q)])


def _region_AH(lm: Landmarks, taut: _TautData | None) -> BoundaryChain:
    if taut is None:
        return BoundaryChain.empty()
    elems = [minor_arc(lm["E_3"], taut.x_tt, lm["X"]),
             minor_arc(lm["G"], lm["X"], taut.image_end),
             Polyline(taut.image_points[::-1].copy())]
    if taut.regime == "wrap":
        elems.append(LineSeg(taut.x_00, taut.wrap_exit))
        elems.append(minor_arc(taut.wrap_center, taut.wrap_exit, taut.x_tt))
    else:
        elems.append(LineSeg(taut.x_00, taut.x_tt))
    return BoundaryChain(elems)


@dataclass
class _EHData:
    r: Point
    s: Point
    t: Point
    u: Point
    hull: list[tuple]  # taut pieces from T to U around circle(S)


def _eh_data(sig: float, lm: Landmarks) -> _EHData | None:
    if sig >= SIGMA_EH_MAX:
        return None
    r = (-1.0 / (2.0 * math.cos(sig))) * unit(-PI / 6)
    roots = _on_edge_roots(r, "BC")
    if len(roots) != 1:
        return None
    s_pt = roots[0][1]
    if s_pt.y <= lm["C_3"].y + 1e-12:
        return None  # S inside the removed corner at C: region vanished
    if dist(lm["J"], lm["I"]) < 1e-11 or dist(lm["H"], lm["J"]) < 1e-11:
        return None  # E_S degenerate: no arcs left to cut
    t_pt = _circ_circ_near(s_pt, lm["B_3"], lm["J"])
    arc_ji = minor_arc(lm["B_3"], lm["J"], lm["I"])
    if not arc_ji.contains_angle(angle_of(t_pt - lm["B_3"]), tol=1e-9):
        return None
    # the cut line at corner E for slant angle zero
    q0, d0 = 0.5 * unit(-5 * PI / 6), unit(-PI / 3)
    rel = q0 - lm["C_3"]
    b = d0.dot(rel)
    disc = b * b - (rel.dot(rel) - 1.0)
    if disc < 0:
        return None
    cands = [q0 + t * d0 for t in (-b - math.sqrt(disc), -b + math.sqrt(disc))]
    u_pt = min(cands, key=lambda p: dist(p, lm["J"]))
    arc_hj = minor_arc(lm["C_3"], lm["H"], lm["J"])
    if not arc_hj.contains_angle(angle_of(u_pt - lm["C_3"]), tol=1e-9):
        return None
    if dist(t_pt, u_pt) < 1e-11:
        return None
    hull = _taut_from_circle_point(t_pt, u_pt, s_pt)
    return _EHData(r, s_pt, t_pt, u_pt, hull)


def _pieces_to_elements(pieces: list[tuple]) -> list:
    out = []
    for p in pieces:
        if p[0] == "seg":
            if dist(p[1], p[2]) >= 1e-11:
                out.append(LineSeg(p[1], p[2]))
        else:
            _, center, a, b, ccw = p
            if dist(a, b) >= 1e-11:
                out.append(CircArc(center, dist(center, a),
                                   angle_of(a - center), angle_of(b - center), ccw))
    return out


def _region_EH(lm: Landmarks, eh: _EHData | None) -> BoundaryChain:
    if eh is None:
        return BoundaryChain.empty()
    elems = _pieces_to_elements(eh.hull)
    elems.append(minor_arc(lm["C_3"], eh.u, lm["J"]))
    elems.append(minor_arc(lm["B_3"], lm["J"], eh.t))
    return BoundaryChain(elems)


# ---------------------------------------------------------------------------
# cover chains

def _pal_chain(lm: Landmarks) -> BoundaryChain:
    a1, f1, d1, b1 = CORNER["A_1"], CORNER["F_1"], CORNER["D_1"], CORNER["B_1"]
    pts = [a1, f1, lm["E_2"], lm["E_3"], d1, lm["C_2"], lm["C_3"], b1]
    return BoundaryChain([LineSeg(a, b) for a, b in zip(pts, pts[1:] + pts[:1])])


def _sprague_elements(lm: Landmarks) -> list:
    d1, b1, f1 = CORNER["D_1"], CORNER["B_1"], CORNER["F_1"]
    elems = []
    if dist(lm["K"], lm["G"]) < 1e-11:  # C_S degenerate: plain corner at C_2
        elems += [LineSeg(d1, lm["C_2"]), LineSeg(lm["C_2"], lm["C_3"])]
    else:
        elems += [LineSeg(d1, lm["G"]), minor_arc(lm["F_3"], lm["G"], lm["K"]),
                  LineSeg(lm["K"], lm["C_3"])]
    elems += [LineSeg(lm["C_3"], b1), LineSeg(b1, lm["Q"]),
              minor_arc(lm["E_3"], lm["Q"], lm["X"]),
              minor_arc(lm["G"], lm["X"], lm["P"]),
              LineSeg(lm["P"], f1)]
    if dist(lm["I"], lm["J"]) < 1e-11 or dist(lm["J"], lm["H"]) < 1e-11:
        elems += [LineSeg(f1, lm["E_2"]), LineSeg(lm["E_2"], lm["E_3"])]
    else:
        elems += [LineSeg(f1, lm["H"]), minor_arc(lm["C_3"], lm["H"], lm["J"]),
                  minor_arc(lm["B_3"], lm["J"], lm["I"]),
                  LineSeg(lm["I"], lm["E_3"])]
    elems += [LineSeg(lm["E_3"], d1)]
    return elems


def _full_elements(lm: Landmarks, taut: _TautData | None,
                   eh: _EHData | None) -> list:
    d1, b1, f1 = CORNER["D_1"], CORNER["B_1"], CORNER["F_1"]
    elems = []
    if dist(lm["K"], lm["G"]) < 1e-11:
        elems += [LineSeg(d1, lm["C_2"]), LineSeg(lm["C_2"], lm["C_3"])]
    else:
        elems += [LineSeg(d1, lm["G"]), minor_arc(lm["F_3"], lm["G"], lm["K"]),
                  LineSeg(lm["K"], lm["C_3"])]
    elems += [LineSeg(lm["C_3"], b1), LineSeg(b1, lm["Q"])]
    if taut is None:
        elems += [minor_arc(lm["E_3"], lm["Q"], lm["X"]),
                  minor_arc(lm["G"], lm["X"], lm["P"])]
    else:
        elems.append(minor_arc(lm["E_3"], lm["Q"], taut.x_tt))
        if taut.regime == "wrap":
            elems += [minor_arc(taut.wrap_center, taut.x_tt, taut.wrap_exit),
                      LineSeg(taut.wrap_exit, taut.x_00),
                      Polyline(taut.image_points),
                      minor_arc(lm["G"], taut.image_end, lm["P"])]
        else:
            elems += [LineSeg(taut.x_tt, taut.x_00),
                      Polyline(taut.image_points)]
    elems += [LineSeg(lm["P"], f1)]
    degenerate_es = dist(lm["I"], lm["J"]) < 1e-11 or dist(lm["J"], lm["H"]) < 1e-11
    if eh is None:
        if degenerate_es:
            elems += [LineSeg(f1, lm["E_2"]), LineSeg(lm["E_2"], lm["E_3"])]
        else:
            elems += [LineSeg(f1, lm["H"]), minor_arc(lm["C_3"], lm["H"], lm["J"]),
                      minor_arc(lm["B_3"], lm["J"], lm["I"]),
                      LineSeg(lm["I"], lm["E_3"])]
    else:
        elems += [LineSeg(f1, lm["H"]), minor_arc(lm["C_3"], lm["H"], eh.u)]
        for p in reversed(eh.hull):  # traverse the hull curve U -> T
            if p[0] == "seg":
                if dist(p[2], p[1]) >= 1e-11:
                    elems.append(LineSeg(p[2], p[1]))
            else:
                _, center, a, bb, ccw = p
                if dist(a, bb) >= 1e-11:
                    elems.append(CircArc(center, dist(center, a),
                                         angle_of(bb - center), angle_of(a - center),
                                         not ccw))
        elems += [minor_arc(lm["B_3"], eh.t, lm["I"]), LineSeg(lm["I"], lm["E_3"])]
    elems += [LineSeg(lm["E_3"], d1)]
    return elems


@dataclass
class Construction:
    """Everything built for one slant angle: landmark registry, region
    chains, cover chains, and the area bookkeeping."""

    sigma: float
    landmarks: Landmarks
    hexagon: BoundaryChain
    pal: BoundaryChain
    region_cs: BoundaryChain
    region_es: BoundaryChain
    region_as: BoundaryChain
    region_ah: BoundaryChain
    region_eh: BoundaryChain
    sprague: BoundaryChain
    full: BoundaryChain | None
    cut_area_c: float
    cut_area_e: float
    taut_regime: str | None
    areas: dict = field(default_factory=dict)

    def decomposition_area(self, stage: CoverStage) -> float:
        """Hexagon-minus-pieces area; the route independent of the cover
        chain's own Green's-theorem integral."""
        a = self.areas
        base = a["hexagon"] - self.cut_area_c - self.cut_area_e
        if stage == CoverStage.HEXAGON:
            return a["hexagon"]
        if stage == CoverStage.PAL:
            return base
        if stage == CoverStage.SPRAGUE:
            return base - a["C_S"] - a["E_S"] - a["A_S"]
        return base - a["C_S"] - a["E_S"] - a["A_S"] - a["A_H"] - a["E_H"]


def _tri_area(p: Point, q: Point, r: Point) -> float:
    return 0.5 * abs((q - p).cross(r - p))


@lru_cache(maxsize=256)
def construction(sigma: float) -> Construction:
    sig = as_sigma(sigma)
    lm = _base_landmarks(sig)
    taut = _taut_data(lm)
    eh = _eh_data(sig, lm)
    if eh is not None:
        lm.points["R"] = eh.r
        lm.points["S"] = eh.s
        lm.points["T"] = eh.t
        lm.points["U"] = eh.u
    hexa = hexagon_chain()
    pal = _pal_chain(lm)
    cs, es, as_ = _region_CS(lm), _region_ES(lm), _region_AS(lm)
    ah, ehc = _region_AH(lm, taut), _region_EH(lm, eh)
    sprague = BoundaryChain(_sprague_elements(lm))
    full = (BoundaryChain(_full_elements(lm, taut, eh))
            if sig < SIGMA_EH_MAX else None)
    areas = {
        "hexagon": hexa.signed_area(),
        "C_S": cs.signed_area(), "E_S": es.signed_area(),
        "A_S": as_.signed_area(), "A_H": ah.signed_area(),
        "E_H": ehc.signed_area(),
    }
    return Construction(
        sigma=sig, landmarks=lm, hexagon=hexa, pal=pal,
        region_cs=cs, region_es=es, region_as=as_, region_ah=ah,
        region_eh=ehc, sprague=sprague, full=full,
        cut_area_c=_tri_area(lm["C_3"], CORNER["C_1"], lm["C_2"]),
        cut_area_e=_tri_area(lm["E_2"], CORNER["E_1"], lm["E_3"]),
        taut_regime=None if taut is None else taut.regime,
        areas=areas,
    )


def build_pal(sigma) -> tuple[BoundaryChain, Landmarks]:
    """The hexagon with corners C and E truncated by the rotated copy."""
    con = construction(as_sigma(sigma))
    return con.pal, con.landmarks


def build_sprague_regions(sigma) -> tuple[BoundaryChain, BoundaryChain,
                                          BoundaryChain, Landmarks]:
    """The three unit-arc regions C_S, E_S, A_S removed from the cut hexagon."""
    con = construction(as_sigma(sigma))
    return con.region_cs, con.region_es, con.region_as, con.landmarks


def build_S(sigma) -> BoundaryChain:
    """The cut hexagon with C_S, E_S, A_S removed along shared boundaries."""
    return construction(as_sigma(sigma)).sprague


def build_region_AH(sigma) -> BoundaryChain:
    """Reflection region near corner A: bounded by the taut path from
    X(theta,tau) to X(0,0), its (s,t) -> (-s,-t) image down to P, and the
    two unit arcs through P, X, and X(theta,tau)."""
    return construction(as_sigma(sigma)).region_ah


def build_region_EH(sigma) -> BoundaryChain:
    """Reflection region near corner E (empty for sigma >= 10 degrees)."""
    return construction(as_sigma(sigma)).region_eh


def build_cover(sigma, stage: CoverStage | str) -> BoundaryChain:
    """Boundary chain of the requested cover stage."""
    stage = CoverStage(stage)
    if stage == CoverStage.HEXAGON:
        return hexagon_chain()
    sig = as_sigma(sigma)
    if stage == CoverStage.FULL and sig >= SIGMA_EH_MAX:
        raise ValueError("E_H undefined; construction limited to sigma < 10 degrees")
    con = construction(sig)
    if stage == CoverStage.PAL:
        return con.pal
    if stage == CoverStage.SPRAGUE:
        return con.sprague
    return con.full


def full_landmarks(sigma) -> Landmarks:
    """Landmark registry for a slant angle (R, S, T, U included when the
    E_H construction exists)."""
    return construction(as_sigma(sigma)).landmarks


@lru_cache(maxsize=1024)
def corner_region(sigma, corner: str, primed: bool = False) -> BoundaryChain:
    """Triangle cut from a hexagon corner by the matching side of the copy
    rotated by +(30deg + sigma), or by -(30deg + sigma) for the primed
    (mirror-slant) variant."""
    sig = as_sigma(sigma)
    label = corner.rstrip("'")
    if primed or corner.endswith("'"):
        primed = True
    corner_pt = CORNER[label + "_1"]
    zeta = angle_of(corner_pt)
    n_cut = unit(zeta + (-sig if primed else sig))
    order = ["A", "B", "C", "D", "E", "F"]
    i = order.index(label)
    prev_edge = order[i - 1] + label          # edge arriving at the corner
    next_edge = label + order[(i + 1) % 6]    # edge leaving the corner
    prev_edge = prev_edge if prev_edge in EDGE_NORMAL else prev_edge[::-1]
    next_edge = next_edge if next_edge in EDGE_NORMAL else next_edge[::-1]
    p_prev = _line_line(n_cut, 0.5, unit(EDGE_NORMAL[prev_edge]), 0.5)
    p_next = _line_line(n_cut, 0.5, unit(EDGE_NORMAL[next_edge]), 0.5)
    pts = [corner_pt, p_prev, p_next]
    if (p_prev - corner_pt).cross(p_next - corner_pt) < 0:
        pts = [corner_pt, p_next, p_prev]
    return BoundaryChain([LineSeg(a, b) for a, b in zip(pts, pts[1:] + pts[:1])])


def reflect_center_line_cf() -> Isometry:
    """Reflection across the centre line through corners C and F."""
    return Isometry(rotation=-PI / 3, translation=(0.0, 0.0), reflect=True)
