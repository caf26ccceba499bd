"""Constant-width-1 convex bodies: Reuleaux polygons and support-function
bodies built from odd circular harmonics.

A body of constant width 1 satisfies h(phi) + h(phi + pi) = 1 for its
support function h; width 1 implies diameter 1, so these are exactly the
test bodies a universal cover must admit.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Union

import numpy as np

from functools import cached_property

from .geometry import (BoundaryChain, CircArc, Point, ccw_delta,
                       convexity_check, dist, support_table)

TWO_PI = 2.0 * math.pi


@dataclass(frozen=True)
class ReuleauxPolygon:
    """Odd-gon of constant width 1: every boundary arc has radius 1 and is
    centered on the opposite vertex; all spanning diagonals have length 1.

    ``vertices`` are in counterclockwise boundary order.
    """

    vertices: np.ndarray  # (n, 2), n odd

    def __post_init__(self):
        v = np.asarray(self.vertices, dtype=float)
        object.__setattr__(self, "vertices", v)
        n = len(v)
        if n < 3 or n % 2 == 0:
            raise ValueError("vertex count must be odd and at least 3")

    @property
    def n(self) -> int:
        return len(self.vertices)

    @cached_property
    def _table(self):
        return support_table(self.chain())

    def support(self, phis: np.ndarray) -> np.ndarray:
        """Support over normal angle: an arc center plus its unit radius on
        arc normal ranges, the vertex itself on the vertex normal cones."""
        return self._table(phis)

    def boundary_points(self, phis: np.ndarray) -> np.ndarray:
        return self._table.boundary_points(phis)

    def chain(self) -> BoundaryChain:
        n = self.n
        opp = (np.arange(n) + (n + 1) // 2) % n
        elems = []
        for i in range(n):
            c = Point(*self.vertices[opp[i]])
            a = Point(*self.vertices[i])
            b = Point(*self.vertices[(i + 1) % n])
            elems.append(CircArc(c, 1.0, math.atan2(a.y - c.y, a.x - c.x),
                                 math.atan2(b.y - c.y, b.x - c.x), ccw=True))
        return BoundaryChain(elems)

    def mirrored(self) -> "ReuleauxPolygon":
        v = self.vertices * np.array([1.0, -1.0])
        return ReuleauxPolygon(v[::-1].copy())


@dataclass(frozen=True)
class SupportBody:
    """Body defined by h(phi) = 1/2 + sum_k a_k cos(k phi + p_k) over odd
    harmonics k >= 3; the odd harmonics cancel in h(phi) + h(phi + pi), so
    the width is exactly 1.  Convexity requires h + h'' >= 0."""

    coefficients: tuple[tuple[int, float, float], ...]  # (k, amplitude, phase)

    def __post_init__(self):
        coeffs = tuple((int(k), float(a), float(p)) for k, a, p in self.coefficients)
        object.__setattr__(self, "coefficients", coeffs)
        for k, _a, _p in coeffs:
            if k < 3 or k % 2 == 0:
                raise ValueError("harmonics must be odd integers >= 3")
        phis = np.linspace(0.0, TWO_PI, 1441)
        if np.min(self.radius_of_curvature(phis)) < -1e-9:
            raise ValueError("amplitudes too large")

    def support(self, phis: np.ndarray) -> np.ndarray:
        phis = np.asarray(phis, dtype=float)
        h = np.full_like(phis, 0.5, dtype=float)
        for k, a, p in self.coefficients:
            h = h + a * np.cos(k * phis + p)
        return h

    def support_deriv(self, phis: np.ndarray) -> np.ndarray:
        phis = np.asarray(phis, dtype=float)
        hp = np.zeros_like(phis, dtype=float)
        for k, a, p in self.coefficients:
            hp = hp - a * k * np.sin(k * phis + p)
        return hp

    def radius_of_curvature(self, phis: np.ndarray) -> np.ndarray:
        phis = np.asarray(phis, dtype=float)
        r = self.support(phis).copy()
        for k, a, p in self.coefficients:
            r = r - a * k * k * np.cos(k * phis + p)
        return r

    def boundary_points(self, phis: np.ndarray) -> np.ndarray:
        phis = np.asarray(phis, dtype=float)
        h, hp = self.support(phis), self.support_deriv(phis)
        c, s = np.cos(phis), np.sin(phis)
        return np.stack([h * c - hp * s, h * s + hp * c], axis=-1)

    def mirrored(self) -> "SupportBody":
        return SupportBody(tuple((k, a, -p) for k, a, p in self.coefficients))


Orbiform = Union[ReuleauxPolygon, SupportBody]


def constant_width_residual(body: Orbiform, directions: int = 360) -> float:
    phis = np.linspace(0.0, math.pi, directions, endpoint=False)
    h = body.support(np.concatenate([phis, phis + math.pi]))
    return float(np.max(np.abs(h[:directions] + h[directions:] - 1.0)))


def support_body(coefficients) -> SupportBody:
    """Validated constant-width body from odd-harmonic coefficients."""
    return SupportBody(tuple(coefficients))


def _close_unit_walk(turns: np.ndarray, step: float) -> np.ndarray | None:
    """Walk unit steps at absolute directions from cumulative turns, then
    replace the final two steps with the unique pair closing the loop."""
    n = len(turns) + 2
    dirs = np.concatenate([[0.0], np.cumsum(turns)])
    pts = np.vstack([[0.0, 0.0],
                     np.cumsum(np.stack([np.cos(dirs), np.sin(dirs)], axis=1), axis=0)])
    gap = -pts[-1]
    d = float(np.hypot(*gap))
    if d < 1e-9 or d > 2.0 - 1e-9:
        return None
    beta = math.atan2(gap[1], gap[0])
    gamma = math.acos(d / 2.0)
    expected = dirs[-1] + step
    best = None
    for sign in (+1.0, -1.0):
        psi1 = beta + sign * gamma
        err = abs((psi1 - expected + math.pi) % TWO_PI - math.pi)
        if best is None or err < best[0]:
            best = (err, psi1, beta - sign * gamma)
    _, psi1, _psi2 = best
    p_last = pts[-1] + np.array([math.cos(psi1), math.sin(psi1)])
    return np.vstack([pts, p_last])  # n points; the implicit last step closes


def reuleaux_polygon(n: int, seed: int, spread: float | None = None) -> ReuleauxPolygon:
    """Random Reuleaux polygon of width 1 with n (odd) vertices.

    Samples the star-polygon turn angles around their regular values,
    closes the unit-step walk exactly, and rejection-samples until the
    boundary is convex with all arcs positively swept.  Deterministic for
    a given seed.
    """
    if n < 3 or n % 2 == 0:
        raise ValueError("vertex count must be odd and at least 3")
    rng = np.random.default_rng(seed)
    step = math.pi - math.pi / n
    if spread is None:
        spread = 0.5 * math.pi / n
    for _ in range(1000):
        turns = step + rng.uniform(-spread, spread, size=n - 3) if n > 3 \
            else np.empty(0)
        walk = _close_unit_walk(turns, step)
        if walk is None or len(walk) != n:
            continue
        star = walk
        if abs(np.hypot(*(walk[-1] - walk[0])) - 1.0) > 1e-9:
            continue  # closing step must itself be a unit edge
        # boundary order: V_i = S_{(-2 i) mod n}
        order = (-2 * np.arange(n)) % n
        verts = star[order]
        verts = verts - verts.mean(axis=0)
        area2 = float(np.sum(verts[:, 0] * np.roll(verts[:, 1], -1)
                             - np.roll(verts[:, 0], -1) * verts[:, 1]))
        if area2 < 0:
            verts = verts[::-1].copy()
        body = ReuleauxPolygon(verts)
        if _valid_reuleaux(body):
            return body
    raise RuntimeError(f"could not sample a valid Reuleaux polygon (n={n}, seed={seed})")


def _valid_reuleaux(body: ReuleauxPolygon) -> bool:
    n = body.n
    v = body.vertices
    opp = (np.arange(n) + (n + 1) // 2) % n
    for i in range(n):
        c, a, b = v[opp[i]], v[i], v[(i + 1) % n]
        if not (abs(np.hypot(*(a - c)) - 1.0) < 1e-9
                and abs(np.hypot(*(b - c)) - 1.0) < 1e-9):
            return False
        sweepv = ccw_delta(math.atan2(a[1] - c[1], a[0] - c[0]),
                           math.atan2(b[1] - c[1], b[0] - c[0]))
        if not 1e-9 < sweepv < math.pi:
            return False
    try:
        chain = body.chain()
        if not convexity_check(chain):
            return False
        return constant_width_residual(body) <= 1e-10
    except ValueError:
        return False


def random_support_body(rng: np.random.Generator, max_terms: int = 3) -> SupportBody:
    """Random valid SupportBody; amplitudes are scaled so that the curvature
    bound sum a_k (k^2 - 1) <= 1/2 holds with margin."""
    ks = rng.choice([3, 5, 7, 9, 11], size=rng.integers(1, max_terms + 1),
                    replace=False)
    raw = rng.uniform(0.2, 1.0, size=len(ks))
    budget = 0.5 * rng.uniform(0.3, 0.9)
    scale = budget / float(np.sum(raw * (np.asarray(ks, dtype=float) ** 2 - 1.0)))
    phases = rng.uniform(0.0, TWO_PI, size=len(ks))
    coeffs = tuple((int(k), float(a * scale), float(p))
                   for k, a, p in zip(ks, raw, phases))
    return SupportBody(coeffs)
