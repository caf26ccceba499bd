"""Cover areas as a function of the slant angle: evaluation, sweep, minimum.

Areas are computed twice per call -- Green's theorem on the assembled cover
chain, and the hexagon-minus-pieces decomposition -- and the call fails if
the two routes disagree beyond CROSS_CHECK_TOL.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .cover import CoverStage, as_sigma, construction

CROSS_CHECK_TOL = 1e-11
_GOLDEN = (math.sqrt(5.0) - 1.0) / 2.0


class AreaCrossCheckError(RuntimeError):
    pass


@dataclass(frozen=True)
class SweepRow:
    sigma_deg: float
    area_pal: float
    area_sprague: float
    area_full: float


@dataclass(frozen=True)
class MinResult:
    sigma_star: float        # radians
    area_star: float
    bracket: tuple[float, float]
    evaluations: int

    @property
    def sigma_star_deg(self) -> float:
        return math.degrees(self.sigma_star)


def area_of(sigma, stage: CoverStage | str) -> float:
    """Area of the requested cover stage, cross-checked against the
    decomposition identity."""
    stage = CoverStage(stage)
    sig = as_sigma(sigma)
    con = construction(sig)
    if stage == CoverStage.HEXAGON:
        chain = con.hexagon
    elif stage == CoverStage.PAL:
        chain = con.pal
    elif stage == CoverStage.SPRAGUE:
        chain = con.sprague
    else:
        if con.full is None:
            raise ValueError("E_H undefined; construction limited to sigma < 10 degrees")
        chain = con.full
    direct = chain.signed_area()
    decomposed = con.decomposition_area(stage)
    if abs(direct - decomposed) > CROSS_CHECK_TOL:
        raise AreaCrossCheckError(
            f"area cross-check failed at sigma={sig!r}, stage={stage.value}: "
            f"{direct!r} vs {decomposed!r}")
    return direct


def sweep(lo: float, hi: float, steps: int) -> list[SweepRow]:
    """Evenly spaced slant-angle rows (radians in, degrees in the rows)."""
    if steps < 2:
        raise ValueError("steps must be at least 2")
    if not (0.0 <= lo < hi < math.pi / 18):
        raise ValueError("sweep range must satisfy 0 <= lo < hi < 10 degrees")
    rows = []
    for i in range(steps):
        sig = lo + (hi - lo) * i / (steps - 1)
        rows.append(SweepRow(
            sigma_deg=math.degrees(sig),
            area_pal=area_of(sig, CoverStage.PAL),
            area_sprague=area_of(sig, CoverStage.SPRAGUE),
            area_full=area_of(sig, CoverStage.FULL),
        ))
    return rows


def minimize(lo: float, hi: float, tol: float) -> MinResult:
    """Golden-section minimum of the full-cover area on [lo, hi] (radians).

    Assumes unimodality (validated: any interior evaluation above both
    bracket-end values aborts with 'bracket not unimodal')."""
    if not (0.0 <= lo < hi < math.pi / 18):
        raise ValueError("bracket must satisfy 0 <= lo < hi < 10 degrees")
    if not tol > 0:
        raise ValueError("tol must be positive")
    evaluations = 0

    def f(sig: float) -> float:
        nonlocal evaluations
        evaluations += 1
        return area_of(sig, CoverStage.FULL)

    f_lo, f_hi = f(lo), f(hi)
    cap = max(f_lo, f_hi) + 1e-14

    def checked(sig: float) -> float:
        v = f(sig)
        if v > cap:
            raise ValueError("bracket not unimodal")
        return v

    a, b = lo, hi
    c = b - _GOLDEN * (b - a)
    d = a + _GOLDEN * (b - a)
    fc, fd = checked(c), checked(d)
    while b - a > tol:
        if fc < fd:
            b, d, fd = d, c, fc
            c = b - _GOLDEN * (b - a)
            fc = checked(c)
        else:
            a, c, fc = c, d, fd
            d = a + _GOLDEN * (b - a)
            fd = checked(d)
    sig_star, area_star = (c, fc) if fc <= fd else (d, fd)
    return MinResult(sigma_star=sig_star, area_star=area_star,
                     bracket=(a, b), evaluations=evaluations)
