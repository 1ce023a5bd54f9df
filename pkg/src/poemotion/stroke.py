"""Procedural calligraphic strokes, contour geometry, and diagnostics.

Each emotion quadrant owns a base parameter set whose qualitative
orderings mirror classical brushwork: excitement is a fast, light curve;
anger a fast, heavy scribble with sharp alternating turns; sadness a slow,
heavy, trembling line; relaxation a light, slow, stable one.  The numeric
values themselves are free choices; only the orderings are contractual.

All randomness comes from one splitmix64 stream per stroke, with a fixed
draw order, so a (quadrant, intensity, seed) triple always reproduces the
same path bit for bit.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .emotion import Quadrant
from .errors import (
    DegeneratePathError,
    DomainError,
    EmptyInputError,
    NeutralQuadrantError,
    ZeroAreaError,
)
from .prng import SplitMix64


class TurnMode(Enum):
    SMOOTH = "Smooth"
    SHARP = "Sharp"


@dataclass(frozen=True)
class StrokeParams:
    point_count: int
    step_length: float
    turn_sigma_deg: float  # Smooth mode
    turn_mode: TurnMode
    base_width: float
    tremor_amp: float
    turn_band_deg: tuple[float, float] | None = None  # Sharp mode


# Base table per quadrant, before intensity scaling.
_BASE_PARAMS = {
    Quadrant.EXCITEMENT: StrokeParams(24, 28.0, 20.0, TurnMode.SMOOTH, 4.0, 0.5),
    Quadrant.ANGER: StrokeParams(
        20, 30.0, 0.0, TurnMode.SHARP, 10.0, 1.0, turn_band_deg=(90.0, 150.0)
    ),
    Quadrant.SADNESS: StrokeParams(30, 10.0, 12.0, TurnMode.SMOOTH, 9.0, 3.5),
    Quadrant.RELAXATION: StrokeParams(16, 14.0, 6.0, TurnMode.SMOOTH, 3.5, 0.5),
}


@dataclass(frozen=True)
class StrokePath:
    """Synthesized trajectory: (x, y, width) triples in canvas units."""

    points: tuple[tuple[float, float, float], ...]
    quadrant: Quadrant
    intensity_used: float
    seed: int

    def mean_width(self) -> float:
        return sum(p[2] for p in self.points) / len(self.points)

    def mean_step(self) -> float:
        dists = [
            math.hypot(b[0] - a[0], b[1] - a[1])
            for a, b in zip(self.points, self.points[1:])
        ]
        return sum(dists) / len(dists)


@dataclass(frozen=True)
class ContourPolygon:
    """Closed contour; vertices wrap implicitly."""

    vertices: tuple[tuple[float, float], ...]

    def __post_init__(self):
        if len(self.vertices) < 3:
            raise DegeneratePathError("contour needs at least 3 vertices")


def stroke_params(quadrant: Quadrant, normalized_intensity: float) -> StrokeParams:
    """Base table entry scaled by intensity: heavier, shakier, and wider in
    turn as intensity rises."""
    if quadrant == Quadrant.NEUTRAL:
        raise NeutralQuadrantError("no stroke parameters for the neutral quadrant")
    if not 0.0 <= normalized_intensity <= 1.0:
        raise DomainError(f"normalized intensity {normalized_intensity} outside [0, 1]")
    base = _BASE_PARAMS[quadrant]
    width_scale = 0.6 + 0.8 * normalized_intensity
    tremor_scale = 0.5 + normalized_intensity
    turn_scale = 0.7 + 0.6 * normalized_intensity
    band = base.turn_band_deg
    if band is not None:
        band = (band[0] * turn_scale, band[1] * turn_scale)
    return StrokeParams(
        point_count=base.point_count,
        step_length=base.step_length,
        turn_sigma_deg=base.turn_sigma_deg * turn_scale,
        turn_mode=base.turn_mode,
        base_width=base.base_width * width_scale,
        tremor_amp=base.tremor_amp * tremor_scale,
        turn_band_deg=band,
    )


def synthesize_stroke(
    quadrant: Quadrant, normalized_intensity: float, seed: int
) -> StrokePath:
    """Generate one stroke trajectory.

    Starts at the origin heading 0 degrees.  Per point the stream is drawn
    in the fixed order (turn, tremor_x, tremor_y, width); the first point's
    turn draw is consumed but not applied, so every point costs the same
    number of draws.  Smooth turns are Gaussian (two draws via Box-Muller),
    sharp turns are uniform magnitudes with alternating sign (one draw).
    """
    params = stroke_params(quadrant, normalized_intensity)
    rng = SplitMix64(seed)
    points: list[tuple[float, float, float]] = []
    x = y = 0.0
    heading = 0.0
    for i in range(params.point_count):
        if params.turn_mode is TurnMode.SMOOTH:
            turn_deg = rng.gauss(params.turn_sigma_deg)
        else:
            lo, hi = params.turn_band_deg
            sign = 1.0 if i % 2 == 0 else -1.0
            turn_deg = sign * rng.uniform(lo, hi)
        tremor_x = rng.uniform(-params.tremor_amp, params.tremor_amp)
        tremor_y = rng.uniform(-params.tremor_amp, params.tremor_amp)
        width = params.base_width * (0.85 + 0.3 * rng.next_float())

        if i > 0:
            heading += math.radians(turn_deg)
            x += params.step_length * math.cos(heading)
            y += params.step_length * math.sin(heading)

        px, py = x + tremor_x, y + tremor_y
        if points and (px, py) == points[-1][:2]:
            px += 1e-9  # keep consecutive points distinct
        points.append((px, py, width))
    return StrokePath(
        points=tuple(points),
        quadrant=quadrant,
        intensity_used=normalized_intensity,
        seed=seed,
    )


def _unit_tangents(
    pts: list[tuple[float, float]]
) -> list[tuple[float, float]]:
    """Unit tangents: central differences inside, one-sided at the ends.
    A numerically zero tangent reuses the previous one."""
    n = len(pts)
    tangents: list[tuple[float, float]] = []
    prev = (1.0, 0.0)
    for i in range(n):
        a = pts[max(i - 1, 0)]
        b = pts[min(i + 1, n - 1)]
        dx, dy = b[0] - a[0], b[1] - a[1]
        norm = math.hypot(dx, dy)
        if norm < 1e-12:
            tangents.append(prev)
            continue
        prev = (dx / norm, dy / norm)
        tangents.append(prev)
    return tangents


def ribbon_polygon(path: StrokePath) -> ContourPolygon:
    """Closed contour of a variable-width path: offset each point by half
    its width to both sides of the local tangent, walk the left side
    forward and the right side back (flat end caps).  A path of n points
    yields exactly 2n vertices."""
    pts = [(p[0], p[1]) for p in path.points]
    if len(pts) < 2:
        raise DegeneratePathError("ribbon needs at least 2 points")
    if all(math.hypot(b[0] - a[0], b[1] - a[1]) < 1e-12 for a, b in zip(pts, pts[1:])):
        raise DegeneratePathError("ribbon needs a non-zero-length path")
    tangents = _unit_tangents(pts)
    left: list[tuple[float, float]] = []
    right: list[tuple[float, float]] = []
    for (px, py), (tx, ty), (_, _, w) in zip(pts, tangents, path.points):
        nx, ny = -ty, tx
        half = w / 2.0
        left.append((px + nx * half, py + ny * half))
        right.append((px - nx * half, py - ny * half))
    return ContourPolygon(vertices=tuple(left + right[::-1]))


def _perimeter_and_area(poly: ContourPolygon) -> tuple[float, float]:
    verts = poly.vertices
    perimeter = 0.0
    shoelace = 0.0
    for (x0, y0), (x1, y1) in zip(verts, verts[1:] + verts[:1]):
        perimeter += math.hypot(x1 - x0, y1 - y0)
        shoelace += x0 * y1 - x1 * y0
    return perimeter, abs(shoelace) / 2.0


def polygon_complexity(poly: ContourPolygon) -> float:
    """Perimeter^2 / Area of the closed contour.

    Scale-invariant; minimized by the disc at 4*pi, and equal to
    4n*tan(pi/n) for the regular n-gon.
    """
    perimeter, area = _perimeter_and_area(poly)
    if area < 1e-12:
        raise ZeroAreaError(f"contour area {area} below 1e-12")
    return perimeter * perimeter / area


def gan_objective(d_real: list[float], d_fake: list[float]) -> float:
    """Empirical two-sample value of the adversarial objective
    mean(log D(x)) + mean(log(1 - D(G(z)))).

    Inputs are discriminator probabilities in [0, 1], clamped into
    [1e-12, 1 - 1e-12] before the logarithms.  An uninformed discriminator
    (all 0.5) scores -2*ln(2).
    """
    if not d_real or not d_fake:
        raise EmptyInputError("both sample lists must be non-empty")
    for v in list(d_real) + list(d_fake):
        if not 0.0 <= v <= 1.0:
            raise DomainError(f"discriminator output {v} outside [0, 1]")
    clamp = lambda v: min(max(v, 1e-12), 1.0 - 1e-12)
    real_term = sum(math.log(clamp(v)) for v in d_real) / len(d_real)
    fake_term = sum(math.log1p(-clamp(v)) for v in d_fake) / len(d_fake)
    return real_term + fake_term
