"""Geometry of the depth-selector glyph.

A container circle A holds the entity circle C (radius A.r/3) tangent
to A's border along the BAC direction, plus one grey circle per depth
group, all internally tangent to A at the same point. Each depth group
has an anchor pair (P, Q) on C's boundary and the intersections of the
rays from C's center through those anchors with the grey circles; the
UI draws the depth-n broken line through those points.

The published pseudocode needed repairs: the C-center formula placed C
outside A and the angular step is undefined for a single group; C is
placed at A.center + (A.r - C.r) * (cos BAC, sin BAC), the fan step
spreads the groups over 180 - 2*DCP1 degrees, and a single group sits
at the fan's bisector (angle BAC + 180).
"""
from __future__ import annotations

import math
from dataclasses import dataclass


@dataclass(frozen=True)
class Circle:
    x: float
    y: float
    r: float


@dataclass(frozen=True)
class Point:
    x: float
    y: float


@dataclass(frozen=True)
class DepthGroup:
    depth: int
    p: Point
    q: Point
    grey_circle: Circle
    # intersections of ray(C.center -> p/q) with grey circles E1..E(depth)
    p_intersections: tuple[Point, ...]
    q_intersections: tuple[Point, ...]


@dataclass(frozen=True)
class BrokenLinesGeometry:
    container: Circle
    entity_circle: Circle
    bac_degrees: float
    dcp1_degrees: float
    maxdepth: int
    groups: tuple[DepthGroup, ...]


class GeometryError(ValueError):
    pass


def _on_circle(center: Circle, angle_degrees: float) -> Point:
    a = math.radians(angle_degrees)
    return Point(center.x + center.r * math.cos(a), center.y + center.r * math.sin(a))


def _ray_circle_intersection(origin: Point, through: Point, circle: Circle) -> Point:
    """The intersection of ray origin->through with a circle containing origin."""
    dx = through.x - origin.x
    dy = through.y - origin.y
    norm = math.hypot(dx, dy)
    ux, uy = dx / norm, dy / norm
    # |origin + t*u - center|^2 = r^2, take the positive root
    fx = origin.x - circle.x
    fy = origin.y - circle.y
    b = fx * ux + fy * uy
    c = fx * fx + fy * fy - circle.r * circle.r
    disc = b * b - c
    t = -b + math.sqrt(disc)
    return Point(origin.x + t * ux, origin.y + t * uy)


def broken_lines_layout(
    container: Circle,
    bac_degrees: float,
    dcp1_degrees: float,
    maxdepth: int,
) -> BrokenLinesGeometry:
    if container.r <= 0:
        raise GeometryError("container radius must be positive")
    if not 0 < dcp1_degrees < 90:
        raise GeometryError("DCP1 must lie strictly between 0 and 90 degrees")
    if maxdepth < 1:
        raise GeometryError("maxdepth must be at least 1")

    entity_r = container.r / 3
    bac = math.radians(bac_degrees)
    entity = Circle(
        container.x + (container.r - entity_r) * math.cos(bac),
        container.y + (container.r - entity_r) * math.sin(bac),
        entity_r,
    )
    entity_center = Point(entity.x, entity.y)

    fan_start = bac_degrees + 90 + dcp1_degrees
    fan_span = 180 - 2 * dcp1_degrees
    step = fan_span / (maxdepth - 1) if maxdepth > 1 else 0.0

    greys = []
    for n in range(1, maxdepth + 1):
        grey_r = entity_r + n * (container.r - entity_r) / (n + 1)
        greys.append(
            Circle(
                container.x + (container.r - grey_r) * math.cos(bac),
                container.y + (container.r - grey_r) * math.sin(bac),
                grey_r,
            )
        )

    groups = []
    for n in range(1, maxdepth + 1):
        if maxdepth == 1:
            p_angle = bac_degrees + 180  # fan bisector
            q_angle = p_angle
        else:
            p_angle = fan_start + step * (n - 1)
            q_angle = fan_start + step * (n - 2) + step / 2
        p = _on_circle(entity, p_angle)
        q = _on_circle(entity, q_angle)
        groups.append(
            DepthGroup(
                depth=n,
                p=p,
                q=q,
                grey_circle=greys[n - 1],
                p_intersections=tuple(
                    _ray_circle_intersection(entity_center, p, greys[m]) for m in range(n)
                ),
                q_intersections=tuple(
                    _ray_circle_intersection(entity_center, q, greys[m]) for m in range(n)
                ),
            )
        )

    return BrokenLinesGeometry(
        container=container,
        entity_circle=entity,
        bac_degrees=bac_degrees,
        dcp1_degrees=dcp1_degrees,
        maxdepth=maxdepth,
        groups=tuple(groups),
    )
