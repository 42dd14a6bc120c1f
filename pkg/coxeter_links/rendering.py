"""
SVG pictures of chord systems.

Endpoints sit on the boundary circle at angles 2*pi*k/2n, counterclockwise
from the positive x-axis. Each chord is drawn as the circular arc through its
endpoints that meets the boundary at right angles (a straight segment for
diameters), with an arrowhead at the head and the chord's position in the
order (1 for l_1) as its label.
"""

import math
from typing import List, Tuple

import svg

from .chord_core import ChordSystem

SIZE = 400.0
MARGIN = 30.0
ENDPOINT_RADIUS = 3.5
ARROW_LENGTH = 11.0
ARROW_HALF_WIDTH = 4.5

Point = Tuple[float, float]


def _boundary_angle(k: int, points: int) -> float:
    return 2 * math.pi * k / points


class ChordRenderer:
    """Lays out a chord system in a square canvas of side ``size``."""

    def __init__(self, size: float = SIZE, margin: float = MARGIN):
        self.size = size
        self.radius = size / 2 - margin
        self.centre = size / 2

    def to_screen(self, x: float, y: float) -> Point:
        """Unit-disk coordinates to canvas coordinates (y axis pointing down)."""
        return self.centre + self.radius * x, self.centre - self.radius * y

    def endpoint(self, k: int, points: int) -> Point:
        angle = _boundary_angle(k, points)
        return math.cos(angle), math.sin(angle)

    def chord_path(self, tail: int, head: int, points: int) -> Tuple[list, Point]:
        """Path commands for one chord and a label anchor (unit-disk coordinates)."""
        p = self.endpoint(tail, points)
        q = self.endpoint(head, points)
        separation = (head - tail) % points
        sx, sy = (round(v, 3) for v in self.to_screen(*p))
        ex, ey = (round(v, 3) for v in self.to_screen(*q))
        if 2 * separation == points:
            anchor = (p[0] + 0.3 * (q[0] - p[0]), p[1] + 0.3 * (q[1] - p[1]))
            return [svg.M(sx, sy), svg.L(ex, ey)], anchor

        half = math.pi * min(separation, points - separation) / points
        arc_radius = math.tan(half)
        bisector = math.atan2(p[1] + q[1], p[0] + q[0])
        distance = 1 / math.cos(half)
        cx, cy = distance * math.cos(bisector), distance * math.sin(bisector)
        anchor = ((distance - arc_radius) * math.cos(bisector), (distance - arc_radius) * math.sin(bisector))

        ccx, ccy = self.to_screen(cx, cy)
        cross = (ex - sx) * (ccy - sy) - (ey - sy) * (ccx - sx)
        r = round(arc_radius * self.radius, 3)
        return [svg.M(sx, sy), svg.A(r, r, 0, False, cross > 0, ex, ey)], anchor

    def arrowhead(self, head: int, points: int) -> svg.Polygon:
        """Arrowhead at the head; orthogonal arcs arrive along the radius."""
        x, y = self.endpoint(head, points)
        tip = self.to_screen(x, y)
        ux, uy = tip[0] - self.centre, tip[1] - self.centre
        norm = math.hypot(ux, uy)
        ux, uy = ux / norm, uy / norm
        bx, by = tip[0] - ARROW_LENGTH * ux, tip[1] - ARROW_LENGTH * uy
        corners = [
            tip,
            (bx - ARROW_HALF_WIDTH * uy, by + ARROW_HALF_WIDTH * ux),
            (bx + ARROW_HALF_WIDTH * uy, by - ARROW_HALF_WIDTH * ux),
        ]
        return svg.Polygon(
            points=[round(v, 3) for corner in corners for v in corner],
            fill="black",
            class_=["arrowhead"],
        )

    def render(self, system: ChordSystem) -> svg.SVG:
        points = system.diagram.points
        elements: list = []
        cx, cy = self.centre, self.centre
        elements.append(svg.Circle(cx=cx, cy=cy, r=self.radius, fill="none", stroke="#999999",
                                   stroke_width=1, class_=["boundary"]))
        for position, label in enumerate(system.order, start=1):
            tail, head = system.orientations[label]
            commands, anchor = self.chord_path(tail, head, points)
            elements.append(svg.Path(d=commands, fill="none", stroke="black", stroke_width=1.5, class_=["chord"]))
            elements.append(self.arrowhead(head, points))
            lx, ly = self.to_screen(*anchor)
            elements.append(svg.Text(x=round(lx, 3), y=round(ly - 4, 3), text=str(position), font_size=12,
                                     text_anchor="middle", class_=["label"]))
        for k in range(points):
            x, y = self.to_screen(*self.endpoint(k, points))
            elements.append(svg.Circle(cx=round(x, 3), cy=round(y, 3), r=ENDPOINT_RADIUS, fill="black",
                                       class_=["endpoint"]))
        return svg.SVG(
            width=self.size,
            height=self.size,
            viewBox=svg.ViewBoxSpec(0, 0, self.size, self.size),
            elements=elements,
        )


def render_system(system: ChordSystem) -> str:
    """SVG document text for a chord system."""
    return str(ChordRenderer().render(system)) + "\n"
