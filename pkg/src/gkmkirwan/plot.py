"""SVG pictures of rank-2 moment polytopes.

Output is deterministic: elements are emitted in a fixed order (hull, walls,
hyperplanes through mu, fixed points, labels, mu marker) and coordinates are
printed with two decimals, so two renders of the same input are byte-equal.
"""

from __future__ import annotations

import xml.etree.ElementTree as ET
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .cohomology import EquivariantClass
from .linalg import dot, format_fraction, to_fraction
from .space import GKMSpace, SpaceError, is_boundary_wall, walls

SIZE = 600
MARGIN = 60

Point = Tuple[Fraction, Fraction]


class PlotError(SpaceError):
    pass


@dataclass(frozen=True)
class PlotSpec:
    mu: Optional[Tuple[Fraction, ...]] = None
    hyperplanes: Tuple[Tuple[int, ...], ...] = ()  # normals of lines drawn through mu
    draw_walls: bool = True
    cls: Optional[EquivariantClass] = None
    class_label: str = ""


def convex_hull(points: Sequence[Point]) -> List[Point]:
    """Counter-clockwise hull by the monotone chain, exact on rationals."""
    pts = sorted(set(points))
    if len(pts) <= 2:
        return pts

    def cross(o, a, b):
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])

    lower: List[Point] = []
    for p in pts:
        while len(lower) >= 2 and cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper: List[Point] = []
    for p in reversed(pts):
        while len(upper) >= 2 and cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return lower[:-1] + upper[:-1]


def _clip(normal, offset, box) -> Optional[Tuple[Point, Point]]:
    """Segment of the line <y, normal> = offset inside the box (x0, y0, x1, y1)."""
    x0, y0, x1, y1 = box
    a, b = normal
    hits = set()
    if b != 0:
        for x in (x0, x1):
            y = (offset - a * x) / b
            if y0 <= y <= y1:
                hits.add((x, y))
    if a != 0:
        for y in (y0, y1):
            x = (offset - b * y) / a
            if x0 <= x <= x1:
                hits.add((x, y))
    if len(hits) < 2:
        return None
    ordered = sorted(hits)
    return ordered[0], ordered[-1]


class _Canvas:
    def __init__(self, box):
        x0, y0, x1, y1 = box
        span = max(x1 - x0, y1 - y0) or Fraction(1)
        self.scale = Fraction(SIZE - 2 * MARGIN) / span
        self.x0, self.y1 = x0, y1
        self.pad_x = (SIZE - 2 * MARGIN - (x1 - x0) * self.scale) / 2
        self.pad_y = (SIZE - 2 * MARGIN - (y1 - y0) * self.scale) / 2

    def xy(self, p) -> Tuple[str, str]:
        x = MARGIN + self.pad_x + (p[0] - self.x0) * self.scale
        y = MARGIN + self.pad_y + (self.y1 - p[1]) * self.scale
        return f"{float(x):.2f}", f"{float(y):.2f}"


def render_svg(space: GKMSpace, spec: PlotSpec = PlotSpec()) -> str:
    """Render the moment image of a rank-2 space as an SVG document."""
    if space.rank != 2:
        raise PlotError(f"plotting needs a rank-2 torus, got rank {space.rank}")
    images: Dict[Point, List[str]] = {}
    for p in space.points:
        images.setdefault((p.moment[0], p.moment[1]), []).append(p.name)
    mu = tuple(to_fraction(c) for c in spec.mu) if spec.mu is not None else None

    xs = [q[0] for q in images] + ([mu[0]] if mu else [])
    ys = [q[1] for q in images] + ([mu[1]] if mu else [])
    pad = max(max(xs) - min(xs), max(ys) - min(ys), Fraction(1)) / 10
    box = (min(xs) - pad, min(ys) - pad, max(xs) + pad, max(ys) + pad)
    canvas = _Canvas(box)

    svg = ET.Element("svg", {
        "xmlns": "http://www.w3.org/2000/svg",
        "viewBox": f"0 0 {SIZE} {SIZE}",
        "width": str(SIZE),
        "height": str(SIZE),
    })
    ET.SubElement(svg, "title").text = f"moment image of {space.label or 'space'}"
    ET.SubElement(svg, "rect", {"x": "0", "y": "0", "width": str(SIZE), "height": str(SIZE), "fill": "white"})

    hull = convex_hull(list(images))
    pts = " ".join(",".join(canvas.xy(q)) for q in hull)
    ET.SubElement(svg, "polygon", {"class": "hull", "points": pts, "fill": "#eef3fb", "stroke": "#1f3b73",
                                   "stroke-width": "2"})

    if spec.draw_walls:
        group = ET.SubElement(svg, "g", {"class": "walls"})
        for w in walls(space):
            direction = (-w.normal[1], w.normal[0])
            along = sorted((space.point(n).moment for n in w.support), key=lambda m: dot(m, direction))
            a, b = along[0], along[-1]
            (x1, y1), (x2, y2) = canvas.xy(a), canvas.xy(b)
            kind = "boundary" if is_boundary_wall(space, w) else "interior"
            ET.SubElement(group, "line", {
                "class": f"wall {kind}", "x1": x1, "y1": y1, "x2": x2, "y2": y2,
                "data-normal": ",".join(map(str, w.normal)), "data-offset": format_fraction(w.offset),
                "stroke": "#1f3b73" if kind == "boundary" else "#7a8bb0", "stroke-width": "1.5",
            })

    if mu is not None and spec.hyperplanes:
        group = ET.SubElement(svg, "g", {"class": "hyperplanes"})
        for normal in spec.hyperplanes:
            seg = _clip(normal, dot(mu, normal), box)
            if seg is None:
                continue
            (x1, y1), (x2, y2) = canvas.xy(seg[0]), canvas.xy(seg[1])
            ET.SubElement(group, "line", {
                "class": "hyperplane", "x1": x1, "y1": y1, "x2": x2, "y2": y2,
                "data-normal": ",".join(map(str, normal)),
                "stroke": "#b03030", "stroke-width": "1.5", "stroke-dasharray": "6,4",
            })

    group = ET.SubElement(svg, "g", {"class": "fixed-points"})
    for q, names in images.items():
        cx, cy = canvas.xy(q)
        ET.SubElement(group, "circle", {"class": "fixed-point", "cx": cx, "cy": cy, "r": "5",
                                        "fill": "#1f3b73", "data-names": ",".join(names)})
        label = ET.SubElement(group, "text", {"class": "point-label", "x": f"{float(cx) + 8:.2f}",
                                              "y": f"{float(cy) - 8:.2f}", "font-size": "13",
                                              "font-family": "sans-serif"})
        label.text = ",".join(names)

    if spec.cls is not None:
        group = ET.SubElement(svg, "g", {"class": "restrictions"})
        if spec.class_label:
            group.set("data-class", spec.class_label)
        for q, names in images.items():
            cx, cy = canvas.xy(q)
            text = "; ".join(spec.cls.at(n).to_string(space.action.names) for n in names)
            node = ET.SubElement(group, "text", {"class": "restriction", "x": f"{float(cx) + 8:.2f}",
                                                 "y": f"{float(cy) + 18:.2f}", "font-size": "12",
                                                 "font-family": "sans-serif", "fill": "#b03030"})
            node.text = text

    if mu is not None:
        cx, cy = (float(c) for c in canvas.xy(mu))
        group = ET.SubElement(svg, "g", {"class": "mu", "data-mu": ",".join(format_fraction(c) for c in mu)})
        for dx, dy in ((7, 7), (7, -7)):
            ET.SubElement(group, "line", {"x1": f"{cx - dx:.2f}", "y1": f"{cy - dy:.2f}",
                                          "x2": f"{cx + dx:.2f}", "y2": f"{cy + dy:.2f}",
                                          "stroke": "#b03030", "stroke-width": "2.5"})
        ET.SubElement(group, "text", {"x": f"{cx + 9:.2f}", "y": f"{cy + 4:.2f}", "font-size": "13",
                                      "font-family": "sans-serif", "fill": "#b03030"}).text = "μ"

    ET.indent(svg)
    return ET.tostring(svg, encoding="unicode") + "\n"
