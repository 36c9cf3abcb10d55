"""
SVG 1.1 rendering of circle patterns and quad meshes.

Write-only. The drawing is mirrored in y so that the complex plane keeps
its usual orientation, and the viewBox is fitted to the content.
"""

import json
import logging
import xml.etree.ElementTree as ET
from dataclasses import dataclass
from pathlib import Path
from typing import List, Optional, Tuple

from ..config import SVG_DIGITS, SVG_MARGIN, SVG_SIZE
from ..pattern.models import CirclePattern, GridMap
from .manifest import RunManifest

logger = logging.getLogger(__name__)

SVG_NS = "http://www.w3.org/2000/svg"


@dataclass
class SVGOptions:
    """What to draw and how large."""
    circles: bool = True
    mesh: bool = True
    axes: bool = False
    size: int = SVG_SIZE
    margin: float = SVG_MARGIN
    digits: int = SVG_DIGITS
    circle_stroke: str = "black"
    mesh_stroke: str = "#4060a0"
    axes_stroke: str = "#999999"


class SVGWriter:
    """Writes a pattern and/or its map to an SVG file."""

    def __init__(self, options: Optional[SVGOptions] = None):
        self.options = options or SVGOptions()

    def _fmt(self, x: float) -> str:
        return f"{x:.{self.options.digits}g}"

    def _polylines(self, grid: GridMap) -> List[List[Tuple[float, float]]]:
        """Lattice lines m = const and n = const, split at non-finite vertices."""
        lines = []
        families = ([[(n, m) for n in range(grid.size - m + 1)] for m in range(grid.size + 1)]
                    + [[(n, m) for m in range(grid.size - n + 1)] for n in range(grid.size + 1)])
        for keys in families:
            run = []
            for key in keys:
                v = grid.get(key)
                if v is None or not grid.config.ctx.is_finite(v):
                    if len(run) > 1:
                        lines.append(run)
                    run = []
                    continue
                run.append((float(v.real), -float(v.imag)))
            if len(run) > 1:
                lines.append(run)
        return lines

    def _bounds(self, lines, circles) -> Optional[Tuple[float, float, float, float]]:
        xs, ys = [], []
        for line in lines:
            for x, y in line:
                xs.append(x)
                ys.append(y)
        for x, y, r in circles:
            xs += [x - r, x + r]
            ys += [y - r, y + r]
        if not xs:
            return None
        return min(xs), min(ys), max(xs), max(ys)

    def render(self, grid: Optional[GridMap] = None,
               pattern: Optional[CirclePattern] = None,
               manifest: Optional[RunManifest] = None) -> Optional[ET.Element]:
        """The SVG root element, or None when there is nothing to draw."""
        opts = self.options
        lines = self._polylines(grid) if grid is not None and opts.mesh else []
        circles = []
        if pattern is not None and opts.circles:
            circles = [(float(c.center.real), -float(c.center.imag), float(c.radius))
                       for c in pattern.circles]
        box = self._bounds(lines, circles)
        if box is None:
            return None

        x0, y0, x1, y1 = box
        span = max(x1 - x0, y1 - y0) or 1.0
        pad = span * opts.margin
        x0, y0 = x0 - pad, y0 - pad
        w, h = (x1 - x0) + pad, (y1 - y0) + pad
        px = opts.size / max(w, h)
        f = self._fmt

        svg = ET.Element("svg", xmlns=SVG_NS, version="1.1",
                         width=f"{round(w * px)}px", height=f"{round(h * px)}px",
                         viewBox=f"{f(x0)} {f(y0)} {f(w)} {f(h)}")
        if manifest is not None:
            ET.SubElement(svg, "metadata").text = json.dumps(manifest.to_dict())
        stroke_width = f(1.0 / px)

        if opts.axes:
            g = ET.SubElement(svg, "g", stroke=opts.axes_stroke, fill="none")
            g.set("stroke-width", stroke_width)
            if y0 <= 0 <= y0 + h:
                ET.SubElement(g, "path", d=f"M{f(x0)} 0L{f(x0 + w)} 0")
            if x0 <= 0 <= x0 + w:
                ET.SubElement(g, "path", d=f"M0 {f(y0)}L0 {f(y0 + h)}")

        if lines:
            g = ET.SubElement(svg, "g", stroke=opts.mesh_stroke, fill="none")
            g.set("stroke-width", stroke_width)
            for line in lines:
                d = "M{} {}".format(f(line[0][0]), f(line[0][1]))
                for x, y in line[1:]:
                    d += "L{} {}".format(f(x), f(y))
                ET.SubElement(g, "path", d=d)

        if circles:
            g = ET.SubElement(svg, "g", stroke=opts.circle_stroke, fill="none")
            g.set("stroke-width", stroke_width)
            for x, y, r in circles:
                ET.SubElement(g, "circle", cx=f(x), cy=f(y), r=f(r))

        return svg

    def write(self, filepath: str, grid: Optional[GridMap] = None,
              pattern: Optional[CirclePattern] = None,
              manifest: Optional[RunManifest] = None) -> bool:
        """
        Render and write.

        Returns:
            True if write successful, False otherwise
        """
        try:
            svg = self.render(grid, pattern, manifest)
            if svg is None:
                logger.warning("Nothing to draw")
                return False

            Path(filepath).parent.mkdir(parents=True, exist_ok=True)
            ET.ElementTree(svg).write(filepath, encoding="utf-8", xml_declaration=True)

            count = len(pattern.circles) if pattern is not None and self.options.circles else 0
            logger.info(f"Exported {count} circles to SVG: {filepath}")
            return True

        except Exception as e:
            logger.error(f"Failed to write SVG file: {e}")
            return False
