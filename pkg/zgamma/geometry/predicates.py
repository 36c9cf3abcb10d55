"""
Exact orientation predicates on multiprecision points.

Coordinates are mpf values of a finite mantissa, so the orientation
determinant is evaluated with exact mpmath arithmetic and its sign is
never subject to rounding.
"""

from typing import Sequence, Tuple

import numpy as np

from ..lattice.precision import ComplexPoint, PrecisionContext


def orient2d(a: ComplexPoint, b: ComplexPoint, c: ComplexPoint, ctx: PrecisionContext) -> int:
    """
    Sign of (b - a) x (c - a): +1 left turn, -1 right turn, 0 collinear.
    """
    mp = ctx.mp
    a, b, c = ctx.mpc(a), ctx.mpc(b), ctx.mpc(c)
    bx = mp.fsub(b.real, a.real, exact=True)
    by = mp.fsub(b.imag, a.imag, exact=True)
    cx = mp.fsub(c.real, a.real, exact=True)
    cy = mp.fsub(c.imag, a.imag, exact=True)
    det = mp.fsub(mp.fmul(bx, cy, exact=True), mp.fmul(by, cx, exact=True), exact=True)
    if det > 0:
        return 1
    if det < 0:
        return -1
    return 0


def _on_segment(p: ComplexPoint, a: ComplexPoint, b: ComplexPoint) -> bool:
    """p collinear with a, b lies within their bounding box."""
    return (min(a.real, b.real) <= p.real <= max(a.real, b.real)
            and min(a.imag, b.imag) <= p.imag <= max(a.imag, b.imag))


def segments_cross(p1: ComplexPoint, p2: ComplexPoint, q1: ComplexPoint, q2: ComplexPoint,
                   ctx: PrecisionContext) -> bool:
    """Proper crossing: the open segments meet in a single interior point."""
    o1 = orient2d(p1, p2, q1, ctx)
    o2 = orient2d(p1, p2, q2, ctx)
    o3 = orient2d(q1, q2, p1, ctx)
    o4 = orient2d(q1, q2, p2, ctx)
    return o1 * o2 < 0 and o3 * o4 < 0


def strictly_inside(p: ComplexPoint, polygon: Sequence[ComplexPoint], ctx: PrecisionContext) -> bool:
    """
    Winding-number test; points on the boundary are not inside.
    """
    p = ctx.mpc(p)
    pts = [ctx.mpc(v) for v in polygon]
    wn = 0
    for i in range(len(pts)):
        a, b = pts[i], pts[(i + 1) % len(pts)]
        side = orient2d(a, b, p, ctx)
        if side == 0 and _on_segment(p, a, b):
            return False
        if a.imag <= p.imag:
            if b.imag > p.imag and side > 0:
                wn += 1
        elif b.imag <= p.imag and side < 0:
            wn -= 1
    return wn != 0


def bounding_boxes(quads: Sequence[Sequence[ComplexPoint]]) -> np.ndarray:
    """Float (xmin, xmax, ymin, ymax) per polygon."""
    out = np.empty((len(quads), 4), dtype=float)
    for k, poly in enumerate(quads):
        xs = [float(v.real) for v in poly]
        ys = [float(v.imag) for v in poly]
        out[k] = (min(xs), max(xs), min(ys), max(ys))
    return out


def overlapping_pairs(boxes: np.ndarray, margin: float) -> Tuple[np.ndarray, np.ndarray]:
    """Index pairs i < j whose boxes, grown by margin, overlap."""
    lo_x, hi_x, lo_y, hi_y = (boxes[:, k] for k in range(4))
    ox = (lo_x[:, None] <= hi_x[None, :] + margin) & (lo_x[None, :] <= hi_x[:, None] + margin)
    oy = (lo_y[:, None] <= hi_y[None, :] + margin) & (lo_y[None, :] <= hi_y[:, None] + margin)
    i, j = np.nonzero(np.triu(ox & oy, k=1))
    return i, j
