"""
Geometric validation of discrete maps, circle patterns and radius fields.

Checks never raise on bad input geometry; they return a ValidationReport.
For skew patterns (beta != gamma*alpha) failures are reported as warnings.
"""

import logging
from typing import List, Optional, Tuple

from ..config import BRUTEFORCE_N_CAP, DEGENERATE_FACTOR, ORIENTATION_BAND, TANGENCY_TOL
from ..lattice.indices import in_Vint
from ..lattice.precision import PrecisionContext
from ..pattern.models import CirclePattern, GridMap, PatternConfig, PatternMode, RadiusField
from .predicates import bounding_boxes, overlapping_pairs, segments_cross, strictly_inside
from .report import CheckStatus, ValidationReport, ValidationSummary

logger = logging.getLogger(__name__)


def _failure(config: Optional[PatternConfig]) -> CheckStatus:
    return CheckStatus.WARN if config is not None and config.is_skew else CheckStatus.FAIL


def _degenerate(grid: GridMap, n: int, m: int, floor) -> bool:
    z1, z2, _, z4 = grid.quad(n, m)
    return abs(z2 - z1) <= floor or abs(z4 - z1) <= floor


def classify_quad(grid: GridMap, n: int, m: int, tol: float) -> Optional[str]:
    """
    Kite case of quad (n, m) with corners z1..z4 = f_{n,m}, f_{n+1,m}, f_{n+1,m+1}, f_{n,m+1}.

    A/B: n+m even, angle at z2 between z1 and z3 is pi - alpha / alpha
    with positive / negative orientation. C/D: n+m odd, angle at z1
    between z2 and z4 is alpha / pi - alpha, positive / negative.
    Returns None for an unclassified quad.
    """
    ctx = grid.config.ctx
    mp = ctx.mp
    alpha = grid.config.alpha_value()
    z1, z2, z3, z4 = grid.quad(n, m)
    positive = mp.im((z4 - z1) / (z2 - z1)) > 0
    if (n + m) % 2 == 0:
        angle = abs(mp.arg((z3 - z2) / (z1 - z2)))
        if positive and abs(angle - (ctx.pi - alpha)) < tol:
            return 'A'
        if not positive and abs(angle - alpha) < tol:
            return 'B'
    else:
        angle = abs(mp.arg((z4 - z1) / (z2 - z1)))
        if positive and abs(angle - alpha) < tol:
            return 'C'
        if not positive and abs(angle - (ctx.pi - alpha)) < tol:
            return 'D'
    return None


def check_kites(grid: GridMap, tol: Optional[float] = None) -> ValidationReport:
    """
    Incident edges at every even vertex have equal length, and every quad
    falls in one of the four kite cases.

    Args:
        grid: Map to check
        tol: Relative edge spread (default config.kite_tol); the angle
            tolerance of the classification is config.angle_tol
    """
    config = grid.config
    ctx = config.ctx
    tol = config.kite_tol if tol is None else tol
    v = grid.values
    floor = DEGENERATE_FACTOR * ctx.eps * max(grid.scale(), 1)

    worst, worst_at = 0.0, None
    for n, m in grid.keys():
        if (n + m) % 2:
            continue
        f = v[(n, m)]
        lengths = [abs(v[k] - f) for k in ((n + 1, m), (n - 1, m), (n, m + 1), (n, m - 1)) if k in v]
        if len(lengths) < 2:
            continue
        mean = sum(lengths) / len(lengths)
        if mean <= floor:
            continue
        spread = float((max(lengths) - min(lengths)) / mean)
        if worst_at is None or spread > worst:
            worst, worst_at = spread, (n, m)

    counts = {'A': 0, 'B': 0, 'C': 0, 'D': 0, 'unclassified': 0, 'degenerate': 0}
    first_bad = None
    for n, m in grid.quads():
        if _degenerate(grid, n, m, floor):
            counts['degenerate'] += 1
            continue
        case = classify_quad(grid, n, m, config.angle_tol)
        if case is None:
            counts['unclassified'] += 1
            first_bad = first_bad or (n, m)
        else:
            counts[case] += 1

    ok = worst <= tol and counts['unclassified'] == 0
    where = first_bad if worst <= tol and first_bad is not None else worst_at
    status = CheckStatus.PASS if ok else _failure(config)
    notes = [f"first unclassified quad {first_bad}"] if first_bad is not None else []
    report = ValidationReport('kites', status, worst, where, counts, notes)
    logger.info(str(report))
    return report


def check_orientation(grid: GridMap, band: float = ORIENTATION_BAND) -> ValidationReport:
    """
    Uniform sign of Im((f_{n,m+1} - f_{n,m}) / (f_{n+1,m} - f_{n,m})) over all quads.

    Values with |Im| / |ratio| below band are counted as near-zero and do
    not decide the sign.
    """
    config = grid.config
    ctx = config.ctx
    mp = ctx.mp
    floor = DEGENERATE_FACTOR * ctx.eps * max(grid.scale(), 1)
    counts = {'positive': 0, 'negative': 0, 'near_zero': 0, 'degenerate': 0}
    first = {}
    smallest, smallest_at = None, None
    for n, m in grid.quads():
        if _degenerate(grid, n, m, floor):
            counts['degenerate'] += 1
            continue
        z1, z2, _, z4 = grid.quad(n, m)
        ratio = (z4 - z1) / (z2 - z1)
        s = float(mp.im(ratio) / abs(ratio))
        if abs(s) < band:
            key = 'near_zero'
        else:
            key = 'positive' if s > 0 else 'negative'
        counts[key] += 1
        first.setdefault(key, (n, m))
        if smallest is None or abs(s) < smallest:
            smallest, smallest_at = abs(s), (n, m)

    mixed = counts['positive'] and counts['negative']
    notes = []
    if counts['near_zero']:
        notes.append(f"{counts['near_zero']} quads within the zero band, first at {first['near_zero']}")
    if mixed:
        minority = 'negative' if counts['negative'] <= counts['positive'] else 'positive'
        report = ValidationReport('orientation', _failure(config), smallest or 0.0, first[minority],
                                  counts, notes + [f"first {minority} quad {first[minority]}"])
    else:
        report = ValidationReport('orientation', CheckStatus.PASS, smallest or 0.0, smallest_at,
                                  counts, notes)
    logger.info(str(report))
    return report


def intersection_angle(c1, r1, c2, r2, ctx):
    """Angle of two intersecting circles: cos = (d^2 - r1^2 - r2^2) / (2 r1 r2)."""
    mp = ctx.mp
    d = abs(c2 - c1)
    cos = (d * d - r1 * r1 - r2 * r2) / (2 * r1 * r2)
    if cos > 1 or cos < -1:
        return None
    return mp.acos(cos)


def check_angles(pattern: CirclePattern, tol: float, config: Optional[PatternConfig] = None,
                 tangency_tol: float = TANGENCY_TOL) -> ValidationReport:
    """
    i-neighbours meet at alpha, 1-neighbours at pi - alpha and diagonal
    half-neighbours are tangent.

    Args:
        pattern: Circles and combinatorics
        tol: Angle tolerance in radians
        config: Used for its precision and the skew downgrade
        tangency_tol: Allowed |d - (R1 + R2)| / (R1 + R2)
    """
    circles = pattern.circles
    ctx = config.ctx if config is not None else PrecisionContext()
    alpha = pattern.alpha
    counts = {'i_pairs': len(pattern.i_pairs), 'one_pairs': len(pattern.one_pairs),
              'half_pairs': len(pattern.half_pairs), 'violations': 0}
    # (err / limit, err, labels) of the worst pair
    worst = (-1.0, 0.0, None)

    def label(pair: Tuple[int, int]) -> tuple:
        a, b = circles[pair[0]], circles[pair[1]]
        return (a.N, a.M), (b.N, b.M)

    def record(err: float, pair: Tuple[int, int], limit: float):
        nonlocal worst
        if err > limit:
            counts['violations'] += 1
        if err / limit > worst[0]:
            worst = (err / limit, err, label(pair))

    for pairs, target in ((pattern.i_pairs, alpha), (pattern.one_pairs, ctx.pi - alpha)):
        for pair in pairs:
            a, b = circles[pair[0]], circles[pair[1]]
            angle = intersection_angle(a.center, a.radius, b.center, b.radius, ctx)
            err = float('inf') if angle is None else float(abs(angle - target))
            record(err, pair, tol)
    for pair in pattern.half_pairs:
        a, b = circles[pair[0]], circles[pair[1]]
        total = a.radius + b.radius
        record(float(abs(abs(b.center - a.center) - total) / total), pair, tangency_tol)

    status = _failure(config) if counts['violations'] else CheckStatus.PASS
    report = ValidationReport('angles', status, worst[1], worst[2], counts)
    logger.info(str(report))
    return report


def _quad_polygons(grid: GridMap, n_cap: int) -> List[Tuple[Tuple[int, int], list]]:
    out = []
    for n, m in grid.quads():
        if n + m <= n_cap:
            out.append(((n, m), list(grid.quad(n, m))))
    return out


def _corner_labels(n: int, m: int) -> List[Tuple[int, int]]:
    return [(n, m), (n + 1, m), (n + 1, m + 1), (n, m + 1)]


def _quads_overlap(qa, qb, la, lb, ctx) -> bool:
    shared = set(la) & set(lb)
    for i in range(4):
        for j in range(4):
            ea = (la[i], la[(i + 1) % 4])
            eb = (lb[j], lb[(j + 1) % 4])
            if set(ea) & set(eb):
                continue
            if segments_cross(qa[i], qa[(i + 1) % 4], qb[j], qb[(j + 1) % 4], ctx):
                return True
    for label, point in zip(la, qa):
        if label not in shared and strictly_inside(point, qb, ctx):
            return True
    for label, point in zip(lb, qb):
        if label not in shared and strictly_inside(point, qa, ctx):
            return True
    ca = sum(qa) / 4
    cb = sum(qb) / 4
    return strictly_inside(ca, qb, ctx) or strictly_inside(cb, qa, ctx)


def check_embedded_bruteforce(grid: GridMap, n_cap: int = BRUTEFORCE_N_CAP) -> ValidationReport:
    """
    Pairwise test that no two quads with n+m <= n_cap overlap in their interiors.

    Candidate pairs come from a float bounding-box filter; the surviving
    pairs are decided with exact orientation predicates. Quads sharing
    lattice vertices are tested only through their unshared parts.
    """
    config = grid.config
    ctx = config.ctx
    floor = DEGENERATE_FACTOR * ctx.eps * max(grid.scale(), 1)
    polys = [(lab, q) for lab, q in _quad_polygons(grid, n_cap) if not _degenerate(grid, *lab, floor)]
    counts = {'quads': len(polys), 'candidate_pairs': 0, 'overlaps': 0}
    if len(polys) < 2:
        return ValidationReport('embedded', CheckStatus.PASS, 0.0, None, counts)

    boxes = bounding_boxes([q for _, q in polys])
    margin = 1e-12 * float(max(abs(boxes).max(), 1.0))
    ii, jj = overlapping_pairs(boxes, margin)
    counts['candidate_pairs'] = int(len(ii))
    first = None
    for i, j in zip(ii.tolist(), jj.tolist()):
        (la, qa), (lb, qb) = polys[i], polys[j]
        if _quads_overlap(qa, qb, _corner_labels(*la), _corner_labels(*lb), ctx):
            counts['overlaps'] += 1
            first = first or (la, lb)
    if first is None:
        report = ValidationReport('embedded', CheckStatus.PASS, 0.0, None, counts)
    else:
        report = ValidationReport('embedded', _failure(config), float(counts['overlaps']), first, counts,
                                  [f"quads {first[0]} and {first[1]} overlap"])
    logger.info(str(report))
    return report


def check_sign_condition(field: RadiusField, gamma=None, band: Optional[float] = None) -> ValidationReport:
    """
    (gamma - 1)(R_z^2 - R_{z+1} R_{z-i} + cos(alpha) R_z (R_{z-i} - R_{z+1})) >= 0 on V_int.

    Each value is taken relative to the magnitude of its terms; values
    within band of zero count as satisfied. Labels touching a zero or
    infinite radius (the origin of Z^2 and Log) are excluded. The reported
    residual is the smallest relative value found.
    """
    config = field.config
    ctx = config.ctx
    mp = ctx.mp
    g = field.gamma if gamma is None else ctx.mpf(gamma)
    band = config.sign_band if band is None else band
    t = config.t()
    counts = {'checked': 0, 'near_zero': 0, 'excluded': 0, 'violations': 0}
    lowest, lowest_at = None, None
    for N, M in field.keys():
        if not in_Vint(N, M) or (N + 1, M) not in field or (N, M - 1) not in field:
            continue
        Rz, R1, Rm = field[(N, M)], field[(N + 1, M)], field[(N, M - 1)]
        if any(x == 0 or mp.isinf(x) for x in (Rz, R1, Rm)):
            counts['excluded'] += 1
            continue
        counts['checked'] += 1
        value = (g - 1) * (Rz * Rz - R1 * Rm + t * Rz * (Rm - R1))
        scale = Rz * Rz + R1 * Rm + abs(t) * Rz * (Rm + R1)
        rel = float(value / scale)
        if abs(rel) < band:
            counts['near_zero'] += 1
        elif rel < 0:
            counts['violations'] += 1
        if lowest is None or rel < lowest:
            lowest, lowest_at = rel, (N, M)

    notes = []
    if counts['checked'] and counts['near_zero'] == counts['checked']:
        notes.append("all values inside the zero band")
    if counts['excluded']:
        notes.append(f"{counts['excluded']} labels touch a zero or infinite radius")
    status = _failure(config) if counts['violations'] else CheckStatus.PASS
    report = ValidationReport('sign', status, lowest or 0.0, lowest_at, counts, notes)
    logger.info(str(report))
    return report


def check_all(grid: Optional[GridMap], field: Optional[RadiusField] = None,
              pattern: Optional[CirclePattern] = None, n_cap: int = BRUTEFORCE_N_CAP,
              kite_tol: Optional[float] = None, angle_tol: Optional[float] = None) -> ValidationSummary:
    """Every check that applies to the supplied artifacts."""
    summary = ValidationSummary()
    config = grid.config if grid is not None else field.config if field is not None else None
    if grid is not None:
        if grid.config.mode is not PatternMode.KAPPA:
            summary.add(check_kites(grid, kite_tol))
        summary.add(check_orientation(grid))
        summary.add(check_embedded_bruteforce(grid, n_cap))
    if pattern is not None:
        tol = angle_tol if angle_tol is not None else config.angle_tol
        summary.add(check_angles(pattern, tol, config))
    if field is not None:
        summary.add(check_sign_condition(field))
    return summary
