"""End-to-end checks: greedy element vs theta function, plus SVG rendering.

The central claim being machine-checked is that for every (a1, a2) the
greedy element x[a1,a2] equals the theta function pointed at the same
d-vector, i.e. theta_d with initial exponent (-a1, -a2).  Both sides are
computed by entirely independent pipelines (coefficient recursion vs
broken-line enumeration), so exact polynomial equality is a strong
cross-validation of both.
"""

from __future__ import annotations

import logging
import time
from dataclasses import dataclass

from .brokenlines import BrokenLine, enumerate_broken_lines, generic_endpoint_for, theta_d
from .cluster import ClusterParams
from .greedy import certify_pointed_support, greedy_element, order_budget
from .laurent import LatticeVector, LaurentPoly
from .scattering import ScatteringDiagram, completed_diagram, irrational_cone

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class ComparisonReport:
    params: ClusterParams
    d: LatticeVector
    order_used: int
    greedy_poly: LaurentPoly
    theta_poly: LaurentPoly
    equal: bool
    support_certified: bool
    elapsed_s: float
    support_diff: frozenset

    def to_dict(self) -> dict:
        return {
            "b": self.params.b,
            "c": self.params.c,
            "a1": self.d.m1,
            "a2": self.d.m2,
            "order_used": self.order_used,
            "greedy": self.greedy_poly.to_triples(),
            "theta": self.theta_poly.to_triples(),
            "equal": self.equal,
            "support_certified": self.support_certified,
            "elapsed_s": round(self.elapsed_s, 6),
            "support_diff": sorted([v.m1, v.m2] for v in self.support_diff),
        }


def compare(params: ClusterParams, d, order: int | None = None) -> ComparisonReport:
    """Compute x[a1,a2] and the matching theta function, report equality."""
    d = LatticeVector(*d)
    t0 = time.perf_counter()
    if order is None:
        order = order_budget(params, d)
    greedy = greedy_element(params, d).poly
    m = LatticeVector(-d.m1, -d.m2)
    th = theta_d(params, m, order)
    equal = greedy == th
    certified = certify_pointed_support(params, d, th)
    diff = greedy.support() ^ th.support()
    elapsed = time.perf_counter() - t0
    return ComparisonReport(
        params=params,
        d=d,
        order_used=order,
        greedy_poly=greedy,
        theta_poly=th,
        equal=equal,
        support_certified=certified,
        elapsed_s=elapsed,
        support_diff=frozenset(diff),
    )


def compare_grid(
    params: ClusterParams,
    radius: int,
    max_budget: int = 40,
) -> list[ComparisonReport]:
    """Run `compare` on every d-vector with |a1|, |a2| <= radius.

    If any instance would need a truncation order beyond max_budget, the
    radius is reduced until the whole grid fits, and the cap is logged.
    """
    if radius < 0:
        raise ValueError("radius must be nonnegative")
    eff = radius
    while eff > 0:
        worst = max(
            order_budget(params, (a1, a2))
            for a1 in range(-eff, eff + 1)
            for a2 in range(-eff, eff + 1)
        )
        if worst <= max_budget:
            break
        log.warning(
            "compare_grid(b=%d, c=%d): radius %d needs order %d > %d; capping radius to %d",
            params.b, params.c, eff, worst, max_budget, eff - 1,
        )
        eff -= 1
    # Complete the diagram once at the largest order the grid needs.
    worst = max(
        order_budget(params, (a1, a2))
        for a1 in range(-eff, eff + 1)
        for a2 in range(-eff, eff + 1)
    )
    completed_diagram(params, max(worst, 1), variant="d")
    reports = []
    for a1 in range(-eff, eff + 1):
        for a2 in range(-eff, eff + 1):
            reports.append(compare(params, (a1, a2)))
    return reports


# -- deterministic SVG rendering -------------------------------------------


@dataclass(frozen=True)
class Viewport:
    extent: float = 4.0  # half-width of the mathematical window
    size: int = 480  # pixel width and height


_LINE_COLORS = ("#c0392b", "#2980b9", "#27ae60", "#8e44ad", "#d35400", "#16a085")


def _fmt(v: float) -> str:
    return f"{v:.3f}"


def render_svg(
    diagram: ScatteringDiagram,
    lines: list[BrokenLine] | None = None,
    viewport: Viewport | None = None,
) -> bytes:
    """Deterministic SVG picture of a diagram and optional broken lines.

    Wall supports are drawn clipped to the viewport and labeled with the
    leading term of their functions; broken lines become colored polylines
    with per-segment monomial labels; for bc >= 4 the irrational cone is
    shaded between its two boundary rays.
    """
    vp = viewport or Viewport()
    half = vp.size / 2.0
    scale = half / vp.extent

    def to_screen(x: float, y: float) -> tuple[float, float]:
        return (half + scale * x, half - scale * y)

    def ray_to_edge(dx: float, dy: float) -> tuple[float, float]:
        norm = max(abs(dx), abs(dy))
        if norm == 0:
            return (0.0, 0.0)
        r = vp.extent / norm
        return (dx * r, dy * r)

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{vp.size}" height="{vp.size}" '
        f'viewBox="0 0 {vp.size} {vp.size}">',
        f'<rect width="{vp.size}" height="{vp.size}" fill="white"/>',
    ]

    cone = irrational_cone(diagram.params)
    if cone is not None:
        (u1, v1), (u2, v2) = cone.boundary_dirs_float()
        if diagram.variant == "d":
            # Boundary supports shear into the third quadrant after transport.
            b = diagram.params.b
            u1, v1 = u1 + b * v1, v1
            u2, v2 = u2 + b * v2, v2
        e1 = ray_to_edge(u1, v1)
        e2 = ray_to_edge(u2, v2)
        o = to_screen(0, 0)
        p1 = to_screen(*e1)
        p2 = to_screen(*e2)
        parts.append(
            f'<polygon points="{_fmt(o[0])},{_fmt(o[1])} {_fmt(p1[0])},{_fmt(p1[1])} '
            f'{_fmt(p2[0])},{_fmt(p2[1])}" fill="#f5d6d6" stroke="#c0392b" stroke-width="1"/>'
        )

    label_slots: dict[tuple, int] = {}
    for wall in diagram.walls:
        for d in wall.support_dirs():
            ex, ey = ray_to_edge(d.m1, d.m2)
            x0, y0 = to_screen(0, 0)
            x1, y1 = to_screen(ex, ey)
            parts.append(
                f'<line x1="{_fmt(x0)}" y1="{_fmt(y0)}" x2="{_fmt(x1)}" y2="{_fmt(y1)}" '
                f'stroke="#444444" stroke-width="1"/>'
            )
        if wall.coeffs:
            k0 = min(wall.coeffs)
            lead = LaurentPoly.monomial(wall.direction.scale(k0), wall.coeffs[k0])
            label = f"1+{lead}" + ("+..." if len(wall.coeffs) > 1 else "")
            d = wall.support_dirs()[-1]
            slot = label_slots.get(tuple(d), 0)
            label_slots[tuple(d)] = slot + 1
            frac = 0.62 + 0.12 * slot
            lx, ly = to_screen(frac * d.m1 * vp.extent / max(abs(d.m1), abs(d.m2)),
                               frac * d.m2 * vp.extent / max(abs(d.m1), abs(d.m2)))
            parts.append(
                f'<text x="{_fmt(lx + 4)}" y="{_fmt(ly - 4)}" font-size="11" '
                f'font-family="monospace" fill="#222222">{_esc(label)}</text>'
            )

    for idx, line in enumerate(lines or []):
        color = _LINE_COLORS[idx % len(_LINE_COLORS)]
        pts: list[tuple[float, float]] = []
        segs = line.segments
        bend_pts = [s.bend_point for s in segs[1:]] + [line.endpoint]
        first_anchor = bend_pts[0]
        m0 = segs[0].exponent
        norm = max(abs(m0.m1), abs(m0.m2))
        reach = 2.0 * vp.extent / norm if norm else 0.0
        pts.append((float(first_anchor[0]) + reach * m0.m1, float(first_anchor[1]) + reach * m0.m2))
        pts.extend((float(p[0]), float(p[1])) for p in bend_pts)
        screen = [to_screen(x, y) for x, y in pts]
        attr = " ".join(f"{_fmt(x)},{_fmt(y)}" for x, y in screen)
        parts.append(
            f'<polyline points="{attr}" fill="none" stroke="{color}" stroke-width="1.6"/>'
        )
        for seg, (ax, ay), (bx, by) in zip(segs, pts, pts[1:]):
            mx, my = to_screen((ax + bx) / 2.0, (ay + by) / 2.0)
            mono = LaurentPoly.monomial(seg.exponent, seg.coeff)
            parts.append(
                f'<text x="{_fmt(mx + 4)}" y="{_fmt(my - 3)}" font-size="10" '
                f'font-family="monospace" fill="{color}">{_esc(str(mono))}</text>'
            )
        qx, qy = to_screen(float(line.endpoint[0]), float(line.endpoint[1]))
        parts.append(f'<circle cx="{_fmt(qx)}" cy="{_fmt(qy)}" r="2.5" fill="black"/>')

    parts.append("</svg>")
    return "\n".join(parts).encode("utf-8")


def _esc(s: str) -> str:
    return s.replace("&", "&amp;").replace("<", "&lt;").replace(">", "&gt;")


def render_instance(
    params: ClusterParams,
    order: int,
    variant: str = "g",
    theta_m=None,
    viewport: Viewport | None = None,
) -> bytes:
    """Convenience wrapper: completed diagram plus optional broken lines."""
    diagram = completed_diagram(params, order, variant)
    lines = None
    if theta_m is not None:
        m = LatticeVector(*theta_m)
        q = generic_endpoint_for(diagram, m, order)
        lines = enumerate_broken_lines(diagram, m, q, order)
    return render_svg(diagram, lines=lines, viewport=viewport)
