"""Broken lines and theta functions against a frozen scattering diagram.

A broken line with initial exponent m and endpoint q is a piecewise-linear
path from infinity to q.  Each linear piece carries a monomial c*x^{m'};
travel direction on a piece is -m', and at a bend across a wall the next
monomial must be a term of the wall-crossing image of the previous one.
The theta function is the sum of final monomials over all such lines.

Enumeration runs backward from q.  The final exponent is m plus a cone
element u of bounded degree; peeling a bend strictly decreases that degree,
so depth-first search over (point, exponent) states terminates.  All
geometry is exact over Q: every wall support is a ray through the origin,
so two distinct supports only meet at 0 and bend points are unambiguous.

Endpoints are exact rational points.  Genericity is enforced explicitly:
the endpoint sits on no wall support, and if a candidate segment would
pass exactly through the origin (possible only when the endpoint is
radially aligned with a reachable exponent) the enumeration raises instead
of silently dropping lines.  `generic_endpoint_for` picks endpoints that
provably avoid both degeneracies.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .cluster import ClusterParams
from .errors import InvariantViolationError, MalformedInputError, NoGenericPointError, NonGenericEndpointError
from .greedy import order_budget
from .laurent import LatticeVector, LaurentPoly
from .scattering import (
    ScatteringDiagram,
    Wall,
    completed_diagram,
    wall_function_power,
    _wall_normal,
)

Point = tuple[Fraction, Fraction]


def _point(p) -> Point:
    return (Fraction(p[0]), Fraction(p[1]))


def _cross(a, b):
    return a[0] * b[1] - a[1] * b[0]


@dataclass(frozen=True)
class Segment:
    """One domain of linearity: monomial coeff*x^{exponent}, entered through
    bend_wall at bend_point (both None on the first, unbounded segment)."""

    exponent: LatticeVector
    coeff: int
    bend_wall: Wall | None
    bend_point: Point | None


@dataclass(frozen=True)
class BrokenLine:
    endpoint: Point
    segments: tuple[Segment, ...]

    @property
    def initial_exponent(self) -> LatticeVector:
        return self.segments[0].exponent

    @property
    def final_exponent(self) -> LatticeVector:
        return self.segments[-1].exponent

    @property
    def final_coeff(self) -> int:
        return self.segments[-1].coeff

    def final_monomial(self) -> LaurentPoly:
        return LaurentPoly.monomial(self.final_exponent, self.final_coeff)

    def to_records(self) -> list[dict]:
        return [
            {
                "exponent": [s.exponent.m1, s.exponent.m2],
                "coeff": s.coeff,
                "bend_point": None if s.bend_point is None else [str(s.bend_point[0]), str(s.bend_point[1])],
            }
            for s in self.segments
        ]


def _on_support(q, d) -> bool:
    """Is q on the ray R_{>0} * d (origin excluded)?"""
    if _cross(q, d) != 0:
        return False
    return (q[0] * d[0] + q[1] * d[1]) > 0


def is_generic_endpoint(diagram: ScatteringDiagram, q) -> bool:
    q = _point(q)
    if q == (0, 0):
        return False
    for wall in diagram.walls:
        for d in wall.support_dirs():
            if _on_support(q, d):
                return False
    return True


def _primes():
    n = 2
    while True:
        if all(n % p for p in range(2, int(n**0.5) + 1)):
            yield n
        n += 1


def pick_generic_endpoint(diagram: ScatteringDiagram, hint, avoid_dirs=()) -> Point:
    """A rational point near `hint`, on no wall support and not radially
    aligned with any direction in avoid_dirs.

    Deterministic perturbation schedule: for increasing primes p, first add
    1/p to the first coordinate, then also 1/p^2 to the second (a hint on a
    horizontal support cannot escape through the first coordinate alone).
    """
    hint = _point(hint)

    def ok(q: Point) -> bool:
        if not is_generic_endpoint(diagram, q):
            return False
        return all(_cross(q, d) != 0 for d in avoid_dirs)

    if ok(hint):
        return hint
    gen = _primes()
    for _ in range(50):
        p = next(gen)
        q = (hint[0] + Fraction(1, p), hint[1])
        if ok(q):
            return q
        q = (hint[0] + Fraction(1, p), hint[1] + Fraction(1, p * p))
        if ok(q):
            return q
    raise NoGenericPointError(f"no generic endpoint near {hint} after 100 attempts")


def _ray_hits_origin(p: Point, m: LatticeVector) -> bool:
    """Does the ray p + t*m, t >= 0, pass through the origin?"""
    if _cross(p, m) != 0:
        return False
    if p == (0, 0):
        return True
    return (p[0] * m.m1 + p[1] * m.m2) < 0


def _crossings(diagram: ScatteringDiagram, p: Point, m: LatticeVector):
    """Transversal intersections of the backward ray p + t*m (t > 0) with
    wall supports, sorted by t; a crossing exactly at the origin is
    reported with point (0, 0)."""
    out = []
    for wall in diagram.walls:
        if not wall.coeffs:
            continue
        for d in wall.support_dirs():
            denom = _cross(m, d)
            if denom == 0:
                continue
            t = Fraction(-_cross(p, d), denom)
            if t <= 0:
                continue
            pt = (p[0] + t * m.m1, p[1] + t * m.m2)
            if pt[0] * d.m1 + pt[1] * d.m2 < 0:
                continue  # on the opposite half of the line through d
            out.append((t, pt, wall, d))
    out.sort(key=lambda entry: entry[0])
    return out


def enumerate_broken_lines(diagram: ScatteringDiagram, m, q, order: int) -> list[BrokenLine]:
    """All broken lines with initial exponent m and endpoint q whose final
    exponent lies within `order` of m in the cone grading."""
    m = LatticeVector(*m)
    if m == (0, 0):
        raise ValueError("the initial exponent must be nonzero")
    q = _point(q)
    if not is_generic_endpoint(diagram, q):
        raise NonGenericEndpointError(f"endpoint {q} lies on a wall support")
    cone = diagram.cone
    lines: list[BrokenLine] = []

    def dfs(p: Point, m_cur: LatticeVector, tail: list[tuple]) -> None:
        # tail holds (exponent, wall, bend point, bend multiplier) for the
        # segments already peeled, in backward order; coefficients are
        # assigned forward from 1 once the initial segment is reached.
        u = m_cur - m
        if not cone.contains(u):
            return
        if m_cur == m:
            # This is the first (unbounded) segment; it must run to
            # infinity without hitting the origin.
            if _ray_hits_origin(p, m_cur):
                raise NonGenericEndpointError(
                    f"endpoint {q} is radially aligned with the exponent {tuple(m_cur)}"
                )
            segs = [Segment(m, 1, None, None)]
            coeff = 1
            for exponent, wall, pt, mult in reversed(tail):
                coeff *= mult
                segs.append(Segment(exponent, coeff, wall, pt))
            lines.append(BrokenLine(endpoint=q, segments=tuple(segs)))
            return
        budget = cone.ell(u)
        for _t, pt, wall, _d in _crossings(diagram, p, m_cur):
            if pt == (0, 0):
                # A segment through the origin can only be the last one,
                # aimed straight at q; that is an endpoint degeneracy.
                raise NonGenericEndpointError(
                    f"endpoint {q} is radially aligned with the exponent {tuple(m_cur)}"
                )
            w = wall.direction
            jmax = budget // cone.ell(w)
            for j in range(1, jmax + 1):
                m_prev = m_cur - w.scale(j)
                if m_prev == (0, 0) or m_prev.cross(w) == 0:
                    continue
                if not cone.contains(m_prev - m):
                    continue
                # The bend multiplier is the x^{j*w} coefficient of
                # f^{m_prev . n}, with n signed against the travel
                # direction -m_prev.
                n = _wall_normal(w, (-m_prev.m1, -m_prev.m2))
                series = wall_function_power(wall, m_prev.dot(n), j)
                if series[j] == 0:
                    continue
                dfs(pt, m_prev, tail + [(m_cur, wall, pt, series[j])])

    for u in _cone_points(diagram.cone, order):
        mf = m + u
        if mf == (0, 0):
            continue
        dfs(q, mf, [])

    lines.sort(key=_line_sort_key)
    return lines


def _cone_points(cone, order: int) -> list[LatticeVector]:
    """Lattice points u of the cone with ell(u) <= order.  The quadrant
    cones used here have unimodular generator pairs, so nonnegative
    generator combinations exhaust the cone points."""
    g1, g2 = cone.gen1, cone.gen2
    pts = []
    for i in range(order + 2):
        for j in range(order + 2):
            u = LatticeVector(i * g1.m1 + j * g2.m1, i * g1.m2 + j * g2.m2)
            if cone.ell(u) <= order:
                pts.append(u)
    pts.sort(key=lambda v: (cone.ell(v), v.m1, v.m2))
    return pts


def _line_sort_key(line: BrokenLine):
    return (
        len(line.segments),
        [(s.exponent.m1, s.exponent.m2, s.coeff) for s in line.segments],
    )


def theta(diagram: ScatteringDiagram, m, q, order: int) -> LaurentPoly:
    """The theta function: sum of final monomials over all broken lines."""
    total = LaurentPoly.zero()
    for line in enumerate_broken_lines(diagram, m, q, order):
        total = total + line.final_monomial()
    return total


_D_HINT = (Fraction(3, 2), Fraction(1))


def generic_endpoint_for(diagram: ScatteringDiagram, m, order: int, hint=_D_HINT) -> Point:
    """An endpoint near `hint` that is generic for enumerating broken lines
    with initial exponent m at the given order.

    Besides staying off all wall supports, the point must not be radially
    aligned with any reachable final exponent m + u; only the last segment
    of a line can aim at the origin, so this rules out every degeneracy.
    """
    m = LatticeVector(*m)
    finals = [m + u for u in _cone_points(diagram.cone, order)]
    return pick_generic_endpoint(diagram, hint, avoid_dirs=[f for f in finals if f != (0, 0)])


def theta_d(params: ClusterParams, m, order: int | None = None) -> LaurentPoly:
    """Theta function against the first-quadrant diagram, with endpoint
    chosen generically inside the open first quadrant.

    When `order` is omitted it is derived from the support region of the
    matching pointed element, which bounds every contributing bend.
    """
    m = LatticeVector(*m)
    if m == (0, 0):
        return LaurentPoly.one()  # the unit of the theta family
    if order is None:
        order = order_budget(params, (-m.m1, -m.m2))
    diagram = completed_diagram(params, max(order, 1), variant="d")
    q = generic_endpoint_for(diagram, m, order)
    return theta(diagram, m, q, order)


def angular_momentum(line: BrokenLine) -> Fraction:
    """The conserved quantity q2*m1 - q1*m2, checked on every segment."""
    samples = []
    for earlier, later in zip(line.segments, line.segments[1:]):
        pt = later.bend_point
        samples.append((pt, earlier.exponent))
        samples.append((pt, later.exponent))
    samples.append((line.endpoint, line.segments[-1].exponent))
    values = [Fraction(q2) * mm.m1 - Fraction(q1) * mm.m2 for (q1, q2), mm in samples]
    first = values[0]
    if any(v != first for v in values):
        raise InvariantViolationError(f"angular momentum varies along the line: {values}")
    return first


def validate_broken_line(line: BrokenLine, diagram: ScatteringDiagram, m=None) -> None:
    """Check the defining conditions of a broken line against a diagram;
    raises InvariantViolationError on any failure."""
    segs = line.segments
    if not segs:
        raise InvariantViolationError("a broken line needs at least one segment")
    first = segs[0]
    if first.coeff != 1 or first.bend_wall is not None or first.bend_point is not None:
        raise InvariantViolationError("malformed first segment")
    if m is not None and first.exponent != LatticeVector(*m):
        raise InvariantViolationError("initial exponent mismatch")
    for prev, cur in zip(segs, segs[1:]):
        if cur.bend_wall is None or cur.bend_point is None:
            raise InvariantViolationError("interior segment missing its bend data")
        wall, pt = cur.bend_wall, cur.bend_point
        if pt == (0, 0) or not any(_on_support(pt, d) for d in wall.support_dirs()):
            raise InvariantViolationError(f"bend point {pt} not on the wall support")
        diff = cur.exponent - prev.exponent
        w = wall.direction
        if diff.cross(w) != 0:
            raise InvariantViolationError("bend does not move along the wall direction")
        j = diff.m1 // w.m1 if w.m1 else diff.m2 // w.m2
        if j < 1:
            raise InvariantViolationError("bend index must be positive")
        n = _wall_normal(w, (-prev.exponent.m1, -prev.exponent.m2))
        series = wall_function_power(wall, prev.exponent.dot(n), j)
        if prev.coeff * series[j] != cur.coeff:
            raise InvariantViolationError("bend coefficient is not a term of the crossing image")
    points = [s.bend_point for s in segs[1:]] + [line.endpoint]
    for seg, start, end in zip(segs[1:], points, points[1:]):
        delta = (end[0] - start[0], end[1] - start[1])
        if _cross(delta, seg.exponent) != 0:
            raise InvariantViolationError("segment does not travel along -exponent")
        if delta[0] * seg.exponent.m1 + delta[1] * seg.exponent.m2 >= 0:
            raise InvariantViolationError("segment travels the wrong way")
    angular_momentum(line)


def transport_broken_line(line: BrokenLine, diagram_g: ScatteringDiagram, diagram_d: ScatteringDiagram) -> BrokenLine:
    """Image of a broken line under the piecewise-linear map T: identity on
    the upper half plane, the shear (m1, m2) -> (m1 + b*m2, m2) below.

    Segments are subdivided where they cross the horizontal axis; each
    subdivision point becomes a bend at the horizontal wall of the image
    diagram (with unchanged coefficient, matching the top term of the
    crossing image there).
    """
    b = diagram_g.params.b
    if diagram_g.variant != "g" or diagram_d.variant != "d":
        raise MalformedInputError("transport goes from the g-variant to the d-variant")
    x_wall_d = diagram_d.wall_at((1, 0))
    if x_wall_d is None:
        raise MalformedInputError("d-variant diagram lacks its horizontal wall")

    def T_pt(p: Point) -> Point:
        if p[1] >= 0:
            return p
        return (p[0] + b * p[1], p[1])

    def T_exp(mm: LatticeVector, lower: bool) -> LatticeVector:
        return LatticeVector(mm.m1 + b * mm.m2, mm.m2) if lower else mm

    def image_wall(wall: Wall, pt: Point) -> Wall:
        if wall.direction == (-1, 0):
            target = LatticeVector(1, 0)
        elif wall.direction == (0, 1):
            target = LatticeVector(0, 1) if pt[1] > 0 else LatticeVector(b, 1)
        elif wall.direction == (-b, 1):
            target = LatticeVector(0, 1)
        else:
            target = LatticeVector(wall.direction.m1 + b * wall.direction.m2, wall.direction.m2).primitive_part()
        out = diagram_d.wall_at(target)
        if out is None:
            raise MalformedInputError(f"image wall {target} missing from the d-variant diagram")
        return out

    segs = line.segments
    ends = [s.bend_point for s in segs[1:]] + [line.endpoint]
    out: list[Segment] = []
    for seg, end in zip(segs, ends):
        start = seg.bend_point
        mm = seg.exponent
        if start is None:
            far_lower = mm.m2 < 0 if mm.m2 != 0 else end[1] < 0
            crossing = None
            if mm.m2 != 0 and end[1] != 0 and (end[1] < 0) != far_lower:
                t = Fraction(-end[1], mm.m2)
                crossing = (end[0] + t * mm.m1, Fraction(0))
        else:
            far_lower = start[1] < 0 if start[1] != 0 else (end[1] < 0)
            crossing = None
            if start[1] != 0 and end[1] != 0 and (start[1] < 0) != (end[1] < 0):
                s = Fraction(start[1], start[1] - end[1])
                crossing = (start[0] + s * (end[0] - start[0]), Fraction(0))
        near_lower = end[1] < 0 if end[1] != 0 else far_lower
        bend_wall = None if seg.bend_wall is None else image_wall(seg.bend_wall, start)
        bend_point = None if start is None else T_pt(start)
        out.append(Segment(T_exp(mm, far_lower), seg.coeff, bend_wall, bend_point))
        if crossing is not None:
            out.append(Segment(T_exp(mm, near_lower), seg.coeff, x_wall_d, crossing))
    # A horizontal-wall bend whose exponents agree after T is not a bend in
    # the image; merge such pieces back into one straight segment.
    merged: list[Segment] = [out[0]]
    for seg in out[1:]:
        if seg.exponent == merged[-1].exponent:
            if seg.coeff != merged[-1].coeff:
                raise InvariantViolationError("straightened pieces disagree in coefficient")
            continue
        merged.append(seg)
    return BrokenLine(endpoint=T_pt(line.endpoint), segments=tuple(merged))


def lines_to_json(lines) -> list:
    return [line.to_records() for line in lines]
