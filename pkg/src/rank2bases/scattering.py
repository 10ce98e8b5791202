"""Scattering diagrams for A(b,c): walls, wall crossings, consistency.

A wall is a pair (support, f) where the support is the full line R*w or
the ray R_{<=0}*w for a primitive direction w in the base cone, and

    f = 1 + sum_{k>=1} c_k x^{k*w}.

Crossing a wall transversally with velocity v sends x^m to x^m * f^{m.n},
where n is the primitive normal of the wall fixed by the sign convention
v.n < 0.  A diagram is consistent when the path-ordered product around a
full loop is the identity; `complete` enforces that order by order, which
is exactly the rank-2 tropical-vertex factorization.

Everything is exact: angular bookkeeping uses integer cross products, wall
functions are truncated by the cone's degree functional, and coefficients
are arbitrary-precision integers.
"""

from __future__ import annotations

import functools
import json
import logging
import math
from dataclasses import dataclass
from fractions import Fraction

from .cluster import ClusterParams
from .errors import InvariantViolationError, MalformedInputError, NonTransversalError, PathOnWallError
from .laurent import DegreeFunctional, LatticeVector, LaurentPoly

log = logging.getLogger(__name__)

LINE = "line"
RAY = "ray"

# Linear involutions generating the wall recipe, and the two halves of the
# piecewise-linear change of parametrization T.
def S1(b: int):
    return ((-1, -b), (0, 1))


def S2(c: int):
    return ((1, 0), (-c, -1))


def T_minus(b: int):
    return ((1, b), (0, 1))


def _mat_vec(mat, v) -> LatticeVector:
    (a, b), (c, d) = mat
    return LatticeVector(a * v[0] + b * v[1], c * v[0] + d * v[1])


@dataclass
class Wall:
    """A wall with direction `direction` (primitive, in the base cone).

    geometry == LINE means the support is the full line; geometry == RAY
    means the support is the closed ray opposite to `direction`.
    coeffs maps k >= 1 to the integer coefficient of x^{k*direction} in the
    wall function; zero entries are never stored.
    """

    direction: LatticeVector
    geometry: str
    coeffs: dict[int, int]

    def __post_init__(self):
        self.direction = LatticeVector(*self.direction)
        if not self.direction.is_primitive():
            raise MalformedInputError(f"wall direction {self.direction} is not primitive")
        if self.geometry not in (LINE, RAY):
            raise MalformedInputError(f"unknown wall geometry {self.geometry!r}")
        self.coeffs = {int(k): int(c) for k, c in self.coeffs.items() if int(c) != 0}
        if any(k < 1 for k in self.coeffs):
            raise MalformedInputError("wall function indices must be >= 1")

    def support_dirs(self) -> tuple[LatticeVector, ...]:
        """Primitive directions of the rays making up the support."""
        if self.geometry == LINE:
            return (self.direction, -self.direction)
        return (-self.direction,)

    def copy(self) -> "Wall":
        return Wall(self.direction, self.geometry, dict(self.coeffs))

    def function_poly(self) -> LaurentPoly:
        terms = {self.direction.scale(k): c for k, c in self.coeffs.items()}
        return LaurentPoly.one() + LaurentPoly(terms)

    def function_str(self) -> str:
        if not self.coeffs:
            return "1"
        return "1 + " + str(LaurentPoly({self.direction.scale(k): c for k, c in self.coeffs.items()}))


@dataclass(frozen=True)
class ConeSpec:
    """A strictly convex rational cone with a grading positive on it."""

    gen1: LatticeVector
    gen2: LatticeVector
    ell: DegreeFunctional

    def __post_init__(self):
        if self.gen1.cross(self.gen2) == 0:
            raise MalformedInputError("cone generators must not be parallel")
        if self.ell(self.gen1) <= 0 or self.ell(self.gen2) <= 0:
            raise MalformedInputError("degree functional must be positive on the cone")

    def contains(self, m) -> bool:
        s = 1 if self.gen1.cross(self.gen2) > 0 else -1
        return s * self.gen1.cross(m) >= 0 and s * LatticeVector(*m).cross(self.gen2) >= 0


@dataclass
class ScatteringDiagram:
    params: ClusterParams
    variant: str  # "g" or "d"
    cone: ConeSpec
    walls: list[Wall]
    order: int

    def copy(self) -> "ScatteringDiagram":
        return ScatteringDiagram(self.params, self.variant, self.cone, [w.copy() for w in self.walls], self.order)

    def wall_at(self, direction) -> Wall | None:
        direction = LatticeVector(*direction)
        for w in self.walls:
            if w.direction == direction:
                return w
        return None

    def nontrivial_walls(self) -> list[Wall]:
        return [w for w in self.walls if w.coeffs]


def second_quadrant_cone() -> ConeSpec:
    return ConeSpec(LatticeVector(-1, 0), LatticeVector(0, 1), DegreeFunctional(-1, 1))


def first_quadrant_cone() -> ConeSpec:
    return ConeSpec(LatticeVector(1, 0), LatticeVector(0, 1), DegreeFunctional(1, 1))


def _truncated_coeffs(direction: LatticeVector, coeffs: dict[int, int], ell: DegreeFunctional, order: int) -> dict[int, int]:
    unit = ell(direction)
    return {k: c for k, c in coeffs.items() if k * unit <= order}


def initial_diagram_g(params: ClusterParams, order: int) -> ScatteringDiagram:
    """Initial diagram over the second quadrant: lines 1+x1^{-b} and 1+x2^{c}."""
    if order < 1:
        raise ValueError("order must be >= 1")
    cone = second_quadrant_cone()
    walls = [
        Wall(LatticeVector(-1, 0), LINE, _truncated_coeffs(LatticeVector(-1, 0), {params.b: 1}, cone.ell, order)),
        Wall(LatticeVector(0, 1), LINE, _truncated_coeffs(LatticeVector(0, 1), {params.c: 1}, cone.ell, order)),
    ]
    return ScatteringDiagram(params, "g", cone, walls, order)


def initial_diagram_d(params: ClusterParams, order: int) -> ScatteringDiagram:
    """Initial diagram over the first quadrant: lines 1+x1^{b} and 1+x2^{c}."""
    if order < 1:
        raise ValueError("order must be >= 1")
    cone = first_quadrant_cone()
    walls = [
        Wall(LatticeVector(1, 0), LINE, _truncated_coeffs(LatticeVector(1, 0), {params.b: 1}, cone.ell, order)),
        Wall(LatticeVector(0, 1), LINE, _truncated_coeffs(LatticeVector(0, 1), {params.c: 1}, cone.ell, order)),
    ]
    return ScatteringDiagram(params, "d", cone, walls, order)


# -- angular order ------------------------------------------------------


def _cross(a, b):
    return a[0] * b[1] - a[1] * b[0]


def _dot(a, b):
    return a[0] * b[0] + a[1] * b[1]


def _ccw_position_cmp(start, a, b) -> int:
    """Compare angular positions of a and b sweeping CCW from `start`.

    Neither a nor b may be parallel to start.  Returns -1/0/+1.
    """
    ha = 0 if _cross(start, a) > 0 else 1
    hb = 0 if _cross(start, b) > 0 else 1
    if ha != hb:
        return -1 if ha < hb else 1
    cr = _cross(a, b)
    if cr > 0:
        return -1
    if cr < 0:
        return 1
    return 0 if _dot(a, b) > 0 else (-1 if ha == 0 else 1)


def _sorted_supports(diagram: ScatteringDiagram, start) -> list[tuple[LatticeVector, Wall]]:
    entries = []
    for wall in diagram.walls:
        if not wall.coeffs:
            continue
        for d in wall.support_dirs():
            if _cross(start, d) == 0:
                raise PathOnWallError(f"angular position {tuple(start)} lies on the support of a wall")
            entries.append((d, wall))
    entries.sort(key=functools.cmp_to_key(lambda x, y: _ccw_position_cmp(start, x[0], y[0])))
    return entries


def generic_loop_start(diagram: ScatteringDiagram) -> LatticeVector:
    """A deterministic direction parallel to no wall support."""
    supports = [d for w in diagram.walls for d in w.support_dirs()]
    for q in range(1, 4 * len(supports) + 5):
        cand = LatticeVector(2 * q + 1, 2)
        if all(_cross(cand, d) != 0 for d in supports):
            return cand
    raise InvariantViolationError("no generic loop start found")  # pragma: no cover


# -- wall crossing -------------------------------------------------------


def _wall_normal(direction: LatticeVector, v) -> LatticeVector:
    """Primitive annihilator n of the wall direction with v.n < 0."""
    n = LatticeVector(-direction.m2, direction.m1)
    s = _dot(v, n)
    if s == 0:
        raise NonTransversalError(f"direction {tuple(v)} is tangent to the wall {direction}")
    return n if s < 0 else -n


@functools.lru_cache(maxsize=None)
def _fn_power(coeff_items: tuple[tuple[int, int], ...], e: int, jmax: int) -> tuple[int, ...]:
    """Coefficients [u^0 .. u^jmax] of (1 + sum_k c_k u^k)^e, e any integer."""
    f = [0] * (jmax + 1)
    f[0] = 1
    for k, c in coeff_items:
        if k <= jmax:
            f[k] = c

    def mul(a, b):
        out = [0] * (jmax + 1)
        for i, ai in enumerate(a):
            if ai:
                for j in range(jmax + 1 - i):
                    if b[j]:
                        out[i + j] += ai * b[j]
        return out

    if e < 0:
        inv = [0] * (jmax + 1)
        inv[0] = 1
        for j in range(1, jmax + 1):
            inv[j] = -sum(f[i] * inv[j - i] for i in range(1, j + 1))
        f, e = inv, -e
    result = [0] * (jmax + 1)
    result[0] = 1
    base = f
    while e:
        if e & 1:
            result = mul(result, base)
        e >>= 1
        if e:
            base = mul(base, base)
    return tuple(result)


def wall_function_power(wall: Wall, e: int, jmax: int) -> tuple[int, ...]:
    """Truncated coefficients of f_wall^e as a series in x^{wall.direction}."""
    return _fn_power(tuple(sorted(wall.coeffs.items())), e, jmax)


def wall_cross(p: LaurentPoly, wall: Wall, v, base, cone: ConeSpec, order: int) -> LaurentPoly:
    """Apply the wall-crossing automorphism x^m -> x^m f^{m.n} to p.

    v is the crossing velocity and fixes the sign of the normal; the result
    is truncated to degree `order` above `base` by the cone's functional.
    """
    base = LatticeVector(*base)
    n = _wall_normal(wall.direction, v)
    w = wall.direction
    unit = cone.ell(w)
    out: dict[LatticeVector, int] = {}
    for m, c in p.items():
        e = m.dot(n)
        headroom = order - cone.ell(m - base)
        if e == 0 or headroom < 0:
            if headroom >= 0:
                out[m] = out.get(m, 0) + c
            continue
        jmax = headroom // unit
        series = wall_function_power(wall, e, jmax)
        for j in range(jmax + 1):
            if series[j]:
                key = m + w.scale(j)
                new = out.get(key, 0) + c * series[j]
                if new:
                    out[key] = new
                else:
                    out.pop(key, None)
    return LaurentPoly(out)


def _crossing_velocity(support_dir, orientation: str):
    if orientation == "ccw":
        return (-support_dir[1], support_dir[0])
    return (support_dir[1], -support_dir[0])


def path_ordered_product(
    diagram: ScatteringDiagram,
    start_dir,
    end_dir,
    orientation: str,
    p: LaurentPoly,
    base,
    order: int | None = None,
) -> LaurentPoly:
    """Compose wall crossings over all supports strictly between two angular
    positions, in rotational order."""
    if orientation not in ("ccw", "cw"):
        raise ValueError("orientation must be 'ccw' or 'cw'")
    order = diagram.order if order is None else order
    sweep_start = start_dir if orientation == "ccw" else end_dir
    sweep_end = end_dir if orientation == "ccw" else start_dir
    if _cross(sweep_start, sweep_end) == 0:
        raise ValueError("start and end positions must not be parallel; use full_loop for loops")
    supports = _sorted_supports(diagram, sweep_start)
    if any(_cross(sweep_end, d) == 0 for d, _ in supports):
        raise PathOnWallError("path endpoint lies on the support of a wall")
    between = [(d, wall) for d, wall in supports if _ccw_position_cmp(sweep_start, d, sweep_end) < 0]
    if orientation == "cw":
        between.reverse()
    result = p
    for d, wall in between:
        result = wall_cross(result, wall, _crossing_velocity(d, orientation), base, diagram.cone, order)
    return result


def full_loop(diagram: ScatteringDiagram, p: LaurentPoly, base, order: int | None = None, start=None) -> LaurentPoly:
    """The path-ordered product around one full CCW loop starting at `start`."""
    order = diagram.order if order is None else order
    if start is None:
        start = generic_loop_start(diagram)
    result = p
    for d, wall in _sorted_supports(diagram, start):
        result = wall_cross(result, wall, _crossing_velocity(d, "ccw"), base, diagram.cone, order)
    return result


# -- consistency ---------------------------------------------------------

_BASIS = (LatticeVector(1, 0), LatticeVector(0, 1))


def _loop_deviations(diagram: ScatteringDiagram, order: int) -> dict[LatticeVector, tuple[int, int]]:
    """Terms of loop(x^e) - x^e for both basis exponents, keyed by the
    cone offset u, as coefficient pairs (read at e1, read at e2)."""
    devs: dict[LatticeVector, list[int]] = {}
    for idx, e in enumerate(_BASIS):
        image = full_loop(diagram, LaurentPoly.monomial(e), base=e, order=order)
        delta = image - LaurentPoly.monomial(e)
        for m, c in delta.items():
            u = m - e
            devs.setdefault(u, [0, 0])[idx] = c
    return {u: (pair[0], pair[1]) for u, pair in devs.items()}


def complete(diagram_in: ScatteringDiagram, order: int) -> ScatteringDiagram:
    """Consistent completion of a diagram up to the given truncation order.

    Order-by-order scheme: assuming the full-loop automorphism is the
    identity mod degree k, its degree-k defect on the two basis monomials
    x^{(1,0)}, x^{(0,1)} determines a unique ray coefficient per primitive
    direction, read off twice and cross-checked.  Newly added walls are
    always rays; corrections on existing supports merge into the existing
    wall function.
    """
    if order < 1:
        raise ValueError("order must be >= 1")
    diagram = diagram_in.copy()
    diagram.order = order
    cone = diagram.cone
    for k in range(1, order + 1):
        corrections = []
        for u, (d1, d2) in _loop_deviations(diagram, k).items():
            du = cone.ell(u)
            if du < k and (d1 or d2):
                raise InvariantViolationError(
                    f"loop defect of degree {du} survived below the working order {k}"
                )
            if du != k or (d1 == 0 and d2 == 0):
                continue
            if not cone.contains(u):
                raise InvariantViolationError(f"loop defect at {u} outside the base cone")
            w0 = u.primitive_part()
            j = u.m1 // w0.m1 if w0.m1 else u.m2 // w0.m2
            n = LatticeVector(-w0.m2, w0.m1)  # normal used by the CCW loop at the ray -w0
            cands = []
            if n.m1 != 0:
                cands.append(Fraction(-d1, n.m1))
            if n.m2 != 0:
                cands.append(Fraction(-d2, n.m2))
            if len(cands) == 2 and cands[0] != cands[1]:
                raise InvariantViolationError(
                    f"inconsistent correction reads {cands} at direction {w0}, order {k}"
                )
            c = cands[0]
            if c.denominator != 1:
                raise InvariantViolationError(f"non-integral correction {c} at {w0}, order {k}")
            c = int(c)
            if c == 0:
                continue
            if w0 in (cone.gen1, cone.gen2, -cone.gen1, -cone.gen2):
                raise InvariantViolationError(f"correction demanded on the boundary direction {w0}")
            corrections.append((w0, j, c))
        corrections.sort(key=functools.cmp_to_key(lambda x, y: _ccw_position_cmp((1, 1), x[0], y[0])))
        for w0, j, c in corrections:
            if c < 0:
                # Observed to be positive in practice, but nothing here
                # requires it; worth a note when it happens.
                log.warning("negative wall coefficient %d at direction %s, index %d", c, tuple(w0), j)
            wall = diagram.wall_at(w0)
            if wall is None:
                diagram.walls.append(Wall(w0, RAY, {j: c}))
            else:
                new = wall.coeffs.get(j, 0) + c
                if new:
                    wall.coeffs[j] = new
                else:
                    wall.coeffs.pop(j, None)
    diagram.walls.sort(key=functools.cmp_to_key(lambda x, y: _ccw_position_cmp((1, 1), x.direction, y.direction)))
    return diagram


_completed_cache: dict[tuple[int, int, str, int], ScatteringDiagram] = {}


def completed_diagram(params: ClusterParams, order: int, variant: str = "g") -> ScatteringDiagram:
    """Cached consistent diagram for (b, c) at the given order.

    The returned diagram is shared; treat it as frozen.
    """
    key = (params.b, params.c, variant, order)
    if key not in _completed_cache:
        initial = initial_diagram_g(params, order) if variant == "g" else initial_diagram_d(params, order)
        _completed_cache[key] = complete(initial, order)
    return _completed_cache[key]


def clear_diagram_cache() -> None:
    _completed_cache.clear()


@dataclass(frozen=True)
class LoopDefect:
    """Deviation of the full-loop automorphism from the identity, per order."""

    order: int
    by_order: dict[int, dict[LatticeVector, tuple[int, int]]]

    @property
    def is_zero(self) -> bool:
        return not self.by_order

    @property
    def first_nonzero_order(self) -> int | None:
        return min(self.by_order) if self.by_order else None


def loop_defect(diagram: ScatteringDiagram, order: int | None = None) -> LoopDefect:
    """Evaluate the full loop on both basis monomials and report deviations."""
    order = diagram.order if order is None else order
    by_order: dict[int, dict[LatticeVector, tuple[int, int]]] = {}
    for u, pair in _loop_deviations(diagram, order).items():
        if pair != (0, 0):
            by_order.setdefault(diagram.cone.ell(u), {})[u] = pair
    return LoopDefect(order=order, by_order=by_order)


def truncate_diagram(diagram: ScatteringDiagram, order: int) -> ScatteringDiagram:
    """Drop all wall-function terms beyond the given order (and empty walls
    that were not part of the initial data)."""
    out = diagram.copy()
    out.order = order
    for w in out.walls:
        w.coeffs = _truncated_coeffs(w.direction, w.coeffs, out.cone.ell, order)
    out.walls = [w for w in out.walls if w.coeffs or w.geometry == LINE]
    return out


# -- the S1/S2 wall recipe ------------------------------------------------


def _apply_linear_to_wall(mat, direction: LatticeVector, coeffs: dict[int, int]) -> tuple[LatticeVector, dict[int, int]]:
    image = _mat_vec(mat, direction)
    g = math.gcd(image.m1, image.m2)
    if g != 1:
        # Re-express the function series in the primitive direction.
        return image.primitive_part(), {k * g: c for k, c in coeffs.items()}
    return image, dict(coeffs)


def s_recipe_walls(params: ClusterParams, steps: int, order: int) -> list[Wall]:
    """Walls generated by alternately applying S1 and S2 to the two seed
    rays, keeping images strictly inside the fourth quadrant (directions
    strictly inside the second), truncated to the given order.
    """
    if steps < 1:
        raise ValueError("steps must be >= 1")
    b, c = params.b, params.c
    ell = second_quadrant_cone().ell
    chains = [
        # S2 applied to the negative x-axis seed ray, S1 next.
        (_mat_vec(S2(c), LatticeVector(-1, 0)), {b: 1}, (S1(b), S2(c))),
        # S1 applied to the lower y-axis seed ray, S2 next.
        (_mat_vec(S1(b), LatticeVector(0, 1)), {c: 1}, (S2(c), S1(b))),
    ]
    found: dict[LatticeVector, dict[int, int]] = {}
    for direction, coeffs, mats in chains:
        step = 0
        while step < steps:
            if not (direction.m1 < 0 and direction.m2 > 0):
                break
            kept = _truncated_coeffs(direction, coeffs, ell, order)
            if not kept:
                break
            if direction in found:
                break
            found[direction] = kept
            nxt_dir, nxt_coeffs = _apply_linear_to_wall(mats[step % 2], direction, coeffs)
            if nxt_dir == direction:
                break
            direction, coeffs = nxt_dir, nxt_coeffs
            step += 1
    walls = [Wall(d, RAY, cf) for d, cf in found.items()]
    walls.sort(key=functools.cmp_to_key(lambda x, y: _ccw_position_cmp((1, 1), x.direction, y.direction)))
    return walls


@dataclass(frozen=True)
class IrrationalCone:
    """The cone of wall accumulation for bc >= 4, in exact form: boundary
    directions (2b, -bc +- sqrt(disc)) with disc = bc(bc-4)."""

    two_b: int
    minus_bc: int
    disc: int

    @property
    def is_degenerate(self) -> bool:
        return self.disc == 0

    def boundary_dirs_float(self) -> tuple[tuple[float, float], tuple[float, float]]:
        r = math.sqrt(self.disc)
        return ((self.two_b, self.minus_bc + r), (self.two_b, self.minus_bc - r))

    def contains_support_dir(self, d) -> bool:
        """Exact test: does the support direction lie inside the closed cone?"""
        d1, d2 = d
        if d1 <= 0:
            return False
        # slope of d against the two boundary slopes (-bc +- sqrt(disc)) / 2b
        # compare 2b*d2 vs (-bc +- sqrt(disc))*d1 without floats:
        lhs = self.two_b * d2 - self.minus_bc * d1
        # inside iff -sqrt(disc)*d1 <= lhs <= sqrt(disc)*d1
        return lhs * lhs <= self.disc * d1 * d1


def irrational_cone(params: ClusterParams) -> IrrationalCone | None:
    bc = params.b * params.c
    if bc < 4:
        return None
    return IrrationalCone(two_b=2 * params.b, minus_bc=-bc, disc=bc * (bc - 4))


# -- transport between the two parametrizations ---------------------------


def transport_T(diagram_g: ScatteringDiagram) -> ScatteringDiagram:
    """Push a completed second-quadrant diagram through the piecewise-linear
    map T (identity above the x-axis, shear (m1, m2) -> (m1 + b*m2, m2)
    below) and normalize the result into a first-quadrant diagram.
    """
    cone_g = second_quadrant_cone()
    if diagram_g.cone != cone_g:
        raise MalformedInputError("transport expects a diagram over the second quadrant")
    b, c = diagram_g.params.b, diagram_g.params.c
    tm = T_minus(b)
    out_cone = first_quadrant_cone()
    walls: list[Wall] = []

    x_wall = diagram_g.wall_at((-1, 0))
    if x_wall is None or x_wall.geometry != LINE or x_wall.coeffs != {b: 1}:
        raise MalformedInputError("the horizontal line wall is not in its expected initial form")
    walls.append(Wall(LatticeVector(1, 0), LINE, {b: 1}))

    y_wall = diagram_g.wall_at((0, 1))
    if y_wall is None or y_wall.geometry != LINE or y_wall.coeffs != {c: 1}:
        raise MalformedInputError("the vertical line wall is not in its expected initial form")
    # The vertical line splits at the origin; its lower half shears to the
    # ray with direction (b, 1), its upper half merges with the image of
    # the steepest fourth-quadrant ray back into the vertical line.
    walls.append(Wall(LatticeVector(0, 1), LINE, {c: 1}))
    walls.append(Wall(LatticeVector(b, 1), RAY, {c: 1}))

    merge_dir = LatticeVector(-b, 1)
    for wall in diagram_g.walls:
        if wall.geometry == LINE:
            continue
        if not wall.coeffs:
            continue
        if wall.direction == merge_dir:
            if wall.coeffs != {c: 1}:
                raise MalformedInputError(
                    f"the steepest ray {merge_dir} must carry 1 + x^{{{c}w}}, got {wall.coeffs}"
                )
            continue  # its image is the upper vertical ray, already merged
        direction, coeffs = _apply_linear_to_wall(tm, wall.direction, wall.coeffs)
        if not (direction.m1 > 0 and direction.m2 > 0):
            raise InvariantViolationError(f"transported wall {wall.direction} -> {direction} left the cone")
        walls.append(Wall(direction, RAY, coeffs))

    # T does not preserve the degree filtration, so re-truncate to keep the
    # stated order honest; empty rays are dropped.
    trimmed = []
    for w in walls:
        w.coeffs = _truncated_coeffs(w.direction, w.coeffs, out_cone.ell, diagram_g.order)
        if w.coeffs or w.geometry == LINE:
            trimmed.append(w)
    trimmed.sort(key=functools.cmp_to_key(lambda x, y: _ccw_position_cmp((1, 1), x.direction, y.direction)))
    return ScatteringDiagram(diagram_g.params, "d", out_cone, trimmed, diagram_g.order)


# -- serialization ---------------------------------------------------------


def diagram_to_dict(diagram: ScatteringDiagram) -> dict:
    return {
        "b": diagram.params.b,
        "c": diagram.params.c,
        "variant": diagram.variant,
        "order": diagram.order,
        "walls": [
            {
                "dir": [w.direction.m1, w.direction.m2],
                "geom": w.geometry,
                "coeffs": {str(k): v for k, v in sorted(w.coeffs.items())},
            }
            for w in diagram.walls
        ],
    }


def diagram_to_json(diagram: ScatteringDiagram, indent: int | None = None) -> str:
    return json.dumps(diagram_to_dict(diagram), indent=indent)
