"""Greedy elements x[a1,a2] of A(b,c) and their support regions.

A pointed element with d-vector (a1, a2) has the shape

    x[a1,a2] = x1^{-a1} x2^{-a2} * sum_{p1,p2 >= 0} c(p1,p2) x1^{b*p1} x2^{c*p2}

with c(0,0) = 1.  The greedy coefficients are computed from the max
recursion

    c(p1,p2) = max( sum_{k=1}^{p1} (-1)^{k-1} c(p1-k, p2) * C(a2 - c*p2 + k - 1, k),
                    sum_{j=1}^{p2} (-1)^{j-1} c(p1, p2-j) * C(a1 - b*p1 + j - 1, j) )

where C is the generalized binomial.  The recursion is evaluated only on
lattice points of the support region R_{a1,a2}; outside the region every
coefficient vanishes, and we assert that the raw recursion never tries to
put a positive value there.  Evaluated literally on all of Z_{>=0}^2 the
max recursion can go negative outside the region (already for b = c = 2,
(a1,a2) = (2,2)), which is why the region is consulted.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .cluster import ClusterParams
from .errors import InvariantViolationError
from .laurent import LatticeVector, LaurentPoly, gen_binomial

DVector = LatticeVector


def _vec(v) -> LatticeVector:
    return v if isinstance(v, LatticeVector) else LatticeVector(int(v[0]), int(v[1]))


@dataclass(frozen=True)
class SupportRegion:
    """The smallest (possibly degenerate) lattice quadrilateral R_{a1,a2}
    containing the support of x[a1,a2], with exact membership tests.

    case_tag enumerates the six sign/size cases of (a1, a2); `imaginary`
    distinguishes the two pictures of case 6 (it never affects membership).
    Vertices are a subset of O, A, B, C, D1, D2 with

        O = (0,0),  A = (-a1 + b*a2, -a2),  B = (-a1, -a2),
        C = (-a1, -a2 + c*a1),
        D1 = (-a1 + b*a2, c*a1 - (b*c + 1)*a2),
        D2 = (b*a2 - (b*c + 1)*a1, -a2 + c*a1).
    """

    params: ClusterParams
    a1: int
    a2: int
    case_tag: int
    imaginary: bool
    vertices: dict = field(compare=False)

    def contains(self, point) -> bool:
        m1, m2 = _vec(point)
        a1, a2 = self.a1, self.a2
        b, c = self.params.b, self.params.c
        tag = self.case_tag
        if tag == 1:
            return (m1, m2) == (-a1, -a2)
        if tag == 2:
            return m2 == -a2 and -a1 <= m1 <= -a1 + b * a2
        if tag == 3:
            return m1 == -a1 and -a2 <= m2 <= -a2 + c * a1
        if tag == 4:
            return -a1 <= m1 <= -a1 + b * a2 and -a2 <= m2 <= -a2 - c * m1
        if tag == 5:
            return -a2 <= m2 <= -a2 + c * a1 and -a1 <= m1 <= -a1 - b * m2
        # case 6: two half-open wedges plus the isolated corners A and C.
        if (m1, m2) in ((-a1 + b * a2, -a2), (-a1, -a2 + c * a1)):
            return True
        if -a1 <= m1 < 0 and -a2 <= m2 and a1 * m2 < (a2 - c * a1) * m1:
            return True
        if -a2 <= m2 < 0 and -a1 <= m1 and a2 * m1 < (a1 - b * a2) * m2:
            return True
        return False

    def hull_vertices(self) -> list[LatticeVector]:
        """Vertices of a convex polygon containing the region."""
        order = {1: "B", 2: "BA", 3: "BC", 4: "BADC", 5: "BADC", 6: "BAOC"}[self.case_tag]
        return [self.vertices[name] for name in order]


def support_region(params: ClusterParams, d) -> SupportRegion:
    a1, a2 = _vec(d)
    b, c = params.b, params.c
    O = LatticeVector(0, 0)
    A = LatticeVector(-a1 + b * a2, -a2)
    B = LatticeVector(-a1, -a2)
    C = LatticeVector(-a1, -a2 + c * a1)
    D1 = LatticeVector(-a1 + b * a2, c * a1 - (b * c + 1) * a2)
    D2 = LatticeVector(b * a2 - (b * c + 1) * a1, -a2 + c * a1)
    if a1 <= 0 and a2 <= 0:
        tag, verts = 1, {"O": O, "B": B}
    elif a1 <= 0 < a2:
        tag, verts = 2, {"O": O, "A": A, "B": B}
    elif a2 <= 0 < a1:
        tag, verts = 3, {"O": O, "B": B, "C": C}
    elif 0 < b * a2 <= a1:
        tag, verts = 4, {"O": O, "A": A, "B": B, "C": C, "D": D1}
    elif 0 < c * a1 <= a2:
        tag, verts = 5, {"O": O, "A": A, "B": B, "C": C, "D": D2}
    else:
        tag, verts = 6, {"O": O, "A": A, "B": B, "C": C}
    # Sign of the Tits-style quadratic form; only used to pick the case-6
    # picture, never for membership.
    imaginary = tag == 6 and c * a1 * a1 - b * c * a1 * a2 + b * a2 * a2 <= 0
    return SupportRegion(params=params, a1=a1, a2=a2, case_tag=tag, imaginary=imaginary, vertices=verts)


def region_contains(region: SupportRegion, point) -> bool:
    return region.contains(point)


def greedy_coefficients(params: ClusterParams, d) -> dict[tuple[int, int], int]:
    """The pointed coefficients c(p1,p2) of x[a1,a2], nonzero entries only."""
    a1, a2 = _vec(d)
    b, c = params.b, params.c
    region = support_region(params, (a1, a2))
    P1, P2 = max(0, a2), max(0, a1)
    coeffs: dict[tuple[int, int], int] = {(0, 0): 1}

    def raw(p1: int, p2: int) -> int:
        s1 = 0
        for k in range(1, p1 + 1):
            ck = coeffs.get((p1 - k, p2), 0)
            if ck:
                s1 += (-1) ** (k - 1) * ck * gen_binomial(a2 - c * p2 + k - 1, k)
        s2 = 0
        for j in range(1, p2 + 1):
            cj = coeffs.get((p1, p2 - j), 0)
            if cj:
                s2 += (-1) ** (j - 1) * cj * gen_binomial(a1 - b * p1 + j - 1, j)
        return max(s1, s2)

    # One extra row and column beyond the support rectangle double as the
    # zero-margin check.
    for p1 in range(P1 + 2):
        for p2 in range(P2 + 2):
            if (p1, p2) == (0, 0):
                continue
            val = raw(p1, p2)
            point = LatticeVector(-a1 + b * p1, -a2 + c * p2)
            if region.contains(point):
                if val < 0:
                    raise InvariantViolationError(
                        f"greedy recursion went negative inside R at {(p1, p2)} for "
                        f"(b,c)=({b},{c}), (a1,a2)=({a1},{a2})"
                    )
                if val:
                    coeffs[(p1, p2)] = val
            elif val > 0:
                raise InvariantViolationError(
                    f"greedy recursion leaked a positive value outside R at {(p1, p2)} "
                    f"for (b,c)=({b},{c}), (a1,a2)=({a1},{a2})"
                )
    return coeffs


@dataclass(frozen=True)
class GreedyElement:
    params: ClusterParams
    d: LatticeVector
    coeffs: dict = field(compare=False)
    poly: LaurentPoly = field(compare=True)


def greedy_element(params: ClusterParams, d) -> GreedyElement:
    """The greedy element x[a1,a2], assembled from its pointed coefficients."""
    a1, a2 = _vec(d)
    coeffs = greedy_coefficients(params, (a1, a2))
    terms = {
        LatticeVector(-a1 + params.b * p1, -a2 + params.c * p2): val
        for (p1, p2), val in coeffs.items()
    }
    poly = LaurentPoly(terms)
    region = support_region(params, (a1, a2))
    for m in poly.support():
        if not region.contains(m):
            raise InvariantViolationError(f"greedy support escapes R for (a1,a2)=({a1},{a2})")
    return GreedyElement(params=params, d=LatticeVector(a1, a2), coeffs=coeffs, poly=poly)


def certify_pointed_support(params: ClusterParams, d, p: LaurentPoly) -> bool:
    """Certificate that p is pointed at (a1,a2) with support inside R_{a1,a2}.

    For elements of A(b,c) this certificate pins p down as x[a1,a2]; only
    the certificate itself is checked here.
    """
    a1, a2 = _vec(d)
    if p.coeff((-a1, -a2)) != 1:
        return False
    region = support_region(params, (a1, a2))
    return all(region.contains(m) for m in p.support())


def d_vector_of(p: LaurentPoly) -> LatticeVector:
    """The d-vector of a pointed element: minus the coordinatewise support minimum."""
    if not p:
        raise ValueError("the zero polynomial has no d-vector")
    lo1, _, lo2, _ = p.exponent_box()
    return LatticeVector(-lo1, -lo2)


def order_budget(params: ClusterParams, d) -> int:
    """Truncation order sufficient for theta computations pointed at (a1,a2).

    All support of x[a1,a2] lies in the convex hull of the region vertices,
    so the (m1+m2)-spread of that hull above the base corner B bounds the
    bend budget of any contributing broken line.
    """
    region = support_region(params, d)
    verts = region.hull_vertices()
    base = verts[0]  # B
    return max(v.m1 + v.m2 for v in verts) - (base.m1 + base.m2)
