import random
from fractions import Fraction

import pytest

from rank2bases.brokenlines import (
    angular_momentum,
    enumerate_broken_lines,
    generic_endpoint_for,
    is_generic_endpoint,
    pick_generic_endpoint,
    theta,
    theta_d,
    transport_broken_line,
    validate_broken_line,
)
from rank2bases.cluster import ClusterParams, cluster_variable
from rank2bases.errors import NonGenericEndpointError
from rank2bases.greedy import greedy_element, order_budget
from rank2bases.laurent import LatticeVector, LaurentPoly
from rank2bases.scattering import completed_diagram, path_ordered_product

P11 = ClusterParams(1, 1)
P21 = ClusterParams(2, 1)
P22 = ClusterParams(2, 2)
P32 = ClusterParams(3, 2)

Q0 = (Fraction(3, 2), Fraction(1))


class TestWorkedExample:
    def test_three_lines(self):
        diagram = completed_diagram(P22, 8, "g")
        lines = enumerate_broken_lines(diagram, (1, -1), Q0, 6)
        assert len(lines) == 3
        finals = sorted((tuple(l.final_exponent), l.final_coeff) for l in lines)
        assert finals == [((-1, -1), 1), ((-1, 1), 1), ((1, -1), 1)]
        for line in lines:
            validate_broken_line(line, diagram, m=(1, -1))

    def test_bend_points(self):
        diagram = completed_diagram(P22, 8, "g")
        lines = enumerate_broken_lines(diagram, (1, -1), Q0, 6)
        by_final = {tuple(l.final_exponent): l for l in lines}
        straight = by_final[(1, -1)]
        assert len(straight.segments) == 1
        one_bend = by_final[(-1, -1)]
        assert [s.bend_point for s in one_bend.segments[1:]] == [(Fraction(1, 2), 0)]
        two_bends = by_final[(-1, 1)]
        assert [s.bend_point for s in two_bends.segments[1:]] == [
            (Fraction(-5, 2), 0),
            (0, Fraction(5, 2)),
        ]

    def test_theta_value(self):
        diagram = completed_diagram(P22, 8, "g")
        assert theta(diagram, (1, -1), Q0, 6) == LaurentPoly(
            {(1, -1): 1, (-1, -1): 1, (-1, 1): 1}
        )

    def test_second_example(self):
        diagram = completed_diagram(P22, 10, "g")
        q = generic_endpoint_for(diagram, (2, -2), 10)
        th2 = theta(diagram, (2, -2), q, 10)
        assert th2 == LaurentPoly({(2, -2): 1, (-2, 2): 1, (-2, -2): 1, (0, -2): 2, (-2, 0): 2})
        th1 = theta(diagram, (1, -1), Q0, 6)
        assert th1 ** 2 - 2 == th2


class TestEndpoints:
    def test_hint_kept_when_generic(self):
        diagram = completed_diagram(P22, 8, "g")
        assert pick_generic_endpoint(diagram, Q0) == Q0

    def test_on_axis_perturbed(self):
        diagram = completed_diagram(P22, 8, "g")
        q = pick_generic_endpoint(diagram, (Fraction(2), Fraction(0)))
        assert is_generic_endpoint(diagram, q)
        assert q != (2, 0)  # moved off the horizontal support

    def test_avoid_directions(self):
        diagram = completed_diagram(P22, 8, "d")
        q = generic_endpoint_for(diagram, (-3, -2), 8)
        assert q != Q0  # (3/2, 1) is radially aligned with (-3, -2)

    def test_nongeneric_endpoint_rejected(self):
        diagram = completed_diagram(P22, 8, "g")
        with pytest.raises(NonGenericEndpointError):
            enumerate_broken_lines(diagram, (1, -1), (Fraction(1), Fraction(0)), 4)

    def test_radial_degeneracy_detected(self):
        diagram = completed_diagram(P22, 8, "g")
        with pytest.raises(NonGenericEndpointError):
            enumerate_broken_lines(diagram, (2, -2), Q0, 8)

    def test_zero_exponent_rejected(self):
        diagram = completed_diagram(P22, 8, "g")
        with pytest.raises(ValueError):
            enumerate_broken_lines(diagram, (0, 0), Q0, 4)


class TestThetaD:
    def test_monomial_when_in_chamber(self):
        # m inside the endpoint's chamber: single unbent line.
        for m in [(1, 0), (2, 3), (1, 1)]:
            assert theta_d(P22, m) == LaurentPoly.monomial(m)
        diagram = completed_diagram(P22, 6, "g")
        assert theta(diagram, (2, 1), Q0, 6) == LaurentPoly.monomial((2, 1))

    def test_unit_convention(self):
        assert theta_d(P22, (0, 0)) == LaurentPoly.one()

    def test_cluster_variable_case(self):
        # Initial exponent (-1, 0): one bend at the vertical wall gives the
        # variable x1^-1 (1 + x2), i.e. the greedy element x[1,0].
        assert theta_d(P21, (-1, 0)) == cluster_variable(P21, 3)

    def test_kronecker_imaginary(self):
        assert theta_d(P22, (-1, -1)) == greedy_element(P22, (1, 1)).poly
        assert theta_d(P22, (-2, -2)) == greedy_element(P22, (2, 2)).poly

    def test_pointedness(self):
        for params in (P21, P22, P32):
            for m in [(-1, -1), (-2, -1), (-3, -2), (1, -2), (-2, 2)]:
                th = theta_d(params, m)
                assert th.coeff(m) == 1
                for mm in th.support():
                    assert mm.m1 >= m[0] and mm.m2 >= m[1]

    def test_order_stability(self):
        base = order_budget(P32, (2, 2))
        assert theta_d(P32, (-2, -2), base) == theta_d(P32, (-2, -2), base + 3)


class TestLineInvariants:
    def _all_lines(self, params, m, order):
        diagram = completed_diagram(params, max(order, 1), "d")
        q = generic_endpoint_for(diagram, m, order)
        return diagram, enumerate_broken_lines(diagram, m, q, order)

    def test_angular_momentum_constant(self):
        for params, m in [(P22, (-2, -2)), (P32, (-2, -3)), (P21, (-3, -1))]:
            order = order_budget(params, (-m[0], -m[1]))
            diagram, lines = self._all_lines(params, m, order)
            for line in lines:
                angular_momentum(line)  # raises on violation
                validate_broken_line(line, diagram, m=m)

    def test_unbent_momentum_value(self):
        diagram = completed_diagram(P22, 6, "g")
        q = (Fraction(2), Fraction(1))
        lines = enumerate_broken_lines(diagram, (1, -1), q, 0)
        assert len(lines) == 1
        assert angular_momentum(lines[0]) == 3

    def test_momentum_sign_vs_quadrant(self):
        # Positive momentum lines pass through the fourth quadrant, negative
        # through the second.
        _, lines = self._all_lines(P22, (-2, -2), order_budget(P22, (2, 2)))
        for line in lines:
            mom = angular_momentum(line)
            pts = [s.bend_point for s in line.segments[1:]]
            if any(p[0] > 0 and p[1] < 0 for p in pts):
                assert mom > 0
            if any(p[0] < 0 and p[1] > 0 for p in pts):
                assert mom < 0

    def test_exponent_monotonicity_d_variant(self):
        for params, m in [(P22, (-2, -2)), (P32, (-3, -3)), (P11, (-3, -2))]:
            order = order_budget(params, (-m[0], -m[1]))
            _, lines = self._all_lines(params, m, order)
            assert lines
            for line in lines:
                for a, b in zip(line.segments, line.segments[1:]):
                    assert a.exponent.m1 <= b.exponent.m1
                    assert a.exponent.m2 <= b.exponent.m2

    def test_slope_monotonicity_at_interior_bends(self):
        # Away from the axes, slopes strictly decrease along positive-
        # momentum lines and strictly increase along negative-momentum ones;
        # the exponents at such bends are componentwise negative.
        for params, m in [(P22, (-2, -2)), (P32, (-3, -3)), (P21, (-3, -2))]:
            order = order_budget(params, (-m[0], -m[1]))
            _, lines = self._all_lines(params, m, order)
            for line in lines:
                mom = angular_momentum(line)
                for s, t in zip(line.segments, line.segments[1:]):
                    pt = t.bend_point
                    if pt[0] == 0 or pt[1] == 0:
                        continue  # boundary of the first quadrant is exempt
                    assert s.exponent.m1 < 0 and s.exponent.m2 < 0
                    assert t.exponent.m1 < 0 and t.exponent.m2 < 0
                    before = Fraction(s.exponent.m2, s.exponent.m1)
                    after = Fraction(t.exponent.m2, t.exponent.m1)
                    if mom > 0:
                        assert after < before
                    else:
                        assert after > before

    def test_final_exponent_bounds(self):
        # Lines from the third quadrant: the final exponent obeys the
        # momentum-signed bounds that confine theta supports.
        for params, m in [(P22, (-2, -2)), (P32, (-2, -3)), (P21, (-3, -2))]:
            b, c = params.b, params.c
            order = order_budget(params, (-m[0], -m[1]))
            _, lines = self._all_lines(params, m, order)
            m1, m2 = m
            for line in lines:
                mq1, mq2 = line.final_exponent
                mom = angular_momentum(line)
                assert mom != 0
                if mom > 0:
                    assert m2 <= mq2 < 0
                    assert m1 <= mq1
                    assert Fraction(mq1) <= (Fraction(m1, m2) - b) * mq2
                else:
                    assert m1 <= mq1 < 0
                    assert m2 <= mq2
                    assert Fraction(mq2) <= (Fraction(m2, m1) - c) * mq1

    def test_endpoint_independence(self):
        rng = random.Random(20240817)
        param_pool = [P11, P21, P22, P32, ClusterParams(1, 2), ClusterParams(3, 1)]
        done = 0
        while done < 10:
            params = rng.choice(param_pool)
            m = (rng.randint(-3, 1), rng.randint(-3, 1))
            if m == (0, 0):
                continue
            order = order_budget(params, (-m[0], -m[1]))
            diagram = completed_diagram(params, max(order, 1), "d")
            q1 = generic_endpoint_for(diagram, m, order)
            q2 = generic_endpoint_for(
                diagram, m, order, hint=(Fraction(7, 3) + done, Fraction(5, 4))
            )
            assert q1 != q2
            assert theta(diagram, m, q1, order) == theta(diagram, m, q2, order)
            done += 1

    def test_wall_crossing_covariance(self):
        # Transporting theta across one wall gives theta at the far endpoint.
        diagram = completed_diagram(P21, 8, "d")
        m = LatticeVector(-1, 0)
        qa = generic_endpoint_for(diagram, m, 8)
        qb = (Fraction(-17, 12), Fraction(9, 8))
        ta = theta(diagram, m, qa, 8)
        tb = theta(diagram, m, qb, 8)
        crossed = path_ordered_product(
            diagram, (int(qa[0] * 24), int(qa[1] * 24)), (int(qb[0] * 24), int(qb[1] * 24)),
            "ccw", ta, m,
        )
        assert crossed == tb


class TestTransport:
    def test_unbent_line(self):
        diagram_g = completed_diagram(P22, 6, "g")
        diagram_d = completed_diagram(P22, 6, "d")
        q = (Fraction(5, 2), Fraction(7, 3))
        lines = enumerate_broken_lines(diagram_g, (1, 1), q, 0)
        img = transport_broken_line(lines[0], diagram_g, diagram_d)
        assert len(img.segments) == 1
        assert img.initial_exponent == (1, 1)  # upper half: identity

    def test_worked_example_images(self):
        diagram_g = completed_diagram(P22, 8, "g")
        diagram_d = completed_diagram(P22, 8, "d")
        lines = enumerate_broken_lines(diagram_g, (1, -1), Q0, 6)
        images = [transport_broken_line(l, diagram_g, diagram_d) for l in lines]
        for img in images:
            validate_broken_line(img, diagram_d, m=(-1, -1))
        by_final = {tuple(l.final_exponent): l for l in images}
        # The one-bend line maps to the unbent line of the image diagram.
        assert len(by_final[(-1, -1)].segments) == 1
        # The straight line acquires a bend at the horizontal wall.
        assert len(by_final[(1, -1)].segments) == 2
        assert by_final[(1, -1)].segments[1].bend_wall.direction == (1, 0)

    def test_count_and_monomial_preservation(self):
        # The map does not preserve the degree filtration, so compare full
        # finite line sets: the image exponent starts in the third quadrant,
        # whose support region bounds every line on the image side; on the
        # source side a proportionally larger budget plus a stabilization
        # check guarantees completeness.
        for params, m in [(P22, (2, -2)), (P32, (1, -1)), (P21, (2, -1))]:
            tm = (m[0] + params.b * m[1], m[1])  # image of m, lower half
            kd = order_budget(params, (-tm[0], -tm[1]))
            kg = (params.b + 1) * kd + 3
            diagram_g = completed_diagram(params, kg, "g")
            diagram_d = completed_diagram(params, max(kd, 1), "d")
            q = generic_endpoint_for(diagram_g, m, kg + 2)
            lines = enumerate_broken_lines(diagram_g, m, q, kg)
            assert len(lines) == len(enumerate_broken_lines(diagram_g, m, q, kg + 2))
            images = [transport_broken_line(l, diagram_g, diagram_d) for l in lines]
            for img in images:
                validate_broken_line(img, diagram_d, m=tm)
            qd = generic_endpoint_for(diagram_d, tm, kd)
            direct = enumerate_broken_lines(diagram_d, tm, qd, kd)
            assert len(images) == len(direct), (params, m)
            img_monos = sorted((tuple(l.final_exponent), l.final_coeff) for l in images)
            direct_monos = sorted((tuple(l.final_exponent), l.final_coeff) for l in direct)
            assert img_monos == direct_monos
