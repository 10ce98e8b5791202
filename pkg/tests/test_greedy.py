import pytest

from rank2bases.cluster import ClusterParams, cluster_variable
from rank2bases.greedy import (
    certify_pointed_support,
    d_vector_of,
    greedy_coefficients,
    greedy_element,
    order_budget,
    region_contains,
    support_region,
)
from rank2bases.laurent import LatticeVector, LaurentPoly

P11 = ClusterParams(1, 1)
P21 = ClusterParams(2, 1)
P22 = ClusterParams(2, 2)
P32 = ClusterParams(3, 2)


class TestCoefficients:
    def test_cluster_monomial_corner(self):
        for params in (P11, P22, P32):
            assert greedy_coefficients(params, (-2, -3)) == {(0, 0): 1}

    def test_b1c1_d11(self):
        # x[1,1] = (x1 + x2 + 1) / (x1 x2); the recursion kills c(1,1).
        assert greedy_coefficients(P11, (1, 1)) == {(0, 0): 1, (1, 0): 1, (0, 1): 1}
        assert greedy_element(P11, (1, 1)).poly == LaurentPoly(
            {(-1, -1): 1, (0, -1): 1, (-1, 0): 1}
        )

    def test_b2c2_d11(self):
        assert greedy_coefficients(P22, (1, 1)) == {(0, 0): 1, (1, 0): 1, (0, 1): 1}
        assert greedy_element(P22, (1, 1)).poly == LaurentPoly(
            {(-1, -1): 1, (1, -1): 1, (-1, 1): 1}
        )

    def test_kronecker_d22(self):
        # Equals the squared-minus-two element; support skips the middle.
        elem = greedy_element(P22, (2, 2))
        assert elem.poly == LaurentPoly(
            {(2, -2): 1, (-2, 2): 1, (-2, -2): 1, (0, -2): 2, (-2, 0): 2}
        )

    def test_kronecker_bracelets(self):
        # x[n,n] for b=c=2 follows the Chebyshev-style product recursion
        # z_{n+1} = z_1 * z_n - z_{n-1} with z_0 = 2.
        z = [LaurentPoly.monomial((0, 0), 2)]
        z.append(greedy_element(P22, (1, 1)).poly)
        for n in range(2, 6):
            z.append(z[1] * z[n - 1] - z[n - 2])
            assert greedy_element(P22, (n, n)).poly == z[n], n

    def test_singleton_negative(self):
        assert greedy_element(P21, (-1, 0)).poly == LaurentPoly.variable(1)
        assert greedy_element(P21, (0, -2)).poly == LaurentPoly.variable(2) ** 2

    def test_one_sided(self):
        # x[1,0] = x1^-1 (1 + x2^c) agrees with the cluster recursion (it is x_3).
        elem = greedy_element(P21, (1, 0))
        assert elem.coeffs == {(0, 0): 1, (0, 1): 1}
        assert elem.poly == cluster_variable(P21, 3)


class TestAgainstClusterMonomials:
    @staticmethod
    def monomial_for_d_vector_b1c1(a1, a2):
        # For b = c = 1 the variables repeat with period 5 and their
        # d-vectors tile the plane: x1 (-1,0), x2 (0,-1), x3 (1,0),
        # x4 (1,1), x5 (0,1).
        def xk(k):
            return cluster_variable(P11, k)

        if a1 <= 0 and a2 <= 0:
            return xk(1) ** (-a1) * xk(2) ** (-a2)
        if a1 >= 0 and a2 <= 0:
            return xk(2) ** (-a2) * xk(3) ** a1
        if a1 >= a2 >= 0:
            return xk(3) ** (a1 - a2) * xk(4) ** a2
        if 0 <= a1 <= a2:
            return xk(4) ** a1 * xk(5) ** (a2 - a1)
        return xk(5) ** a2 * xk(1) ** (-a1)

    def test_b1c1_grid(self):
        for a1 in range(-3, 4):
            for a2 in range(-3, 4):
                expected = self.monomial_for_d_vector_b1c1(a1, a2)
                assert greedy_element(P11, (a1, a2)).poly == expected, (a1, a2)

    def test_monomial_d_vectors_all_params(self):
        for params in (P11, P21, ClusterParams(1, 2), ClusterParams(3, 1), P22, P32):
            for k in range(0, 4):
                for p, q in [(1, 0), (0, 1), (2, 0), (1, 1), (2, 1), (1, 2)]:
                    mono = cluster_variable(params, k) ** p * cluster_variable(params, k + 1) ** q
                    d = d_vector_of(mono)
                    assert greedy_element(params, d).poly == mono, (params, k, p, q)


class TestInvariants:
    def test_nonnegativity(self):
        for params in (P11, P21, P22, P32):
            for a1 in range(-2, 4):
                for a2 in range(-2, 4):
                    coeffs = greedy_coefficients(params, (a1, a2))
                    assert all(v > 0 for v in coeffs.values())

    def test_recursion_recomputed_independently(self):
        # Re-derive both alternating sums from the stored table and check
        # the stored value is their max where the support region allows a
        # term, and dominates them (by zero) where it does not.
        from rank2bases.laurent import gen_binomial

        for params, d in [(P22, (2, 2)), (P32, (2, 3)), (P21, (3, 2)), (P11, (3, 3))]:
            a1, a2 = d
            b, c = params.b, params.c
            coeffs = greedy_coefficients(params, d)
            region = support_region(params, d)
            for p1 in range(0, max(0, a2) + 1):
                for p2 in range(0, max(0, a1) + 1):
                    if (p1, p2) == (0, 0):
                        assert coeffs[(0, 0)] == 1
                        continue
                    s1 = sum(
                        (-1) ** (k - 1)
                        * coeffs.get((p1 - k, p2), 0)
                        * gen_binomial(a2 - c * p2 + k - 1, k)
                        for k in range(1, p1 + 1)
                    )
                    s2 = sum(
                        (-1) ** (j - 1)
                        * coeffs.get((p1, p2 - j), 0)
                        * gen_binomial(a1 - b * p1 + j - 1, j)
                        for j in range(1, p2 + 1)
                    )
                    stored = coeffs.get((p1, p2), 0)
                    assert stored >= s1 and stored >= s2
                    if region.contains((-a1 + b * p1, -a2 + c * p2)):
                        assert stored == max(s1, s2)
                    else:
                        assert stored == 0 and max(s1, s2) <= 0

    def test_reflection_symmetry(self):
        for b, c in [(2, 1), (3, 2), (2, 2)]:
            pa, pb = ClusterParams(b, c), ClusterParams(c, b)
            for a1 in range(-2, 4):
                for a2 in range(-2, 4):
                    ca = greedy_coefficients(pa, (a1, a2))
                    cb = greedy_coefficients(pb, (a2, a1))
                    assert {(p2, p1): v for (p1, p2), v in ca.items()} == cb

    def test_support_containment(self):
        for params in (P21, P22, P32):
            for a1 in range(-2, 4):
                for a2 in range(-2, 4):
                    elem = greedy_element(params, (a1, a2))
                    region = support_region(params, (a1, a2))
                    assert all(region.contains(m) for m in elem.poly.support())


class TestSupportRegion:
    def test_case1(self):
        region = support_region(P22, (-1, -1))
        assert region.case_tag == 1
        assert region.contains((1, 1))
        assert not region.contains((0, 0))

    def test_case2_segment(self):
        region = support_region(P21, (-1, 2))
        assert region.case_tag == 2
        for p1 in range(1, 6):
            assert region.contains((p1, -2))
        assert not region.contains((0, -2))
        assert not region.contains((6, -2))
        assert not region.contains((3, -1))

    def test_case3_segment(self):
        region = support_region(P21, (2, -1))
        assert region.case_tag == 3
        for p2 in range(1, 4):
            assert region.contains((-2, p2))
        assert not region.contains((-2, 0))
        assert not region.contains((-2, 4))

    def test_cases_4_and_5(self):
        assert support_region(P22, (2, 1)).case_tag == 4
        assert support_region(P22, (1, 2)).case_tag == 5
        region = support_region(P22, (2, 1))
        assert region.contains((-2, -1)) and region.contains((0, -1))
        assert region.contains((-2, 3))
        assert not region.contains((0, 1))

    def test_case6_membership(self):
        region = support_region(P22, (1, 1))
        assert region.case_tag == 6
        assert region.imaginary  # the null direction for b*c = 4
        assert region.contains((-1, -1))  # B
        assert region.contains((1, -1))  # isolated corner A
        assert region.contains((-1, 1))  # isolated corner C
        assert not region.contains((2, -2))
        assert not region.contains((0, 0))

    def test_case6_real_root(self):
        region = support_region(ClusterParams(3, 1), (2, 1))
        assert region.case_tag == 6
        assert not region.imaginary

    def test_b_corner_always_inside(self):
        for params in (P11, P22, P32):
            for a1 in range(-3, 4):
                for a2 in range(-3, 4):
                    region = support_region(params, (a1, a2))
                    assert region_contains(region, (-a1, -a2))

    def test_order_budget_examples(self):
        assert order_budget(P22, (-1, -1)) == 0
        assert order_budget(P21, (-1, 2)) == 4  # segment of width b*a2 = 4
        assert order_budget(P32, (3, 3)) == 9


class TestCertificate:
    def test_self_certification(self):
        for params in (P21, P22):
            for d in [(1, 1), (2, 2), (-1, 3), (3, 0)]:
                elem = greedy_element(params, d)
                assert certify_pointed_support(params, d, elem.poly)


def test_far_monomial_breaks_certificate():
    elem = greedy_element(P22, (1, 1))
    spoiled = elem.poly + LaurentPoly.monomial((10, 10))
    assert not certify_pointed_support(P22, (1, 1), spoiled)
    wrong_unit = elem.poly + LaurentPoly.monomial((-1, -1))
    assert not certify_pointed_support(P22, (1, 1), wrong_unit)


def test_d_vector_of():
    assert d_vector_of(LaurentPoly({(-2, 3): 1, (0, -1): 2})) == LatticeVector(2, 1)
    with pytest.raises(ValueError):
        d_vector_of(LaurentPoly.zero())
