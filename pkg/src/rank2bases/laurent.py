"""Exact sparse Laurent-polynomial arithmetic in two variables over Z.

Everything here is exact integer arithmetic: coefficients are Python ints
(arbitrary precision), exponents live in the lattice Z^2.  Polynomials are
immutable; all operations return fresh values, so they are safe to share
across threads.
"""

from __future__ import annotations

import math
from typing import Iterable, Iterator, Mapping, NamedTuple

from .errors import NotDivisibleError


class LatticeVector(NamedTuple):
    """A point of the exponent lattice M = Z^2."""

    m1: int
    m2: int

    def __add__(self, other) -> "LatticeVector":
        return LatticeVector(self.m1 + other[0], self.m2 + other[1])

    def __sub__(self, other) -> "LatticeVector":
        return LatticeVector(self.m1 - other[0], self.m2 - other[1])

    def __neg__(self) -> "LatticeVector":
        return LatticeVector(-self.m1, -self.m2)

    def scale(self, k: int) -> "LatticeVector":
        return LatticeVector(k * self.m1, k * self.m2)

    def dot(self, other) -> int:
        """Pairing with a dual vector (n1, n2)."""
        return self.m1 * other[0] + self.m2 * other[1]

    def cross(self, other) -> int:
        """Determinant det[self, other]; sign gives the orientation."""
        return self.m1 * other[1] - self.m2 * other[0]

    def is_primitive(self) -> bool:
        return (self.m1, self.m2) != (0, 0) and math.gcd(self.m1, self.m2) == 1

    def primitive_part(self) -> "LatticeVector":
        """The primitive vector on the same ray; undefined for zero."""
        if (self.m1, self.m2) == (0, 0):
            raise ValueError("the zero vector has no primitive part")
        g = math.gcd(self.m1, self.m2)
        return LatticeVector(self.m1 // g, self.m2 // g)


class DegreeFunctional(NamedTuple):
    """A linear form ell(m) = n1*m1 + n2*m2 used to grade a cone."""

    n1: int
    n2: int

    def __call__(self, m) -> int:
        return self.n1 * m[0] + self.n2 * m[1]


def _as_vec(m) -> LatticeVector:
    if isinstance(m, LatticeVector):
        return m
    return LatticeVector(int(m[0]), int(m[1]))


class LaurentPoly:
    """An element of Z[x1^{+-1}, x2^{+-1}] stored as a sparse exponent map.

    Zero coefficients are never stored.  The canonical term order used for
    printing and serialization is: x1-exponent ascending, then x2-exponent
    descending (this matches the documented text form, e.g.
    ``x1^-1*x2 + x1^-1*x2^-1 + x1*x2^-1``).
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping | Iterable | None = None):
        data: dict[LatticeVector, int] = {}
        if terms:
            items = terms.items() if isinstance(terms, Mapping) else terms
            for m, coeff in items:
                coeff = int(coeff)
                if coeff == 0:
                    continue
                key = _as_vec(m)
                new = data.get(key, 0) + coeff
                if new:
                    data[key] = new
                else:
                    data.pop(key, None)
        self._terms = data

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls) -> "LaurentPoly":
        return cls()

    @classmethod
    def one(cls) -> "LaurentPoly":
        return cls.monomial((0, 0))

    @classmethod
    def monomial(cls, m, coeff: int = 1) -> "LaurentPoly":
        p = cls()
        if coeff:
            p._terms[_as_vec(m)] = int(coeff)
        return p

    @classmethod
    def variable(cls, index: int) -> "LaurentPoly":
        if index == 1:
            return cls.monomial((1, 0))
        if index == 2:
            return cls.monomial((0, 1))
        raise ValueError("only variables x1 and x2 exist")

    # -- basic queries -------------------------------------------------

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LaurentPoly.monomial((0, 0), other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def coeff(self, m) -> int:
        return self._terms.get(_as_vec(m), 0)

    def support(self) -> set[LatticeVector]:
        return set(self._terms)

    def terms(self) -> Iterator[tuple[LatticeVector, int]]:
        """Terms in the canonical order (m1 ascending, m2 descending)."""
        for m in sorted(self._terms, key=lambda v: (v.m1, -v.m2)):
            yield m, self._terms[m]

    def items(self):
        return self._terms.items()

    def exponent_box(self) -> tuple[int, int, int, int]:
        """(min m1, max m1, min m2, max m2) over the support; requires nonzero."""
        if not self._terms:
            raise ValueError("the zero polynomial has no exponent box")
        m1s = [m.m1 for m in self._terms]
        m2s = [m.m2 for m in self._terms]
        return min(m1s), max(m1s), min(m2s), max(m2s)

    def is_positive(self) -> bool:
        return all(c > 0 for c in self._terms.values())

    # -- arithmetic ----------------------------------------------------

    def __add__(self, other) -> "LaurentPoly":
        if isinstance(other, int):
            other = LaurentPoly.monomial((0, 0), other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        out = dict(self._terms)
        for m, c in other._terms.items():
            new = out.get(m, 0) + c
            if new:
                out[m] = new
            else:
                out.pop(m, None)
        res = LaurentPoly()
        res._terms = out
        return res

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        res = LaurentPoly()
        res._terms = {m: -c for m, c in self._terms.items()}
        return res

    def __sub__(self, other) -> "LaurentPoly":
        if isinstance(other, int):
            other = LaurentPoly.monomial((0, 0), other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "LaurentPoly":
        return (-self) + other

    def __mul__(self, other) -> "LaurentPoly":
        if isinstance(other, int):
            if other == 0:
                return LaurentPoly.zero()
            res = LaurentPoly()
            res._terms = {m: other * c for m, c in self._terms.items()}
            return res
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        out: dict[LatticeVector, int] = {}
        for ma, ca in self._terms.items():
            for mb, cb in other._terms.items():
                key = LatticeVector(ma.m1 + mb.m1, ma.m2 + mb.m2)
                new = out.get(key, 0) + ca * cb
                if new:
                    out[key] = new
                else:
                    out.pop(key, None)
        res = LaurentPoly()
        res._terms = out
        return res

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LaurentPoly":
        """p**n for n >= 0, by repeated squaring; p**0 == 1."""
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            raise ValueError("negative powers are not defined for LaurentPoly")
        result = LaurentPoly.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    # -- rendering -----------------------------------------------------

    @staticmethod
    def _factor_str(name: str, exp: int) -> str:
        if exp == 0:
            return ""
        if exp == 1:
            return name
        return f"{name}^{exp}"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for m, c in self.terms():
            factors = [s for s in (self._factor_str("x1", m.m1), self._factor_str("x2", m.m2)) if s]
            if not factors:
                parts.append(str(c))
                continue
            body = "*".join(factors)
            if c == 1:
                parts.append(body)
            elif c == -1:
                parts.append(f"-{body}")
            else:
                parts.append(f"{c}*{body}")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"LaurentPoly('{self}')"

    def to_triples(self) -> list[list]:
        """JSON form: [m1, m2, coeff-as-decimal-string] in canonical order."""
        return [[m.m1, m.m2, str(c)] for m, c in self.terms()]

    @classmethod
    def from_triples(cls, triples) -> "LaurentPoly":
        return cls({(int(t[0]), int(t[1])): int(t[2]) for t in triples})


def gen_binomial(n: int, k: int) -> int:
    """Generalized binomial n(n-1)...(n-k+1)/k! for any integer n, k >= 0."""
    if k < 0:
        raise ValueError("lower index must be nonnegative")
    if k == 0:
        return 1
    num = 1
    for i in range(k):
        num *= n - i
    # The falling factorial of an integer is always divisible by k!.
    return num // math.factorial(k)


def _lex_leading(p: LaurentPoly) -> tuple[LatticeVector, int]:
    m = max(p._terms, key=lambda v: (v.m1, v.m2))
    return m, p._terms[m]


def exact_div(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    """Exact quotient p/q in Z[x1^{+-1}, x2^{+-1}].

    Raises NotDivisibleError when q does not divide p exactly.  Termination
    is guaranteed by the Newton-polytope bound: the quotient's exponents are
    confined to the coordinatewise difference of the exponent boxes of p
    and q, so only finitely many quotient terms can ever be emitted.
    """
    if not q:
        raise ZeroDivisionError("division by the zero polynomial")
    if not p:
        return LaurentPoly.zero()
    pmin1, pmax1, pmin2, pmax2 = p.exponent_box()
    qmin1, qmax1, qmin2, qmax2 = q.exponent_box()
    lo1, hi1 = pmin1 - qmin1, pmax1 - qmax1
    lo2, hi2 = pmin2 - qmin2, pmax2 - qmax2
    if lo1 > hi1 or lo2 > hi2:
        raise NotDivisibleError(f"({p}) is not divisible by ({q})")
    qm, qc = _lex_leading(q)
    quotient: dict[LatticeVector, int] = {}
    rem = p
    while rem:
        rm, rc = _lex_leading(rem)
        e = LatticeVector(rm.m1 - qm.m1, rm.m2 - qm.m2)
        if not (lo1 <= e.m1 <= hi1 and lo2 <= e.m2 <= hi2) or rc % qc != 0:
            raise NotDivisibleError(f"({p}) is not divisible by ({q})")
        c = rc // qc
        quotient[e] = c
        rem = rem - LaurentPoly.monomial(e, c) * q
    return LaurentPoly(quotient)


def ell_truncate(p: LaurentPoly, base, ell: DegreeFunctional, k: int) -> LaurentPoly:
    """Drop every term x^m with ell(m - base) > k; all others are kept."""
    base = _as_vec(base)
    out = {m: c for m, c in p.items() if ell(m - base) <= k}
    res = LaurentPoly()
    res._terms = out
    return res


def apply_linear(p: LaurentPoly, mat) -> LaurentPoly:
    """Remap exponents m -> M.m for a 2x2 integer matrix M = ((a, b), (c, d)).

    Coefficients are unchanged.  If M is not injective on the support,
    colliding terms are summed.
    """
    (a, b), (c, d) = mat
    out: dict[LatticeVector, int] = {}
    for m, coeff in p.items():
        key = LatticeVector(a * m.m1 + b * m.m2, c * m.m1 + d * m.m2)
        new = out.get(key, 0) + coeff
        if new:
            out[key] = new
        else:
            out.pop(key, None)
    res = LaurentPoly()
    res._terms = out
    return res
