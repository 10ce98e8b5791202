"""Cluster variables of the rank-2 cluster algebra A(b,c).

The variables x_k are generated by the exchange recursion

    x_{k-1} * x_{k+1} = x_k^b + 1   (k odd)
    x_{k-1} * x_{k+1} = x_k^c + 1   (k even)

seeded by x_1 = x1, x_2 = x2.  Every x_k is an honest Laurent polynomial
in x1, x2, so each recursion step is an exact division; a division failure
here would mean a bug, never bad input.
"""

from __future__ import annotations

from dataclasses import dataclass

from .laurent import LaurentPoly, exact_div

DEFAULT_MAX_SPREAD = 12


@dataclass(frozen=True)
class ClusterParams:
    """The exchange exponents (b, c), both positive."""

    b: int
    c: int

    def __post_init__(self):
        if self.b < 1 or self.c < 1:
            raise ValueError("b and c must be positive integers")


_cache: dict[tuple[int, int], dict[int, LaurentPoly]] = {}


def clear_cache() -> None:
    _cache.clear()


def _exchange_exponent(params: ClusterParams, k: int) -> int:
    # Exponent of the relation centered at x_k.
    return params.b if k % 2 == 1 else params.c


def cluster_variable(params: ClusterParams, k: int, max_spread: int = DEFAULT_MAX_SPREAD) -> LaurentPoly:
    """The cluster variable x_k as a Laurent polynomial in (x1, x2).

    For bc >= 4 the degrees grow exponentially in |k|, so the window of
    admissible k is capped at |k - 1.5| <= max_spread.
    """
    if params.b * params.c >= 4 and abs(k - 1.5) > max_spread:
        raise ValueError(
            f"x_{k} for bc >= 4 exceeds the window |k - 1.5| <= {max_spread}; "
            "raise max_spread explicitly if you really want it"
        )
    table = _cache.setdefault((params.b, params.c), {})
    if k in table:
        return table[k]
    table.setdefault(1, LaurentPoly.variable(1))
    table.setdefault(2, LaurentPoly.variable(2))
    hi = max(table)
    while hi < k:
        mid = hi  # relation centered at the current top variable
        e = _exchange_exponent(params, mid)
        table[hi + 1] = exact_div(table[mid] ** e + 1, table[mid - 1])
        hi += 1
    lo = min(table)
    while lo > k:
        mid = lo  # relation centered at the current bottom variable
        e = _exchange_exponent(params, mid)
        table[lo - 1] = exact_div(table[mid] ** e + 1, table[mid + 1])
        lo -= 1
    return table[k]


def cluster_monomial(params: ClusterParams, k: int, d1: int, d2: int) -> LaurentPoly:
    """The cluster monomial x_k^{d1} * x_{k+1}^{d2} with d1, d2 >= 0."""
    if d1 < 0 or d2 < 0:
        raise ValueError("cluster monomial exponents must be nonnegative")
    return cluster_variable(params, k) ** d1 * cluster_variable(params, k + 1) ** d2


def is_positive(p: LaurentPoly) -> bool:
    """True iff every stored coefficient is strictly positive."""
    return p.is_positive()
