"""rank2bases: exact computation of both canonical bases of the rank-2
cluster algebra A(b,c) (the greedy basis via the coefficient recursion and
the theta basis via scattering diagrams and broken lines), plus machinery
to verify that they coincide instance by instance."""

__version__ = "0.1.0"

from .cluster import ClusterParams, cluster_monomial, cluster_variable, is_positive
from .greedy import (
    GreedyElement,
    SupportRegion,
    certify_pointed_support,
    greedy_coefficients,
    greedy_element,
    region_contains,
    support_region,
)
from .laurent import (
    DegreeFunctional,
    LatticeVector,
    LaurentPoly,
    apply_linear,
    ell_truncate,
    exact_div,
    gen_binomial,
)
from .scattering import (
    ConeSpec,
    ScatteringDiagram,
    Wall,
    complete,
    completed_diagram,
    initial_diagram_d,
    initial_diagram_g,
    irrational_cone,
    loop_defect,
    path_ordered_product,
    s_recipe_walls,
    transport_T,
    wall_cross,
)
from .brokenlines import (
    BrokenLine,
    Segment,
    angular_momentum,
    enumerate_broken_lines,
    pick_generic_endpoint,
    theta,
    theta_d,
    transport_broken_line,
)
from .verify import ComparisonReport, Viewport, compare, compare_grid, render_svg

__all__ = [name for name in dir() if not name.startswith("_")]
