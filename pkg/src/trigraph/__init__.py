"""Locally linear graphs and their triangle graphs.

A graph is locally linear when every edge lies in exactly one triangle.  Its
triangle graph G* has the triangles as vertices, two of them adjacent when
they share a vertex.  This package builds G*, checks the structural facts
tying the two together, computes exact characteristic polynomials, and
rebuilds G from G*.
"""

__version__ = "0.1.0"

from .errors import TrigraphError
from .graph import (
    Graph,
    are_isomorphic,
    graph_from_edge_list,
    induced_subgraph,
    parse_edge_list,
    format_edge_list,
    to_dot,
    validate_certificate,
)
from .linear import (
    LinearityVerdict,
    Triangle,
    check_locally_linear,
    enumerate_triangles,
    triangle_incidence,
)
from .star import (
    StarResult,
    find_induced_diamond,
    find_induced_k14,
    is_valid_star,
    max_common_neighbors_nonadjacent,
    star_graph,
)
from .cycles import (
    CycleBijection,
    CycleSet,
    count_induced_cycles,
    find_hexagon_counterexamples,
    pentagon_bijection,
    quadrilateral_bijection,
)
from .poly import IntPolynomial, poly_shift
from .spectral import (
    TheoremReport,
    charpoly_exact,
    half_laplacian_like,
    star_adjacency_plus_3i,
    verify_theorem1,
)
from .reconstruct import (
    CliquePartition,
    ReconstructionResult,
    neighborhood_partition,
    reconstruct_base,
    roundtrip_check,
)
from .generators import (
    GenSpec,
    friendship,
    paley9,
    random_locally_linear,
    random_triangular_cactus,
    triangular_snake,
)
