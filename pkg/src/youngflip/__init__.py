"""Young diagrams under a line, flips, associahedra and type A cluster algebras."""

from .errors import (
    BudgetExceeded,
    DiagonalAbsent,
    FrozenVertex,
    InvalidTriangulation,
    NoUniqueReplacement,
    NotDivisible,
    NotInYn,
    ParseError,
    PreconditionError,
    UnknownFormat,
    YoungFlipError,
)
from .partitions import (
    DihedralElement,
    act,
    act_alpha,
    act_beta,
    enumerate_yn,
    fits_in,
    flip_neighbors,
    flip_row,
    format_partition,
    heads,
    parse_partition,
    transpose,
)
from .triangulation import (
    Triangulation,
    enumerate_triangulations,
    flip_diagonal,
    lambda_inverse,
    lambda_map,
    parse_triangulation,
)
from .flipgraph import build_flip_graph, count_faces, embedding_check, export_graph, transpose_edge_defect
from .laurent import LaurentPoly, div_exact, evaluate, parse_laurent
from .cluster import (
    LazySeedAInfty,
    Quiver,
    Seed,
    alt_equivalence_check,
    exchange_graph,
    exchange_graph_is_associahedron,
    gsv_closure_check,
    initial_seed_An,
    initial_seed_An_ice,
    initial_seed_Dinfty_window,
    mutate_lazy,
    mutate_quiver,
    mutate_seed,
    quiver_isomorphic,
    row_column_check,
    triangulation_to_ice_quiver,
)
from .repcc import (
    IntervalModule,
    cc_map,
    denominator_vector,
    grassmannian_chi,
    infinite_extension_check,
    positive_roots_An,
    verify_cc_theorem,
)
from .arcs import ArcFamily, classify, crossing, flip_arc, materialize, reachability_window_check

__version__ = "0.1.0"
