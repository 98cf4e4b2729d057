"""Path ideals of rooted trees and their homological invariants."""

from .ara import (
    AraBounds,
    SVPartition,
    WitnessPolynomial,
    ara_bounds,
    construct_partition_t3,
    good_partition_search,
    no_good_partition_inequality,
    radical_point_check,
    sv_witnesses,
    verify_sv_conditions,
)
from .errors import BoundExceededError
from .homology import (
    DEFAULT_FIELDS,
    QQ,
    BettiTable,
    Field,
    betti_table_hochster,
    betti_tables_hochster,
    char_independence_report,
    gf,
    is_cohen_macaulay,
    is_sequentially_cm,
    pd_from_betti,
    reduced_homology_dims,
    restrict,
    stanley_reisner_complex,
)
from .ideals import (
    SquarefreeIdeal,
    ideal_components,
    ideal_equals,
    ideal_intersect,
    ideal_multiply,
    ideal_sum,
    make_ideal,
    minimalize,
    zero_ideal,
)
from .pd import (
    NotProperlyConnectedError,
    PdReport,
    SplittingData,
    leaf_generator,
    pd_auto,
    pd_line_closed_form,
    pd_quotient_hochster,
    pd_recursive,
    splitting_data,
    verify_betti_splitting,
)
from .simplicial import (
    Complex,
    facet_complex,
    has_leaf_order,
    is_leaf,
    is_properly_connected,
    is_pure,
    is_simplicial_forest,
    is_simplicial_tree,
    make_complex,
    proper_distance,
)
from .trees import (
    Forest,
    RootedTree,
    TreeError,
    delete_vertices,
    enumerate_paths,
    parse_tree,
    path_ideal,
)

__all__ = [
    "AraBounds",
    "BettiTable",
    "BoundExceededError",
    "Complex",
    "DEFAULT_FIELDS",
    "Field",
    "Forest",
    "NotProperlyConnectedError",
    "PdReport",
    "QQ",
    "RootedTree",
    "SVPartition",
    "SplittingData",
    "SquarefreeIdeal",
    "TreeError",
    "WitnessPolynomial",
    "ara_bounds",
    "betti_table_hochster",
    "betti_tables_hochster",
    "char_independence_report",
    "construct_partition_t3",
    "delete_vertices",
    "enumerate_paths",
    "facet_complex",
    "gf",
    "good_partition_search",
    "has_leaf_order",
    "ideal_components",
    "ideal_equals",
    "ideal_intersect",
    "ideal_multiply",
    "ideal_sum",
    "is_cohen_macaulay",
    "is_leaf",
    "is_properly_connected",
    "is_pure",
    "is_sequentially_cm",
    "is_simplicial_forest",
    "is_simplicial_tree",
    "leaf_generator",
    "make_complex",
    "make_ideal",
    "minimalize",
    "no_good_partition_inequality",
    "parse_tree",
    "path_ideal",
    "pd_auto",
    "pd_from_betti",
    "pd_line_closed_form",
    "pd_quotient_hochster",
    "pd_recursive",
    "proper_distance",
    "radical_point_check",
    "reduced_homology_dims",
    "restrict",
    "splitting_data",
    "stanley_reisner_complex",
    "sv_witnesses",
    "verify_betti_splitting",
    "verify_sv_conditions",
    "zero_ideal",
]
