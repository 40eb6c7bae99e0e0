"""Exact combinatorics of window profiles of trees.

The package enumerates the k-vertex tree shapes, counts how often each
shape occurs as a connected window inside a host tree, and verifies a
family of exact inequalities between those counts.  Everything is
integer or rational arithmetic; nothing here is approximate.
"""

from __future__ import annotations

from .catalog import TreeCatalog, catalog_count, enumerate_trees, enumerate_trees_bounded_degree
from .census import (
    DegreeTypeCensus,
    PY_IDENTITY_EXCEPTIONS,
    VerificationReport,
    check_PY_identity,
    check_Y_36S,
    check_Y_P4,
    check_leaf_balance,
    check_lemma_general,
    check_lemma_smalldeg,
    check_millipede_upper,
    degree_type_census,
    is_one_millipede,
    run_suite,
)
from .config import Config, config_from_environment, parse_config_file, resolve_config
from .counting import (
    CountsRecord,
    ProfileVector,
    count_all,
    count_connected_subsets,
    count_copies,
    count_paths_fast,
    count_stars_fast,
    count_y_fast,
    count_y_split,
    embedding_count,
    enumerate_connected_subsets,
    fraction_to_decimal,
    profile,
)
from .generators import (
    VertexCapError,
    convex_glue,
    convex_glue_multiplicities,
    glue,
    glue_power,
    glue_power_size,
    glue_size,
    make_millipede,
    make_path,
    make_star,
    prufer_to_tree,
    random_tree,
    random_tree_bounded_degree,
)
from .region import (
    InducibilityReport,
    PlanePoint,
    ScanReport,
    check_region_shadow,
    conjecture_scan,
    convex_hull,
    emit_figure_data,
    inducibility_lower_bound,
    inner_region,
    line_margin,
    m_point,
    millipede_limit_consistency,
    projection_point,
)
from .trees import (
    InvalidTreeError,
    Tree,
    aut_size,
    canonical_code,
    center,
    degrees,
    dump_tree,
    is_isomorphic,
    leaves,
    load_tree,
    lowest_leaf,
    make_tree,
    max_degree,
    parse_tree_text,
    relabel,
    tree_from_json,
    tree_to_json,
)

__version__ = "0.1.0"

__all__ = [
    "Config",
    "CountsRecord",
    "DegreeTypeCensus",
    "InducibilityReport",
    "InvalidTreeError",
    "PY_IDENTITY_EXCEPTIONS",
    "PlanePoint",
    "ProfileVector",
    "ScanReport",
    "Tree",
    "TreeCatalog",
    "VerificationReport",
    "VertexCapError",
    "aut_size",
    "canonical_code",
    "catalog_count",
    "center",
    "check_PY_identity",
    "check_Y_36S",
    "check_Y_P4",
    "check_leaf_balance",
    "check_lemma_general",
    "check_lemma_smalldeg",
    "check_millipede_upper",
    "check_region_shadow",
    "config_from_environment",
    "conjecture_scan",
    "convex_glue",
    "convex_glue_multiplicities",
    "convex_hull",
    "count_all",
    "count_connected_subsets",
    "count_copies",
    "count_paths_fast",
    "count_stars_fast",
    "count_y_fast",
    "count_y_split",
    "degree_type_census",
    "degrees",
    "dump_tree",
    "embedding_count",
    "emit_figure_data",
    "enumerate_connected_subsets",
    "enumerate_trees",
    "enumerate_trees_bounded_degree",
    "fraction_to_decimal",
    "glue",
    "glue_power",
    "glue_power_size",
    "glue_size",
    "inducibility_lower_bound",
    "inner_region",
    "is_isomorphic",
    "is_one_millipede",
    "leaves",
    "line_margin",
    "load_tree",
    "lowest_leaf",
    "m_point",
    "make_millipede",
    "make_path",
    "make_star",
    "make_tree",
    "max_degree",
    "millipede_limit_consistency",
    "parse_config_file",
    "parse_tree_text",
    "profile",
    "projection_point",
    "prufer_to_tree",
    "random_tree",
    "random_tree_bounded_degree",
    "relabel",
    "resolve_config",
    "tree_from_json",
    "tree_to_json",
]
