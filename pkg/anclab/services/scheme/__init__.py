# anclab/services/scheme/__init__.py
"""
Scheme Services - parameter tables, forests, marker, decoder, baseline, universal graph
"""

from .params import (
    IntInterval,
    ParamTable,
    Triplet,
    build_params,
    decode_triplet,
    encode_triplet,
    floor_c,
    in_Uk,
    interval_of,
)
from .forest import (
    Forest,
    SpineDecomposition,
    enumerate_forests,
    gen_forest,
    is_ancestor_oracle,
    separator,
    spine_decompose,
    validate_forest,
)
from .marker import Labeling, embed_forest, embed_tree, label_forest, label_stats
from .decoder import AdjLabel, is_adjacent, is_ancestor, label_bits, make_adj_label, unpack_adj_label
from .baseline import BaselineLabel, baseline_is_ancestor, baseline_label
from .universal import UniversalGraph, embed_check, universal_adjacent, universal_vertex_count

__all__ = [
    "IntInterval",
    "ParamTable",
    "Triplet",
    "build_params",
    "decode_triplet",
    "encode_triplet",
    "floor_c",
    "in_Uk",
    "interval_of",
    "Forest",
    "SpineDecomposition",
    "enumerate_forests",
    "gen_forest",
    "is_ancestor_oracle",
    "separator",
    "spine_decompose",
    "validate_forest",
    "Labeling",
    "embed_forest",
    "embed_tree",
    "label_forest",
    "label_stats",
    "AdjLabel",
    "is_adjacent",
    "is_ancestor",
    "label_bits",
    "make_adj_label",
    "unpack_adj_label",
    "BaselineLabel",
    "baseline_is_ancestor",
    "baseline_label",
    "UniversalGraph",
    "embed_check",
    "universal_adjacent",
    "universal_vertex_count",
]
