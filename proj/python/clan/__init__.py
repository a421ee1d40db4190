"""Community detection with attribute-based reassignment of lowly-connected nodes."""

from ._clan import (
    AttributeTable,
    ClanError,
    Graph,
    averaged_scores,
    default_threshold,
    degree_ratio_curve,
    fixtures,
    generate_sbm,
    load_attributes,
    load_edge_list,
    load_labels,
    louvain,
    modularity,
    pairwise_f1,
    pairwise_jaccard,
    run_clan,
    subsample_to_slope,
    tokenize,
    unlabeled_fraction,
)

__version__ = "0.1.0"

__all__ = [
    "AttributeTable",
    "ClanError",
    "Graph",
    "averaged_scores",
    "default_threshold",
    "degree_ratio_curve",
    "fixtures",
    "generate_sbm",
    "load_attributes",
    "load_edge_list",
    "load_labels",
    "louvain",
    "modularity",
    "pairwise_f1",
    "pairwise_jaccard",
    "run_clan",
    "subsample_to_slope",
    "tokenize",
    "unlabeled_fraction",
]
