###
"""
anclab Package

Compact ancestry labels for rooted forests of bounded depth: about
log n + 2 log d bits per node, plus the adjacency labels and implicit
universal graph that come with them.

Main Components:
- build_params: exact parameter table for the family F(n, d)
- label_forest: the marker, forest -> one integer label per node
- is_ancestor / is_adjacent: decoders that see two labels and nothing else
- baseline_label: the classic interval scheme, for comparison
- UniversalGraph: adjacency-label graph containing every forest of F(n, d)
"""

# Package metadata
__version__ = "1.0.0"
__description__ = "Compact ancestry and adjacency labeling for bounded-depth forests"

from .core import logger
from .services.scheme import (
    Forest,
    Labeling,
    ParamTable,
    UniversalGraph,
    baseline_is_ancestor,
    baseline_label,
    build_params,
    gen_forest,
    is_adjacent,
    is_ancestor,
    label_forest,
    validate_forest,
)
from .services.scheme.schemes import SCHEMES, BaselineScheme, CompactScheme

__all__ = [
    "Forest",
    "Labeling",
    "ParamTable",
    "UniversalGraph",
    "baseline_is_ancestor",
    "baseline_label",
    "build_params",
    "gen_forest",
    "is_adjacent",
    "is_ancestor",
    "label_forest",
    "validate_forest",
    "BaselineScheme",
    "CompactScheme",
    "SCHEMES",
    "logger",
    "DEFAULT_CONFIG",
    "create_scheme",
    "label",
    "get_version",
]

# Package-level configuration
DEFAULT_CONFIG = {
    "scheme": CompactScheme.name,
    "check_uk": False,
}


def create_scheme(n: int, d: int, **kwargs):
    """
    Convenience function to create a labeling scheme for F(n, d).

    Args:
        n: node bound
        d: depth bound
        **kwargs: options overriding DEFAULT_CONFIG

    Returns:
        CompactScheme or BaselineScheme

    Example:
        >>> scheme = create_scheme(1000, 8)
        >>> labels = scheme.label(gen_forest(1000, 8))
    """
    config = DEFAULT_CONFIG.copy()
    config.update(kwargs)
    if config["scheme"] == CompactScheme.name:
        return CompactScheme(n, d, check_uk=config["check_uk"])
    if config["scheme"] == BaselineScheme.name:
        return BaselineScheme(n, d)
    raise ValueError(f"Unknown scheme {config['scheme']!r}; expected one of {', '.join(SCHEMES)}")


def label(parents, d: int) -> Labeling:
    """
    Validate a parent array (parents[v - 1] is the parent of v, 0 for a root)
    and label it under F(len(parents), d).

    Example:
        >>> labeling = label([0, 1], 2)
        >>> labeling.as_dict()
        {1: 15, 2: 1}
    """
    F = validate_forest(parents, d)
    return label_forest(build_params(max(len(parents), 1), d), F)


def get_version():
    """Return the package version."""
    return __version__
