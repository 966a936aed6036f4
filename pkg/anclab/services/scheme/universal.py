# anclab/services/scheme/universal.py
"""
Implicit Universal Graph for F(n, d)

Vertices are all pairs (nu, depth) with nu in [1, Gamma_K) and depth in
[1, d]; two vertices are adjacent iff the adjacency decoder says so. Every
forest of F(n, d) is an induced subgraph through u -> (L(u), depth(u)).
Adjacency is answered on demand; the edge set is built only for tiny tables.

Usage:
    graph = UniversalGraph(build_params(32, 4))
    graph.embed_check(forest)   # True for every forest in the family
"""

import logging
from typing import Dict, List, Optional, Tuple

import anclab.core.logger  # noqa: F401
from anclab.core.config import Config
from anclab.core.errors import ParamError
from anclab.services.scheme.decoder import is_ancestor
from anclab.services.scheme.forest import Forest
from anclab.services.scheme.marker import Labeling, label_forest
from anclab.services.scheme.params import ParamTable, label_interval

logger = logging.getLogger('ANCLAB.Universal')

Vertex = Tuple[int, int]


class UniversalGraph:
    """Predicate-based universal graph; nothing is stored besides the table."""

    def __init__(self, params: ParamTable):
        self.params = params

    @property
    def vertex_count(self) -> int:
        return universal_vertex_count(self.params)

    def adjacent(self, w1: Vertex, w2: Vertex) -> bool:
        return universal_adjacent(self.params, w1, w2)

    def embed_check(self, F: Forest, labeling: Optional[Labeling] = None) -> bool:
        return embed_check(self.params, F, labeling)


# ============================================================
# OPERATIONS
# ============================================================

def universal_vertex_count(P: ParamTable) -> int:
    """(Gamma_K - 1) * d: the exact label space, not the padded power of two."""
    return (P.gamma_k - 1) * P.d


def _validate_vertex(P: ParamTable, w: Vertex) -> None:
    nu, depth = w
    if not (1 <= nu < P.gamma_k and 1 <= depth <= P.d):
        raise ParamError(f"Vertex {w} outside [1, {P.gamma_k}) x [1, {P.d}]")


def universal_adjacent(P: ParamTable, w1: Vertex, w2: Vertex) -> bool:
    """Symmetric, irreflexive adjacency of two universal-graph vertices."""
    _validate_vertex(P, w1)
    _validate_vertex(P, w2)
    (nu1, depth1), (nu2, depth2) = w1, w2
    if depth2 == depth1 + 1:
        return is_ancestor(P, nu1, nu2)
    if depth1 == depth2 + 1:
        return is_ancestor(P, nu2, nu1)
    return False


def embed_check(P: ParamTable, F: Forest, labeling: Optional[Labeling] = None) -> bool:
    """
    Verify that u -> (L(u), depth(u)) embeds F as an induced subgraph.

    Checks injectivity and, over all node pairs, edge in F <=> adjacent in
    the universal graph. Quadratic in |F|.
    """
    if labeling is None:
        labeling = label_forest(P, F)
    phi: Dict[int, Vertex] = {v: (labeling[v], F.depth[v]) for v in F.nodes()}

    if len(set(phi.values())) != len(phi):
        logger.warning(f"Embedding of {F!r} is not injective")
        return False

    parent = F.parent
    nodes = list(F.nodes())
    for i, u in enumerate(nodes):
        for v in nodes[i + 1:]:
            edge = parent[v] == u or parent[u] == v
            if edge != universal_adjacent(P, phi[u], phi[v]):
                logger.warning(f"Edge mismatch for nodes {u}, {v} in {F!r}: forest says {edge}")
                return False
    return True


# ============================================================
# MATERIALIZATION (tiny tables only)
# ============================================================

def materialize(P: ParamTable) -> List[Tuple[int, int]]:
    """
    All edges of the universal graph as pairs of packed vertices (u < v).

    Raises:
        ParamError: more than ANCLAB_MATERIALIZE_LIMIT vertices
    """
    count = universal_vertex_count(P)
    if count > Config.MATERIALIZE_LIMIT:
        raise ParamError(
            f"Universal graph has {count} vertices; materializing is limited to {Config.MATERIALIZE_LIMIT}"
        )
    d = P.d
    intervals = {nu: label_interval(P, nu) for nu in range(1, P.gamma_k)}
    edges: List[Tuple[int, int]] = []
    for nu_u, (level_u, lo_u, hi_u) in intervals.items():
        for nu_v, (level_v, lo_v, hi_v) in intervals.items():
            if nu_u == nu_v:
                continue
            if lo_u == lo_v and hi_u == hi_v:
                ancestor = level_u > level_v
            else:
                ancestor = lo_u <= lo_v and hi_v <= hi_u
            if not ancestor:
                continue
            for depth in range(1, d):
                a = (nu_u - 1) * d + (depth - 1)
                b = (nu_v - 1) * d + depth
                edges.append((min(a, b), max(a, b)))
    edges.sort()
    logger.debug(f"Materialized {len(edges)} edges over {count} vertices")
    return edges


def write_edge_list(edges: List[Tuple[int, int]], path: str) -> None:
    """One 'u v' pair per line."""
    with open(path, "w", encoding="utf-8") as f:
        for u, v in edges:
            f.write(f"{u} {v}\n")
