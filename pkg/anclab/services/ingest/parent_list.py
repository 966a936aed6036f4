# anclab/services/ingest/parent_list.py
"""
Parent-list forest files

    # optional comment lines
    <n> <d>
    <id> <parent-id>      one line per node, parent-id 0 for a root

Ids are 1..n in any order.
"""

import logging
from typing import List, NamedTuple, Optional

import anclab.core.logger  # noqa: F401
from anclab.core.errors import DuplicateId, MalformedLine
from anclab.services.scheme.forest import Forest, validate_forest

logger = logging.getLogger('ANCLAB.Ingest')


class IngestedForest(NamedTuple):
    forest: Forest
    n: int
    d: int


def _ints(line: str, lineno: int, expected: int) -> List[int]:
    parts = line.split()
    if len(parts) != expected:
        raise MalformedLine(f"line {lineno}: expected {expected} integers, got {line.strip()!r}")
    try:
        return [int(p) for p in parts]
    except ValueError:
        raise MalformedLine(f"line {lineno}: not an integer in {line.strip()!r}")


def ingest_parent_list(text: str) -> IngestedForest:
    """
    Parse and validate a parent-list file.

    Raises:
        MalformedLine: bad header or row, id outside 1..n, missing rows
        DuplicateId: an id listed twice
        ForestError: the forest is cyclic, dangling, or deeper than d
    """
    header: Optional[List[int]] = None
    parents: List[int] = []
    seen: List[bool] = []
    rows = 0

    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        if header is None:
            header = _ints(line, lineno, 2)
            n, d = header
            if n < 1 or d < 1:
                raise MalformedLine(f"line {lineno}: need n >= 1 and d >= 1, got n={n}, d={d}")
            parents = [0] * n
            seen = [False] * (n + 1)
            continue
        node, parent = _ints(line, lineno, 2)
        if not 1 <= node <= n:
            raise MalformedLine(f"line {lineno}: node id {node} outside 1..{n}")
        if seen[node]:
            raise DuplicateId(f"line {lineno}: node id {node} listed twice")
        seen[node] = True
        parents[node - 1] = parent
        rows += 1

    if header is None:
        raise MalformedLine("missing '<n> <d>' header line")
    if rows != n:
        raise MalformedLine(f"expected {n} node lines, got {rows}")

    forest = validate_forest(parents, d)
    logger.info(f"Ingested parent list: {forest!r}, declared d={d}")
    return IngestedForest(forest, n, d)


def format_parent_list(F: Forest, d: int) -> str:
    """Inverse of ingest_parent_list."""
    lines = [f"{F.node_count} {d}"]
    lines.extend(f"{v} {F.parent[v]}" for v in F.nodes())
    return "\n".join(lines) + "\n"
