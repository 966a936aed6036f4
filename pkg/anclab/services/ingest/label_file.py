# anclab/services/ingest/label_file.py
"""
Label files: the marker's output as plain CSV.

    # anclab n_input=2 d=2 n_pow2=2 gamma_k=110 ancestry_bits=7 adjacency_bits=8
    node_id,nu,depth,adj
    1,15,1,28
    2,1,2,1

The '#' header carries the family (n, d) and the derived constants. Reading
rebuilds the parameter table from n_input and d and refuses a file whose
header or rows disagree with it.
"""

import csv
import io
import logging
from typing import Dict, List, NamedTuple, Tuple

from pydantic import ValidationError

import anclab.core.logger  # noqa: F401
from anclab.core.errors import LabelFileError, ParamError
from anclab.models import LabelFileHeader, LabelRow
from anclab.services.scheme.decoder import make_adj_label
from anclab.services.scheme.marker import Labeling
from anclab.services.scheme.params import ParamTable, adjacency_bits, ancestry_bits, build_params

logger = logging.getLogger('ANCLAB.LabelFile')

HEADER_TAG = "anclab"
COLUMNS = ("node_id", "nu", "depth", "adj")


class LabelFile(NamedTuple):
    header: LabelFileHeader
    params: ParamTable
    rows: List[LabelRow]

    def by_node(self) -> Dict[int, LabelRow]:
        return {row.node_id: row for row in self.rows}


def header_for(P: ParamTable) -> LabelFileHeader:
    return LabelFileHeader(
        n_input=P.n_input,
        d=P.d,
        n_pow2=P.n_pow2,
        gamma_k=P.gamma_k,
        ancestry_bits=ancestry_bits(P),
        adjacency_bits=adjacency_bits(P),
    )


def dump_label_file(labeling: Labeling) -> str:
    """Serialize a labeling, adjacency labels included."""
    P = labeling.params
    header = header_for(P)
    out = io.StringIO()
    fields = " ".join(f"{k}={v}" for k, v in header.model_dump().items())
    out.write(f"# {HEADER_TAG} {fields}\n")
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(COLUMNS)
    for v, nu in labeling.items():
        depth = labeling.depths[v]
        writer.writerow((v, nu, depth, make_adj_label(P, nu, depth)))
    return out.getvalue()


def write_label_file(labeling: Labeling, path: str) -> None:
    with open(path, "w", encoding="utf-8", newline="") as f:
        f.write(dump_label_file(labeling))
    logger.info(f"Wrote {len(labeling)} labels to {path}")


def _parse_header(line: str) -> LabelFileHeader:
    parts = line.lstrip("#").split()
    if not parts or parts[0] != HEADER_TAG:
        raise LabelFileError(f"first line must start with '# {HEADER_TAG}', got {line.strip()!r}")
    values: Dict[str, str] = {}
    for part in parts[1:]:
        key, sep, value = part.partition("=")
        if not sep:
            raise LabelFileError(f"header field {part!r} is not key=value")
        values[key] = value
    try:
        return LabelFileHeader(**values)
    except ValidationError as e:
        raise LabelFileError(f"invalid header: {e}")


def _check_header(header: LabelFileHeader) -> ParamTable:
    try:
        P = build_params(header.n_input, header.d)
    except ParamError as e:
        raise LabelFileError(f"header does not describe a valid family: {e}")
    expected = header_for(P)
    if header != expected:
        diff = {
            k: (v, getattr(expected, k))
            for k, v in header.model_dump().items()
            if getattr(expected, k) != v
        }
        raise LabelFileError(f"header disagrees with the parameter table for "
                             f"n={header.n_input}, d={header.d}: {diff}")
    return P


def _parse_row(P: ParamTable, record: Dict[str, str], lineno: int) -> LabelRow:
    if None in record:
        raise LabelFileError(f"line {lineno}: more than {len(COLUMNS)} columns")
    try:
        row = LabelRow(**record)
    except ValidationError as e:
        raise LabelFileError(f"line {lineno}: {e}")
    if not row.nu < P.gamma_k:
        raise LabelFileError(f"line {lineno}: label {row.nu} outside [1, {P.gamma_k})")
    if row.depth > P.d:
        raise LabelFileError(f"line {lineno}: depth {row.depth} exceeds d={P.d}")
    if row.adj != make_adj_label(P, row.nu, row.depth):
        raise LabelFileError(f"line {lineno}: adj {row.adj} does not pack (nu={row.nu}, depth={row.depth})")
    return row


def load_label_file(text: str) -> LabelFile:
    """
    Parse and verify a label file.

    Raises:
        LabelFileError: missing or inconsistent header, bad columns, a row
            that is undecodable under the header, a repeated node id or
            label, or more rows than the family has nodes
    """
    lines = text.splitlines()
    if not lines:
        raise LabelFileError("empty label file")
    header = _parse_header(lines[0])
    P = _check_header(header)

    reader = csv.DictReader(lines[1:])
    if tuple(reader.fieldnames or ()) != COLUMNS:
        raise LabelFileError(f"expected columns {','.join(COLUMNS)}, got {reader.fieldnames}")

    rows: List[LabelRow] = []
    seen_ids: Dict[int, int] = {}
    seen_labels: Dict[int, int] = {}
    for lineno, record in enumerate(reader, start=3):
        row = _parse_row(P, record, lineno)
        if row.node_id in seen_ids:
            raise LabelFileError(f"line {lineno}: node id {row.node_id} already listed "
                                 f"on line {seen_ids[row.node_id]}")
        if row.nu in seen_labels:
            raise LabelFileError(f"line {lineno}: label {row.nu} already used on line {seen_labels[row.nu]}")
        if len(rows) == P.n_input:
            raise LabelFileError(f"line {lineno}: more than n={P.n_input} rows")
        seen_ids[row.node_id] = lineno
        seen_labels[row.nu] = lineno
        rows.append(row)

    logger.debug(f"Loaded {len(rows)} labels for n={P.n_input}, d={P.d}")
    return LabelFile(header, P, rows)


def read_label_file(path: str) -> LabelFile:
    try:
        with open(path, encoding="utf-8", newline="") as f:
            text = f.read()
    except UnicodeDecodeError as e:
        raise LabelFileError(f"{path} is not UTF-8 text: {e}")
    return load_label_file(text)


def labels_of(label_file: LabelFile) -> Tuple[Dict[int, int], Dict[int, int]]:
    """(node -> ancestry label, node -> adjacency label)."""
    return ({row.node_id: row.nu for row in label_file.rows},
            {row.node_id: row.adj for row in label_file.rows})
