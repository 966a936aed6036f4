# anclab/services/ingest/__init__.py
"""
Ingest Services - forest inputs (parent lists, XML) and label files
"""

from anclab.core.errors import IngestError

from .parent_list import IngestedForest, format_parent_list, ingest_parent_list
from .xml_reader import XMLEvent, ingest_xml, iter_events
from .label_file import (
    LabelFile,
    dump_label_file,
    labels_of,
    load_label_file,
    read_label_file,
    write_label_file,
)


def ingest_path(path: str) -> IngestedForest:
    """
    Read a forest file, choosing the reader by extension (.xml or parent list).

    Raises:
        IngestError: the file is not UTF-8 text, or not a valid forest
    """
    try:
        with open(path, encoding="utf-8") as f:
            text = f.read()
    except UnicodeDecodeError as e:
        raise IngestError(f"{path} is not UTF-8 text: {e}")
    if path.lower().endswith(".xml"):
        return ingest_xml(text)
    return ingest_parent_list(text)


__all__ = [
    "IngestedForest",
    "format_parent_list",
    "ingest_parent_list",
    "XMLEvent",
    "ingest_xml",
    "iter_events",
    "LabelFile",
    "dump_label_file",
    "labels_of",
    "load_label_file",
    "read_label_file",
    "write_label_file",
    "ingest_path",
]
