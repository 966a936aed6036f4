# anclab/services/ingest/xml_reader.py
"""
Minimal XML pull parser

Reads the element structure of a document and nothing else: start, end and
self-closing tags become tree nodes in document order. Text, comments,
CDATA sections, processing instructions and the XML declaration are
skipped. DTDs and anything outside this subset are rejected, never guessed.
"""

import logging
import re
from typing import Iterator, List, NamedTuple

import anclab.core.logger  # noqa: F401
from anclab.core.errors import MalformedTag, MismatchedTag, UnclosedTag, XMLParseError
from anclab.services.ingest.parent_list import IngestedForest
from anclab.services.scheme.forest import ROOT, validate_forest

logger = logging.getLogger('ANCLAB.XML')

START = "start"
END = "end"

_NAME = r"[A-Za-z_][\w.\-:]*"
_ATTR = rf"\s+{_NAME}\s*=\s*(?:\"[^\"<]*\"|'[^'<]*')"
_START_TAG = re.compile(rf"<({_NAME})((?:{_ATTR})*)\s*(/?)>")
_END_TAG = re.compile(rf"</({_NAME})\s*>")

# (opening, closing) of skipped markup
_SKIPPED = (
    ("<!--", "-->"),
    ("<![CDATA[", "]]>"),
    ("<?", "?>"),
)


class XMLEvent(NamedTuple):
    kind: str
    name: str
    pos: int


def _line_col(text: str, pos: int) -> str:
    line = text.count("\n", 0, pos) + 1
    col = pos - (text.rfind("\n", 0, pos) + 1) + 1
    return f"line {line}, column {col}"


def iter_events(text: str) -> Iterator[XMLEvent]:
    """Pull start/end events out of text; a self-closing tag yields both."""
    pos = 0
    length = len(text)
    while pos < length:
        lt = text.find("<", pos)
        if lt < 0:
            return
        for opening, closing in _SKIPPED:
            if text.startswith(opening, lt):
                end = text.find(closing, lt + len(opening))
                if end < 0:
                    raise MalformedTag(f"unterminated {opening!r} at {_line_col(text, lt)}")
                pos = end + len(closing)
                break
        else:
            if text.startswith("<!", lt):
                raise MalformedTag(f"DTD or declaration not supported at {_line_col(text, lt)}")
            match = _END_TAG.match(text, lt)
            if match:
                yield XMLEvent(END, match.group(1), lt)
                pos = match.end()
                continue
            match = _START_TAG.match(text, lt)
            if not match:
                raise MalformedTag(f"malformed tag at {_line_col(text, lt)}")
            yield XMLEvent(START, match.group(1), lt)
            if match.group(3):
                yield XMLEvent(END, match.group(1), lt)
            pos = match.end()


def ingest_xml(text: str) -> IngestedForest:
    """
    Element tree of an XML document as a forest of one tree.

    n is the element count and d the depth of the tree.

    Raises:
        MismatchedTag: end tag does not close the innermost open element
        UnclosedTag: document ends with open elements
        MalformedTag: tag syntax outside the supported subset
        XMLParseError: no element, or more than one root element
    """
    parents: List[int] = []
    stack: List[int] = []
    names: List[str] = []
    roots = 0

    for event in iter_events(text):
        if event.kind == START:
            if not stack:
                roots += 1
                if roots > 1:
                    raise XMLParseError(f"second root element <{event.name}> at {_line_col(text, event.pos)}")
            parents.append(stack[-1] if stack else ROOT)
            stack.append(len(parents))
            names.append(event.name)
        else:
            if not stack:
                raise MismatchedTag(f"</{event.name}> with no open element at {_line_col(text, event.pos)}")
            if names[-1] != event.name:
                raise MismatchedTag(
                    f"</{event.name}> closes <{names[-1]}> at {_line_col(text, event.pos)}"
                )
            stack.pop()
            names.pop()

    if stack:
        raise UnclosedTag(f"unclosed element <{names[-1]}>")
    if not parents:
        raise XMLParseError("document has no elements")

    forest = validate_forest(parents, len(parents))
    logger.info(f"Ingested XML document: {forest!r}")
    return IngestedForest(forest, forest.node_count, forest.max_depth)
