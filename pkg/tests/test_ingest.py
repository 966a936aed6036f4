from pathlib import Path

import numpy as np
import pytest

from anclab.core.errors import (
    DepthExceeded,
    DuplicateId,
    MalformedLine,
    MalformedTag,
    MismatchedTag,
    UnclosedTag,
    UnknownParent,
    XMLParseError,
)
from anclab.services.ingest import (
    format_parent_list,
    ingest_parent_list,
    ingest_path,
    ingest_xml,
    iter_events,
)
from anclab.services.scheme.decoder import is_ancestor
from anclab.services.scheme.forest import gen_forest, is_ancestor_oracle
from anclab.services.scheme.marker import label_forest
from anclab.services.scheme.params import build_params

XML_DIR = Path(__file__).parent / "data" / "xml"


# ============================================================
# Parent lists
# ============================================================

def test_two_node_tree():
    ingested = ingest_parent_list("2 2\n1 0\n2 1")
    assert ingested.n == 2 and ingested.d == 2
    assert ingested.forest.raw_parents() == [0, 1]


def test_comments_blank_lines_and_any_order():
    text = "# a forest\n\n3 2\n3 1\n# roots\n1 0\n2 0\n"
    F = ingest_parent_list(text).forest
    assert F.raw_parents() == [0, 0, 1]


def test_depth_exceeded():
    with pytest.raises(DepthExceeded):
        ingest_parent_list("2 1\n1 0\n2 1")


def test_duplicate_id():
    with pytest.raises(DuplicateId):
        ingest_parent_list("2 2\n1 0\n1 0")


@pytest.mark.parametrize("text", [
    "",
    "# only a comment\n",
    "2\n1 0\n2 1",
    "2 2\n1 0",
    "2 2\n1 0\n3 1",
    "2 2\n1 0\n2 x",
    "2 2\n1 0\n2 1 5",
    "0 2\n",
])
def test_malformed(text):
    with pytest.raises(MalformedLine):
        ingest_parent_list(text)


def test_unknown_parent():
    with pytest.raises(UnknownParent):
        ingest_parent_list("2 2\n1 0\n2 9")


def test_format_parent_list_reads_back():
    F = gen_forest(40, 5, seed=2)
    again = ingest_parent_list(format_parent_list(F, 5))
    assert again.forest.parent == F.parent
    assert again.d == 5


# ============================================================
# XML
# ============================================================

def test_xml_structure():
    ingested = ingest_xml("<a><b/><c><d/></c></a>")
    assert ingested.n == 4
    assert ingested.d == 3
    assert ingested.forest.raw_parents() == [0, 1, 1, 3]


def test_xml_skips_text_and_comments():
    ingested = ingest_xml("<a>text<!--x--><b/></a>")
    assert ingested.n == 2
    assert ingested.d == 2


def test_xml_mismatched():
    with pytest.raises(MismatchedTag):
        ingest_xml("<a><b></a></b>")


def test_xml_stray_end_tag():
    with pytest.raises(MismatchedTag):
        ingest_xml("<a/></a>")


def test_xml_unclosed():
    with pytest.raises(UnclosedTag):
        ingest_xml("<a><b/>")


@pytest.mark.parametrize("text", [
    "<!DOCTYPE a><a/>",
    "<a><b c=d/></a>",
    "<a><1b/></a>",
    "<a><!-- never closed </a>",
    "<a>< b/></a>",
])
def test_xml_malformed(text):
    with pytest.raises(MalformedTag):
        ingest_xml(text)


def test_xml_needs_exactly_one_root():
    with pytest.raises(XMLParseError):
        ingest_xml("just text")
    with pytest.raises(XMLParseError):
        ingest_xml("<a/><b/>")


def test_xml_attributes_pi_and_cdata():
    text = '<?xml version="1.0"?><a x="1" y=\'b\'><![CDATA[<b/>]]><?pi?><c/></a>'
    assert [(e.kind, e.name) for e in iter_events(text)] == [
        ("start", "a"), ("start", "c"), ("end", "c"), ("end", "a"),
    ]


def test_xml_error_reports_position():
    with pytest.raises(MismatchedTag, match="line 2"):
        ingest_xml("<a>\n</b>")


def test_corpus_has_twenty_documents():
    assert len(sorted(XML_DIR.glob("*.xml"))) == 20


@pytest.mark.parametrize("path", sorted(XML_DIR.glob("*.xml")), ids=lambda p: p.name)
def test_corpus_labels_answer_queries(path):
    ingested = ingest_path(str(path))
    F = ingested.forest
    assert len(F.roots) == 1
    assert 1 <= ingested.d <= 8
    P = build_params(ingested.n, ingested.d)
    labels = label_forest(P, F, check_uk=True)
    rng = np.random.default_rng(0)
    for u, v in rng.integers(1, F.node_count + 1, size=(1000, 2)).tolist():
        assert is_ancestor(P, labels[u], labels[v]) == is_ancestor_oracle(F, u, v)


def test_ingest_path_chooses_reader(tmp_path):
    forest_file = tmp_path / "f.txt"
    forest_file.write_text("1 1\n1 0\n")
    assert ingest_path(str(forest_file)).n == 1
    xml_file = tmp_path / "f.XML"
    xml_file.write_text("<a><b/></a>")
    assert ingest_path(str(xml_file)).d == 2
