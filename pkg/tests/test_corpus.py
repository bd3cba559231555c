import io

import pytest
from hypothesis import given, strategies as st

from cotir.corpus import (
    Requirement,
    load_requirements,
    normalize,
    to_numbered,
)
from cotir.errors import IngestError


class TestNormalize:
    def test_whitespace_collapse(self):
        assert normalize("a\t b\n") == "a b"

    def test_empty(self):
        assert normalize("") == ""

    def test_curly_quotes_mapped(self):
        assert normalize("“Suspicious”") == '"Suspicious"'

    def test_control_characters_removed(self):
        assert normalize("a\x00b\x07c") == "abc"

    @given(st.text(max_size=200))
    def test_idempotent(self, raw):
        once = normalize(raw)
        assert normalize(once) == once


class TestLoadRequirements:
    def test_single_line(self):
        doc = load_requirements(
            "The C&C shall keep a history of collected sensor readings of up to 1 year.\n"
        )
        assert len(doc) == 1
        assert doc.requirements[0].id == "R1"
        assert doc.requirements[0].ordinal == 1

    def test_empty_stream_is_empty_document(self):
        doc = load_requirements("")
        assert len(doc) == 0

    def test_lines_skips_blank_lines(self):
        doc = load_requirements("first req\n\n\nsecond req\n")
        assert doc.ids == ["R1", "R2"]
        assert [r.ordinal for r in doc.requirements] == [1, 2]

    def test_numbered_ids_from_source(self):
        doc = load_requirements("R1.2: The system shall start.\nR1.3: It shall stop.\n",
                                format="numbered")
        assert doc.ids == ["R1.2", "R1.3"]

    def test_numbered_continuation_lines_append(self):
        doc = load_requirements(
            "A1: The system shall start\nwithin 5 seconds.\n", format="numbered"
        )
        assert doc.requirements[0].text == "The system shall start within 5 seconds."

    def test_duplicate_id_names_line(self):
        with pytest.raises(IngestError, match="line 2.*duplicate.*'R1'"):
            load_requirements("R1: one\nR1: two\n", format="numbered")

    def test_orphan_continuation_is_error(self):
        with pytest.raises(IngestError, match="line 1"):
            load_requirements("no id here\n", format="numbered")

    def test_invalid_utf8_rejected(self):
        with pytest.raises(IngestError, match="UTF-8"):
            load_requirements(b"\xff\xfe bad bytes")

    def test_doc_metadata_headers(self):
        doc = load_requirements("# doc: EMMON\n# title: Monitoring\nR1: text\n",
                                format="numbered")
        assert doc.doc_id == "EMMON"
        assert doc.title == "Monitoring"

    def test_deterministic(self):
        raw = "R1: alpha\nR2: beta\n"
        assert load_requirements(raw, format="numbered") == load_requirements(
            raw, format="numbered"
        )

    def test_text_is_normalized(self):
        doc = load_requirements("R1: a\t “b”\n", format="numbered")
        assert doc.requirements[0].text == 'a "b"'


class TestRoundTrip:
    def test_numbered_round_trip(self):
        doc = load_requirements(
            "# doc: SAMPLE\n# title: A title\nR1: first requirement\nR2: second one\n",
            format="numbered",
        )
        again = load_requirements(to_numbered(doc), format="numbered")
        assert again == doc

    @given(
        st.lists(
            st.text(
                alphabet=st.characters(whitelist_categories=("Lu", "Ll", "Nd"), max_codepoint=0x7F),
                min_size=1,
                max_size=30,
            ),
            min_size=1,
            max_size=8,
        )
    )
    def test_round_trip_generated_docs(self, texts):
        source = "\n".join(texts)
        doc = load_requirements(source, format="lines", doc_id="gen")
        again = load_requirements(to_numbered(doc), format="numbered")
        assert again == doc

    def test_source_line_not_part_of_equality(self):
        a = Requirement(id="R1", text="t", ordinal=1, source_line=1)
        b = Requirement(id="R1", text="t", ordinal=1, source_line=99)
        assert a == b


def test_emmon_corpus_has_13_requirements(emmon_doc):
    assert len(emmon_doc) == 13
    assert [r.ordinal for r in emmon_doc.requirements] == list(range(1, 14))
    assert emmon_doc.doc_id == "EMMON"
