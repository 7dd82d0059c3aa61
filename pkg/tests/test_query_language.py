"""Query text parsing, schema validation, and query builders."""

import pytest

from scholarly_context.errors import SchemaError
from scholarly_context.gateway.queries import (VOCABULARY, build_paper_query,
                                               build_person_query, parse_query)

from conftest import FULL_PAPER_QUERY, FULL_PERSON_QUERY, PAPER_DOI, PERSON_ORCID


class TestVerbatimReplay:
    def test_full_paper_query_parses(self):
        parsed = parse_query(FULL_PAPER_QUERY)
        assert parsed.root == "paper"
        assert parsed.key == PAPER_DOI
        assert [f.name for f in parsed.selection] == [
            "doi", "title", "abstract", "citations", "references",
            "project", "topicDetails", "metricsInformation"]

    def test_full_person_query_parses(self):
        parsed = parse_query(FULL_PERSON_QUERY)
        assert parsed.root == "person"
        assert parsed.key == f"https://orcid.org/{PERSON_ORCID}"
        assert [f.name for f in parsed.selection] == [
            "id", "name", "employment", "publications", "datasets",
            "softwares", "topics"]
        publications = parsed.selection[2:5]
        assert [f.name for f in publications] == ["employment", "publications",
                                                  "datasets"]


class TestParsing:
    def test_comments_and_commas_are_whitespace(self):
        parsed = parse_query(
            '{ paper(doi: "10.1/x") { title, # trailing comment\n abstract } }')
        assert [f.name for f in parsed.selection] == ["title", "abstract"]

    def test_string_escapes(self):
        parsed = parse_query('{ paper(doi: "10.1/a\\"b") { title } }')
        assert parsed.key == '10.1/a"b'

    def test_variables_resolve(self):
        parsed = parse_query("{ paper(doi: $doi) { title } }",
                             variables={"doi": "10.1/x"})
        assert parsed.key == "10.1/x"

    def test_undefined_variable(self):
        with pytest.raises(SchemaError):
            parse_query("{ paper(doi: $doi) { title } }")

    def test_optional_query_keyword_and_var_decls(self):
        text = 'query Fetch($doi: String!) { paper(doi: "10.1/x") { title } }'
        assert parse_query(text).key == "10.1/x"

    @pytest.mark.parametrize("bad", [
        "",
        "   ",
        "hello world",
        "{ }",
        "{ paper(doi: \"10.1/x\") { title }",          # unbalanced
        "{ paper(doi: \"10.1/x\") { title } } trailing",
        "{ mutation(x: \"1\") { y } }",                 # unknown root
        "{ paper { title } }",                          # missing argument
        "{ paper(doi: \"10.1/x\") }",                   # no selection
        "{ paper(doi: \"10.1/x\") { nope } }",          # unknown field
        "{ paper(doi: \"10.1/x\") { title { x } } }",   # leaf with selection
        "{ paper(doi: \"10.1/x\") { citations } }",     # composite without
        "{ person(id: \"x\") { employment { nope } } }",
        "{ paper(doi: \"10.1/x\") { title } person(id: \"y\") { name } }",
        '{ paper(doi: "10.1/x") { title } } { paper(doi: "10.1/y") { title } }',
    ])
    def test_schema_errors(self, bad):
        with pytest.raises(SchemaError):
            parse_query(bad)

    def test_unterminated_string(self):
        with pytest.raises(SchemaError):
            parse_query('{ paper(doi: "10.1/x) { title } }')


def all_field_names(vocabulary, prefix=""):
    names = set()
    for name, child in vocabulary.items():
        names.add(name)
        if child:
            names |= all_field_names(child, prefix + name + ".")
    return names


class TestSchemaClosure:
    def test_builders_cover_the_whole_vocabulary(self):
        paper = parse_query(build_paper_query("10.1/x"))
        person = parse_query(build_person_query(PERSON_ORCID))

        def collect(selection):
            out = set()
            for node in selection:
                out.add(node.name)
                out |= collect(node.selections)
            return out

        assert collect(paper.selection) == all_field_names(VOCABULARY["paper"])
        assert collect(person.selection) == all_field_names(VOCABULARY["person"])

    def test_every_verbatim_field_name_is_in_vocabulary(self):
        import re
        vocab = all_field_names(VOCABULARY["paper"]) | \
            all_field_names(VOCABULARY["person"]) | {"paper", "person"}
        for text in (FULL_PAPER_QUERY, FULL_PERSON_QUERY):
            stripped = re.sub(r'"[^"]*"', "", re.sub(r"#[^\n]*", "", text))
            used = set(re.findall(r"[A-Za-z][A-Za-z0-9_]*", stripped)) - {"doi", "id"}
            assert used <= vocab

    def test_builder_group_restriction(self):
        parsed = parse_query(build_paper_query("10.1/x", ["title", "project"]))
        assert [f.name for f in parsed.selection] == ["title", "project"]
        with pytest.raises(SchemaError):
            build_paper_query("10.1/x", ["nope"])
        with pytest.raises(SchemaError):
            build_person_query(PERSON_ORCID, ["nope"])
