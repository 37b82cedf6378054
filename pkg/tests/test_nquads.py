import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dilated import Blank, Dataset, Iri, Literal, ParseError, Quad, Triple, parse_nquads, parse_term, serialize_nquads

from conftest import literals, nodes, triples

datasets = st.builds(
    Dataset, st.lists(st.builds(Quad, triples, st.one_of(st.none(), nodes)), max_size=10)
)


def test_single_default_triple():
    ds = parse_nquads("<ex:a> <ex:p> <ex:b> .")
    assert ds == Dataset([Quad(Triple(Iri("ex:a"), Iri("ex:p"), Iri("ex:b")))])


def test_named_graph_language_literal():
    ds = parse_nquads('<ex:a> <ex:p> "hi"@en <ex:g> .\n')
    assert ds.named == {Iri("ex:g"): ds.named[Iri("ex:g")]}
    (q,) = ds.quads
    assert q.triple.object == Literal("hi", language="en")
    assert q.graph == Iri("ex:g")


def test_literal_subject_rejected():
    with pytest.raises(ParseError) as info:
        parse_nquads('"x" <ex:p> <ex:b> .')
    assert (info.value.line, info.value.column) == (1, 1)


@pytest.mark.parametrize(
    "line, col",
    [
        ("<ex:a> <ex:p> <ex:b>", 21),
        ("<ex:a> _:p <ex:b> .", 8),
        ('<ex:a> <ex:p> <ex:b> "g" .', 22),
        ('<ex:a> <ex:p> "bad\\x" .', 19),
        ("<ex:a> <ex:p> <ex b> .", 18),
        ("<ex:a> <ex:p> <> .", 15),
        ("<ex:a><ex:p> <ex:b> .", 7),
        ("<ex:a> <ex:p> <ex:b> . junk", 24),
        ("<ex:a> <ex:p> .", 15),
        ('<ex:a> <ex:p> "x"@ .', 19),
        ('<ex:a> <ex:p> "x"^^"y" .', 20),
        ('<ex:a> <ex:p> "\\ud800" .', 16),
        ("<ex:a> <ex:p> <ex:b> <ex:g> <ex:h> .", 29),
    ],
)
def test_malformed_lines(line, col):
    with pytest.raises(ParseError) as info:
        parse_nquads("# header\n\n" + line + "\n")
    assert info.value.line == 3
    assert info.value.column == col


def test_escapes_and_datatypes():
    ds = parse_nquads('_:s <ex:p> "a\\"b\\\\c\\nd\\te\\rf\\u00e9"^^<ex:dt> .')
    (q,) = ds.quads
    assert q.triple.subject == Blank("s")
    assert q.triple.object == Literal('a"b\\c\nd\te\rfé', datatype="ex:dt")
    assert serialize_nquads(ds) == '_:s <ex:p> "a\\"b\\\\c\\nd\\te\\rfé"^^<ex:dt> .\n'


def test_comments_blank_lines_and_duplicates():
    text = "# c\n\n<ex:a> <ex:p> <ex:b> .\n   \n<ex:a> <ex:p> <ex:b> .\n  # indented comment\n"
    assert len(parse_nquads(text)) == 1


def test_bytes_input_and_bad_utf8():
    assert len(parse_nquads("<ex:a> <ex:p> \"é\" .\n".encode())) == 1
    with pytest.raises(ParseError) as info:
        parse_nquads(b'<ex:a> <ex:p> <ex:b> .\n<ex:a> <ex:p> "\xc3\xa9\xff" .\n')
    assert (info.value.line, info.value.column) == (2, 17)


def test_serialize_sorted_and_empty():
    assert serialize_nquads(Dataset()) == ""
    text = "<ex:z> <ex:p> <ex:b> <ex:g> .\n<ex:b> <ex:p> <ex:a> .\n<ex:a> <ex:p> <ex:b> .\n"
    assert serialize_nquads(parse_nquads(text)) == (
        "<ex:a> <ex:p> <ex:b> .\n<ex:b> <ex:p> <ex:a> .\n<ex:z> <ex:p> <ex:b> <ex:g> .\n"
    )


def test_parse_term():
    assert parse_term(" _:x ") == Blank("x")
    assert parse_term('"1"^^<ex:int>') == Literal("1", datatype="ex:int")
    with pytest.raises(ParseError):
        parse_term("<ex:a> <ex:b>")


@given(datasets)
def test_round_trip(ds):
    text = serialize_nquads(ds)
    assert parse_nquads(text) == ds
    assert serialize_nquads(parse_nquads(text)) == text


@given(literals)
def test_literal_round_trip(lit):
    assert parse_term(lit.n3()) == lit


@settings(max_examples=300)
@given(st.binary(max_size=80))
def test_arbitrary_bytes_never_crash(data):
    try:
        parse_nquads(data)
    except ParseError as exc:
        assert exc.line >= 1 and exc.column >= 1


@settings(max_examples=300)
@given(st.text(alphabet='<>_:"@^\\. \tabxu0\n#', max_size=60))
def test_grammar_soup_never_crash(text):
    try:
        parse_nquads(text)
    except ParseError as exc:
        assert 1 <= exc.line <= text.count("\n") + 1
        assert exc.column >= 1
