"""Line-oriented N-Quads reader and canonical writer.

Grammar per line::

    <s-term> <p-term> <o-term> [<g-term>] .

Terms are ``<iri>``, ``_:label``, ``"lexical"``, ``"lexical"@lang`` or
``"lexical"^^<iri>``.  Lines that are blank or start with ``#`` are skipped.
No ``@prefix``/``@base`` and no relative IRIs.
"""

from __future__ import annotations

import re
from typing import Iterable, Optional, Union

from .terms import Blank, Dataset, Iri, Literal, Quad, Term, TermError, Triple

_WS = " \t"
_BLANK_LABEL = re.compile(r"[A-Za-z0-9][A-Za-z0-9_]*")
_LANG = re.compile(r"[A-Za-z]+(?:-[A-Za-z0-9]+)*")
_SIMPLE_ESCAPES = {'"': '"', "\\": "\\", "n": "\n", "t": "\t", "r": "\r"}
_HEX4 = re.compile(r"[0-9A-Fa-f]{4}")


class ParseError(ValueError):
    """Malformed N-Quads input; ``line`` and ``column`` are 1-based."""

    def __init__(self, line: int, column: int, message: str) -> None:
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column
        self.message = message


class _LineScanner:
    def __init__(self, text: str, lineno: int) -> None:
        self.text = text
        self.pos = 0
        self.lineno = lineno

    def fail(self, message: str, pos: Optional[int] = None) -> ParseError:
        return ParseError(self.lineno, (self.pos if pos is None else pos) + 1, message)

    def skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos] in _WS:
            self.pos += 1

    def at_end(self) -> bool:
        return self.pos >= len(self.text)

    def peek(self) -> str:
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def iri_body(self) -> str:
        # caller has seen '<'
        start = self.pos + 1
        i = start
        while i < len(self.text) and self.text[i] != ">":
            c = self.text[i]
            if c in " \t\r\n\f\v<" or c.isspace():
                raise self.fail("invalid character in IRI", i)
            i += 1
        if i >= len(self.text):
            raise self.fail("unterminated IRI")
        if i == start:
            raise self.fail("empty IRI")
        self.pos = i + 1
        return self.text[start:i]

    def term(self) -> Term:
        c = self.peek()
        start = self.pos
        if c == "<":
            return Iri(self.iri_body())
        if c == "_":
            if not self.text.startswith("_:", self.pos):
                raise self.fail("expected '_:' blank node prefix")
            m = _BLANK_LABEL.match(self.text, self.pos + 2)
            if m is None:
                raise self.fail("invalid blank node label", self.pos + 2)
            self.pos = m.end()
            return Blank(m.group())
        if c == '"':
            lexical = self.string_body()
            if self.peek() == "@":
                m = _LANG.match(self.text, self.pos + 1)
                if m is None:
                    raise self.fail("invalid language tag", self.pos + 1)
                self.pos = m.end()
                return Literal(lexical, language=m.group())
            if self.text.startswith("^^", self.pos):
                self.pos += 2
                if self.peek() != "<":
                    raise self.fail("expected '<' after '^^'")
                return Literal(lexical, datatype=self.iri_body())
            return Literal(lexical)
        if not c:
            raise self.fail("unexpected end of line", start)
        raise self.fail(f"unexpected character {c!r}", start)

    def string_body(self) -> str:
        out = []
        i = self.pos + 1
        text = self.text
        while True:
            if i >= len(text):
                raise self.fail("unterminated string literal")
            c = text[i]
            if c == '"':
                break
            if c == "\\":
                esc = text[i + 1 : i + 2]
                if esc in _SIMPLE_ESCAPES:
                    out.append(_SIMPLE_ESCAPES[esc])
                    i += 2
                    continue
                if esc == "u":
                    m = _HEX4.match(text, i + 2)
                    if m is None:
                        raise self.fail("malformed \\u escape", i)
                    cp = int(m.group(), 16)
                    if 0xD800 <= cp <= 0xDFFF:
                        raise self.fail("\\u escape denotes a surrogate", i)
                    out.append(chr(cp))
                    i = m.end()
                    continue
                raise self.fail(f"unknown escape \\{esc}", i)
            if 0xD800 <= ord(c) <= 0xDFFF:
                raise self.fail("surrogate code point in literal", i)
            out.append(c)
            i += 1
        self.pos = i + 1
        return "".join(out)


def _parse_line(line: str, lineno: int) -> Quad:
    sc = _LineScanner(line, lineno)
    sc.skip_ws()
    terms: list[tuple[int, Term]] = []
    while True:
        if sc.peek() == ".":
            break
        if sc.at_end():
            raise sc.fail("missing terminal '.'")
        if len(terms) == 4:
            raise sc.fail("expected '.' after graph term")
        start = sc.pos
        try:
            terms.append((start, sc.term()))
        except TermError as exc:
            raise sc.fail(str(exc), start) from None
        if not sc.at_end() and sc.peek() not in _WS and sc.peek() != ".":
            raise sc.fail("expected whitespace between terms")
        sc.skip_ws()
    dot = sc.pos
    sc.pos += 1
    sc.skip_ws()
    if not sc.at_end():
        raise sc.fail("unexpected content after '.'")
    if len(terms) < 3:
        raise sc.fail(f"expected 3 or 4 terms before '.', got {len(terms)}", dot)
    (s_at, s), (p_at, p), (o_at, o) = terms[:3]
    if not isinstance(s, (Iri, Blank)):
        raise sc.fail("literal in subject position", s_at)
    if not isinstance(p, Iri):
        raise sc.fail("predicate must be an IRI", p_at)
    graph = None
    if len(terms) == 4:
        g_at, graph = terms[3]
        if isinstance(graph, Literal):
            raise sc.fail("literal in graph position", g_at)
    return Quad(Triple(s, p, o), graph)


def parse_term(text: str, lineno: int = 1) -> Term:
    """Parse a single N-Quads term occupying the whole of ``text`` (surrounding blanks allowed)."""
    sc = _LineScanner(text, lineno)
    sc.skip_ws()
    start = sc.pos
    try:
        term = sc.term()
    except TermError as exc:
        raise sc.fail(str(exc), start) from None
    sc.skip_ws()
    if not sc.at_end():
        raise sc.fail("unexpected content after term")
    return term


def _decode(data: bytes) -> str:
    try:
        return data.decode("utf-8")
    except UnicodeDecodeError as exc:
        head = data[: exc.start]
        lineno = head.count(b"\n") + 1
        line_start = head.rfind(b"\n") + 1
        column = len(head[line_start:].decode("utf-8")) + 1
        raise ParseError(lineno, column, "invalid UTF-8") from None


def iter_quads(text: Union[str, bytes]) -> Iterable[Quad]:
    if isinstance(text, (bytes, bytearray)):
        text = _decode(bytes(text))
    for lineno, line in enumerate(text.split("\n"), start=1):
        stripped = line.lstrip(_WS)
        if not stripped or stripped.startswith("#"):
            continue
        yield _parse_line(line, lineno)


def parse_nquads(text: Union[str, bytes]) -> Dataset:
    """Parse N-Quads text (or UTF-8 bytes) into a :class:`Dataset`.

    Raises:
        ParseError: on the first malformed line.
    """
    return Dataset(iter_quads(text))


def serialize_nquads(dataset: Dataset) -> str:
    """Canonical form: one line per quad, sorted by (graph, s, p, o) serialization."""
    quads = sorted(dataset.quads, key=Quad.sort_key)
    return "".join(q.n3() + "\n" for q in quads)


def read_nquads(path) -> Dataset:
    with open(path, "rb") as fh:
        return parse_nquads(fh.read())


def write_nquads(dataset: Dataset, path) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(serialize_nquads(dataset))
