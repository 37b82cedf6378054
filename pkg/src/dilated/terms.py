"""RDF terms, triples, quads, graphs and datasets as immutable values."""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping, Optional, Union

_BLANK_LABEL = re.compile(r"[A-Za-z0-9][A-Za-z0-9_]*\Z")
_LANG_TAG = re.compile(r"[A-Za-z]+(-[A-Za-z0-9]+)*\Z")
_IRI_FORBIDDEN = re.compile(r"[\s<>]")


class TermError(ValueError):
    """Raised when a term or statement violates RDF positional rules."""


def _check_iri(value: str) -> None:
    if not isinstance(value, str) or not value or _IRI_FORBIDDEN.search(value):
        raise TermError(f"invalid IRI: {value!r}")


@dataclass(frozen=True, slots=True)
class Iri:
    value: str

    def __post_init__(self) -> None:
        _check_iri(self.value)

    def n3(self) -> str:
        return f"<{self.value}>"

    def __str__(self) -> str:
        return self.n3()


@dataclass(frozen=True, slots=True)
class Blank:
    label: str

    def __post_init__(self) -> None:
        if not isinstance(self.label, str) or not _BLANK_LABEL.match(self.label):
            raise TermError(f"invalid blank node label: {self.label!r}")

    def n3(self) -> str:
        return f"_:{self.label}"

    def __str__(self) -> str:
        return self.n3()


_ESCAPES = {"\\": "\\\\", '"': '\\"', "\n": "\\n", "\r": "\\r", "\t": "\\t"}
_ESCAPE_RE = re.compile(r'[\\"\n\r\t]')


@dataclass(frozen=True, slots=True)
class Literal:
    lexical: str
    datatype: Optional[str] = None
    language: Optional[str] = None

    def __post_init__(self) -> None:
        if not isinstance(self.lexical, str):
            raise TermError("literal lexical form must be a string")
        if any(0xD800 <= ord(c) <= 0xDFFF for c in self.lexical):
            raise TermError("literal contains a surrogate code point")
        if self.datatype is not None and self.language is not None:
            raise TermError("literal cannot carry both datatype and language tag")
        if self.datatype is not None:
            _check_iri(self.datatype)
        if self.language is not None and not _LANG_TAG.match(self.language):
            raise TermError(f"invalid language tag: {self.language!r}")

    def n3(self) -> str:
        body = '"' + _ESCAPE_RE.sub(lambda m: _ESCAPES[m.group()], self.lexical) + '"'
        if self.language is not None:
            return f"{body}@{self.language}"
        if self.datatype is not None:
            return f"{body}^^<{self.datatype}>"
        return body

    def __str__(self) -> str:
        return self.n3()


Term = Union[Iri, Blank, Literal]


def term_equal(a: Term, b: Term) -> bool:
    """Syntactic term equality: same variant, identical fields, no normalization."""
    return type(a) is type(b) and a == b


@dataclass(frozen=True, slots=True)
class Triple:
    subject: Term
    predicate: Term
    object: Term

    def __post_init__(self) -> None:
        if not isinstance(self.subject, (Iri, Blank)):
            raise TermError(f"subject must be an IRI or blank node, got {self.subject!r}")
        if not isinstance(self.predicate, Iri):
            raise TermError(f"predicate must be an IRI, got {self.predicate!r}")
        if not isinstance(self.object, (Iri, Blank, Literal)):
            raise TermError(f"object must be an RDF term, got {self.object!r}")

    def n3(self) -> str:
        return f"{self.subject.n3()} {self.predicate.n3()} {self.object.n3()}"

    def __iter__(self) -> Iterator[Term]:
        return iter((self.subject, self.predicate, self.object))


@dataclass(frozen=True, slots=True)
class Quad:
    triple: Triple
    graph: Optional[Term] = None

    def __post_init__(self) -> None:
        if not isinstance(self.triple, Triple):
            raise TermError("quad requires a Triple")
        if self.graph is not None and not isinstance(self.graph, (Iri, Blank)):
            raise TermError(f"graph name must be an IRI or blank node, got {self.graph!r}")

    def sort_key(self) -> tuple[str, str, str, str]:
        t = self.triple
        g = "" if self.graph is None else self.graph.n3()
        return (g, t.subject.n3(), t.predicate.n3(), t.object.n3())

    def n3(self) -> str:
        if self.graph is None:
            return f"{self.triple.n3()} ."
        return f"{self.triple.n3()} {self.graph.n3()} ."


class Graph:
    """An immutable set of triples."""

    __slots__ = ("_triples", "_hash")

    def __init__(self, triples: Iterable[Triple] = ()) -> None:
        ts = frozenset(triples)
        for t in ts:
            if not isinstance(t, Triple):
                raise TypeError(f"Graph holds Triple values, got {type(t).__name__}")
        self._triples = ts
        self._hash: Optional[int] = None

    @property
    def triples(self) -> frozenset[Triple]:
        return self._triples

    def __len__(self) -> int:
        return len(self._triples)

    def __iter__(self) -> Iterator[Triple]:
        return iter(self._triples)

    def __contains__(self, t: object) -> bool:
        return t in self._triples

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._triples == other._triples

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self._triples)
        return self._hash

    def __repr__(self) -> str:
        return f"Graph({len(self._triples)} triples)"

    def __and__(self, other: Graph) -> Graph:
        return graph_intersection(self, other)

    def __or__(self, other: Graph) -> Graph:
        return graph_union(self, other)

    def __sub__(self, other: Graph) -> Graph:
        return Graph(self._triples - other._triples)

    def __le__(self, other: Graph) -> bool:
        return self._triples <= other._triples

    def sorted(self) -> list[Triple]:
        """Triples in canonical serialized order."""
        return sorted(self._triples, key=lambda t: (t.subject.n3(), t.predicate.n3(), t.object.n3()))


def graph_intersection(a: Graph, b: Graph) -> Graph:
    return Graph(a.triples & b.triples)


def graph_union(a: Graph, b: Graph) -> Graph:
    return Graph(a.triples | b.triples)


def graph_size(g: Graph) -> int:
    return len(g)


def resources_of(g: Graph) -> set[Term]:
    """Every term in subject, predicate or object position of ``g``."""
    out: set[Term] = set()
    for t in g:
        out.add(t.subject)
        out.add(t.predicate)
        out.add(t.object)
    return out


class Dataset:
    """A default graph plus named graphs, stored as a set of quads.

    Named graphs exist only while they hold at least one triple.
    """

    __slots__ = ("_quads",)

    def __init__(self, quads: Iterable[Quad] = ()) -> None:
        qs = frozenset(quads)
        for q in qs:
            if not isinstance(q, Quad):
                raise TypeError(f"Dataset holds Quad values, got {type(q).__name__}")
        self._quads = qs

    @classmethod
    def from_graphs(cls, default: Graph = Graph(), named: Optional[Mapping[Term, Graph]] = None) -> Dataset:
        quads = [Quad(t) for t in default]
        for name, g in (named or {}).items():
            quads.extend(Quad(t, name) for t in g)
        return cls(quads)

    @property
    def quads(self) -> frozenset[Quad]:
        return self._quads

    @property
    def default(self) -> Graph:
        return Graph(q.triple for q in self._quads if q.graph is None)

    @property
    def named(self) -> dict[Term, Graph]:
        groups: dict[Term, list[Triple]] = {}
        for q in self._quads:
            if q.graph is not None:
                groups.setdefault(q.graph, []).append(q.triple)
        return {name: Graph(ts) for name, ts in groups.items()}

    def blank_labels(self) -> set[str]:
        labels = set()
        for q in self._quads:
            for term in (*q.triple, q.graph):
                if isinstance(term, Blank):
                    labels.add(term.label)
        return labels

    def __len__(self) -> int:
        return len(self._quads)

    def __iter__(self) -> Iterator[Quad]:
        return iter(self._quads)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Dataset):
            return NotImplemented
        return self._quads == other._quads

    def __hash__(self) -> int:
        return hash(self._quads)

    def __repr__(self) -> str:
        return f"Dataset({len(self._quads)} quads)"


def _relabel(term: Optional[Term], mapping: Mapping[str, str]) -> Optional[Term]:
    if isinstance(term, Blank) and term.label in mapping:
        return Blank(mapping[term.label])
    return term


def merge_datasets(*datasets: Dataset) -> Dataset:
    """Union of datasets with blank nodes kept apart per input.

    Labels of later datasets that clash with labels already taken are
    rewritten to ``<label>_<n>`` with the smallest free ``n >= 2``.
    """
    taken: set[str] = set()
    quads: set[Quad] = set()
    for ds in datasets:
        labels = ds.blank_labels()
        mapping: dict[str, str] = {}
        for label in sorted(labels):
            if label in taken:
                n = 2
                while f"{label}_{n}" in taken or f"{label}_{n}" in labels:
                    n += 1
                mapping[label] = f"{label}_{n}"
                taken.add(mapping[label])
        taken |= labels
        for q in ds:
            if mapping:
                s, p, o = q.triple
                q = Quad(Triple(_relabel(s, mapping), p, _relabel(o, mapping)), _relabel(q.graph, mapping))
            quads.add(q)
    return Dataset(quads)
