"""Dilated triples: a core statement plus the statements that contextualize it.

A dilated graph is stored on disk as named graphs, one per core triple.  The
default graph carries three marker quads per named graph that identify which
member of the named graph is the core::

    _:g <urn:dilated:subject>   <s> .
    _:g <urn:dilated:predicate> <p> .
    _:g <urn:dilated:object>    <o> .
"""

from __future__ import annotations

import hashlib
from collections import deque
from dataclasses import dataclass, field
from typing import Mapping, Optional

from .terms import Blank, Dataset, Graph, Iri, Quad, Term, Triple

DT_NS = "urn:dilated:"
DT_SUBJECT = Iri(DT_NS + "subject")
DT_PREDICATE = Iri(DT_NS + "predicate")
DT_OBJECT = Iri(DT_NS + "object")
_MARKERS = (DT_SUBJECT, DT_PREDICATE, DT_OBJECT)


class DilationError(ValueError):
    pass


@dataclass(frozen=True)
class DilatedTriple:
    core: Triple
    supplement: Graph
    name: Term

    def __post_init__(self) -> None:
        if self.core in self.supplement:
            raise DilationError("supplement must not contain the core triple")
        if not isinstance(self.name, (Iri, Blank)):
            raise DilationError("dilation name must be an IRI or blank node")

    @property
    def full(self) -> Graph:
        return Graph(self.supplement.triples | {self.core})


@dataclass(frozen=True)
class DilationPolicy:
    """Either ``khop`` (``k=None`` means unbounded) or ``whole-graph``."""

    kind: str
    k: Optional[int] = None

    def __post_init__(self) -> None:
        if self.kind not in ("khop", "whole-graph"):
            raise DilationError(f"unknown dilation policy: {self.kind!r}")
        if self.kind == "khop" and self.k is not None and (not isinstance(self.k, int) or self.k < 0):
            raise DilationError(f"k must be a non-negative integer, got {self.k!r}")

    @classmethod
    def khop(cls, k: Optional[int]) -> DilationPolicy:
        return cls("khop", k)

    @classmethod
    def whole_graph(cls) -> DilationPolicy:
        return cls("whole-graph")


@dataclass(frozen=True)
class DilatedGraph:
    base: Graph
    entries: Mapping[Triple, DilatedTriple] = field(default_factory=dict)

    def dilation_of(self, t: Triple) -> Graph:
        """Full dilation of ``t``; a base triple without an entry dilates to itself."""
        entry = self.entries.get(t)
        if entry is not None:
            return entry.full
        if t in self.base:
            return Graph([t])
        raise DilationError(f"triple not in base: {t.n3()}")

    def __len__(self) -> int:
        return len(self.entries)


def dilation_name(core: Triple) -> Blank:
    digest = hashlib.sha256(core.n3().encode("utf-8")).hexdigest()
    return Blank("t" + digest[:32])


def _adjacency(base: Graph) -> dict[Term, set[Term]]:
    adj: dict[Term, set[Term]] = {}
    for t in base:
        adj.setdefault(t.subject, set()).add(t.object)
        adj.setdefault(t.object, set()).add(t.subject)
    return adj


def _within(adj: Mapping[Term, set[Term]], start: set[Term], k: Optional[int]) -> set[Term]:
    seen = set(start)
    frontier = deque((n, 0) for n in start)
    while frontier:
        node, d = frontier.popleft()
        if k is not None and d >= k:
            continue
        for nb in adj.get(node, ()):
            if nb not in seen:
                seen.add(nb)
                frontier.append((nb, d + 1))
    return seen


def _khop_members(base: Graph, adj: Mapping[Term, set[Term]], core: Triple, k: Optional[int]) -> Graph:
    # k=0 is the minimal dilation even when parallel edges join s and o
    if k == 0:
        return Graph([core])
    reach = _within(adj, {core.subject, core.object}, k)
    return Graph(t for t in base if t.subject in reach and t.object in reach)


def _build(base: Graph, core: Triple, policy: DilationPolicy, adj) -> DilatedTriple:
    if policy.kind == "whole-graph":
        full = base
    else:
        full = _khop_members(base, adj, core, policy.k)
    return DilatedTriple(core, Graph(full.triples - {core}), dilation_name(core))


def dilate(base: Graph, core: Triple, policy: DilationPolicy) -> DilatedTriple:
    if core not in base:
        raise DilationError(f"core triple is not asserted in base: {core.n3()}")
    adj = _adjacency(base) if policy.kind == "khop" else None
    return _build(base, core, policy, adj)


def dilate_all(base: Graph, policy: DilationPolicy) -> DilatedGraph:
    adj = _adjacency(base) if policy.kind == "khop" else None
    entries = {t: _build(base, t, policy, adj) for t in base.sorted()}
    return DilatedGraph(base, entries)


def to_quads(dg: DilatedGraph) -> Dataset:
    quads = []
    for core, entry in dg.entries.items():
        g = entry.name
        quads.extend(Quad(t, g) for t in entry.full)
        quads.append(Quad(Triple(g, DT_SUBJECT, core.subject)))
        quads.append(Quad(Triple(g, DT_PREDICATE, core.predicate)))
        quads.append(Quad(Triple(g, DT_OBJECT, core.object)))
    return Dataset(quads)


def from_quads(dataset: Dataset) -> DilatedGraph:
    """Rebuild a dilated graph from its named-graph encoding.

    The base is every triple that occurs in some named graph, so hand-authored
    dilations whose supplementary triples are not themselves marked still
    yield a store where each supplement lies within the base.

    Raises:
        DilationError: missing or conflicting markers, a core absent from its
            own named graph, or unexpected default-graph triples.
    """
    markers: dict[Term, dict[Iri, list[Term]]] = {}
    for t in dataset.default:
        if t.predicate not in _MARKERS:
            raise DilationError(f"unexpected default-graph triple: {t.n3()}")
        markers.setdefault(t.subject, {}).setdefault(t.predicate, []).append(t.object)

    named = dataset.named
    entries: dict[Triple, DilatedTriple] = {}
    for g in sorted(set(named) | set(markers), key=lambda term: term.n3()):
        m = markers.get(g)
        if m is None:
            raise DilationError(f"named graph {g.n3()} lacks core markers")
        parts = []
        for pred in _MARKERS:
            values = m.get(pred, [])
            if len(values) > 1:
                raise DilationError(f"conflicting core markers for {g.n3()}")
            if not values:
                raise DilationError(f"named graph {g.n3()} lacks marker {pred.n3()}")
            parts.append(values[0])
        try:
            core = Triple(*parts)
        except ValueError as exc:
            raise DilationError(f"invalid core markers for {g.n3()}: {exc}") from None
        members = named.get(g, Graph())
        if core not in members:
            raise DilationError(f"core not in dilation {g.n3()}")
        if core in entries:
            raise DilationError(f"duplicate dilation for core {core.n3()}")
        entries[core] = DilatedTriple(core, Graph(members.triples - {core}), g)

    base = Graph(t for g in named.values() for t in g)
    return DilatedGraph(base, entries)
