"""Context-sensitive triple-pattern queries over a dilated graph."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Union

from .activation import ActivationConfig, ConfigError, EnergyVector, activation_score, spread
from .dilation import DilatedGraph, DilatedTriple
from .terms import Graph, Term, Triple, graph_intersection, graph_size, resources_of

INTERSECTION = "intersection"


class PatternError(ValueError):
    pass


@dataclass(frozen=True)
class ProcessContext:
    """The history graph of the requesting process."""

    history: Graph = Graph()


@dataclass(frozen=True)
class TriplePattern:
    """``None`` in any position is a wildcard."""

    subject: Optional[Term] = None
    predicate: Optional[Term] = None
    object: Optional[Term] = None

    def matches(self, t: Triple) -> bool:
        return (
            (self.subject is None or self.subject == t.subject)
            and (self.predicate is None or self.predicate == t.predicate)
            and (self.object is None or self.object == t.object)
        )


@dataclass(frozen=True)
class RankedBinding:
    triple: Triple
    score: Union[int, float]
    rank: int


Scorer = Union[str, ActivationConfig]


def match_pattern(dg: DilatedGraph, pat: TriplePattern) -> set[Triple]:
    if pat.subject is None and pat.predicate is None and pat.object is None:
        raise PatternError("pattern must fix at least one position")
    return {t for t in dg.base if pat.matches(t)}


def _full(dt: Union[DilatedTriple, Graph]) -> Graph:
    return dt.full if isinstance(dt, DilatedTriple) else dt


def intersection_score(ctx: ProcessContext, dt: Union[DilatedTriple, Graph]) -> int:
    """Number of triples the history shares with the full dilation."""
    return graph_size(graph_intersection(ctx.history, _full(dt)))


def context_energy(dg: DilatedGraph, ctx: ProcessContext, cfg: ActivationConfig) -> EnergyVector:
    """Energy diffused over the store plus history, seeded at the history's resources."""
    seeds = resources_of(ctx.history)
    if not seeds:
        return EnergyVector()
    return spread(dg.base | ctx.history, seeds, cfg)


def rank_bindings(
    dg: DilatedGraph,
    pat: TriplePattern,
    ctx: ProcessContext,
    scorer: Scorer = INTERSECTION,
) -> list[RankedBinding]:
    """Every match of ``pat`` scored against ``ctx``, best first.

    ``scorer`` is ``"intersection"`` or an :class:`ActivationConfig`.  Equal
    scores fall back to the serialized triple's lexicographic order.
    """
    candidates = match_pattern(dg, pat)
    if isinstance(scorer, ActivationConfig):
        energy = context_energy(dg, ctx, scorer)
        scores = {t: activation_score(energy, dg.dilation_of(t)) for t in candidates}
    elif scorer == INTERSECTION:
        scores = {t: intersection_score(ctx, dg.dilation_of(t)) for t in candidates}
    else:
        raise ConfigError(f"unknown scorer: {scorer!r}")
    ordered = sorted(candidates, key=lambda t: (-scores[t], t.n3()))
    return [RankedBinding(t, scores[t], i) for i, t in enumerate(ordered, start=1)]
