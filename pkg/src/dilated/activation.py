"""Spreading activation: decaying energy diffused from seed resources.

Nodes are the subjects and objects of a graph, each triple is an edge
``subject -> object`` (predicates are labels only, parallel triples are
parallel edges).  Starting from ``e_0`` with ``1/|seeds|`` on every seed::

    e_{t+1}(v) = decay * sum_{u -> v} e_t(u) / outdeg(u)

With ``direction="undirected"`` every triple also yields ``object -> subject``
and degrees count both ends.  Energy reaching a node without outgoing edges
is dropped.  The reported activation is the sum of every computed ``e_t``,
``t = 0`` included.

The inner loop runs in a compiled extension when one is importable and falls
back to a pure-Python kernel otherwise; set ``DILATED_PURE_PYTHON=1`` to force
the fallback.  Both kernels sum in a fixed order, so results are
bitwise-reproducible for a given input.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass
from typing import Iterable, Mapping

import numpy as np

from . import _kernel_py
from .dilation import DilatedTriple
from .terms import Graph, Term, resources_of

if os.environ.get("DILATED_PURE_PYTHON"):
    _kernel = _kernel_py
    BACKEND = "python"
else:
    try:
        from ._ext import kernel as _kernel  # type: ignore[attr-defined]
        BACKEND = "cython"
    except ImportError:
        _kernel = _kernel_py
        BACKEND = "python"

DIRECTIONS = ("out", "undirected")


class ConfigError(ValueError):
    pass


@dataclass(frozen=True)
class ActivationConfig:
    decay: float = 0.85
    max_steps: int = 10
    epsilon: float = 1e-6
    direction: str = "undirected"

    def __post_init__(self) -> None:
        if not isinstance(self.decay, (int, float)) or not 0.0 < self.decay <= 1.0:
            raise ConfigError(f"decay must lie in (0, 1], got {self.decay!r}")
        if isinstance(self.max_steps, bool) or not isinstance(self.max_steps, int) or self.max_steps < 1:
            raise ConfigError(f"max_steps must be a positive integer, got {self.max_steps!r}")
        if not isinstance(self.epsilon, (int, float)) or math.isnan(self.epsilon) or self.epsilon < 0:
            raise ConfigError(f"epsilon must be non-negative, got {self.epsilon!r}")
        if self.direction not in DIRECTIONS:
            raise ConfigError(f"direction must be one of {DIRECTIONS}, got {self.direction!r}")


class EnergyVector(Mapping[Term, float]):
    """Read-only term -> energy map; missing terms read as 0."""

    __slots__ = ("_values",)

    def __init__(self, values: Mapping[Term, float] | None = None) -> None:
        self._values = {t: float(e) for t, e in (values or {}).items() if e != 0.0}

    def __getitem__(self, term: Term) -> float:
        return self._values.get(term, 0.0)

    def __iter__(self):
        return iter(self._values)

    def __len__(self) -> int:
        return len(self._values)

    def __contains__(self, term: object) -> bool:
        return term in self._values

    def total(self) -> float:
        return math.fsum(self._values.values())

    def ranked(self) -> list[tuple[Term, float]]:
        """Non-zero entries by energy descending, then serialized term."""
        return sorted(self._values.items(), key=lambda kv: (-kv[1], kv[0].n3()))

    def __repr__(self) -> str:
        return f"EnergyVector({len(self._values)} terms)"


class _Topology:
    """Graph nodes in canonical order plus a CSR adjacency."""

    def __init__(self, g: Graph, direction: str) -> None:
        nodes = {t.subject for t in g} | {t.object for t in g}
        self.nodes: list[Term] = sorted(nodes, key=lambda term: term.n3())
        self.index = {term: i for i, term in enumerate(self.nodes)}
        targets: list[list[int]] = [[] for _ in self.nodes]
        for t in g:
            s, o = self.index[t.subject], self.index[t.object]
            targets[s].append(o)
            if direction == "undirected":
                targets[o].append(s)
        indptr = [0]
        indices: list[int] = []
        for row in targets:
            row.sort()
            indices.extend(row)
            indptr.append(len(indices))
        self.indptr = np.asarray(indptr, dtype=np.int64)
        self.indices = np.asarray(indices, dtype=np.int64)

    def vector(self, energy: Mapping[Term, float]) -> np.ndarray:
        out = np.zeros(len(self.nodes), dtype=np.float64)
        for term, e in energy.items():
            i = self.index.get(term)
            if i is not None:
                out[i] = e
        return out


def _seed_energy(seeds: Iterable[Term]) -> dict[Term, float]:
    seeds = set(seeds)
    if not seeds:
        raise ConfigError("seed set must be non-empty")
    share = 1.0 / len(seeds)
    return {s: share for s in seeds}


def spread(g: Graph, seeds: Iterable[Term], cfg: ActivationConfig = ActivationConfig()) -> EnergyVector:
    """Accumulated activation of every term reached from ``seeds``.

    Seeds that are not nodes of ``g`` keep their initial share and pass
    nothing on.
    """
    initial = _seed_energy(seeds)
    topo = _Topology(g, cfg.direction)
    acc, _ = _kernel.run(
        topo.indptr, topo.indices, topo.vector(initial), float(cfg.decay), cfg.max_steps, float(cfg.epsilon)
    )
    out = {term: float(acc[i]) for i, term in enumerate(topo.nodes)}
    for term, e in initial.items():
        if term not in topo.index:
            out[term] = e
    return EnergyVector(out)


def energy_trace(g: Graph, seeds: Iterable[Term], cfg: ActivationConfig = ActivationConfig()) -> list[EnergyVector]:
    """The per-step vectors ``e_0, e_1, ...`` that :func:`spread` sums."""
    initial = _seed_energy(seeds)
    topo = _Topology(g, cfg.direction)
    trace = [EnergyVector(initial)]
    current = topo.vector(initial)
    for _ in range(cfg.max_steps):
        current = np.asarray(_kernel.step(topo.indptr, topo.indices, current, float(cfg.decay)), dtype=np.float64)
        trace.append(EnergyVector({term: float(current[i]) for i, term in enumerate(topo.nodes)}))
        if (current.max() if len(current) else 0.0) < cfg.epsilon:
            break
    return trace


def activation_score(energy: Mapping[Term, float], dt: DilatedTriple | Graph) -> float:
    """Total energy over the resources of a dilation, summed in canonical term order."""
    g = dt.full if isinstance(dt, DilatedTriple) else dt
    terms = sorted(resources_of(g), key=lambda term: term.n3())
    return math.fsum(energy.get(term, 0.0) for term in terms)
