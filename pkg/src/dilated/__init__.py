"""In-memory store of dilated RDF triples with context-ranked pattern queries."""

from .activation import BACKEND, ActivationConfig, ConfigError, EnergyVector, activation_score, energy_trace, spread
from .dilation import (
    DT_NS,
    DilatedGraph,
    DilatedTriple,
    DilationError,
    DilationPolicy,
    dilate,
    dilate_all,
    from_quads,
    to_quads,
)
from .engine import (
    PatternError,
    ProcessContext,
    RankedBinding,
    TriplePattern,
    intersection_score,
    match_pattern,
    rank_bindings,
)
from .nquads import ParseError, parse_nquads, parse_term, read_nquads, serialize_nquads, write_nquads
from .terms import (
    Blank,
    Dataset,
    Graph,
    Iri,
    Literal,
    Quad,
    Term,
    TermError,
    Triple,
    graph_intersection,
    graph_size,
    graph_union,
    merge_datasets,
    resources_of,
    term_equal,
)

__version__ = "0.1.0"
