import random
from pathlib import Path

import pytest
from hypothesis import strategies as st

from dilated import Blank, Graph, Iri, Literal, Triple

DATA = Path(__file__).parent / "data"
MARKO = DATA / "marko"
FOAF_KNOWS = Iri("http://xmlns.com/foaf/0.1/knows")
MARKO_IRI = Iri("http://www.lanl.gov/ns#marko")
APEPE = Iri("http://www.ucla.edu/ns#apepe")
CAROLE = Iri("http://cap.example.org/ns#carole")

ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)


# --- hypothesis strategies -------------------------------------------------

iris = st.sampled_from([Iri(f"http://ex.org/r{i}") for i in range(8)])
blanks = st.sampled_from([Blank(f"b{i}") for i in range(4)])
lexical = st.text(st.characters(blacklist_categories=("Cs",)), max_size=6)
literals = st.one_of(
    st.builds(Literal, lexical),
    st.builds(Literal, lexical, st.just("http://www.w3.org/2001/XMLSchema#integer")),
    st.builds(lambda v, lang: Literal(v, language=lang), lexical, st.sampled_from(["en", "de-CH", "x-a1"])),
)
nodes = st.one_of(iris, blanks)
predicates = st.sampled_from([Iri(f"http://ex.org/p{i}") for i in range(3)])
triples = st.builds(Triple, nodes, predicates, st.one_of(nodes, literals))
graphs = st.builds(Graph, st.lists(triples, max_size=12))


# --- seeded generators for the fixed-count acceptance loops ---------------


def random_term(rng: random.Random, n_nodes: int):
    i = rng.randrange(n_nodes)
    return Blank(f"n{i}") if i % 5 == 4 else Iri(f"http://ex.org/n{i}")


def random_graph(rng: random.Random, max_triples: int = 30, n_nodes: int = 12, n_preds: int = 3) -> Graph:
    ts = []
    for _ in range(rng.randint(0, max_triples)):
        s = random_term(rng, n_nodes)
        p = Iri(f"http://ex.org/p{rng.randrange(n_preds)}")
        o = random_term(rng, n_nodes) if rng.random() < 0.9 else Literal(str(rng.randrange(5)))
        ts.append(Triple(s, p, o))
    return Graph(ts)


@pytest.fixture
def rng():
    return random.Random(1234)


@pytest.fixture(scope="session")
def marko_store():
    from dilated.cli import _load_store

    return _load_store([str(MARKO / "knows_alberto.nq"), str(MARKO / "knows_carole.nq")])


@pytest.fixture(scope="session")
def marko_history():
    from dilated import read_nquads

    return Graph(q.triple for q in read_nquads(MARKO / "history_scholar.nq"))
