import random

import pytest
from hypothesis import strategies as st

from loopbraid.aggmorph import AggMorphism
from loopbraid.freewords import FreeGroupEndo, Word
from loopbraid.modring import ModuleElt

ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture
def rng():
    return random.Random(20240611)


def letters(rank, max_len=8):
    return st.lists(
        st.integers(1, rank).flatmap(lambda i: st.sampled_from([i, -i])), max_size=max_len
    )


def words(rank, max_len=8):
    return letters(rank, max_len).map(lambda ls: Word(rank, ls))


def module_elts(rank, max_terms=4, max_len=5):
    term = st.tuples(st.tuples(words(rank, max_len), st.integers(1, rank)), st.integers(-3, 3))
    return st.lists(term, max_size=max_terms).map(lambda ts: ModuleElt(rank, ts))


def morphisms(rank, max_len=3, max_terms=2):
    return st.builds(
        lambda ws, ms: AggMorphism(FreeGroupEndo(ws, rank), ms),
        st.lists(words(rank, max_len), min_size=rank, max_size=rank),
        st.lists(module_elts(rank, max_terms, max_len), min_size=rank, max_size=rank),
    )


def random_word(rng, rank, max_len=8):
    return Word(rank, [rng.choice((1, -1)) * rng.randint(1, rank) for _ in range(rng.randint(0, max_len))])


def random_module(rng, rank, max_terms=4, max_len=5):
    return ModuleElt(
        rank,
        [((random_word(rng, rank, max_len), rng.randint(1, rank)), rng.randint(-3, 3)) for _ in range(rng.randint(0, max_terms))],
    )


def random_morphism(rng, rank, max_len=8, max_terms=2):
    return AggMorphism(
        FreeGroupEndo([random_word(rng, rank, max_len) for _ in range(rank)], rank),
        [random_module(rng, rank, max_terms, 3) for _ in range(rank)],
    )


def assert_pruned(m):
    assert all(c != 0 for c in m.coefficients())
