from itertools import combinations

import numpy as np
from hypothesis import strategies as st

from bandspec.graphs import FiniteGraph


@st.composite
def graphs(draw, min_vertices=1, max_vertices=6):
    n = draw(st.integers(min_vertices, max_vertices))
    pairs = list(combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return FiniteGraph.from_edges(n, chosen)


@st.composite
def connected_graphs(draw, max_vertices=6):
    # random spanning tree plus extra edges
    n = draw(st.integers(1, max_vertices))
    edges = {(draw(st.integers(0, v - 1)), v) for v in range(1, n)}
    pairs = list(combinations(range(n), 2))
    if pairs:
        edges |= set(draw(st.lists(st.sampled_from(pairs), unique=True, max_size=6)))
    return FiniteGraph.from_edges(n, edges)


def random_graph(rng: np.random.Generator, n: int, p: float = 0.5) -> FiniteGraph:
    return FiniteGraph.from_edges(n, [e for e in combinations(range(n), 2) if rng.random() < p])


ACCEPTANCE = []  # (criterion, passed, detail)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name, ok, detail in sorted(ACCEPTANCE, key=lambda r: int(r[0].split()[0])):
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] {name}: {detail}")
