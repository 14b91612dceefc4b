import numpy as np
import pytest
from hypothesis import strategies as st

from ctm_ramsey.graph import ColoredGraph

ACCEPTANCE_LINES: list[str] = []


@st.composite
def colorings(draw, min_vertices=1, max_vertices=9, num_colors=2):
    n = draw(st.integers(min_vertices, max_vertices))
    cells = draw(st.lists(st.integers(0, num_colors - 1), min_size=n * (n - 1) // 2, max_size=n * (n - 1) // 2))
    table = np.zeros((n, n), dtype=np.uint8)
    iu = np.triu_indices(n, 1)
    table[iu] = cells
    table.T[iu] = cells
    return ColoredGraph(table, num_colors=num_colors)


def graph_from_red(n, red_edges):
    return ColoredGraph.from_edges(n, {0: red_edges}, default=1)


@pytest.fixture
def record_acceptance():
    def record(label: str, ok: bool, detail: str = ""):
        line = f"{label}: {'PASS' if ok else 'FAIL'}" + (f" ({detail})" if detail else "")
        ACCEPTANCE_LINES.append(line)
        print(line)
        return ok

    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
