import pytest

from bnsr.graph import Graph, multipartite_pairs

_ACCEPTANCE_LINES: list[str] = []


def record_criterion(name: str, passed: bool, detail: str = "") -> None:
    status = "PASS" if passed else "FAIL"
    _ACCEPTANCE_LINES.append(f"[{status}] {name}" + (f" -- {detail}" if detail else ""))


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture
def c4():
    # K_{2,2} in x1, y1, x2, y2 order: the square x1-x2-y1-y2
    return multipartite_pairs(2)


@pytest.fixture
def octahedron():
    return multipartite_pairs(3)


@pytest.fixture
def k3():
    return Graph.from_edges("abc", [("a", "b"), ("a", "c"), ("b", "c")])


@pytest.fixture
def p3():
    return Graph.from_edges("abc", [("a", "b"), ("b", "c")])
