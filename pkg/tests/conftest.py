from pathlib import Path

import pytest
from hypothesis import strategies as st

from trendreason.fixtures import load_fixture
from trendreason.model import Relation, RelationKind, TrendModel
from trendreason.render import read_scenario_csv
from trendreason.solver import solve
from trendreason.transitions import build_graph

DATA = Path(__file__).parent / "data"


def golden(name: str):
    return read_scenario_csv((DATA / name).read_text())


@pytest.fixture(scope="session")
def model1():
    return load_fixture("gasi_model1")


@pytest.fixture(scope="session")
def model2():
    return load_fixture("gasi_model2")


@pytest.fixture(scope="session")
def set1(model1):
    return solve(model1)


@pytest.fixture(scope="session")
def set2(model2):
    return solve(model2)


@pytest.fixture(scope="session")
def graph1(set1):
    return build_graph(set1)


@pytest.fixture(scope="session")
def graph2(set2):
    return build_graph(set2)


@st.composite
def trend_models(draw, max_vars=5, max_relations=6):
    n = draw(st.integers(1, max_vars))
    names = [f"V{i}" for i in range(n)]
    if n < 2:
        return TrendModel(tuple(names), ())
    rel = st.builds(
        lambda k, pair: Relation(k, names[pair[0]], names[pair[1]]),
        st.sampled_from(list(RelationKind)),
        st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)).filter(lambda p: p[0] != p[1]),
    )
    rels = draw(st.lists(rel, max_size=max_relations, unique=True))
    return TrendModel(tuple(names), tuple(rels))


ACCEPTANCE: list[tuple[str, bool, str]] = []


@pytest.fixture
def report():
    def record(criterion: str, ok: bool, detail: str = "") -> None:
        ACCEPTANCE.append((criterion, ok, detail))
        assert ok, f"{criterion}: {detail}"
    return record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for criterion, ok, detail in ACCEPTANCE:
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {criterion}  {detail}")
