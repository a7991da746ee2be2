import json
import random
from pathlib import Path

import pytest

import graphcurve
from graphcurve.graph import cycle_graph, parse_graph, path_graph, subdivided_k4
from graphcurve.idealgen import curve_ring
from graphcurve.labeling import ingest_labeling, label_edges

DATA = Path(graphcurve.__file__).parent / "data"


def data_path(name):
    return DATA / name


def theta443():
    g = parse_graph(data_path("theta443_graph.json").read_text())
    lab = ingest_labeling(g, data_path("theta443_labeling.json").read_text())
    return g, lab


@pytest.fixture(scope="session")
def theta():
    return theta443()


@pytest.fixture(scope="session")
def theta_ring(theta):
    return curve_ring(theta[1])


@pytest.fixture(scope="session")
def k4_labeling():
    return label_edges(subdivided_k4(1), allow_assumption_violations=True)


@pytest.fixture(scope="session")
def c5_labeling():
    return label_edges(cycle_graph(5))


@pytest.fixture(scope="session")
def small_labelings():
    """A handful of quick admissible examples: paths, cycles, one theta graph."""
    from graphcurve.graph import theta_graph
    graphs = [path_graph(2), path_graph(4), cycle_graph(4), cycle_graph(5), cycle_graph(6),
              theta_graph(2, 2, 2)]
    return [label_edges(g) for g in graphs]


def random_fixture_graphs(n=50, seed=2024, dmax=12):
    """Reproducible admissible graphs with d <= dmax and every feasible genus."""
    from graphcurve.graph import random_valid_graph
    rng = random.Random(seed)
    out = []
    while len(out) < n:
        d = rng.randint(4, dmax)
        g = rng.randint(0, 1 + d // 8 if d >= 8 else 1)
        out.append(random_valid_graph(d, g, rng))
    return out


def load_json(name):
    return json.loads(data_path(name).read_text())


ACCEPTANCE_LINES = []


def report(number, ok, detail):
    """Record one acceptance line; it is printed now and again in the terminal summary."""
    line = f"criterion {number}: {'PASS' if ok else 'FAIL'} - {detail}"
    ACCEPTANCE_LINES.append(line)
    print(line)
    return ok


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
