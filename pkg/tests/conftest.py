import itertools
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from trigraph.errors import RetryExhausted
from trigraph.generators import (
    friendship,
    paley9,
    random_locally_linear,
    random_triangular_cactus,
    triangular_snake,
)
from trigraph.graph import complete_graph, graph_from_edge_list

FIXTURES = Path(__file__).parent / "fixtures"

BIASES = (0, 0.25, 0.5, 0.75, 0.9)


def hamming3(d):
    """H(d, 3): every vertex lies in d triangles (lines), so m = d * 3^(d-1)."""
    vs = list(itertools.product(range(3), repeat=d))
    idx = {v: i for i, v in enumerate(vs)}
    pairs = [
        (idx[a], idx[b])
        for a, b in itertools.combinations(vs, 2)
        if sum(x != y for x, y in zip(a, b)) == 1
    ]
    return graph_from_edge_list(len(vs), pairs)


def triangle_ring(k):
    """k triangles glued cyclically, consecutive ones sharing one vertex; G* = C_k."""
    pairs = []
    for i in range(k):
        a, b, apex = i, (i + 1) % k, k + i
        pairs += [(a, b), (a, apex), (b, apex)]
    return graph_from_edge_list(2 * k, pairs)


def random_instances():
    """The randomized suite: 110 cacti and 110 general instances, t <= 15."""
    out = []
    for seed in range(110):
        t = 1 + seed % 15
        out.append((f"cactus(t={t},seed={seed})", random_triangular_cactus(t, seed)))
    for seed in range(110):
        t = 1 + seed % 15
        bias = BIASES[seed % len(BIASES)]
        for attempt in range(10):
            s = seed + 1000 * attempt
            try:
                g = random_locally_linear(t, bias, s)
            except RetryExhausted:
                continue
            out.append((f"rll(t={t},bias={bias},seed={s})", g))
            break
    return out


def named_instances():
    out = [("K3", complete_graph(3)), ("paley9", paley9())]
    out += [(f"snake({t})", triangular_snake(t)) for t in (1, 2, 5, 8)]
    out += [(f"friendship({t})", friendship(t)) for t in (1, 2, 3, 5)]
    out += [(f"ring({k})", triangle_ring(k)) for k in (4, 5, 6)]
    out += [("hamming(3,3)", hamming3(3))]
    return out


_SUITE = None


def suite():
    global _SUITE
    if _SUITE is None:
        _SUITE = named_instances() + random_instances()
    return _SUITE


@pytest.fixture(scope="session")
def instances():
    return suite()


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call":
        item.rep_call = rep


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if results:
        terminalreporter.section("acceptance criteria")
        for line in results:
            terminalreporter.write_line(line)
