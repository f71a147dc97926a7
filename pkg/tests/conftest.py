import itertools
import random

import pytest

from hyperzfr import kernels
from hyperzfr.hypergraph import Hypergraph

ACCEPTANCE_RESULTS = []


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name, ok, detail in ACCEPTANCE_RESULTS:
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}  {detail}")


@pytest.fixture
def triangle():
    return Hypergraph(3, [(0, 1), (0, 2), (1, 2)])


@pytest.fixture(params=sorted(kernels.backends()))
def backend(request, monkeypatch):
    """Run a test once per available kernel backend."""
    mod = kernels.backends()[request.param]
    monkeypatch.setattr(kernels, "gray_histogram", mod.gray_histogram)
    monkeypatch.setattr(kernels, "independent_counts", mod.independent_counts)
    return request.param


def random_hypergraph(rng, max_n, max_edges, max_size=4, min_n=1):
    n = rng.randint(min_n, max_n)
    pool = set()
    for _ in range(rng.randint(0, max_edges)):
        size = rng.randint(1, min(n, max_size))
        pool.add(tuple(sorted(rng.sample(range(n), size))))
    edges = sorted(pool)
    rng.shuffle(edges)
    return Hypergraph(n, edges)


def naive_independence_coeffs(H):
    """Count independent sets of each size by listing every vertex subset."""
    counts = [0] * (H.n + 1)
    edges = [set(e) for e in H.edges]
    for r in range(H.n + 1):
        for S in itertools.combinations(range(H.n), r):
            s = set(S)
            if not any(e <= s for e in edges):
                counts[r] += 1
    while len(counts) > 1 and counts[-1] == 0:
        counts.pop()
    return counts


def naive_covered(H, S):
    s = set(S)
    return sum(1 for e in H.edges if s & set(e))
