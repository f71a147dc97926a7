import os
import random
import subprocess
import sys

import numpy as np
import pytest

from conftest import naive_covered, naive_independence_coeffs, random_hypergraph
from hyperzfr import kernels, polynomial
from hyperzfr.hypergraph import Hypergraph


def naive_histogram(G):
    hist = np.zeros((G.n + 1, G.num_edges + 1), dtype=np.int64)
    for mask in range(1 << G.n):
        S = [v for v in range(G.n) if mask >> v & 1]
        hist[len(S), naive_covered(G, S)] += 1
    return hist


def test_backend_name():
    assert kernels.BACKEND in kernels.backends()


def test_histogram_matches_naive(backend):
    rng = random.Random(21)
    for _ in range(40):
        G = random_hypergraph(rng, 9, 12)
        ptr, idx = polynomial._incidence_csr(G)
        got = kernels.gray_histogram(G.n, ptr, idx, G.num_edges)
        assert (got == naive_histogram(G)).all()


def test_histogram_total(backend, triangle):
    h = polynomial.subset_histogram(triangle)
    assert h.sum() == 8
    assert h[1].tolist() == [0, 0, 3, 0]
    assert h[2].tolist() == [0, 0, 0, 3]


@pytest.mark.parametrize("workers", [2, 3, 8])
def test_partitioned_equals_serial(backend, workers):
    rng = random.Random(workers)
    for _ in range(10):
        G = random_hypergraph(rng, 14, 16, min_n=8)
        assert (polynomial.subset_histogram(G, workers) == polynomial.subset_histogram(G, 1)).all()


def test_blocks_cover_space(backend):
    G = Hypergraph(10, [(0, 1, 9), (2, 8), (3, 4, 5)])
    ptr, idx = polynomial._incidence_csr(G)
    parts = [kernels.gray_histogram(10, ptr, idx, 3, 3, b) for b in range(8)]
    assert (sum(parts) == kernels.gray_histogram(10, ptr, idx, 3)).all()


def test_independent_counts(backend):
    rng = random.Random(4)
    for _ in range(40):
        G = random_hypergraph(rng, 10, 12)
        assert list(polynomial.independence_poly_bruteforce(G).coeffs) == naive_independence_coeffs(G)


def test_backends_agree():
    impls = kernels.backends()
    rng = random.Random(8)
    for _ in range(20):
        G = random_hypergraph(rng, 11, 14)
        ptr, idx = polynomial._incidence_csr(G)
        hs = [m.gray_histogram(G.n, ptr, idx, G.num_edges) for m in impls.values()]
        assert all((h == hs[0]).all() for h in hs)


def test_pure_env_selects_python():
    env = dict(os.environ, HYPERZFR_PURE="1")
    out = subprocess.run([sys.executable, "-c", "from hyperzfr import kernels; print(kernels.BACKEND)"],
                         env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "python"


def test_compiled_backend_built():
    # the editable install builds the extension; flag it if it went missing
    if "cython" not in kernels.backends():
        pytest.skip("compiled extension not built")
    assert kernels.backends()["cython"].__file__.endswith((".so", ".pyd"))
