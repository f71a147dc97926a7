"""Independence polynomials: a brute-force oracle, the subset-sum closed form
for Z_{S_G}, and exact / floating point evaluators.

Exact scalars are :class:`fractions.Fraction`.
"""

from __future__ import annotations

import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

import numpy as np

from . import kernels
from .hypergraph import Hypergraph

# Enumeration guards (vertex counts). ZFR_MAX_N overrides all of them.
MAX_N_BRUTEFORCE = 30
MAX_N_CLOSED_FORM = 26
MAX_N_EVAL_EXACT = 22
MAX_N_EVAL_FLOAT = 30


class SizeGuardError(ValueError):
    """Input too large for an exponential-time enumeration."""


def _guard(n: int, default: int, what: str) -> None:
    env = os.environ.get("ZFR_MAX_N")
    limit = int(env) if env else default
    if n > limit:
        raise SizeGuardError(f"{what}: n={n} exceeds enumeration guard {limit} (set ZFR_MAX_N to override)")


@dataclass(frozen=True)
class IntPolynomial:
    """Dense integer polynomial, coefficients ascending; trailing zeros stripped."""

    coeffs: tuple

    def __init__(self, coeffs):
        c = [int(x) for x in coeffs]
        while len(c) > 1 and c[-1] == 0:
            c.pop()
        if not c:
            c = [0]
        object.__setattr__(self, "coeffs", tuple(c))

    @property
    def degree(self) -> int:
        return -1 if self.coeffs == (0,) else len(self.coeffs) - 1

    def __call__(self, x):
        return evaluate_exact(self, x)

    def __str__(self):
        terms = []
        for i, c in enumerate(self.coeffs):
            if c:
                terms.append(f"{c}" if i == 0 else f"{c}*x^{i}")
        return " + ".join(terms) or "0"


def evaluate_exact(P: IntPolynomial, x) -> Fraction:
    """Horner evaluation with exact rationals."""
    x = Fraction(x)
    acc = Fraction(0)
    for c in reversed(P.coeffs):
        acc = acc * x + c
    return acc


# ---------------------------------------------------------------- brute force

def independence_poly_bruteforce(H: Hypergraph) -> IntPolynomial:
    """Z_H by enumerating independent sets (sets containing no whole edge)."""
    n = H.n
    _guard(n, MAX_N_BRUTEFORCE, "brute-force enumeration")
    by_max = [[] for _ in range(n)]
    for e in H.edges:
        mask = 0
        for u in e[:-1]:
            mask |= 1 << u
        by_max[e[-1]].append(mask)
    ptr = [0]
    flat = []
    for v in range(n):
        flat.extend(by_max[v])
        ptr.append(len(flat))
    counts = kernels.independent_counts(n, np.array(ptr, dtype=np.int64),
                                        np.array(flat, dtype=np.uint64))
    return IntPolynomial(int(c) for c in counts)


# ---------------------------------------------------------------- closed form

def _incidence_csr(G: Hypergraph):
    ptr = [0]
    idx = []
    for js in G.incidence:
        idx.extend(js)
        ptr.append(len(idx))
    return np.array(ptr, dtype=np.int64), np.array(idx, dtype=np.int64)


def subset_histogram(G: Hypergraph, workers: int = 1) -> np.ndarray:
    """``hist[s, e]`` = number of ``S`` with ``|S| = s`` and ``e(S) = e``.

    With ``workers > 1`` the subset space is split on its top bits and the
    blocks are scanned concurrently; counts are merged by addition, so the
    result does not depend on scheduling.
    """
    n = G.n
    ptr, idx = _incidence_csr(G)
    m = G.num_edges
    if workers <= 1 or n < 8:
        return kernels.gray_histogram(n, ptr, idx, m, 0, 0)
    n_fixed = min(n - 4, max(1, math.ceil(math.log2(workers)) + 2))
    blocks = range(1 << n_fixed)
    with ThreadPoolExecutor(max_workers=workers) as pool:
        parts = list(pool.map(lambda b: kernels.gray_histogram(n, ptr, idx, m, n_fixed, b), blocks))
    return sum(parts[1:], parts[0])


def _binomial_rows(top: int) -> list:
    rows = [[1]]
    for _ in range(top):
        prev = rows[-1]
        rows.append([1] + [prev[i] + prev[i + 1] for i in range(len(prev) - 1)] + [1])
    return rows


def polynomial_from_histogram(hist: np.ndarray, n: int) -> IntPolynomial:
    """Expand ``sum hist[s,e] * x^(n-s) * (1+x)^e``."""
    n_edges = hist.shape[1] - 1
    rows = _binomial_rows(n_edges)
    coeffs = [0] * (n + n_edges + 1)
    for s, e in zip(*np.nonzero(hist)):
        cnt = int(hist[s, e])
        shift = n - int(s)
        for j, b in enumerate(rows[int(e)]):
            coeffs[shift + j] += cnt * b
    return IntPolynomial(coeffs)


def z_sg_closed_form(G: Hypergraph, workers: int = 1) -> IntPolynomial:
    """Z_{S_G} from ``sum_S x^(|V|-|S|) (1+x)^e(S)`` over subsets of V(G)."""
    _guard(G.n, MAX_N_CLOSED_FORM, "closed-form subset sum")
    return polynomial_from_histogram(subset_histogram(G, workers), G.n)


class PointValue(NamedTuple):
    value: object
    rigorous: bool


def eval_point_closed_form(G: Hypergraph, x, mode: str = "exact", workers: int = 1) -> PointValue:
    """Z_{S_G}(x) without expanding coefficients.

    ``mode="exact"`` gives a Fraction (rigorous); ``mode="float"`` gives a
    float accumulated with ``math.fsum`` and is never flagged rigorous.
    The convention ``0**0 == 1`` applies to the ``S = V`` term.
    """
    n = G.n
    if mode == "exact":
        _guard(n, MAX_N_EVAL_EXACT, "exact point evaluation")
    elif mode == "float":
        _guard(n, MAX_N_EVAL_FLOAT, "float point evaluation")
    else:
        raise ValueError(f"mode must be 'exact' or 'float', got {mode!r}")
    hist = subset_histogram(G, workers)
    nz = list(zip(*np.nonzero(hist)))
    if mode == "exact":
        x = Fraction(x)
        xp = [x ** i for i in range(n + 1)]
        yp = [(1 + x) ** j for j in range(hist.shape[1])]
        total = sum((int(hist[s, e]) * xp[n - s] * yp[e] for s, e in nz), Fraction(0))
        return PointValue(total, True)
    xf = float(x)
    terms = [float(hist[s, e]) * xf ** (n - int(s)) * (1.0 + xf) ** int(e) for s, e in nz]
    return PointValue(math.fsum(terms), False)


def min_expansion_ratio(G: Hypergraph) -> Fraction | None:
    """Exact ``min e(S)/|S|`` over nonempty ``S`` (exhaustive)."""
    if G.n == 0:
        return None
    _guard(G.n, MAX_N_CLOSED_FORM, "exhaustive expansion ratio")
    hist = subset_histogram(G)
    return min(Fraction(int(e), int(s)) for s, e in zip(*np.nonzero(hist)) if s > 0)
