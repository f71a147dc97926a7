"""Desk-scale oracle and invariant checks, runnable without pytest.

Functions are looked up through their modules at call time so a patched
implementation is what gets checked.
"""

from __future__ import annotations

import itertools
import math
import random
from fractions import Fraction

from . import certify, construct, hypergraph, kernels, polynomial, roots
from .hypergraph import Hypergraph


def _random_hypergraph(rng: random.Random, max_n: int, max_edges: int) -> Hypergraph:
    n = rng.randint(1, max_n)
    pool = set()
    for _ in range(rng.randint(0, max_edges)):
        size = rng.randint(1, min(n, 4))
        pool.add(tuple(sorted(rng.sample(range(n), size))))
    return Hypergraph(n, sorted(pool))


def all_graphs(max_n: int):
    """Every simple graph on ``1..max_n`` labelled vertices."""
    for n in range(1, max_n + 1):
        pairs = list(itertools.combinations(range(n), 2))
        for mask in range(1 << len(pairs)):
            yield Hypergraph(n, [pairs[i] for i in range(len(pairs)) if mask >> i & 1])


def check_triangle():
    T = Hypergraph(3, [(0, 1), (0, 2), (1, 2)])
    P = polynomial.z_sg_closed_form(T)
    Q = polynomial.independence_poly_bruteforce(construct.s_transform(T))
    if P != Q or P.coeffs != (1, 6, 15, 17, 6):
        return False, f"closed form {P.coeffs}, brute force {Q.coeffs}"
    br = roots.isolate_real_root(P, -1, 0, Fraction(1, 10 ** 6))
    if br is None or br.exact_root != Fraction(-1, 2):
        return False, f"root bracket {br}"
    return True, "Z = 1+6x+15x^2+17x^3+6x^4, root -1/2"


def check_oracle(samples: int = 60, seed: int = 7):
    rng = random.Random(seed)
    cases = list(all_graphs(4))
    cases += [_random_hypergraph(rng, 7, 9) for _ in range(samples)]
    for G in cases:
        a = polynomial.z_sg_closed_form(G)
        b = polynomial.independence_poly_bruteforce(construct.s_transform(G))
        if a != b:
            return False, f"mismatch on n={G.n} edges={list(G.edges)}: {a.coeffs} vs {b.coeffs}"
    return True, f"{len(cases)} hypergraphs"


def check_backends(seed: int = 11):
    impls = kernels.backends()
    if len(impls) < 2:
        return True, "only the python backend is available"
    rng = random.Random(seed)
    for _ in range(20):
        G = _random_hypergraph(rng, 9, 10)
        ptr, idx = polynomial._incidence_csr(G)
        hs = [m.gray_histogram(G.n, ptr, idx, G.num_edges) for m in impls.values()]
        if any((h != hs[0]).any() for h in hs[1:]):
            return False, f"histograms differ on {list(G.edges)}"
    return True, ", ".join(sorted(impls))


def check_constructions(max_delta: int = 12):
    for k in (3, 4):
        for delta in range(k - 1, max_delta + 1):
            H, p = construct.h_construction(k - 1, delta)
            prof = hypergraph.degree_profile(H)
            if not (hypergraph.uniformity(H) == k - 1 and hypergraph.is_linear(H)
                    and prof.max_degree == prof.min_degree == delta and H.n <= 2 * (k - 1) * delta):
                return False, f"H_{{{k - 1},{delta}}} fails"
            SH, meta = construct.counterexample(k, delta)
            sp = hypergraph.degree_profile(SH)
            if not (meta.n_H % 2 == 1 and hypergraph.uniformity(SH) == k
                    and hypergraph.is_linear(SH) and sp.max_degree == delta):
                return False, f"S_H for k={k}, delta={delta} fails"
    return True, f"k in (3, 4), delta up to {max_delta}"


def check_inequality_grid(max_n: int = 301):
    for n in range(3, max_n + 1, 2):
        a = math.ceil(3 * certify.ln_interval(n)[1])
        for alpha in (a, n):
            if not certify.verify_inequality_chain(n, alpha, majorant=False).holds:
                return False, f"T >= 1 at n={n}, alpha={alpha}"
    return True, f"odd n up to {max_n}"


def check_certificate():
    cert = certify.certify_counterexample(3, 1000, mode="analytic")
    checks = certify.check_certificate(cert.to_dict())
    bad = [c.name for c in checks if not c.passed]
    if bad:
        return False, f"checker rejects: {bad}"
    return True, f"k=3, delta=1000: lambda0 = {float(cert.lambda0):.6f}"


CHECKS = [
    ("triangle", check_triangle),
    ("oracle_equivalence", check_oracle),
    ("kernel_backends", check_backends),
    ("constructions", check_constructions),
    ("inequality_grid", check_inequality_grid),
    ("certificate_roundtrip", check_certificate),
]


def run(out=print) -> bool:
    ok_all = True
    for name, fn in CHECKS:
        try:
            ok, detail = fn()
        except Exception as exc:  # report, keep going
            ok, detail = False, f"{type(exc).__name__}: {exc}"
        ok_all &= ok
        out(f"{'PASS' if ok else 'FAIL'} {name}: {detail}")
    out("selftest: all passed" if ok_all else "selftest: FAILED")
    return ok_all
