"""The S_G transform, the modular-lines hypergraph H_{k,Delta}, and the
counterexample pipeline that chains them."""

from __future__ import annotations

from dataclasses import asdict, dataclass

from .hypergraph import Hypergraph, remove_vertex


def s_transform(G: Hypergraph) -> Hypergraph:
    """Add a fresh vertex ``n + j`` to edge ``j`` of ``G``.

    Vertices ``0..n-1`` keep their ids; edge order is preserved.
    """
    n = G.n
    edges = [e + (n + j,) for j, e in enumerate(G.edges)]
    return Hypergraph(n + len(edges), edges, _trusted=True)


def is_prime(m: int) -> bool:
    if m < 2:
        return False
    if m % 2 == 0:
        return m == 2
    d = 3
    while d * d <= m:
        if m % d == 0:
            return False
        d += 2
    return True


def find_prime_in(delta: int) -> int:
    """Smallest prime ``p >= delta``; Bertrand's postulate keeps it ``<= 2*delta``."""
    if delta < 2:
        raise ValueError(f"delta must be >= 2, got {delta}")
    p = delta
    while not is_prime(p):
        p += 1
    return p


def vertex_id(i: int, x: int, p: int) -> int:
    """Id of vertex ``(i, x)`` of ``[k] x Z_p``, with ``i`` in ``1..k``."""
    return (i - 1) * p + x


def h_construction(k: int, delta: int) -> tuple[Hypergraph, int]:
    """k-uniform, delta-regular linear hypergraph on ``[k] x Z_p``.

    One edge ``{(i, a + i*d mod p) : i = 1..k}`` per ``a in Z_p`` and
    ``d in 1..delta``; edges are emitted in ``(a, d)`` lexicographic order.
    Returns the hypergraph and the prime ``p``.
    """
    if k < 2:
        raise ValueError(f"uniformity k must be >= 2, got {k}")
    if delta < k:
        raise ValueError(f"degree delta must be >= k (k={k}), got {delta}")
    p = find_prime_in(delta)
    offsets = [(i - 1) * p for i in range(1, k + 1)]
    steps = range(1, k + 1)
    edges = []
    append = edges.append
    for a in range(p):
        for d in range(1, delta + 1):
            # offsets increase with i and each x < p, so the tuple is sorted
            append(tuple(off + (a + i * d) % p for off, i in zip(offsets, steps)))
    return Hypergraph(k * p, edges, _trusted=True), p


@dataclass(frozen=True)
class CounterexampleMeta:
    k: int
    delta: int
    p: int
    n_H: int
    removed_vertex: int | None
    n_SG: int

    def to_dict(self) -> dict:
        return asdict(self)


def counterexample(k: int, delta: int) -> tuple[Hypergraph, CounterexampleMeta]:
    """Build ``S_H`` for ``H = H_{k-1,delta}``, trimmed to an odd vertex count.

    When trimming is needed the highest-id vertex is removed. The
    ``delta > 100 k^2`` regime is not enforced here.
    """
    H, meta = counterexample_base(k, delta)
    return s_transform(H), meta


def counterexample_base(k: int, delta: int) -> tuple[Hypergraph, CounterexampleMeta]:
    """Like :func:`counterexample` but returns the trimmed ``H`` itself."""
    if k < 3:
        raise ValueError(f"uniformity k must be >= 3, got {k}")
    H, p = h_construction(k - 1, delta)
    removed = None
    if H.n % 2 == 0:
        removed = H.n - 1
        H = remove_vertex(H, removed)
    meta = CounterexampleMeta(k=k, delta=delta, p=p, n_H=H.n, removed_vertex=removed,
                              n_SG=H.n + H.num_edges)
    return H, meta
