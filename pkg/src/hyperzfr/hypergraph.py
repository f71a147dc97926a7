"""Hypergraphs on dense integer vertex ids, plus the predicates and counts the
rest of the package is built on.

Vertices are ``0..n-1``. Each edge is a strictly increasing tuple of ids.
Edge order is preserved as given (the S_G transform names its fresh vertices
after edge positions); serialization is canonical.
"""

from __future__ import annotations

import json
from typing import Iterable, NamedTuple, Sequence


class HypergraphError(ValueError):
    """Base class for invalid hypergraph data."""


class MalformedHypergraphError(HypergraphError):
    pass


class VertexOutOfRangeError(HypergraphError):
    pass


class DuplicateEdgeError(HypergraphError):
    pass


class InvalidEdgeError(HypergraphError):
    """Empty edge or an edge that repeats a vertex."""


class Hypergraph:
    """Immutable hypergraph; construct once, share freely."""

    __slots__ = ("n", "edges", "_incidence")

    def __init__(self, n: int, edges: Iterable[Iterable[int]] = (), *, _trusted: bool = False):
        if _trusted:
            self.n = n
            self.edges = tuple(edges)
            self._incidence = None
            return
        if not isinstance(n, int) or isinstance(n, bool) or n < 0:
            raise MalformedHypergraphError(f"vertex count must be a nonnegative integer, got {n!r}")
        out = []
        seen = set()
        for raw in edges:
            try:
                e = tuple(sorted(raw))
            except TypeError:
                raise MalformedHypergraphError(f"edge {raw!r} has non-integer ids") from None
            if not e:
                raise InvalidEdgeError("empty edge")
            for v in e:
                if not isinstance(v, int) or isinstance(v, bool):
                    raise MalformedHypergraphError(f"vertex id must be an integer, got {v!r}")
            if e[0] < 0 or e[-1] >= n:
                raise VertexOutOfRangeError(f"vertex id out of range in edge {list(e)} (n={n})")
            if any(a == b for a, b in zip(e, e[1:])):
                raise InvalidEdgeError(f"edge {list(e)} repeats a vertex")
            if e in seen:
                raise DuplicateEdgeError(f"duplicate edge {list(e)}")
            seen.add(e)
            out.append(e)
        self.n = n
        self.edges = tuple(out)
        self._incidence = None

    def __eq__(self, other):
        if not isinstance(other, Hypergraph):
            return NotImplemented
        return self.n == other.n and set(self.edges) == set(other.edges)

    def __hash__(self):
        return hash((self.n, frozenset(self.edges)))

    def __repr__(self):
        return f"Hypergraph(n={self.n}, |E|={len(self.edges)})"

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    @property
    def incidence(self) -> list:
        """``incidence[v]`` lists the indices of edges containing ``v``."""
        if self._incidence is None:
            inc = [[] for _ in range(self.n)]
            for j, e in enumerate(self.edges):
                for v in e:
                    inc[v].append(j)
            self._incidence = inc
        return self._incidence

    def canonical_edges(self) -> list:
        return sorted(self.edges)


class DegreeProfile(NamedTuple):
    degrees: list
    max_degree: int
    min_degree: int


def uniformity(H: Hypergraph) -> int | None:
    """Common edge size, or ``None`` when sizes differ or there are no edges."""
    if not H.edges:
        return None
    k = len(H.edges[0])
    if all(len(e) == k for e in H.edges):
        return k
    return None


def is_linear(H: Hypergraph) -> bool:
    """True iff any two distinct edges share at most one vertex.

    Two edges share two vertices exactly when some vertex pair lies in both,
    so it suffices to look for a repeated pair.
    """
    n = H.n
    pairs = set()
    for e in H.edges:
        m = len(e)
        for a in range(m):
            base = e[a] * n
            for b in range(a + 1, m):
                key = base + e[b]
                if key in pairs:
                    return False
                pairs.add(key)
    return True


def degree_profile(H: Hypergraph) -> DegreeProfile:
    if H.n == 0:
        raise ValueError("degree profile undefined for a hypergraph with no vertices")
    deg = [0] * H.n
    for e in H.edges:
        for v in e:
            deg[v] += 1
    return DegreeProfile(deg, max(deg), min(deg))


def _members(H: Hypergraph, S) -> Iterable[int]:
    if isinstance(S, int) and not isinstance(S, bool):
        if S < 0 or S >> H.n:
            raise VertexOutOfRangeError("vertex mask has bits outside 0..n-1")
        v = 0
        while S:
            if S & 1:
                yield v
            S >>= 1
            v += 1
        return
    for v in S:
        if not 0 <= v < H.n:
            raise VertexOutOfRangeError(f"vertex id out of range: {v}")
        yield v


def covered_edges(H: Hypergraph, S) -> int:
    """Number of edges meeting ``S``.

    ``S`` is either an int bitmask over ``0..n-1`` or an iterable of ids.
    """
    inc = H.incidence
    hit = set()
    for v in _members(H, S):
        hit.update(inc[v])
    return len(hit)


def remove_vertex(H: Hypergraph, v: int) -> Hypergraph:
    """Delete ``v`` and every edge through it; ids above ``v`` shift down."""
    if not 0 <= v < H.n:
        raise VertexOutOfRangeError(f"vertex id out of range: {v}")
    edges = []
    for e in H.edges:
        if v in e:
            continue
        edges.append(tuple(u - 1 if u > v else u for u in e))
    return Hypergraph(H.n - 1, edges, _trusted=True)


def parse_hypergraph(text: str | bytes) -> Hypergraph:
    """Parse the ``{"n": ..., "edges": [[...], ...]}`` wire format.

    A top-level ``"meta"`` object (as emitted by the generator commands) is
    accepted and ignored.
    """
    try:
        data = json.loads(text)
    except (json.JSONDecodeError, UnicodeDecodeError) as exc:
        raise MalformedHypergraphError(f"malformed JSON: {exc}") from None
    if not isinstance(data, dict) or "n" not in data or "edges" not in data:
        raise MalformedHypergraphError('expected an object with keys "n" and "edges"')
    extra = set(data) - {"n", "edges", "meta"}
    if extra:
        raise MalformedHypergraphError(f"unexpected keys: {sorted(extra)}")
    edges = data["edges"]
    if not isinstance(edges, list) or not all(isinstance(e, list) for e in edges):
        raise MalformedHypergraphError('"edges" must be a list of lists')
    return Hypergraph(data["n"], edges)


def serialize_hypergraph(H: Hypergraph, meta: dict | None = None) -> str:
    doc = {"n": H.n, "edges": [list(e) for e in H.canonical_edges()]}
    if meta is not None:
        doc["meta"] = meta
    return json.dumps(doc, separators=(",", ":"))


def edge_masks(H: Hypergraph) -> list:
    """Edges as int bitmasks, in edge order."""
    out = []
    for e in H.edges:
        m = 0
        for v in e:
            m |= 1 << v
        out.append(m)
    return out


def induced_mask(vertices: Sequence[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m
