import itertools
import json
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import naive_covered, random_hypergraph
from hyperzfr.construct import h_construction, s_transform
from hyperzfr.hypergraph import (
    DuplicateEdgeError,
    Hypergraph,
    InvalidEdgeError,
    MalformedHypergraphError,
    VertexOutOfRangeError,
    covered_edges,
    degree_profile,
    is_linear,
    parse_hypergraph,
    remove_vertex,
    serialize_hypergraph,
    uniformity,
)


@st.composite
def hypergraphs(draw, max_n=9, max_edges=10):
    n = draw(st.integers(1, max_n))
    edges = draw(st.lists(st.frozensets(st.integers(0, n - 1), min_size=1, max_size=4),
                          max_size=max_edges, unique=True))
    return Hypergraph(n, [sorted(e) for e in edges])


def brute_is_linear(H):
    return all(len(set(a) & set(b)) <= 1 for a, b in itertools.combinations(H.edges, 2))


class TestValidation:
    def test_edges_stored_sorted(self):
        H = Hypergraph(4, [[3, 1], [2, 0, 1]])
        assert H.edges == ((1, 3), (0, 1, 2))

    def test_out_of_range(self):
        with pytest.raises(VertexOutOfRangeError):
            Hypergraph(2, [[0, 2]])
        with pytest.raises(VertexOutOfRangeError):
            Hypergraph(2, [[-1, 0]])

    def test_empty_edge(self):
        with pytest.raises(InvalidEdgeError):
            Hypergraph(2, [[]])

    def test_repeated_vertex(self):
        with pytest.raises(InvalidEdgeError):
            Hypergraph(3, [[1, 1, 2]])

    def test_duplicate_edge(self):
        with pytest.raises(DuplicateEdgeError):
            Hypergraph(3, [[0, 1], [1, 0]])

    def test_equality_ignores_edge_order(self):
        assert Hypergraph(3, [[0, 1], [1, 2]]) == Hypergraph(3, [[1, 2], [0, 1]])
        assert Hypergraph(3, [[0, 1]]) != Hypergraph(4, [[0, 1]])


class TestUniformity:
    def test_triangle(self, triangle):
        assert uniformity(triangle) == 2

    def test_s_triangle(self, triangle):
        assert uniformity(s_transform(triangle)) == 3

    def test_mixed(self):
        assert uniformity(Hypergraph(3, [[0, 1], [0, 1, 2]])) is None

    def test_no_edges(self):
        assert uniformity(Hypergraph(3)) is None


class TestLinear:
    def test_graphs_always_linear(self):
        rng = random.Random(3)
        for _ in range(50):
            n = rng.randint(2, 8)
            pairs = list(itertools.combinations(range(n), 2))
            H = Hypergraph(n, rng.sample(pairs, rng.randint(0, len(pairs))))
            assert is_linear(H)

    def test_shared_pair(self):
        assert not is_linear(Hypergraph(4, [[0, 1, 2], [0, 1, 3]]))

    def test_h35_linear_by_pairwise_check(self):
        H, _ = h_construction(3, 5)
        assert brute_is_linear(H)
        assert is_linear(H)

    @given(hypergraphs())
    def test_agrees_with_pairwise_bruteforce(self, H):
        assert is_linear(H) == brute_is_linear(H)


class TestDegrees:
    def test_triangle(self, triangle):
        assert degree_profile(triangle) == ([2, 2, 2], 2, 2)

    def test_s_triangle(self, triangle):
        deg, mx, mn = degree_profile(s_transform(triangle))
        assert deg == [2, 2, 2, 1, 1, 1]
        assert (mx, mn) == (2, 1)

    def test_h22(self):
        H, _ = h_construction(2, 2)
        assert degree_profile(H).degrees == [2, 2, 2, 2]

    def test_rejects_empty(self):
        with pytest.raises(ValueError):
            degree_profile(Hypergraph(0))


class TestCoveredEdges:
    def test_triangle_single_vertex(self, triangle):
        assert covered_edges(triangle, {0}) == 2
        assert covered_edges(triangle, 0b001) == 2

    def test_empty_set(self, triangle):
        assert covered_edges(triangle, set()) == 0
        assert covered_edges(triangle, 0) == 0

    def test_all(self, triangle):
        assert covered_edges(triangle, range(3)) == 3

    def test_mask_out_of_range(self, triangle):
        with pytest.raises(VertexOutOfRangeError):
            covered_edges(triangle, 0b1000)

    @settings(max_examples=60)
    @given(hypergraphs(), st.data())
    def test_monotone_and_degree_bounds(self, H, data):
        T = data.draw(st.frozensets(st.integers(0, H.n - 1)))
        S = data.draw(st.frozensets(st.sampled_from(sorted(T)))) if T else frozenset()
        eS, eT = covered_edges(H, S), covered_edges(H, T)
        assert eS == naive_covered(H, S)
        assert eS <= eT
        deg = degree_profile(H).degrees
        assert eS <= sum(deg[v] for v in S)
        k = uniformity(H)
        if k is not None:
            assert k * eS >= sum(deg[v] for v in S)


class TestRemoveVertex:
    def test_triangle(self, triangle):
        H = remove_vertex(triangle, 0)
        assert H == Hypergraph(2, [[0, 1]])

    def test_edgeless(self):
        assert remove_vertex(Hypergraph(5), 3) == Hypergraph(4)

    def test_h23(self):
        H, p = h_construction(2, 3)
        assert (p, H.n, H.num_edges) == (3, 6, 9)
        R = remove_vertex(H, 0)
        assert (R.n, R.num_edges, degree_profile(R).min_degree) == (5, 6, 2)

    def test_out_of_range(self, triangle):
        with pytest.raises(VertexOutOfRangeError):
            remove_vertex(triangle, 3)

    def test_uniformity_preserved(self):
        H, _ = h_construction(4, 7)
        assert uniformity(remove_vertex(H, 5)) == 4

    @pytest.mark.parametrize("k,delta", [(2, 5), (3, 7), (4, 11), (5, 13)])
    def test_linear_regular_min_degree(self, k, delta):
        H, _ = h_construction(k, delta)
        for v in (0, H.n // 2, H.n - 1):
            R = remove_vertex(H, v)
            assert degree_profile(R).min_degree >= delta - 1

    def test_degree_drop_bounded(self):
        rng = random.Random(5)
        for _ in range(40):
            H = random_hypergraph(rng, 8, 10)
            v = rng.randrange(H.n)
            if H.n == 1:
                continue
            before = degree_profile(H).degrees
            after = degree_profile(remove_vertex(H, v)).degrees
            through_v = [e for e in H.edges if v in e]
            old_ids = [u for u in range(H.n) if u != v]
            for new, old in enumerate(old_ids):
                drop = before[old] - after[new]
                assert 0 <= drop <= sum(1 for e in through_v if old in e)


class TestWireFormat:
    def test_parse_triangle(self, triangle):
        assert parse_hypergraph('{"n":3,"edges":[[0,1],[0,2],[1,2]]}') == triangle

    def test_roundtrip_canonical(self):
        H = Hypergraph(4, [[2, 3], [0, 1, 2], [1, 0]])
        text = serialize_hypergraph(H)
        assert json.loads(text) == {"n": 4, "edges": [[0, 1], [0, 1, 2], [2, 3]]}
        assert serialize_hypergraph(parse_hypergraph(text)) == text

    def test_meta_ignored(self):
        assert parse_hypergraph('{"n":2,"edges":[[0,1]],"meta":{"k":2}}') == Hypergraph(2, [[0, 1]])

    def test_out_of_range_error(self):
        with pytest.raises(VertexOutOfRangeError, match="vertex id out of range"):
            parse_hypergraph('{"n":2,"edges":[[0,2]]}')

    def test_malformed(self):
        with pytest.raises(MalformedHypergraphError):
            parse_hypergraph('{"n":2,"edges":[[0,1]')
        with pytest.raises(MalformedHypergraphError):
            parse_hypergraph('{"n":2}')
        with pytest.raises(MalformedHypergraphError):
            parse_hypergraph('{"n":"two","edges":[]}')

    def test_duplicate(self):
        with pytest.raises(DuplicateEdgeError):
            parse_hypergraph('{"n":3,"edges":[[0,1],[1,0]]}')

    def test_error_classes_distinct(self):
        classes = {MalformedHypergraphError, VertexOutOfRangeError, DuplicateEdgeError}
        assert len(classes) == 3

    @given(hypergraphs())
    def test_roundtrip_property(self, H):
        assert parse_hypergraph(serialize_hypergraph(H)) == H
