"""Hypergraph model: construction, degrees, cliques, distance, gluing."""

import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ramsey3 import (
    GlueMap,
    Hypergraph,
    degree,
    disjoint_union,
    enumerate_cliques,
    fano_plane,
    from_json_dict,
    glue,
    induced,
    is_linear,
    link,
    min_ell_degree,
    min_positive_codegree,
    path_distance,
    to_json_dict,
)
from ramsey3.hypercore import canon_edge, codegree

from _oracles import brute_cliques, random_small_hypergraph


# -- construction ------------------------------------------------------

def test_build_canonicalizes_edges():
    h = Hypergraph.build(3, [(2, 0, 1), (0, 1, 2), (3, 1, 0)])
    assert h.edges == {(0, 1, 2), (0, 1, 3)}
    assert h.vertices == {0, 1, 2, 3}
    assert h.num_edges == 2


def test_build_rejects_bad_edges():
    with pytest.raises(ValueError):
        Hypergraph.build(3, [(0, 1)])
    with pytest.raises(ValueError):
        Hypergraph.build(3, [(0, 1, 1)])


def test_isolated_vertices_allowed():
    h = Hypergraph.build(3, [(0, 1, 2)], vertices=range(5))
    assert h.num_vertices == 5
    assert link(h, 4).num_edges == 0


def test_complete_counts():
    # [TRIVIAL] C(n, r) edges
    assert Hypergraph.complete(6, 2).num_edges == 15
    assert Hypergraph.complete(6, 3).num_edges == 20
    assert Hypergraph.complete(5, 3).num_edges == 10


def test_canon_edge():
    assert canon_edge((2, 0, 1)) == (0, 1, 2)
    with pytest.raises(ValueError):
        canon_edge((0, 0, 1))


def test_minus_plus_edges():
    h = Hypergraph.complete(4, 3)
    g = h.minus_edge((1, 2, 3))
    assert g.num_edges == 3 and g.num_vertices == 4
    assert g.plus_edges([(3, 2, 1)]) == h


# -- links and degrees -------------------------------------------------

def test_link_of_complete():
    # [DERIVED] link of any vertex in K_5^(3) is the complete graph K_4
    lk = link(Hypergraph.complete(5, 3), 0)
    assert lk.r == 2
    assert lk.edges == {(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)}


def test_link_missing_vertex():
    with pytest.raises(ValueError):
        link(Hypergraph.complete(4, 3), 9)


def test_degrees_on_k5():
    # [DERIVED] K_5^(3): vertex degree C(4,2)=6, pair codegree 3
    h = Hypergraph.complete(5, 3)
    assert degree(h, (0,)) == 6
    assert degree(h, (0, 1)) == 3
    assert codegree(h, 0, 1) == 3
    assert min_ell_degree(h, 1) == 6
    assert min_ell_degree(h, 2) == 3
    assert min_positive_codegree(h) == 3
    with pytest.raises(ValueError):
        degree(h, (0, 1, 2))


def test_fano_invariants():
    # [DERIVED] the 7-point plane: degree 3 everywhere, codegree 1, linear
    h = fano_plane()
    assert h.num_vertices == 7 and h.num_edges == 7
    assert all(degree(h, (v,)) == 3 for v in h.vertices)
    assert min_ell_degree(h, 2) == 1
    assert min_positive_codegree(h) == 1
    assert is_linear(h)


def test_min_positive_codegree_none_when_all_zero():
    h = Hypergraph.build(3, [(0, 1, 2), (3, 4, 5)])
    assert min_positive_codegree(h) == 1
    lone = Hypergraph.build(3, [], vertices=range(4))
    assert min_positive_codegree(lone) is None


# -- cliques -----------------------------------------------------------

def test_cliques_k6_pairs():
    # [DERIVED] C(6,3) = 20 triangles in K_6
    qs = list(enumerate_cliques(Hypergraph.complete(6, 2), 3))
    assert len(qs) == 20
    assert qs == sorted(qs)
    assert qs == brute_cliques(Hypergraph.complete(6, 2), 3)


def test_cliques_k5_triples():
    # [DERIVED] C(5,4) = 5 four-sets in K_5^(3)
    h = Hypergraph.complete(5, 3)
    assert list(enumerate_cliques(h, 4)) == brute_cliques(h, 4)
    assert len(enumerate_cliques(h, 4)) == 5


def test_cliques_fano():
    # [DERIVED] linear hypergraph: no two edges share a pair, so no K_4^(3)
    assert not enumerate_cliques(fano_plane(), 4)
    assert len(enumerate_cliques(fano_plane(), 3)) == 7


def test_cliques_validation():
    with pytest.raises(ValueError):
        enumerate_cliques(Hypergraph.complete(4, 3), 2)


@settings(max_examples=60, deadline=None)
@given(st.integers(min_value=0, max_value=2**32 - 1))
def test_cliques_match_subset_scan(seed):
    h = random_small_hypergraph(seed)
    t = h.r + 1
    assert list(enumerate_cliques(h, t)) == brute_cliques(h, t)


# -- tight-path distance -----------------------------------------------

def test_distance_worked_examples():
    h = Hypergraph.build(3, [(1, 2, 3), (2, 3, 4), (3, 4, 5), (5, 6, 7)])
    e = (1, 2, 3)
    assert path_distance(h, e, e) == 3            # [TRIVIAL] one edge spans 3
    assert path_distance(h, e, (2, 3, 4)) == 4    # [DERIVED] shared pair
    assert path_distance(h, e, (3, 4, 5)) == 5    # [DERIVED] shared vertex
    # [DERIVED] 1,2,3 / 2,3,4 / 3,4,5 / 5,6,7 tile the interval 1..7
    assert path_distance(h, e, (5, 6, 7)) == 7


def test_distance_unreachable():
    h = Hypergraph.build(3, [(0, 1, 2), (5, 6, 7)])
    assert path_distance(h, (0, 1, 2), (5, 6, 7)) == math.inf


def test_distance_tight_path():
    # [DERIVED] interval model: the tight path on n vertices spans n
    for n in (6, 7, 8):
        edges = [(i, i + 1, i + 2) for i in range(n - 2)]
        h = Hypergraph.build(3, edges)
        assert path_distance(h, edges[0], edges[-1]) == n


def test_distance_mixed_offsets():
    # [DERIVED] two offset-2 steps: interval 0..6
    h = Hypergraph.build(3, [(0, 1, 2), (2, 3, 4), (4, 5, 6)])
    assert path_distance(h, (0, 1, 2), (4, 5, 6)) == 7


def test_distance_symmetric():
    h = Hypergraph.build(3, [(0, 1, 2), (1, 2, 3), (2, 3, 4), (3, 4, 5)])
    for e in h.edges:
        for f in h.edges:
            assert path_distance(h, e, f) == path_distance(h, f, e)


def test_distance_validation():
    h = Hypergraph.build(3, [(0, 1, 2)])
    with pytest.raises(ValueError):
        path_distance(h, (0, 1, 2), (3, 4, 5))
    with pytest.raises(ValueError):
        path_distance(Hypergraph.complete(4, 2), (0, 1), (2, 3))


# -- glue --------------------------------------------------------------

def test_glue_empty_map_is_disjoint_union():
    a = Hypergraph.complete(4, 3)
    b = Hypergraph.build(3, [(0, 1, 2)])
    res = glue(a, b)
    assert res.h.num_vertices == 7
    assert res.h.num_edges == 5
    assert res.h == disjoint_union(a, b).h
    # A-side ids survive untouched when A is already dense on 0..n-1
    assert all(res.map_a[v] == v for v in a.vertices)


def test_glue_identifies_pairs():
    a = Hypergraph.build(3, [(0, 1, 2)])
    b = Hypergraph.build(3, [(0, 1, 3)])
    res = glue(a, b, GlueMap([(0, 0), (1, 1)]))
    assert res.h.num_vertices == 4
    assert res.h.num_edges == 2
    assert codegree(res.h, res.map_a[0], res.map_a[1]) == 2


def test_glue_can_merge_edges():
    a = Hypergraph.build(3, [(0, 1, 2)])
    res = glue(a, a, GlueMap([(0, 0), (1, 1), (2, 2)]))
    assert res.h.num_edges == 1 and res.h.num_vertices == 3


def test_glue_rejects_non_injective():
    a = Hypergraph.build(3, [(0, 1, 2)])
    with pytest.raises(ValueError, match="non-injective"):
        glue(a, a, GlueMap([(0, 0), (1, 0)]))


def test_glue_merges_labels():
    a = Hypergraph.build(3, [(0, 1, 2)], labels={0: "x"})
    b = Hypergraph.build(3, [(0, 1, 2)], labels={0: "y"})
    res = glue(a, b, GlueMap([(0, 0)]), b_label_prefix="b")
    merged = res.h.labels[res.map_a[0]]
    assert "x" in merged and "y" in merged


@settings(max_examples=60, deadline=None)
@given(st.integers(min_value=0, max_value=2**32 - 1), st.integers(0, 3))
def test_glue_vertex_count(seed, npairs):
    a = random_small_hypergraph(seed)
    b = random_small_hypergraph(seed + 1)
    while b.r != a.r:
        seed += 1
        b = random_small_hypergraph(seed + 1)
    pairs = list(zip(sorted(a.vertices), sorted(b.vertices)))[:npairs]
    res = glue(a, b, GlueMap(pairs))
    assert res.h.num_vertices == a.num_vertices + b.num_vertices - len(pairs)
    # every A edge and every B edge lands in the result
    for e in a.edges:
        assert canon_edge(tuple(res.map_a[v] for v in e)) in res.h.edges
    for e in b.edges:
        assert canon_edge(tuple(res.map_b[v] for v in e)) in res.h.edges


# -- induced / linear ---------------------------------------------------

def test_induced():
    h = Hypergraph.complete(5, 3)
    g = induced(h, {0, 1, 2, 3})
    assert g.num_edges == 4 and g.num_vertices == 4


def test_is_linear():
    assert is_linear(Hypergraph.build(3, [(0, 1, 2), (2, 3, 4)]))
    assert not is_linear(Hypergraph.build(3, [(0, 1, 2), (0, 1, 3)]))


# -- serialization ------------------------------------------------------

def test_json_round_trip_plain():
    h = Hypergraph.build(3, [(0, 1, 2), (1, 2, 3)], labels={3: "tip"})
    doc = to_json_dict(h)
    assert doc["r"] == 3 and doc["n"] == 4
    assert doc["edges"] == sorted(doc["edges"])
    back, tags = from_json_dict(doc)
    assert back == h and tags == {}


def test_json_renumbers_sparse_ids():
    h = Hypergraph.build(3, [(10, 20, 30)])
    doc = to_json_dict(h)
    assert doc["n"] == 3 and doc["edges"] == [[0, 1, 2]]


def test_json_tags_round_trip():
    h = Hypergraph.build(3, [(0, 1, 2), (0, 1, 3)])
    doc = to_json_dict(h, tags={"e": (0, 1, 2), "f": (0, 1, 3),
                                "S": (0, 1), "a": 2, "dist": 4})
    back, tags = from_json_dict(doc)
    assert back == h
    assert tags["e"] == (0, 1, 2) and tags["S"] == (0, 1)
    assert tags["a"] == 2 and tags["dist"] == 4


def test_json_rejects_garbage():
    with pytest.raises(ValueError):
        from_json_dict({"r": 3, "n": 2, "edges": [[0, 1, 2]]})
    with pytest.raises(ValueError):
        from_json_dict({"r": 3, "n": 4, "edges": [[0, 1]]})


@settings(max_examples=60, deadline=None)
@given(st.integers(min_value=0, max_value=2**32 - 1))
def test_json_round_trip_random(seed):
    h = random_small_hypergraph(seed)
    back, _ = from_json_dict(to_json_dict(h))
    # vertex ids are dense after renumbering, edge structure is intact
    assert back.num_vertices == h.num_vertices
    assert back.num_edges == h.num_edges
