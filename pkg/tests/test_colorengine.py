"""Coloring search: free colorings, arrowing, patterns, CNF export."""

import itertools

import pytest

from ramsey3 import (
    ArrowVerdict,
    EdgeColoring,
    Hypergraph,
    PatternSet,
    VertexColoring,
    admissible_patterns,
    admissible_vertex_coloring,
    arrows,
    check_free,
    export_cnf,
    fano_plane,
    find_free_coloring,
    is_minimal_ramsey,
    minimalize,
    solve_cnf,
)

from _oracles import (
    brute_free_exists,
    brute_free_patterns,
    brute_mono_cliques,
    random_small_hypergraph,
)

K5 = Hypergraph.complete(5, 3)
K6P = Hypergraph.complete(6, 2)


def all_one_but(h, edge, k=2):
    colors = {e: 2 for e in h.edges}
    colors[edge] = 1
    return EdgeColoring(k, colors)


# -- colorings ----------------------------------------------------------

def test_edge_coloring_validation():
    with pytest.raises(ValueError):
        EdgeColoring(2, {(0, 1, 2): 3})
    with pytest.raises(ValueError):
        EdgeColoring(0, {})
    c = EdgeColoring(2, {(2, 1, 0): 1})
    assert c.color((0, 1, 2)) == 1


def test_edge_coloring_recolored():
    c = EdgeColoring(2, {(0, 1, 2): 1, (0, 1, 3): 2})
    swapped = c.recolored({1: 2, 2: 1})
    assert swapped.color((0, 1, 2)) == 2
    assert swapped.color((0, 1, 3)) == 1


def test_edge_coloring_json_round_trip():
    c = EdgeColoring(3, {(0, 1, 2): 2, (0, 1, 3): 3})
    doc = c.to_json_dict()
    assert doc["k"] == 3
    assert doc["colors"] == sorted(doc["colors"])
    assert EdgeColoring.from_json_dict(doc) == c


def test_vertex_coloring_round_trip():
    c = VertexColoring(2, {0: 1, 3: 2})
    assert VertexColoring.from_json_dict(c.to_json_dict()) == c


# -- check_free ---------------------------------------------------------

def test_check_free_counts_k5():
    # [DERIVED] one off-color triple kills the two 4-sets through it,
    # the other 3 of the 5 stay monochromatic
    bad = check_free(K5, all_one_but(K5, (0, 1, 2)), 4)
    assert len(bad) == 3
    assert all(c == 2 for _, c in bad)
    assert {q for q, _ in bad} == {(0, 1, 3, 4), (0, 2, 3, 4), (1, 2, 3, 4)}
    assert bad == brute_mono_cliques(K5, all_one_but(K5, (0, 1, 2)).assignment, 4)


def test_check_free_requires_cover():
    with pytest.raises(ValueError):
        check_free(K5, EdgeColoring(2, {(0, 1, 2): 1}), 4)


def test_check_free_allows_superset():
    h = Hypergraph.complete(4, 3)
    extra = dict.fromkeys(K5.edges, 1)
    assert len(check_free(h, EdgeColoring(2, extra), 4)) == 1


# -- search vs oracle ---------------------------------------------------

def test_search_agrees_with_brute_scan():
    for i in range(40):
        h = random_small_hypergraph(9000 + i)
        t = h.r + 1 if i % 5 else h.r
        for k in (2, 3):
            res = find_free_coloring(h, t, k)
            assert res.found == brute_free_exists(h, t, k), (i, t, k)
            if res.found:
                assert check_free(h, res.coloring, t) == []


def test_search_witness_is_reverified():
    res = find_free_coloring(K5, 4, 2)
    assert res.found is True
    assert not brute_mono_cliques(K5, dict(res.coloring.assignment), 4)


def test_single_edge_cannot_avoid_itself():
    h = Hypergraph.build(3, [(0, 1, 2)])
    assert find_free_coloring(h, 3, 2).found is False


# -- arrowing -----------------------------------------------------------

def test_arrows_k6_pairs():
    # [KNOWN] the 2-color Ramsey number of the triangle is 6
    v = arrows(K6P, 3, 2)
    assert v.arrows is True and v.status == "complete"
    assert v.witness is None and v.nodes > 0


def test_arrows_k5_pairs_with_witness():
    v = arrows(Hypergraph.complete(5, 2), 3, 2)
    assert v.arrows is False
    assert not brute_mono_cliques(
        Hypergraph.complete(5, 2), dict(v.witness.assignment), 3)


def test_k6_minus_edge_does_not_arrow():
    v = arrows(K6P.minus_edge((4, 5)), 3, 2)
    assert v.arrows is False


def test_arrows_budget_unknown():
    v = arrows(K6P, 3, 2, budget=3)
    assert v.arrows is None and v.status == "unknown"
    assert v.witness is None


def test_arrow_verdict_invariants():
    with pytest.raises(ValueError):
        ArrowVerdict(True, EdgeColoring(2, {}), 1, "complete")
    with pytest.raises(ValueError):
        ArrowVerdict(None, None, 1, "complete")
    with pytest.raises(ValueError):
        ArrowVerdict(True, None, 1, "weird")


def test_is_minimal_ramsey():
    assert is_minimal_ramsey(K6P, 3, 2) is True
    assert is_minimal_ramsey(Hypergraph.complete(7, 2), 3, 2) is False
    assert is_minimal_ramsey(Hypergraph.complete(5, 2), 3, 2) is False


def test_minimalize_k7():
    m = minimalize(Hypergraph.complete(7, 2), 3, 2)
    assert m.edges <= Hypergraph.complete(7, 2).edges
    assert arrows(m, 3, 2).arrows is True
    assert is_minimal_ramsey(m, 3, 2) is True
    assert m.num_vertices == 6 and m.num_edges == 15


def test_minimalize_rejects_non_ramsey():
    with pytest.raises(ValueError):
        minimalize(Hypergraph.complete(5, 2), 3, 2)


# -- admissible patterns ------------------------------------------------

def test_admissible_patterns_k5_match_brute():
    ps = admissible_patterns(K5, 0, 1, 4, 2)
    assert ps.ell == 3 and ps.k == 2 and ps.complete
    assert set(ps.patterns) == brute_free_patterns(K5, 0, 1, 4, 2)
    assert set(ps.patterns) == {(0, 3), (1, 2), (2, 1), (3, 0)}


def test_admissible_pattern_witnesses_are_free():
    ps = admissible_patterns(K5, 0, 1, 4, 2)
    specials = [e for e in sorted(K5.edges) if 0 in e and 1 in e]
    for p, w in ps.witnesses.items():
        assert check_free(K5, w, 4) == []
        got = tuple(sum(1 for e in specials if w.assignment[e] == c)
                    for c in (1, 2))
        assert got == p


def test_admissible_patterns_closed_under_color_swap():
    ps = admissible_patterns(K5, 0, 1, 4, 2)
    for p in ps.patterns:
        assert tuple(reversed(p)) in ps.patterns


def test_admissible_patterns_budget_incomplete():
    ps = admissible_patterns(K5, 0, 1, 4, 2, budget=5)
    assert not ps.complete


def test_pattern_set_validation():
    with pytest.raises(ValueError):
        PatternSet(3, 2, frozenset({(1, 1)}))  # sums to 2, not 3
    ok = PatternSet(2, 2, frozenset({(1, 1)}))
    assert ok.ell == 2


# -- admissible vertex colorings ----------------------------------------

def test_vertex_coloring_odd_cycle_blocked():
    # [DERIVED] pattern (1,1) forces a proper 2-coloring; C_5 has none
    c5 = Hypergraph.build(2, [(i, (i + 1) % 5) for i in range(5)])
    ps = PatternSet(2, 2, frozenset({(1, 1)}))
    assert admissible_vertex_coloring(c5, ps) is None
    assert admissible_vertex_coloring(c5, ps, mode="enumerate") == []


def test_vertex_coloring_path_has_two():
    path = Hypergraph.build(2, [(i, i + 1) for i in range(4)])
    ps = PatternSet(2, 2, frozenset({(1, 1)}))
    got = admissible_vertex_coloring(path, ps, mode="enumerate")
    assert len(got) == 2
    one = admissible_vertex_coloring(path, ps)
    assert one in got
    for vc in got:
        for u, v in path.edges:
            assert vc.assignment[u] != vc.assignment[v]


def test_vertex_coloring_fano_two_coloring_blocked():
    # [KNOWN] no 2-coloring of the 7 points leaves every line bichromatic
    ps = PatternSet(3, 2, frozenset({(1, 2), (2, 1)}))
    assert admissible_vertex_coloring(fano_plane(), ps) is None


def test_vertex_coloring_uniformity_mismatch():
    ps = PatternSet(3, 2, frozenset({(1, 2), (2, 1)}))
    with pytest.raises(ValueError):
        admissible_vertex_coloring(Hypergraph.complete(4, 2), ps)


# -- CNF ----------------------------------------------------------------

def test_cnf_text_shape():
    h = Hypergraph.complete(4, 3)
    prob = export_cnf(h, 4, 2)
    lines = prob.text.splitlines()
    maps = [ln for ln in lines if ln.startswith("c map ")]
    assert len(maps) == h.num_edges * 2
    header = next(ln for ln in lines if ln.startswith("p cnf "))
    assert header == f"p cnf {prob.num_vars} {len(prob.clauses)}"
    assert sum(1 for ln in lines if ln.endswith(" 0")) == len(prob.clauses)


def test_cnf_satisfiable_and_decodes():
    h = Hypergraph.complete(4, 3)
    prob = export_cnf(h, 4, 2)
    model = solve_cnf(prob)
    assert model is not None
    col = prob.decode(model)
    assert check_free(h, col, 4) == []


def test_cnf_unsatisfiable_single_edge():
    h = Hypergraph.build(3, [(0, 1, 2)])
    assert solve_cnf(export_cnf(h, 3, 2)) is None


def test_cnf_agreement_with_search():
    for i in range(25):
        h = random_small_hypergraph(5500 + i)
        t = h.r + 1
        for k in (2, 3):
            sat = solve_cnf(export_cnf(h, t, k)) is not None
            assert sat == find_free_coloring(h, t, k).found


def test_cnf_decode_rejects_partial():
    prob = export_cnf(Hypergraph.build(3, [(0, 1, 2)]), 4, 2)
    with pytest.raises(ValueError):
        prob.decode([])


def test_solve_cnf_raw_clauses():
    assert solve_cnf([(1, 2), (-1,), (-2,)]) is None
    assert solve_cnf([(1,)]) == frozenset({1})
    assert solve_cnf([]) == frozenset()
