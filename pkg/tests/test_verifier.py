import pytest
from hypothesis import given, settings, strategies as st

from antimagic.errors import (BudgetExceeded, InfeasibleParameters,
                              LengthMismatch, NotBipartite)
from antimagic.graphs import (Graph, NecklaceSpec, build_complete,
                              build_complete_multipartite,
                              build_union_complete_bipartite,
                              build_union_cycles, build_union_paths,
                              build_union_stars, build_necklace,
                              corona_with_empty, join_with_empty)
from antimagic.verify import (bipartite_two_color_obstruction, bounds_report,
                              chromatic_number_exact, clique_lower_bound,
                              cycle_parity_lower_bound, induced_weights,
                              is_local_antimagic, labeling_report,
                              pendant_lower_bound, star_subgraph_bound,
                              union_lower_bound)


def triangle_with_pendant() -> Graph:
    return Graph(4, ((0, 1), (0, 2), (0, 3), (1, 2)))


def test_induced_weights_examples():
    c3 = build_union_cycles(1, 3)
    assert induced_weights(c3, (1, 2, 3)).weights == (3, 4, 5)
    p3 = build_union_paths(1, 3)
    assert induced_weights(p3, (1, 2)).weights == (1, 3, 2)
    star = build_union_stars(1, 4)
    w = induced_weights(star, (1, 2, 3, 4)).weights
    assert w[0] == 10  # center


def test_induced_weights_length_mismatch():
    with pytest.raises(LengthMismatch):
        induced_weights(build_union_cycles(1, 3), (1, 2))


def test_is_local_antimagic():
    c3 = build_union_cycles(1, 3)
    assert is_local_antimagic(c3, (1, 2, 3)) == (True, None)
    p3 = build_union_paths(1, 3)
    assert is_local_antimagic(p3, (1, 1)) == (False, None)  # not a bijection
    # adjacent equal weights: w(0) = 4+1+2 = 7 = w(1) = 4+3
    ok, violation = is_local_antimagic(triangle_with_pendant(), (4, 1, 2, 3))
    assert not ok and violation == (0, 1)


def test_cycle_bijections_are_always_valid():
    # on a cycle, equal adjacent weights would force equal labels
    c4 = build_union_cycles(1, 4)
    assert is_local_antimagic(c4, (1, 2, 3, 4))[0]


def test_pendant_lower_bound():
    assert pendant_lower_bound(build_union_stars(3, 3)) == 10
    assert pendant_lower_bound(build_union_cycles(1, 5)) == 1
    c4 = build_union_cycles(1, 4)
    assert pendant_lower_bound(corona_with_empty(c4, 2)) == 9


def test_clique_lower_bound():
    assert clique_lower_bound(build_complete(5)) == 5
    assert clique_lower_bound(build_union_cycles(1, 6)) == 2
    assert clique_lower_bound(build_complete_multipartite([2, 4, 2])) == 3
    with pytest.raises(BudgetExceeded):
        clique_lower_bound(build_complete(10), limit=5)


def test_chromatic_number_exact():
    assert chromatic_number_exact(build_union_cycles(1, 5)) == 3
    assert chromatic_number_exact(build_union_complete_bipartite(1, 2, 4)) == 2
    assert chromatic_number_exact(build_complete_multipartite([2, 4, 2])) == 3
    assert chromatic_number_exact(build_complete(7)) == 7
    with pytest.raises(BudgetExceeded):
        chromatic_number_exact(build_complete_multipartite([20, 20]), limit=30)


def _brute_chromatic(g: Graph) -> int:
    from itertools import product
    if g.num_edges == 0:
        return 1 if g.num_vertices else 0
    for k in range(1, g.num_vertices + 1):
        for coloring in product(range(k), repeat=g.num_vertices):
            if all(coloring[u] != coloring[v] for u, v in g.edges):
                return k
    return g.num_vertices


def test_chromatic_agrees_with_brute_force_small():
    corpus = [
        build_union_paths(1, 4),
        build_union_cycles(1, 5),
        build_union_cycles(1, 6),
        build_complete(4),
        triangle_with_pendant(),
        build_union_complete_bipartite(1, 2, 4),
        build_complete_multipartite([2, 2, 2]),
        join_with_empty(build_union_cycles(1, 5), 1),  # wheel W_5
    ]
    for g in corpus:
        assert g.num_vertices <= 8
        assert chromatic_number_exact(g) == _brute_chromatic(g), g.edges


def test_clique_never_exceeds_chromatic():
    corpus = [
        build_union_paths(2, 4), build_union_cycles(1, 7),
        build_complete(5), build_complete_multipartite([2, 4, 2]),
        triangle_with_pendant(),
        join_with_empty(build_union_cycles(1, 4), 1),
    ]
    for g in corpus:
        assert clique_lower_bound(g) <= chromatic_number_exact(g)


def test_bipartite_obstruction_figure4():
    g = build_necklace(NecklaceSpec((4, 4, 4), ((2, 2), (2, 2), (2, 2))))
    left, right = g.bipartition()
    assert sorted(map(len, (left, right))) == [4, 6]
    assert g.num_edges == 12
    assert bipartite_two_color_obstruction(g)  # 4 does not divide 78


def test_bipartite_obstruction_negative():
    assert not bipartite_two_color_obstruction(
        build_union_complete_bipartite(1, 2, 4))  # 36 divisible by 2 and 4
    assert not bipartite_two_color_obstruction(build_union_paths(1, 4))


def test_bipartite_obstruction_errors():
    with pytest.raises(NotBipartite):
        bipartite_two_color_obstruction(build_union_cycles(1, 5))
    with pytest.raises(NotBipartite):
        bipartite_two_color_obstruction(build_union_cycles(2, 4))


def test_cycle_parity_lower_bound():
    assert cycle_parity_lower_bound(build_union_cycles(1, 5)) == 3
    assert cycle_parity_lower_bound(build_union_cycles(1, 6)) == 2
    assert cycle_parity_lower_bound(Graph(3, ())) == 0


def test_union_lower_bound():
    assert union_lower_bound([3, 3]) == 3
    assert union_lower_bound([2]) == 2
    assert union_lower_bound([3, 10]) == 10


def test_star_subgraph_bound():
    w5 = join_with_empty(build_union_cycles(1, 5), 1)
    assert star_subgraph_bound(w5) == 6
    assert star_subgraph_bound(build_union_complete_bipartite(1, 2, 4)) == 5
    assert star_subgraph_bound(build_union_cycles(1, 4)) == 3
    with pytest.raises(InfeasibleParameters):
        star_subgraph_bound(build_union_paths(1, 2))


def test_bounds_report():
    neck = build_necklace(NecklaceSpec((4, 4, 4), ((2, 2), (2, 2), (2, 2))))
    rep = bounds_report(neck)
    assert rep.bipartite_obstruction is True
    assert rep.best_lower == 3
    rep = bounds_report(build_complete(4))
    assert rep.clique == 4 and rep.best_lower == 4
    rep = bounds_report(build_union_stars(3, 3))
    assert rep.pendant == 10 and rep.best_lower == 10
    # star_subgraph stays segregated from best_lower
    w5 = join_with_empty(build_union_cycles(1, 5), 1)
    rep = bounds_report(w5)
    assert rep.star_subgraph == 6 and rep.best_lower == 4


def test_labeling_report_shape():
    c3 = build_union_cycles(1, 3)
    rep = labeling_report(c3, (1, 2, 3))
    assert rep["bijection"] and rep["proper"]
    assert rep["weights"] == [3, 4, 5] and rep["num_colors"] == 3
    assert rep["first_violation"] is None
    bad = labeling_report(triangle_with_pendant(), (4, 1, 2, 3))
    assert not bad["proper"] and bad["first_violation"] == [0, 1]


@st.composite
def small_graph_and_labels(draw):
    n = draw(st.integers(min_value=2, max_value=6))
    possible = [(u, v) for u in range(n) for v in range(u + 1, n)]
    picks = draw(st.lists(st.sampled_from(possible), min_size=1,
                          max_size=len(possible), unique=True))
    g = Graph(n, tuple(sorted(picks)))
    labels = draw(st.permutations(list(range(1, len(picks) + 1))))
    return g, tuple(labels)


@settings(max_examples=60, deadline=None)
@given(small_graph_and_labels())
def test_local_antimagic_matches_definition(case):
    """Validity agrees with an independent adjacency scan of the weights."""
    g, labels = case
    ok, _ = is_local_antimagic(g, labels)
    w = [0] * g.num_vertices
    for (u, v), lab in zip(g.edges, labels):
        w[u] += lab
        w[v] += lab
    expected = all(w[u] != w[v] for u, v in g.edges)
    assert ok == expected
