import pytest

from walkzeta.exact import ExactDivisionError, Poly, charpoly_exact
from walkzeta.graphs import Graph, build_arcs
from walkzeta.identities import (
    apply_circle_prefactor,
    bass_identity_holds,
    charpoly_support_via_adjacency_form,
    charpoly_u_factored,
    charpoly_u_via_degree_form,
    charpoly_u_via_walk_form,
    support_determinant_form,
    walk_determinant_form,
)
from walkzeta.operators import (
    nonbacktracking_matrix,
    positive_support,
    transition_matrix,
)
from walkzeta.experiments import (
    complete_bipartite_graph,
    complete_graph,
    cycle_graph,
    path_graph,
    triangle_with_doubled_edge,
)

X = Poly.x()

SAMPLE_GRAPHS = [
    complete_graph(2),
    path_graph(3),
    cycle_graph(3),
    cycle_graph(5),
    complete_graph(4),
    complete_bipartite_graph(2, 3),
    triangle_with_doubled_edge(),
    Graph(2, ((0, 1), (0, 1))),
]


def _charpoly_u_direct(g):
    return charpoly_exact(transition_matrix(g))


def test_apply_circle_prefactor():
    p = X**4 - 1
    assert apply_circle_prefactor(p, 0) == p
    assert apply_circle_prefactor(p, 2) == p * (X**2 - 1) ** 2
    assert apply_circle_prefactor(p * (X**2 - 1), -1) == p
    with pytest.raises(ExactDivisionError):
        apply_circle_prefactor(X**3 + 1, -1)


def test_path3_tree_division():
    # U on the 3-path is a single 4-cycle permutation of the arcs
    assert _charpoly_u_direct(path_graph(3)) == X**4 - 1
    assert charpoly_u_via_walk_form(path_graph(3)) == X**4 - 1
    assert charpoly_u_via_degree_form(path_graph(3)) == X**4 - 1
    exponent, det = charpoly_u_factored(path_graph(3))
    assert exponent == -1
    assert det == (X**4 - 1) * (X**2 - 1)


def test_k4_factored_shape():
    g = complete_graph(4)
    exponent, det = charpoly_u_factored(g)
    assert exponent == 2
    assert det == walk_determinant_form(g)
    assert det.degree == 8
    assert apply_circle_prefactor(det, exponent) == _charpoly_u_direct(g)


@pytest.mark.parametrize("g", SAMPLE_GRAPHS, ids=lambda g: f"n{g.n}m{g.m}")
def test_walk_form_matches_direct_charpoly(g):
    assert charpoly_u_via_walk_form(g) == _charpoly_u_direct(g)


@pytest.mark.parametrize("g", SAMPLE_GRAPHS, ids=lambda g: f"n{g.n}m{g.m}")
def test_degree_form_matches_direct_charpoly(g):
    assert charpoly_u_via_degree_form(g) == _charpoly_u_direct(g)


def test_degree_form_rejects_isolated_vertex():
    with pytest.raises(ValueError):
        charpoly_u_via_degree_form(Graph(3, ((0, 1),)))


def test_support_form_c3_fixture():
    # the non-backtracking matrix of a 3-cycle is two disjoint 3-cycles
    assert charpoly_support_via_adjacency_form(cycle_graph(3)) == (X**3 - 1) ** 2


@pytest.mark.parametrize(
    "g",
    [cycle_graph(3), complete_graph(4), cycle_graph(6),
     complete_bipartite_graph(2, 3), triangle_with_doubled_edge()],
    ids=lambda g: f"n{g.n}m{g.m}",
)
def test_support_form_matches_direct_charpoly(g):
    arcs = build_arcs(g)
    direct = charpoly_exact(nonbacktracking_matrix(arcs))
    assert charpoly_support_via_adjacency_form(g) == direct
    # and the support of U-transpose is that same matrix on these graphs
    sup = positive_support(transition_matrix(g, arcs).transpose())
    assert charpoly_exact(sup) == direct


def test_support_form_requires_min_degree_two():
    with pytest.raises(ValueError):
        charpoly_support_via_adjacency_form(path_graph(3))


def test_support_determinant_degree():
    g = complete_graph(4)
    assert support_determinant_form(g).degree == 2 * g.n


@pytest.mark.parametrize("g", SAMPLE_GRAPHS, ids=lambda g: f"n{g.n}m{g.m}")
def test_bass_identity_holds_on_samples(g):
    assert bass_identity_holds(g)
