import random
from fractions import Fraction

import pytest

from walkzeta.exact import Matrix, Poly, RationalFunction
from walkzeta.graphs import Graph, build_arcs
from walkzeta.operators import nonbacktracking_matrix
from walkzeta.zeta import (
    CycleClass,
    OracleSizeError,
    PowerSeries,
    cycle_norm,
    euler_product_oracle,
    ihara_reciprocal_bass_form,
    ihara_reciprocal_edge_form,
    inverse_cycle_class,
    prime_cycle_classes,
    weighted_zeta_reciprocal,
)
from walkzeta.experiments import (
    builtin_corpus,
    complete_graph,
    cycle_graph,
    path_graph,
    random_weight_matrix,
    triangle_with_doubled_edge,
)

T = Poly.x()


def test_power_series_arithmetic():
    a = PowerSeries((1, 1), 4)
    b = PowerSeries((1, -1), 4)
    assert a * b == PowerSeries((1, 0, -1), 4)
    assert a + b == PowerSeries((2,), 4)
    assert a - b == PowerSeries((0, 2), 4)
    assert 3 * a == PowerSeries((3, 3), 4)
    geo = PowerSeries((1, -1), 6).inverse()
    assert geo == PowerSeries([1] * 7, 6)
    with pytest.raises(ZeroDivisionError):
        PowerSeries((0, 1), 3).inverse()


def test_power_series_log():
    # log(1/(1-t)) = sum t^k / k
    series = PowerSeries((1, -1), 6).inverse().log()
    assert series.coeffs == tuple(
        Fraction(0) if k == 0 else Fraction(1, k) for k in range(7)
    )
    with pytest.raises(ValueError):
        PowerSeries((2, 1), 3).log()


def test_edge_form_fixtures():
    assert ihara_reciprocal_edge_form(build_arcs(complete_graph(2))) == Poly.one()
    c3 = ihara_reciprocal_edge_form(build_arcs(cycle_graph(3)))
    assert c3 == 1 - 2 * T**3 + T**6
    # K_4: (1-t^2)^2 (1-t)(1-2t)(1+t+2t^2)^3, built independently by factor product
    expected = (
        (1 - T**2) ** 2
        * (1 - T)
        * (1 - 2 * T)
        * (1 + T + 2 * T**2) ** 3
    )
    assert ihara_reciprocal_edge_form(build_arcs(complete_graph(4))) == expected


def test_bass_form_fixtures():
    assert ihara_reciprocal_bass_form(complete_graph(2)) == Poly.one()
    c3 = ihara_reciprocal_bass_form(cycle_graph(3))
    assert c3 == (1 - T**3) ** 2
    k4_edge = ihara_reciprocal_edge_form(build_arcs(complete_graph(4)))
    assert ihara_reciprocal_bass_form(complete_graph(4)) == RationalFunction(k4_edge)


def test_bass_identity_on_samples():
    for g in (
        cycle_graph(4),
        path_graph(4),
        complete_graph(5),
        triangle_with_doubled_edge(),
        Graph(2, ((0, 1), (0, 1))),
    ):
        edge = ihara_reciprocal_edge_form(build_arcs(g))
        assert ihara_reciprocal_bass_form(g) == RationalFunction(edge)


def test_weighted_unit_weights_reduce_to_ihara():
    g = complete_graph(4)
    arcs = build_arcs(g)
    ones = Matrix([[0 if i == j else 1 for j in range(4)] for i in range(4)])
    forms = weighted_zeta_reciprocal(arcs, ones)
    assert forms.edge_form == ihara_reciprocal_edge_form(arcs)
    assert forms.bass_form == ihara_reciprocal_bass_form(g)


def test_weighted_k2_hand_fixture():
    arcs = build_arcs(complete_graph(2))
    w = Matrix([[0, 5], [7, 0]])
    forms = weighted_zeta_reciprocal(arcs, w)
    assert forms.edge_form == 1 - 24 * T**2
    assert forms.bass_form == RationalFunction(forms.edge_form)


def test_weighted_coin_weights_on_c3():
    from walkzeta.operators import coin_weight_matrix, random_walk_matrix
    from walkzeta.exact import polymat_det

    g = cycle_graph(3)
    arcs = build_arcs(g)
    forms = weighted_zeta_reciprocal(arcs, coin_weight_matrix(g))
    # m = n, so the vertex form is det(I - 2tT + t^2 I) with no prefactor
    t_matrix = random_walk_matrix(g)
    entries = [
        [
            Poly((1 if i == j else 0, -2 * t_matrix[i, j], 1 if i == j else 0))
            for j in range(3)
        ]
        for i in range(3)
    ]
    assert forms.bass_form == polymat_det(entries, 6)


def test_weighted_random_on_k4():
    arcs = build_arcs(complete_graph(4))
    for seed in range(5):
        w = random_weight_matrix(complete_graph(4), random.Random(seed))
        forms = weighted_zeta_reciprocal(arcs, w)
        assert forms.bass_form == RationalFunction(forms.edge_form)


def test_weighted_forms_differ_on_multigraph():
    # an n x n weight matrix cannot express parallel-edge multiplicity, so
    # the vertex form genuinely disagrees with the edge form on multigraphs
    banana = Graph(2, ((0, 1), (0, 1)))
    forms = weighted_zeta_reciprocal(
        build_arcs(banana), Matrix([[0, 1], [1, 0]])
    )
    assert forms.edge_form == (1 - T**2) ** 2
    assert forms.bass_form == Poly((1, 0, 1, 0, 1))
    assert forms.bass_form != RationalFunction(forms.edge_form)
    dt = triangle_with_doubled_edge()
    forms = weighted_zeta_reciprocal(
        build_arcs(dt), random_weight_matrix(dt, random.Random(0))
    )
    assert forms.bass_form != RationalFunction(forms.edge_form)


def test_oracle_fixtures():
    # C_3: two prime classes (the two orientations), series of (1-t^3)^-2
    series = euler_product_oracle(build_arcs(cycle_graph(3)), 8)
    assert series == PowerSeries((1, 0, 0, 2, 0, 0, 3, 0, 0), 8)
    # K_2 is a tree: no reduced cycles at all
    assert euler_product_oracle(build_arcs(complete_graph(2)), 8) == PowerSeries.one(8)


def test_oracle_matches_series_inversion():
    for g in (cycle_graph(3), cycle_graph(5), complete_graph(4), path_graph(5),
              triangle_with_doubled_edge()):
        arcs = build_arcs(g)
        inverted = PowerSeries.from_poly(ihara_reciprocal_edge_form(arcs), 8).inverse()
        assert euler_product_oracle(arcs, 8) == inverted


def test_k4_reduced_three_walk_count():
    arcs = build_arcs(complete_graph(4))
    nb = nonbacktracking_matrix(arcs)
    assert (nb * nb * nb).trace() == 24


def test_trace_identity():
    # log(1/edge form) = sum tr((B - J0)^k) t^k / k through the order
    order = 8
    for g in (cycle_graph(3), complete_graph(4), triangle_with_doubled_edge()):
        arcs = build_arcs(g)
        series = PowerSeries.from_poly(
            ihara_reciprocal_edge_form(arcs), order
        ).inverse().log()
        nb = nonbacktracking_matrix(arcs)
        power = Matrix.identity(len(arcs))
        expected = [Fraction(0)]
        for k in range(1, order + 1):
            power = power * nb
            expected.append(power.trace() / k)
        assert series == PowerSeries(expected, order)


def test_prime_cycle_classes_c3():
    classes = prime_cycle_classes(build_arcs(cycle_graph(3)), 8)
    primes = [c for c in classes if c.prime]
    assert {c.length for c in primes} == {3}
    assert len(primes) == 2
    # length-6 powers of the two triangles are present but not prime
    assert {c.length for c in classes if not c.prime} == {6}


def test_prime_classes_pair_under_inversion():
    for g in (cycle_graph(3), complete_graph(4), triangle_with_doubled_edge()):
        arcs = build_arcs(g)
        classes = prime_cycle_classes(arcs, 6)
        primes = {c.arcs for c in classes if c.prime}
        self_inverse = 0
        for c in classes:
            if not c.prime:
                continue
            inv = inverse_cycle_class(c, arcs)
            assert inv.arcs in primes  # closed under inversion
            if inv.arcs == c.arcs:
                self_inverse += 1
        assert (len(primes) - self_inverse) % 2 == 0


def test_cycle_norm_fixtures():
    g = cycle_graph(3)
    arcs = build_arcs(g)
    classes = prime_cycle_classes(arcs, 3)
    primes = [c for c in classes if c.prime]
    weights = Matrix([[0, 2, 13], [7, 0, 3], [5, 11, 0]])
    # one orientation walks 0->1->2->0 (weights 2, 3, 5), the other the reverse
    norms = {cycle_norm(c, weights, arcs) for c in primes}
    assert norms == {Fraction(30), Fraction(1001)}
    ones = Matrix([[0, 1, 1], [1, 0, 1], [1, 1, 0]])
    assert all(cycle_norm(c, ones, arcs) == 1 for c in primes)
    forward = [c for c in primes if cycle_norm(c, weights, arcs) == 30][0]
    backward = inverse_cycle_class(forward, arcs)
    assert cycle_norm(backward, weights, arcs) == 7 * 11 * 13


def test_oracle_size_guard():
    big = cycle_graph(12)  # 24 arcs
    with pytest.raises(OracleSizeError):
        prime_cycle_classes(build_arcs(big), 4)
    with pytest.raises(OracleSizeError):
        euler_product_oracle(build_arcs(cycle_graph(3)), 13)


def test_corpus_small_members_satisfy_series_identity():
    for entry in builtin_corpus():
        if entry.graph.n > 4:
            continue
        arcs = build_arcs(entry.graph)
        inverted = PowerSeries.from_poly(
            ihara_reciprocal_edge_form(arcs), 6
        ).inverse()
        assert euler_product_oracle(arcs, 6) == inverted
