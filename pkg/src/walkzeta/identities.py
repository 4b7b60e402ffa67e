"""Closed vertex-level forms for arc-operator characteristic polynomials.

The characteristic polynomial of the 2m x 2m transition matrix collapses
to an n x n determinant in the random-walk matrix, with a circle factor
(x^2 - 1) accounting for the dimension gap: one copy per independent
cycle beyond a spanning tree.  For trees the gap is negative one and the
circle factor divides out exactly.  A parallel form exists for the
positive support of U-transpose on graphs of minimum degree 2.
"""

from __future__ import annotations

from fractions import Fraction

from .exact import Poly, RationalFunction, poly_divexact, polymat_det
from .graphs import Graph, adjacency_matrix, degree_info
from .operators import random_walk_matrix

CIRCLE = Poly((-1, 0, 1))  # x^2 - 1


def apply_circle_prefactor(det_poly: Poly, exponent: int) -> Poly:
    """Multiply by (x^2 - 1)**exponent; negative exponents divide exactly."""
    if exponent >= 0:
        return det_poly * CIRCLE**exponent
    return poly_divexact(det_poly, CIRCLE ** (-exponent))


def walk_determinant_form(g: Graph) -> Poly:
    """det((x^2 + 1) I - 2x T) with T the random-walk matrix."""
    t = random_walk_matrix(g)
    entries = [
        [
            Poly((1 if i == j else 0, -2 * t[i, j], 1 if i == j else 0))
            for j in range(g.n)
        ]
        for i in range(g.n)
    ]
    return polymat_det(entries, 2 * g.n)


def degree_adjacency_determinant_form(g: Graph) -> Poly:
    """det((x^2 + 1) D - 2x A) divided by the product of the degrees."""
    adj = adjacency_matrix(g)
    degs = degree_info(g).degrees
    if min(degs) < 1:
        raise ValueError("needs every vertex to have an arc")
    entries = [
        [
            Poly((degs[i] if i == j else 0, -2 * adj[i, j], degs[i] if i == j else 0))
            for j in range(g.n)
        ]
        for i in range(g.n)
    ]
    det = polymat_det(entries, 2 * g.n)
    denom = Fraction(1)
    for d in degs:
        denom *= d
    return det * (1 / denom)


def support_determinant_form(g: Graph) -> Poly:
    """det((x^2 - 1) I - x A + D)."""
    adj = adjacency_matrix(g)
    degs = degree_info(g).degrees
    entries = [
        [
            Poly(
                (
                    degs[i] - 1 if i == j else 0,
                    -adj[i, j],
                    1 if i == j else 0,
                )
            )
            for j in range(g.n)
        ]
        for i in range(g.n)
    ]
    return polymat_det(entries, 2 * g.n)


def charpoly_u_via_walk_form(g: Graph) -> Poly:
    """Characteristic polynomial of U from the random-walk determinant."""
    return apply_circle_prefactor(walk_determinant_form(g), g.m - g.n)


def charpoly_u_via_degree_form(g: Graph) -> Poly:
    """Characteristic polynomial of U from the degree-adjacency determinant."""
    return apply_circle_prefactor(degree_adjacency_determinant_form(g), g.m - g.n)


def charpoly_u_factored(g: Graph) -> tuple[int, Poly]:
    """(circle exponent, walk determinant) pair describing char(U)."""
    return g.m - g.n, walk_determinant_form(g)


def charpoly_support_via_adjacency_form(g: Graph) -> Poly:
    """Characteristic polynomial of the support of U-transpose, vertex form.

    Valid for connected graphs of minimum degree 2, where the support
    equals the non-backtracking edge matrix.
    """
    if degree_info(g).min_degree < 2:
        raise ValueError("support closed form requires minimum degree 2")
    return apply_circle_prefactor(support_determinant_form(g), g.m - g.n)


def bass_identity_holds(g: Graph) -> bool:
    """Edge-determinant and vertex-determinant zeta reciprocals agree."""
    from .graphs import build_arcs
    from .zeta import ihara_reciprocal_bass_form, ihara_reciprocal_edge_form

    edge = ihara_reciprocal_edge_form(build_arcs(g))
    return ihara_reciprocal_bass_form(g) == RationalFunction(edge)
