"""Arc-indexed walk operators and their vertex-level companions.

The central object is the Grover-coined quantum-walk transition matrix on
arcs: a step from arc f to arc e is allowed when f feeds into the origin
of e, carries amplitude 2/deg, and the backtracking transition pays an
extra -1.  Alongside it live the non-backtracking arc matrices, weighted
variants, the random-walk matrix and exact positive supports of powers.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import NamedTuple

from .exact import Matrix
from .graphs import ArcSet, Graph, adjacency_matrix, build_arcs, degree_info, validate


class ArcMatrices(NamedTuple):
    adjacency: Matrix  # entry (e, f) is 1 iff terminus(e) == origin(f)
    inversion: Matrix  # entry (e, f) is 1 iff f is the inverse arc of e


def transition_matrix(g: Graph, arcs: ArcSet | None = None) -> Matrix:
    """Quantum-walk transition matrix U on the 2m arcs.

    U[e][f] is 2/deg(o(e)) when arc f ends at the origin of e, with 1
    subtracted on the backtracking arc f = inverse(e), and 0 elsewhere.
    Rows and columns follow the arc order of build_arcs.
    """
    info = degree_info(g)
    if info.min_degree < 1:
        raise ValueError("transition matrix needs every vertex to have an arc")
    arcs = build_arcs(g) if arcs is None else arcs
    size = len(arcs)
    data = [[Fraction(0)] * size for _ in range(size)]
    for e in range(size):
        oe = arcs.origin(e)
        coin = Fraction(2, info.degrees[oe])
        inv = arcs.inverse(e)
        row = data[e]
        for f in range(size):
            if arcs.terminus(f) == oe:
                row[f] = coin - 1 if f == inv else coin
    return Matrix(data)


def arc_matrices(arcs: ArcSet) -> ArcMatrices:
    """The 0/1 arc-adjacency matrix and the arc-inversion matrix."""
    size = len(arcs)
    adj = [
        [1 if arcs.terminus(e) == arcs.origin(f) else 0 for f in range(size)]
        for e in range(size)
    ]
    inv = [
        [1 if arcs.inverse(e) == f else 0 for f in range(size)]
        for e in range(size)
    ]
    return ArcMatrices(Matrix(adj), Matrix(inv))


def nonbacktracking_matrix(arcs: ArcSet) -> Matrix:
    """Arc adjacency minus arc inversion (the Hashimoto edge matrix)."""
    adj, inv = arc_matrices(arcs)
    return adj - inv


def weighted_edge_matrix(arcs: ArcSet, weights: Matrix) -> Matrix:
    """Weighted arc adjacency: entry (e, f) is w(f) when e feeds into f.

    ``weights`` is an n x n matrix whose support must lie on arc positions;
    a nonzero weight anywhere else is rejected.
    """
    if not weights.is_square:
        raise ValueError("weight matrix must be square")
    positions = {(arcs.origin(a), arcs.terminus(a)) for a in range(len(arcs))}
    for i in range(weights.rows):
        for j in range(weights.cols):
            if weights[i, j] != 0 and (i, j) not in positions:
                raise ValueError(f"weight on non-arc position ({i}, {j})")
    size = len(arcs)
    data = [[Fraction(0)] * size for _ in range(size)]
    for e in range(size):
        te = arcs.terminus(e)
        row = data[e]
        for f in range(size):
            if arcs.origin(f) == te:
                row[f] = weights[arcs.origin(f), arcs.terminus(f)]
    return Matrix(data)


def coin_weight_matrix(g: Graph) -> Matrix:
    """Vertex weight matrix with 2/deg(u) on every adjacent pair (u, v)."""
    info = degree_info(g)
    if info.min_degree < 1:
        raise ValueError("coin weights need every vertex to have an arc")
    adj = adjacency_matrix(g)
    data = [
        [Fraction(2, info.degrees[u]) if adj[u, v] != 0 else Fraction(0) for v in range(g.n)]
        for u in range(g.n)
    ]
    return Matrix(data)


def random_walk_matrix(g: Graph) -> Matrix:
    """Simple random-walk matrix T with T[u][v] = multiplicity(u,v)/deg(u).

    Built twice, from the entry table and as D^-1 A, and the two must agree;
    this pins down the multigraph convention.
    """
    info = degree_info(g)
    if info.min_degree < 1:
        raise ValueError("random walk needs every vertex to have an arc")
    adj = adjacency_matrix(g)
    table = Matrix(
        [
            [Fraction(int(adj[u, v]), info.degrees[u]) for v in range(g.n)]
            for u in range(g.n)
        ]
    )
    dinv = Matrix.diagonal([Fraction(1, d) for d in info.degrees])
    product = dinv * adj
    if table != product:
        raise AssertionError("random-walk matrix construction paths disagree")
    return table


def positive_support(m: Matrix) -> Matrix:
    """0/1 matrix marking the strictly positive entries."""
    return Matrix([[1 if x > 0 else 0 for x in row] for row in m.data])


def _int_matmul(a: list[list[int]], b: list[list[int]]) -> list[list[int]]:
    cols = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col)) for col in cols] for row in a]


def power_support(m: Matrix, k: int) -> Matrix:
    """Positive support of m**k for k in {1, 2, 3}, computed exactly.

    The matrix is scaled to integers first so the k-th power sign pattern
    comes out of exact integer arithmetic.
    """
    if k not in (1, 2, 3):
        raise ValueError("power_support supports k in {1, 2, 3}")
    if not m.is_square:
        raise ValueError("power_support needs a square matrix")
    if k == 1:
        return positive_support(m)
    scale = 1
    for row in m.data:
        for x in row:
            if x.denominator != 1:
                scale = lcm(scale, x.denominator)
    lifted = [[int(x * scale) for x in row] for row in m.data]
    power = _int_matmul(lifted, lifted)
    if k == 3:
        power = _int_matmul(power, lifted)
    return Matrix([[1 if x > 0 else 0 for x in row] for row in power])


def verify_support_identity(g: Graph, arcs: ArcSet | None = None) -> bool:
    """Check that the positive support of U-transpose is the edge matrix.

    Holds for simple connected graphs of minimum degree 2; those hypotheses
    are enforced rather than assumed.
    """
    rep = validate(g)
    if not (rep.simple and rep.connected and rep.md2):
        raise ValueError("support identity requires a simple connected graph with min degree 2")
    arcs = build_arcs(g) if arcs is None else arcs
    u = transition_matrix(g, arcs)
    return positive_support(u.transpose()) == nonbacktracking_matrix(arcs)
