"""Built-in graph corpus, identity verification suite and SRG experiment.

The corpus mixes structured families (complete, cycle, path, bipartite,
Petersen, one multigraph) with seeded random connected graphs, so every
identity gets exercised on regular, irregular, tree and parallel-edge
inputs.  The verification suite recomputes both sides of each identity
from scratch and reports failures with witnesses.

The strongly-regular-graph experiment asks at which level of the hierarchy
adjacency, support of U, support of U^2, support of U^3 two graphs first
get different characteristic polynomials.  The classic test pair is the
Shrikhande graph against the 4x4 rook graph: same parameters (16, 6, 2, 2),
first separated at the third power.
"""

from __future__ import annotations

import functools
import itertools
import json
import os
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

from .exact import Matrix, Poly, RationalFunction, charpoly_exact
from .graphs import (
    Graph,
    adjacency_matrix,
    build_arcs,
    degree_info,
    parse_graph6,
    validate,
)
from .identities import (
    charpoly_support_via_adjacency_form,
    charpoly_u_via_degree_form,
    charpoly_u_via_walk_form,
)
from .operators import (
    positive_support,
    power_support,
    transition_matrix,
    verify_support_identity,
)
from .zeta import weighted_zeta_reciprocal

DEFAULT_SEED = 42
DEFAULT_WEIGHT_TRIALS = 10

# graph6 forms of the strongly regular test pair; parse_graph6 of these
# matches the algebraic constructions below (pinned by tests)
SHRIKHANDE_G6 = "OlfJHsHBGK_\\oHWKeBK_\\"
ROOK_4X4_G6 = "O~`HW}GPHDaNaGPCcPWaN"


def complete_graph(n: int) -> Graph:
    return Graph(n, tuple(itertools.combinations(range(n), 2)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs at least 3 vertices")
    return Graph(n, tuple((i, (i + 1) % n) for i in range(n)))


def path_graph(n: int) -> Graph:
    return Graph(n, tuple((i, i + 1) for i in range(n - 1)))


def complete_bipartite_graph(a: int, b: int) -> Graph:
    return Graph(a + b, tuple((i, a + j) for i in range(a) for j in range(b)))


def petersen_graph() -> Graph:
    """Kneser graph on 2-subsets of a 5-set: adjacent iff disjoint."""
    subsets = list(itertools.combinations(range(5), 2))
    index = {s: i for i, s in enumerate(subsets)}
    edges = [
        (index[s], index[t])
        for s, t in itertools.combinations(subsets, 2)
        if not set(s) & set(t)
    ]
    return Graph(10, tuple(sorted(edges)))


def triangle_with_doubled_edge() -> Graph:
    """Triangle with one parallel edge: the smallest interesting multigraph."""
    return Graph(3, ((0, 1), (0, 1), (1, 2), (2, 0)))


def shrikhande_graph() -> Graph:
    """Cayley graph of Z4 x Z4 with connection set +/-(1,0), (0,1), (1,1)."""
    diffs = {(1, 0), (3, 0), (0, 1), (0, 3), (1, 1), (3, 3)}
    edges = []
    for a in range(16):
        for b in range(a + 1, 16):
            d = ((b // 4 - a // 4) % 4, (b % 4 - a % 4) % 4)
            if d in diffs:
                edges.append((a, b))
    return Graph(16, tuple(edges))


def rook_graph_4x4() -> Graph:
    """4x4 rook graph: cells adjacent iff they share a row or a column."""
    edges = []
    for a in range(16):
        for b in range(a + 1, 16):
            if a // 4 == b // 4 or a % 4 == b % 4:
                edges.append((a, b))
    return Graph(16, tuple(edges))


def _random_connected_graph(rng: random.Random, max_n: int = 8) -> Graph:
    while True:
        n = rng.randint(4, max_n)
        edges = tuple(
            (i, j)
            for i in range(n)
            for j in range(i + 1, n)
            if rng.random() < 0.5
        )
        if not edges:
            continue
        g = Graph(n, edges)
        if validate(g).connected:
            return g


def strongly_regular_params(g: Graph) -> tuple[int, int, int, int] | None:
    """(n, k, lambda, mu) if the graph is strongly regular, else None.

    Complete graphs are excluded (mu has no witness pairs).
    """
    info = degree_info(g)
    rep = validate(g)
    if not (rep.simple and rep.connected) or info.regular_degree is None:
        return None
    nbrs = [set() for _ in range(g.n)]
    for u, v in g.edges:
        nbrs[u].add(v)
        nbrs[v].add(u)
    lambdas = set()
    mus = set()
    for u in range(g.n):
        for v in range(u + 1, g.n):
            common = len(nbrs[u] & nbrs[v])
            if v in nbrs[u]:
                lambdas.add(common)
            else:
                mus.add(common)
    if len(lambdas) == 1 and len(mus) == 1:
        return (g.n, info.regular_degree, lambdas.pop(), mus.pop())
    return None


@dataclass(frozen=True)
class CorpusEntry:
    name: str
    graph: Graph
    simple: bool
    connected: bool
    md2: bool
    tree: bool
    regular_degree: int | None
    srg_params: tuple[int, int, int, int] | None


def _entry(name: str, g: Graph) -> CorpusEntry:
    rep = validate(g)
    info = degree_info(g)
    return CorpusEntry(
        name=name,
        graph=g,
        simple=rep.simple,
        connected=rep.connected,
        md2=rep.md2,
        tree=rep.connected and g.m == g.n - 1,
        regular_degree=info.regular_degree,
        srg_params=strongly_regular_params(g),
    )


def builtin_corpus(seed: int = DEFAULT_SEED) -> list[CorpusEntry]:
    """The 44-graph verification corpus; random members are seed-determined."""
    entries = []
    for n in range(2, 8):
        entries.append(_entry(f"K{n}", complete_graph(n)))
    for n in range(3, 13):
        entries.append(_entry(f"C{n}", cycle_graph(n)))
    for n in range(3, 7):
        entries.append(_entry(f"P{n}", path_graph(n)))
    entries.append(_entry("K2_3", complete_bipartite_graph(2, 3)))
    entries.append(_entry("K3_3", complete_bipartite_graph(3, 3)))
    entries.append(_entry("petersen", petersen_graph()))
    entries.append(_entry("triangle_double_edge", triangle_with_doubled_edge()))
    rng = random.Random(seed)
    for i in range(1, 21):
        entries.append(_entry(f"random_{i:02d}", _random_connected_graph(rng)))
    return entries


_NAMED_BUILDERS = {
    "petersen": petersen_graph,
    "shrikhande": shrikhande_graph,
    "rook44": rook_graph_4x4,
    "triangle_double_edge": triangle_with_doubled_edge,
}


def named_graph(name: str) -> Graph:
    """Look up a graph by corpus-style name (K5, C7, P4, K3_3, petersen...)."""
    key = name.strip().lower()
    if key in _NAMED_BUILDERS:
        return _NAMED_BUILDERS[key]()
    try:
        if key.startswith("k") and "_" in key:
            a, b = key[1:].split("_", 1)
            return complete_bipartite_graph(int(a), int(b))
        if key.startswith("k"):
            return complete_graph(int(key[1:]))
        if key.startswith("c"):
            return cycle_graph(int(key[1:]))
        if key.startswith("p"):
            return path_graph(int(key[1:]))
    except ValueError:
        pass
    raise KeyError(f"unknown graph name {name!r}")


def random_weight_matrix(g: Graph, rng: random.Random) -> Matrix:
    """Nonzero random rational weight on every arc position, zero elsewhere."""
    adj = adjacency_matrix(g)
    data = [[Fraction(0)] * g.n for _ in range(g.n)]
    numerators = [x for x in range(-9, 10) if x]
    for u in range(g.n):
        for v in range(g.n):
            if adj[u, v] != 0:
                data[u][v] = Fraction(rng.choice(numerators), rng.randint(1, 9))
    return Matrix(data)


@dataclass
class IdentityCheck:
    identity: str
    graph: str
    passed: bool
    witness: str | None = None
    elapsed: float = 0.0


@dataclass
class VerificationReport:
    seed: int
    weight_trials: int
    checks: list[IdentityCheck] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> list[IdentityCheck]:
        return [c for c in self.checks if not c.passed]

    def to_dict(self, include_timings: bool = False) -> dict:
        checks = []
        for c in self.checks:
            item = {
                "identity": c.identity,
                "graph": c.graph,
                "passed": c.passed,
                "witness": c.witness,
            }
            if include_timings:
                item["elapsed"] = c.elapsed
            checks.append(item)
        doc = {
            "seed": self.seed,
            "weight_trials": self.weight_trials,
            "total_checks": len(self.checks),
            "failed_checks": len(self.failures()),
            "passed": self.passed,
            "checks": checks,
        }
        if include_timings:
            doc["elapsed"] = self.elapsed
        return doc

    def to_json(self, include_timings: bool = False) -> str:
        return json.dumps(self.to_dict(include_timings), indent=2)

    def to_text(self) -> str:
        lines = [
            f"identity verification (seed={self.seed}, weight_trials={self.weight_trials})",
        ]
        by_identity: dict[str, list[IdentityCheck]] = {}
        for c in self.checks:
            by_identity.setdefault(c.identity, []).append(c)
        for identity, items in by_identity.items():
            ok = sum(1 for c in items if c.passed)
            lines.append(f"  {identity}: {ok}/{len(items)} graphs")
        for c in self.failures():
            lines.append(f"  FAIL {c.identity} on {c.graph}: {c.witness}")
        lines.append(
            f"result: {'PASS' if self.passed else 'FAIL'}"
            f" ({len(self.checks)} checks, {self.elapsed:.1f}s)"
        )
        return "\n".join(lines)


def _poly_witness(left: Poly, right: Poly) -> str:
    return f"difference {(left - right)!r}"


def _entry_checks(entry: CorpusEntry, seed: int, weight_trials: int) -> list[IdentityCheck]:
    """All identity checks for one corpus entry, in a fixed order.

    Top-level (not a closure) so corpus entries can be farmed out to worker
    processes; everything it needs rides in on the arguments.
    """
    checks: list[IdentityCheck] = []

    def record(identity: str, fn):
        start = time.perf_counter()
        try:
            passed, witness = fn()
        except Exception as exc:  # a crash is a failure with the error as witness
            passed, witness = False, f"{type(exc).__name__}: {exc}"
        checks.append(
            IdentityCheck(
                identity=identity,
                graph=entry.name,
                passed=passed,
                witness=None if passed else witness,
                elapsed=time.perf_counter() - start,
            )
        )

    g = entry.graph
    arcs = build_arcs(g)
    u = transition_matrix(g, arcs)
    char_u = charpoly_exact(u)

    def check_walk_form():
        expected = charpoly_u_via_walk_form(g)
        return char_u == expected, _poly_witness(char_u, expected)

    def check_degree_form():
        expected = charpoly_u_via_degree_form(g)
        return char_u == expected, _poly_witness(char_u, expected)

    record("u_charpoly_walk_form", check_walk_form)
    record("u_charpoly_degree_form", check_degree_form)

    def check_zeta():
        from .zeta import ihara_reciprocal_bass_form, ihara_reciprocal_edge_form

        edge = ihara_reciprocal_edge_form(arcs)
        vertex = ihara_reciprocal_bass_form(g)
        same = vertex == RationalFunction(edge)
        return same, f"edge {edge!r} vs vertex {vertex!r}"

    record("zeta_edge_vs_vertex", check_zeta)

    if entry.simple:

        def check_weighted():
            for trial in range(weight_trials):
                rng = random.Random(f"{seed}:{entry.name}:{trial}")
                weights = random_weight_matrix(g, rng)
                forms = weighted_zeta_reciprocal(arcs, weights)
                if forms.bass_form != RationalFunction(forms.edge_form):
                    return False, f"trial {trial}: forms differ"
            return True, None

        record("weighted_zeta_forms", check_weighted)

    if entry.simple and entry.connected and entry.md2:

        def check_support():
            return verify_support_identity(g, arcs), "support differs from edge matrix"

        record("support_identity", check_support)

    if entry.md2:

        def check_support_charpoly():
            actual = charpoly_exact(positive_support(u.transpose()))
            expected = charpoly_support_via_adjacency_form(g)
            return actual == expected, _poly_witness(actual, expected)

        record("support_charpoly_form", check_support_charpoly)

    return checks


def run_identity_suite(
    corpus: list[CorpusEntry] | None = None,
    seed: int = DEFAULT_SEED,
    weight_trials: int = DEFAULT_WEIGHT_TRIALS,
    workers: int | None = None,
) -> VerificationReport:
    """Recompute both sides of every identity on every corpus graph.

    Checks, per graph: the two closed forms of char(U); the edge-versus-
    vertex zeta determinant identity; the weighted variant on random weight
    matrices (simple graphs, where the vertex form applies); the support
    identity and the support characteristic polynomial closed form (where
    the minimum-degree hypothesis holds).

    workers=None uses one process per CPU; entries are independent and
    seeded per graph, so the report is identical (minus timings) at any
    worker count, aggregated in corpus order.
    """
    corpus = builtin_corpus(seed) if corpus is None else corpus
    if workers is None:
        workers = os.cpu_count() or 1
    report = VerificationReport(seed=seed, weight_trials=weight_trials)
    suite_start = time.perf_counter()
    task = functools.partial(_entry_checks, seed=seed, weight_trials=weight_trials)
    if workers > 1 and len(corpus) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            per_entry = list(pool.map(task, corpus))
    else:
        per_entry = [task(entry) for entry in corpus]
    for checks in per_entry:
        report.checks.extend(checks)
    report.elapsed = time.perf_counter() - suite_start
    return report


DISTINGUISH_LEVELS = ("adjacency", "support_u", "support_u2", "support_u3")


@dataclass
class DistinguishResult:
    level: int | None
    level_name: str | None
    charpolys: dict[str, tuple[list[str], list[str]]]

    @property
    def distinguished(self) -> bool:
        return self.level is not None

    def to_dict(self) -> dict:
        return {
            "distinguished": self.distinguished,
            "level": self.level,
            "level_name": self.level_name,
            "charpolys": {
                name: {"left": left, "right": right}
                for name, (left, right) in self.charpolys.items()
            },
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)


def _check_srg_hypotheses(g: Graph, label: str):
    rep = validate(g)
    info = degree_info(g)
    if not rep.simple:
        raise ValueError(f"{label}: must be simple")
    if not rep.connected:
        raise ValueError(f"{label}: must be connected")
    if info.regular_degree is None or info.regular_degree < 2:
        raise ValueError(f"{label}: must be regular of degree >= 2")


def srg_distinguish(g: Graph, h: Graph) -> DistinguishResult:
    """Lowest level of the support hierarchy telling two graphs apart.

    Levels: 0 adjacency, 1 support of U, 2 support of U^2, 3 support of
    U^3, compared by exact characteristic polynomial.  Returns level None
    when all four agree.
    """
    _check_srg_hypotheses(g, "left graph")
    _check_srg_hypotheses(h, "right graph")
    u_g = transition_matrix(g)
    u_h = transition_matrix(h)

    def level_matrix(graph, u, name):
        if name == "adjacency":
            return adjacency_matrix(graph)
        k = {"support_u": 1, "support_u2": 2, "support_u3": 3}[name]
        return power_support(u, k)

    charpolys: dict[str, tuple[list[str], list[str]]] = {}
    for idx, name in enumerate(DISTINGUISH_LEVELS):
        left = charpoly_exact(level_matrix(g, u_g, name))
        right = charpoly_exact(level_matrix(h, u_h, name))
        charpolys[name] = (left.to_strings(), right.to_strings())
        if left != right:
            return DistinguishResult(idx, name, charpolys)
    return DistinguishResult(None, None, charpolys)
