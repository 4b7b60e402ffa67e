"""Graph ingestion, arc sets and vertex-level matrices.

Graphs are finite undirected multigraphs on vertices 0..n-1.  Parallel
edges are allowed and kept in order; loops are rejected at construction
because arc inversion is not well defined for them here.  Each edge {u, v}
contributes two opposite arcs, and the arc list is laid out so that arc
``i + m`` is the inverse of arc ``i``.

Two text formats are supported: a plain edge list (one ``u v`` pair per
line, ``#`` comments, optional leading ``n <count>`` line for isolated
vertices) and the graph6 format for simple graphs.
"""

from __future__ import annotations

from dataclasses import dataclass

from .exact import Matrix


class GraphFormatError(ValueError):
    """Malformed edge-list or graph6 input."""


@dataclass(frozen=True)
class Graph:
    """Undirected multigraph: vertex count and an ordered edge tuple."""

    n: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        object.__setattr__(
            self, "edges", tuple((int(u), int(v)) for u, v in self.edges)
        )
        if self.n < 1:
            raise GraphFormatError("graph needs at least one vertex")
        for u, v in self.edges:
            if u == v:
                raise GraphFormatError(f"loop edge at vertex {u} is not supported")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise GraphFormatError(f"edge ({u}, {v}) leaves vertex range 0..{self.n - 1}")

    @property
    def m(self) -> int:
        return len(self.edges)


@dataclass(frozen=True)
class DegreeInfo:
    degrees: tuple[int, ...]
    min_degree: int
    regular_degree: int | None


@dataclass(frozen=True)
class ValidationReport:
    connected: bool
    simple: bool
    md2: bool


@dataclass(frozen=True)
class ArcSet:
    """The 2m oriented arcs of a graph, inverse pairs m apart."""

    arcs: tuple[tuple[int, int], ...]

    @property
    def m(self) -> int:
        return len(self.arcs) // 2

    def __len__(self) -> int:
        return len(self.arcs)

    def origin(self, a: int) -> int:
        return self.arcs[a][0]

    def terminus(self, a: int) -> int:
        return self.arcs[a][1]

    def inverse(self, a: int) -> int:
        return (a + self.m) % len(self.arcs)


def build_arcs(g: Graph) -> ArcSet:
    """Arcs 0..m-1 follow the edge order, arcs m..2m-1 are their inverses."""
    forward = g.edges
    backward = tuple((v, u) for u, v in g.edges)
    return ArcSet(forward + backward)


def degree_info(g: Graph) -> DegreeInfo:
    degs = [0] * g.n
    for u, v in g.edges:
        degs[u] += 1
        degs[v] += 1
    regular = degs[0] if len(set(degs)) == 1 else None
    return DegreeInfo(tuple(degs), min(degs), regular)


def validate(g: Graph) -> ValidationReport:
    """Connectivity, simplicity and minimum-degree-2 flags in one pass."""
    adj: list[list[int]] = [[] for _ in range(g.n)]
    for u, v in g.edges:
        adj[u].append(v)
        adj[v].append(u)
    seen = [False] * g.n
    stack = [0]
    seen[0] = True
    while stack:
        u = stack.pop()
        for w in adj[u]:
            if not seen[w]:
                seen[w] = True
                stack.append(w)
    connected = all(seen)
    pairs = [frozenset(e) for e in g.edges]
    simple = len(set(pairs)) == len(pairs)
    md2 = min(len(nbrs) for nbrs in adj) >= 2
    return ValidationReport(connected, simple, md2)


def parse_edge_list(text: str) -> Graph:
    """Parse the plain edge-list format.

    Blank lines and ``#`` comments are skipped.  The first data line may be
    ``n <count>`` to declare the vertex count; otherwise it is inferred as
    max endpoint + 1.  Repeated pairs are kept as parallel edges.
    """
    declared: int | None = None
    edges: list[tuple[int, int]] = []
    max_seen = -1
    first_data = True
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if first_data and parts[0] == "n":
            if len(parts) != 2:
                raise GraphFormatError(f"line {lineno}: expected 'n <count>'")
            try:
                declared = int(parts[1])
            except ValueError:
                raise GraphFormatError(f"line {lineno}: vertex count {parts[1]!r} is not an integer") from None
            if declared < 1:
                raise GraphFormatError(f"line {lineno}: vertex count must be positive")
            first_data = False
            continue
        first_data = False
        if len(parts) != 2:
            raise GraphFormatError(f"line {lineno}: expected two endpoints, got {len(parts)} tokens")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphFormatError(f"line {lineno}: non-integer endpoint in {line!r}") from None
        if u < 0 or v < 0:
            raise GraphFormatError(f"line {lineno}: negative vertex label")
        if u == v:
            raise GraphFormatError(f"line {lineno}: loop edge at vertex {u}")
        edges.append((u, v))
        max_seen = max(max_seen, u, v)
    if declared is None:
        if max_seen < 0:
            raise GraphFormatError("no vertices: empty edge list without an 'n' line")
        n = max_seen + 1
    else:
        n = declared
        if max_seen >= n:
            raise GraphFormatError(f"endpoint {max_seen} exceeds declared vertex count {n}")
    return Graph(n, tuple(edges))


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 string (simple graphs; optional standard header)."""
    s = text.strip()
    header = ">>graph6<<"
    if s.startswith(header):
        s = s[len(header):]
    if not s:
        raise GraphFormatError("empty graph6 string")
    vals = []
    for ch in s:
        v = ord(ch) - 63
        if not 0 <= v <= 63:
            raise GraphFormatError(f"graph6 byte {ch!r} out of range")
        vals.append(v)
    if vals[0] < 63:
        n = vals[0]
        idx = 1
    elif len(vals) >= 2 and vals[1] < 63:
        if len(vals) < 4:
            raise GraphFormatError("truncated graph6 size field")
        n = (vals[1] << 12) | (vals[2] << 6) | vals[3]
        idx = 4
    else:
        if len(vals) < 8:
            raise GraphFormatError("truncated graph6 size field")
        n = 0
        for v in vals[2:8]:
            n = (n << 6) | v
        idx = 8
    if n == 0:
        raise GraphFormatError("graph6 string encodes the empty graph")
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    if len(vals) - idx != nbytes:
        raise GraphFormatError(
            f"graph6 bit stream for n={n} needs {nbytes} bytes, got {len(vals) - idx}"
        )
    bits = []
    for v in vals[idx:]:
        bits.extend((v >> shift) & 1 for shift in (5, 4, 3, 2, 1, 0))
    if any(bits[nbits:]):
        raise GraphFormatError("nonzero padding bits in graph6 string")
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                edges.append((i, j))
            k += 1
    return Graph(n, tuple(edges))


def encode_graph6(g: Graph) -> str:
    """Encode a simple graph with n <= 62 as a graph6 string."""
    rep = validate(g)
    if not rep.simple:
        raise ValueError("graph6 encodes simple graphs only")
    if g.n > 62:
        raise ValueError("encode_graph6 supports n <= 62")
    present = {frozenset(e) for e in g.edges}
    bits = []
    for j in range(1, g.n):
        for i in range(j):
            bits.append(1 if frozenset((i, j)) in present else 0)
    while len(bits) % 6:
        bits.append(0)
    out = [chr(63 + g.n)]
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k : k + 6]:
            val = (val << 1) | b
        out.append(chr(63 + val))
    return "".join(out)


def adjacency_matrix(g: Graph) -> Matrix:
    """Symmetric n x n matrix; entries count edge multiplicity."""
    a = [[0] * g.n for _ in range(g.n)]
    for u, v in g.edges:
        a[u][v] += 1
        a[v][u] += 1
    return Matrix(a)


def degree_matrix(g: Graph) -> Matrix:
    return Matrix.diagonal(degree_info(g).degrees)


def betti(g: Graph) -> int:
    """First Betti number m - n + 1 of a connected graph."""
    if not validate(g).connected:
        raise ValueError("Betti number defined here for connected graphs only")
    return g.m - g.n + 1
