"""Incompatibility and forcing graphs of a binary matrix.

Both graphs live on the n(n-1) ordered column pairs (i, j), i != j, read as
"column i is placed before column j".  Vertices are enumerated row-major
(i ascending, then j ascending), so vertex indices sort exactly like the
pairs themselves.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterator, NamedTuple, Optional

from .matrix import BinaryMatrix

Pair = tuple[int, int]


@dataclass(frozen=True, order=True)
class Evidence:
    """Why an edge exists.

    ``type1`` edges join a pair with its reversal and carry no row.  ``type2``
    edges carry the generating row and the triple (a, j, b), a < b, with
    ones at columns a and b and a zero at column j.
    """

    kind: str
    row: Optional[int] = None
    triple: Optional[tuple[int, int, int]] = None


TYPE1 = Evidence("type1")


def pair_index(n: int, pair: Pair) -> int:
    i, j = pair
    return (i - 1) * (n - 1) + (j - 1 if j < i else j - 2)


def all_pairs(n: int) -> list[Pair]:
    return [(i, j) for i in range(1, n + 1) for j in range(1, n + 1) if i != j]


def reverse(pair: Pair) -> Pair:
    return pair[1], pair[0]


def in_v1(pair: Pair) -> bool:
    return pair[0] < pair[1]


def row_triples(M: BinaryMatrix) -> Iterator[tuple[int, tuple[int, int, int]]]:
    """Every (row, (a, j, b)) with a < b, M[row,a] = M[row,b] = 1, M[row,j] = 0."""
    for r, values in enumerate(M.rows, 1):
        ones = [c for c, x in enumerate(values, 1) if x]
        zeros = [c for c, x in enumerate(values, 1) if not x]
        for j in zeros:
            for x, a in enumerate(ones):
                for b in ones[x + 1:]:
                    yield r, (a, j, b)


@dataclass
class PairGraph:
    """Simple undirected graph on ordered column pairs with per-edge evidence."""

    n: int
    vertices: list[Pair] = field(init=False)
    adj: list[set[int]] = field(init=False)
    evidence: dict[tuple[int, int], set[Evidence]] = field(init=False)

    def __post_init__(self):
        self.vertices = all_pairs(self.n)
        self.adj = [set() for _ in self.vertices]
        self.evidence = {}
        self._neighbors: Optional[list[list[int]]] = None

    def index(self, pair: Pair) -> int:
        i, j = pair
        if i == j or not (1 <= i <= self.n and 1 <= j <= self.n):
            raise ValueError(f"({i},{j}) is not a vertex for n={self.n}")
        return pair_index(self.n, pair)

    def _add(self, p: Pair, q: Pair, ev: Evidence) -> None:
        u, v = pair_index(self.n, p), pair_index(self.n, q)
        key = (u, v) if u < v else (v, u)
        self.adj[u].add(v)
        self.adj[v].add(u)
        self.evidence.setdefault(key, set()).add(ev)
        self._neighbors = None

    @property
    def num_vertices(self) -> int:
        return len(self.vertices)

    @property
    def num_edges(self) -> int:
        return len(self.evidence)

    def neighbors(self, u: int) -> list[int]:
        """Sorted neighbour indices of vertex index ``u``."""
        if self._neighbors is None:
            self._neighbors = [sorted(a) for a in self.adj]
        return self._neighbors[u]

    def has_edge(self, p: Pair, q: Pair) -> bool:
        return pair_index(self.n, q) in self.adj[pair_index(self.n, p)]

    def edges(self) -> list[tuple[Pair, Pair]]:
        """Edges as vertex pairs, sorted by (lower index, higher index)."""
        return [(self.vertices[u], self.vertices[v]) for u, v in sorted(self.evidence)]

    def edge_evidence(self, p: Pair, q: Pair) -> set[Evidence]:
        u, v = sorted((pair_index(self.n, p), pair_index(self.n, q)))
        return self.evidence.get((u, v), set())

    def degrees(self) -> list[int]:
        return [len(a) for a in self.adj]


class IncompatGraph(PairGraph):
    pass


class ForcingGraph(PairGraph):
    def is_crossing(self, p: Pair, q: Pair) -> bool:
        return in_v1(p) != in_v1(q)

    def edges_with_flags(self) -> list[tuple[Pair, Pair, bool]]:
        return [(p, q, self.is_crossing(p, q)) for p, q in self.edges()]


def build_incompatibility_graph(M: BinaryMatrix) -> IncompatGraph:
    G = IncompatGraph(M.n)
    for i in range(1, M.n + 1):
        for j in range(i + 1, M.n + 1):
            G._add((i, j), (j, i), TYPE1)
    for r, (a, j, b) in row_triples(M):
        ev = Evidence("type2", r, (a, j, b))
        G._add((a, j), (j, b), ev)
        G._add((b, j), (j, a), ev)
    return G


def build_forcing_graph(M: BinaryMatrix) -> ForcingGraph:
    F = ForcingGraph(M.n)
    for r, (a, j, b) in row_triples(M):
        ev = Evidence("type2", r, (a, j, b))
        F._add((a, j), (b, j), ev)
        F._add((j, a), (j, b), ev)
    return F


def critical_edges(F: ForcingGraph) -> list[tuple[Pair, Pair]]:
    """Forcing edges with one end in V1 (i < j) and the other in V2 (i > j)."""
    return [(p, q) for p, q, crossing in F.edges_with_flags() if crossing]


class BipartiteCheck(NamedTuple):
    """Outcome of a 2-colouring attempt.

    Exactly one of ``coloring`` (vertex -> 0/1) and ``odd_walk`` (a closed
    walk of odd length, listed without repeating its start) is set.
    """

    coloring: Optional[dict[Pair, int]]
    odd_walk: Optional[list[Pair]]

    def __bool__(self) -> bool:
        return self.coloring is not None


def is_bipartite(G: PairGraph) -> BipartiteCheck:
    color = [-1] * G.num_vertices
    parent = [-1] * G.num_vertices
    for root in range(G.num_vertices):
        if color[root] >= 0:
            continue
        color[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for v in G.neighbors(u):
                if color[v] < 0:
                    color[v] = 1 - color[u]
                    parent[v] = u
                    queue.append(v)
                elif color[v] == color[u]:
                    return BipartiteCheck(None, _odd_walk(G, parent, u, v))
    return BipartiteCheck({p: color[x] for x, p in enumerate(G.vertices)}, None)


def _odd_walk(G: PairGraph, parent: list[int], u: int, v: int) -> list[Pair]:
    # tree paths to the common ancestor plus the monochromatic edge u-v
    up = [u]
    while parent[up[-1]] >= 0:
        up.append(parent[up[-1]])
    vp = [v]
    while parent[vp[-1]] >= 0:
        vp.append(parent[vp[-1]])
    while len(up) > 1 and len(vp) > 1 and up[-2] == vp[-2]:
        up.pop()
        vp.pop()
    walk = up + vp[-2::-1]
    return [G.vertices[x] for x in walk]


def to_dot(G: PairGraph, name: Optional[str] = None) -> str:
    """DOT text; forcing-graph critical edges and type-1 edges are styled."""
    forcing = isinstance(G, ForcingGraph)
    name = name or ("forcing" if forcing else "incompat")
    lines = [f"graph {name} {{"]
    lines += [f'  "{i},{j}";' for i, j in G.vertices]
    for p, q in G.edges():
        attrs = ""
        if forcing and G.is_crossing(p, q):
            attrs = " [style=bold]"
        elif not forcing and q == reverse(p):
            attrs = " [style=dashed]"
        lines.append(f'  "{p[0]},{p[1]}" -- "{q[0]},{q[1]}"{attrs};')
    lines.append("}")
    return "\n".join(lines) + "\n"
