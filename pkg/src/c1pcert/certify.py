"""Odd-cycle and forcing-path certificates of non-C1P.

Search runs on the graphs from :mod:`c1pcert.graphs`; verification does not.
The verifiers re-derive every adjacency straight from the matrix so a bug in
graph construction cannot make a bad certificate look good.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Optional, Sequence

from .graphs import ForcingGraph, IncompatGraph, Pair, PairGraph, reverse
from .matrix import BinaryMatrix

CERT_MAGIC = "c1p-cert 1"


class CertificateError(ValueError):
    pass


@dataclass(frozen=True)
class OddCycleCertificate:
    n: int
    vertices: tuple[Pair, ...]

    def __len__(self) -> int:
        return len(self.vertices)


@dataclass(frozen=True)
class ForcingPathCertificate:
    n: int
    vertices: tuple[Pair, ...]

    def __len__(self) -> int:
        return len(self.vertices)


@dataclass(frozen=True)
class Verdict:
    ok: bool
    reason: str

    def __bool__(self) -> bool:
        return self.ok


# -- search ------------------------------------------------------------------


def _parity_bfs(G: PairGraph, source: int, floor: int) -> list[list[int]]:
    """Distances from (source, even) in the bipartite double cover of the
    subgraph induced by vertex indices >= floor.  ``dist[p][v]`` is the
    length of the shortest walk source -> v whose length has parity p."""
    INF = -1
    dist = [[INF] * G.num_vertices, [INF] * G.num_vertices]
    dist[0][source] = 0
    queue = deque([(source, 0)])
    while queue:
        u, p = queue.popleft()
        d = dist[p][u] + 1
        for v in G.neighbors(u):
            if v >= floor and dist[1 - p][v] == INF:
                dist[1 - p][v] = d
                queue.append((v, 1 - p))
    return dist


def _least_walk(G: PairGraph, source: int, target: int, parity: int, length: int,
                dist: list[list[int]], floor: int) -> list[int]:
    """Lexicographically least walk of exactly ``length`` edges from ``source``
    to ``target`` ending with the given parity, using distances from
    ``_parity_bfs(G, target, floor)``."""
    walk = [source]
    u, p = source, 0
    for step in range(length):
        remaining = length - step - 1
        p = 1 - p
        for v in G.neighbors(u):
            if v < floor:
                continue
            # walk v -> target of parity (parity - p) equals target -> v
            d = dist[(parity - p) % 2][v]
            if 0 <= d <= remaining and (remaining - d) % 2 == 0:
                walk.append(v)
                u = v
                break
        else:  # pragma: no cover - distances guarantee a continuation
            raise AssertionError("walk reconstruction failed")
    return walk


def shortest_odd_cycle(G: IncompatGraph) -> Optional[OddCycleCertificate]:
    """A minimum-length odd cycle of ``G``, or None if ``G`` is bipartite.

    Among minimum cycles the one returned is lexicographically least when
    written from its least vertex.
    """
    best_len, best_src = None, None
    for s in range(G.num_vertices):
        d = _parity_bfs(G, s, floor=s)[1][s]
        if d > 0 and (best_len is None or d < best_len):
            best_len, best_src = d, s
    if best_len is None:
        return None
    s = best_src
    # a minimum odd closed walk can repeat no vertex, so it is a cycle
    dist = _parity_bfs(G, s, floor=s)
    walk = _least_walk(G, s, s, 1, best_len, dist, floor=s)
    return OddCycleCertificate(G.n, tuple(G.vertices[x] for x in walk[:-1]))


def forcing_path(F: ForcingGraph, i: int, j: int) -> Optional[ForcingPathCertificate]:
    """Shortest (then lexicographically least) path from (i, j) to (j, i)."""
    if i == j or not (1 <= i <= F.n and 1 <= j <= F.n):
        raise ValueError(f"need distinct columns in 1..{F.n}, got {i}, {j}")
    src, dst = F.index((i, j)), F.index((j, i))
    dist = _parity_bfs(F, dst, floor=0)
    d = min((x for x in (dist[0][src], dist[1][src]) if x >= 0), default=None)
    if d is None:
        return None
    walk = _least_walk(F, src, dst, d % 2, d, dist, floor=0)
    return ForcingPathCertificate(F.n, tuple(F.vertices[x] for x in walk))


def shortest_forcing_path(F: ForcingGraph) -> Optional[ForcingPathCertificate]:
    """Shortest contradiction chain over all pairs i < j."""
    best = None
    for i in range(1, F.n + 1):
        for j in range(i + 1, F.n + 1):
            p = forcing_path(F, i, j)
            if p is not None and (best is None or len(p) < len(best)):
                best = p
    return best


def _odd_cycle_in_closed_walk(walk: list[Pair]) -> list[Pair]:
    # split at the first repeated vertex; one of the two halves is odd
    while True:
        seen = {}
        for pos, v in enumerate(walk):
            if v in seen:
                a = seen[v]
                inner = walk[a:pos]
                outer = walk[:a] + walk[pos:]
                walk = inner if len(inner) % 2 else outer
                break
            seen[v] = pos
        else:
            return walk


def path_to_cycle(p: ForcingPathCertificate, M: Optional[BinaryMatrix] = None) -> OddCycleCertificate:
    """Turn a forcing path with m vertices into an odd cycle by reversing
    every second vertex.

    The length is m - 1 (m even) or m (m odd) whenever that walk is simple,
    which holds for globally shortest paths; otherwise the walk is cut down to
    one of its odd sub-cycles.  If ``M`` is given the path is verified first.
    """
    _require_path_shape(p)
    if M is not None:
        v = verify_forcing_path(M, p)
        if not v:
            raise CertificateError(v.reason)
    # the walk may pass through a pair twice; any odd part is still a cycle
    walk = _odd_cycle_in_closed_walk(alternating_walk(p))
    return OddCycleCertificate(p.n, tuple(walk))


def alternating_walk(p: ForcingPathCertificate) -> list[Pair]:
    """The closed walk v1, v2', v3, v4', ... in the incompatibility graph,
    listed without repeating its start.  Its length is m - 1 for m even and
    m for m odd, but it need not be a simple cycle."""
    _require_path_shape(p)
    walk = [v if k % 2 == 0 else reverse(v) for k, v in enumerate(p.vertices)]
    if len(walk) % 2 == 0:
        walk.pop()  # the final reversed vertex is the start again
    return walk


def cycle_to_path(c: OddCycleCertificate, M: Optional[BinaryMatrix] = None) -> ForcingPathCertificate:
    """Turn an odd cycle of length m into a forcing path from some (i, j) to
    (j, i) with at most m + 1 vertices.

    The cycle is rotated to start at its least vertex.  Type-1 steps collapse
    to repeated vertices, which are contracted.
    """
    if len(c.vertices) < 3 or len(c.vertices) % 2 == 0:
        raise CertificateError(f"cycle length {len(c.vertices)} is not an odd number >= 3")
    if M is not None:
        v = verify_odd_cycle(M, c)
        if not v:
            raise CertificateError(v.reason)
    verts = list(c.vertices)
    start = verts.index(min(verts))
    verts = verts[start:] + verts[:start] + [verts[start]]
    path: list[Pair] = []
    for k, v in enumerate(verts):
        u = v if k % 2 == 0 else reverse(v)
        if u in path:
            # cut the loop, keeping the earlier visit
            del path[path.index(u) + 1:]
        else:
            path.append(u)
    return ForcingPathCertificate(c.n, tuple(path))


# -- verification ------------------------------------------------------------


def _pair_ok(v: Pair, n: int) -> bool:
    return (len(v) == 2 and 1 <= v[0] <= n and 1 <= v[1] <= n and v[0] != v[1])


def incompatibility_witness(M: BinaryMatrix, v: Pair, w: Pair) -> Optional[str]:
    """Direct check of the two edge rules; returns a description of the
    witness, or None if ``v`` and ``w`` are not adjacent."""
    if w == reverse(v):
        return "type1"
    for x, y in ((v, w), (w, v)):
        (a, j), (j2, b) = x, y
        if j == j2 and a != b:
            for r, row in enumerate(M.rows, 1):
                if row[a - 1] and row[b - 1] and not row[j - 1]:
                    return f"row {r}"
    return None


def forcing_witness(M: BinaryMatrix, v: Pair, w: Pair) -> Optional[str]:
    if v[1] == w[1] and v[0] != w[0]:
        a, b, j = v[0], w[0], v[1]
    elif v[0] == w[0] and v[1] != w[1]:
        a, b, j = v[1], w[1], v[0]
    else:
        return None
    for r, row in enumerate(M.rows, 1):
        if row[a - 1] and row[b - 1] and not row[j - 1]:
            return f"row {r}"
    return None


def _check_range(M: BinaryMatrix, verts: Sequence[Pair]) -> Optional[str]:
    for k, v in enumerate(verts, 1):
        if not _pair_ok(v, M.n):
            return f"vertex {k} {tuple(v)} is not a column pair for n={M.n}"
    return None


def _check_distinct(verts: Sequence[Pair]) -> Optional[str]:
    seen = {}
    for k, v in enumerate(verts, 1):
        if v in seen:
            return f"vertex {k} repeats vertex {seen[v]}"
        seen[v] = k
    return None


def verify_odd_cycle(M: BinaryMatrix, c: OddCycleCertificate) -> Verdict:
    verts = [tuple(v) for v in c.vertices]
    L = len(verts)
    if L < 3 or L % 2 == 0:
        return Verdict(False, f"cycle length {L} is not odd and >= 3")
    problem = _check_range(M, verts)
    if problem:
        return Verdict(False, problem)
    for k in range(L):
        v, w = verts[k], verts[(k + 1) % L]
        if incompatibility_witness(M, v, w) is None:
            return Verdict(False, f"edge {k + 1} is not an incompatibility edge")
    problem = _check_distinct(verts)
    if problem:
        return Verdict(False, problem)
    return Verdict(True, f"odd cycle of length {L}")


def _require_path_shape(p: ForcingPathCertificate) -> None:
    if len(p.vertices) < 2 or p.vertices[-1] != reverse(p.vertices[0]):
        raise CertificateError("path endpoints are not mutual reversals")


def verify_forcing_path(M: BinaryMatrix, p: ForcingPathCertificate) -> Verdict:
    verts = [tuple(v) for v in p.vertices]
    if len(verts) < 2:
        return Verdict(False, "path needs at least 2 vertices")
    problem = _check_range(M, verts)
    if problem:
        return Verdict(False, problem)
    if verts[-1] != reverse(verts[0]):
        return Verdict(False, f"endpoints {verts[0]} and {verts[-1]} are not mutual reversals")
    for k in range(len(verts) - 1):
        if forcing_witness(M, verts[k], verts[k + 1]) is None:
            return Verdict(False, f"edge {k + 1} is not a forcing edge")
    problem = _check_distinct(verts)
    if problem:
        return Verdict(False, problem)
    return Verdict(True, f"forcing path with {len(verts)} vertices")


def verify(M: BinaryMatrix, cert) -> Verdict:
    if isinstance(cert, OddCycleCertificate):
        return verify_odd_cycle(M, cert)
    return verify_forcing_path(M, cert)


# -- file format -------------------------------------------------------------


def serialize_certificate(cert) -> str:
    tag = "odd-cycle" if isinstance(cert, OddCycleCertificate) else "forcing-path"
    lines = [CERT_MAGIC, f"{tag} {len(cert.vertices)}"]
    lines += [f"{i} {j}" for i, j in cert.vertices]
    return "\n".join(lines) + "\n"


def parse_certificate(text: str, n: int):
    """Parse a certificate file; ``n`` is the column count of its matrix."""
    lines = [ln for ln in text.splitlines()]
    while lines and not lines[-1].strip():
        lines.pop()
    if len(lines) < 2 or lines[0].strip() != CERT_MAGIC:
        raise CertificateError(f"missing header line {CERT_MAGIC!r}")
    head = lines[1].split()
    if len(head) != 2 or head[0] not in ("odd-cycle", "forcing-path") or not head[1].isdigit():
        raise CertificateError(f"bad certificate type line {lines[1]!r}")
    L = int(head[1])
    body = lines[2:]
    if len(body) != L:
        raise CertificateError(f"certificate declares {L} vertices, found {len(body)}")
    verts = []
    for k, line in enumerate(body, 1):
        toks = line.split()
        if len(toks) != 2 or not all(t.isdigit() for t in toks):
            raise CertificateError(f"vertex line {k} is not 'i j': {line!r}")
        verts.append((int(toks[0]), int(toks[1])))
    cls = OddCycleCertificate if head[0] == "odd-cycle" else ForcingPathCertificate
    return cls(n, tuple(verts))
