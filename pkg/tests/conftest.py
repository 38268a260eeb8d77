"""Shared oracles.  Nothing here imports the graph or certificate code: edges
come straight from the two adjacency rules, and cycles from exhaustive DFS."""

from __future__ import annotations

import itertools

import pytest
from hypothesis import strategies as st

from c1pcert.matrix import BinaryMatrix


def all_matrices(m, n):
    for bits in itertools.product((0, 1), repeat=m * n):
        yield BinaryMatrix(tuple(tuple(bits[r * n:(r + 1) * n]) for r in range(m)))


def pairs(n):
    return [(i, j) for i in range(1, n + 1) for j in range(1, n + 1) if i != j]


def rule_adjacent(M, v, w):
    """Incompatibility edge rules applied literally."""
    if w == (v[1], v[0]):
        return True
    for (i, j), (j2, k) in ((v, w), (w, v)):
        if j == j2 and i != k and any(r[i - 1] and r[k - 1] and not r[j - 1] for r in M.rows):
            return True
    return False


def rule_forcing(M, v, w):
    if v[1] == w[1] and v[0] != w[0]:
        a, b, j = v[0], w[0], v[1]
    elif v[0] == w[0] and v[1] != w[1]:
        a, b, j = v[1], w[1], v[0]
    else:
        return False
    return any(r[a - 1] and r[b - 1] and not r[j - 1] for r in M.rows)


def definition_edges(M, rule=rule_adjacent):
    vs = pairs(M.n)
    return {frozenset((v, w)) for v, w in itertools.combinations(vs, 2) if rule(M, v, w)}


def brute_min_odd_cycle(M):
    """Length of the shortest odd simple cycle, by exhaustive DFS over simple
    paths from each start through larger vertices only."""
    vs = pairs(M.n)
    adj = {v: [w for w in vs if w != v and rule_adjacent(M, v, w)] for v in vs}
    best = None

    def dfs(start, v, depth, on_path):
        nonlocal best
        for w in adj[v]:
            if w == start and depth >= 3 and depth % 2 == 1:
                if best is None or depth < best:
                    best = depth
            elif w > start and w not in on_path and (best is None or depth + 1 < best):
                on_path.add(w)
                dfs(start, w, depth + 1, on_path)
                on_path.discard(w)

    for s in vs:
        dfs(s, s, 1, {s})
    return best


@st.composite
def matrices(draw, max_m=5, max_n=5, min_n=1):
    m = draw(st.integers(1, max_m))
    n = draw(st.integers(min_n, max_n))
    bits = draw(st.lists(st.lists(st.integers(0, 1), min_size=n, max_size=n), min_size=m, max_size=m))
    return BinaryMatrix.from_rows(bits)


@pytest.fixture
def t3_4():
    return BinaryMatrix.from_strings("1100", "0110", "0101")


_ACCEPTANCE: list[str] = []


@pytest.fixture
def acceptance():
    """Call with (criterion, passed, detail); lines are echoed in the summary."""

    def record(name, passed, detail=""):
        _ACCEPTANCE.append(f"{'PASS' if passed else 'FAIL'}  {name}  {detail}".rstrip())
        return passed

    return record


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE:
            terminalreporter.write_line(line)
