import pytest
from hypothesis import given, settings

from c1pcert.certify import (
    CertificateError,
    ForcingPathCertificate,
    OddCycleCertificate,
    cycle_to_path,
    forcing_path,
    alternating_walk,
    parse_certificate,
    path_to_cycle,
    serialize_certificate,
    shortest_forcing_path,
    shortest_odd_cycle,
    verify_forcing_path,
    verify_odd_cycle,
)
from c1pcert.graphs import build_forcing_graph, build_incompatibility_graph
from c1pcert.matrix import BinaryMatrix, brute_force_c1p, tucker_pattern

from conftest import all_matrices, brute_min_odd_cycle, matrices, rule_adjacent

PATTERNS = ([("I", k) for k in range(3, 9)] + [("II", k) for k in range(4, 9)]
            + [("III", k) for k in range(4, 9)] + [("IV", None), ("V", None)])


def soc(M):
    return shortest_odd_cycle(build_incompatibility_graph(M))


@pytest.mark.parametrize("kind, k, length", [
    ("III", 4, 7), ("IV", None, 5), ("V", None, 9), ("I", 5, 5), ("I", 6, 7),
])
def test_shortest_odd_cycle_known_values(kind, k, length):
    M = tucker_pattern(kind, k)
    c = soc(M)
    assert len(c) == length
    assert verify_odd_cycle(M, c)


def test_shortest_odd_cycle_absent_for_c1p():
    assert soc(BinaryMatrix.from_strings("110", "011")) is None


def test_shortest_odd_cycle_tie_break(t3_4):
    c = soc(t3_4)
    # frozen: lexicographically least 7-cycle written from its least vertex
    assert c.vertices == ((1, 2), (2, 1), (1, 3), (3, 2), (4, 3), (2, 4), (4, 1))


def test_lex_least_among_all_minimum_cycles(t3_4):
    # brute-force every 7-cycle from (1,2) and compare with the answer
    from conftest import pairs
    vs = pairs(4)
    best = []

    def dfs(path):
        if len(path) == 7:
            if rule_adjacent(t3_4, path[-1], path[0]):
                best.append(tuple(path))
            return
        for w in vs:
            if w > path[0] and w not in path and rule_adjacent(t3_4, path[-1], w):
                dfs(path + [w])

    for s in vs:
        dfs([s])
    assert soc(t3_4).vertices == min(best)


@pytest.mark.parametrize("m, n", [(2, 3), (3, 3), (2, 4), (3, 4)])
def test_shortest_odd_cycle_exact_exhaustive(m, n):
    for M in all_matrices(m, n):
        c = soc(M)
        assert (None if c is None else len(c)) == brute_min_odd_cycle(M)


@pytest.mark.slow
def test_shortest_odd_cycle_exact_all_4x4():
    for M in all_matrices(4, 4):
        c = soc(M)
        assert (None if c is None else len(c)) == brute_min_odd_cycle(M)


@given(matrices(max_m=5, max_n=6))
def test_cycle_present_iff_not_c1p(M):
    c = soc(M)
    assert (c is None) == (brute_force_c1p(M) is not None)
    if c is not None:
        assert verify_odd_cycle(M, c)


@pytest.mark.parametrize("k", [3, 4, 5, 6, 7, 8])
def test_forcing_path_t1(k):
    M = tucker_pattern("I", k)
    p = forcing_path(build_forcing_graph(M), 1, k - 1)
    assert len(p) == k + 1
    assert verify_forcing_path(M, p)


@pytest.mark.parametrize("k", [4, 5, 6, 7, 8])
def test_forcing_path_t3(k):
    M = tucker_pattern("III", k)
    p = forcing_path(build_forcing_graph(M), 1, k)
    assert len(p) == k + 3
    assert verify_forcing_path(M, p)


def test_forcing_path_t5():
    M = tucker_pattern("V")
    p = forcing_path(build_forcing_graph(M), 2, 3)
    assert len(p) == 10
    assert verify_forcing_path(M, p)


def test_forcing_path_errors(t3_4):
    F = build_forcing_graph(t3_4)
    with pytest.raises(ValueError):
        forcing_path(F, 2, 2)
    with pytest.raises(ValueError):
        forcing_path(F, 1, 5)


def test_forcing_path_absent_for_c1p():
    F = build_forcing_graph(BinaryMatrix.from_strings("110", "011"))
    assert all(forcing_path(F, i, j) is None for i in range(1, 4) for j in range(1, 4) if i != j)


def test_traced_path_t1_5_verifies():
    M = tucker_pattern("I", 5)
    path = ((1, 4), (2, 4), (3, 4), (3, 5), (4, 5), (4, 1))
    assert verify_forcing_path(M, ForcingPathCertificate(5, path))
    bad = verify_forcing_path(M, ForcingPathCertificate(5, ((1, 4), (2, 4), (4, 2))))
    assert not bad and "reversal" in bad.reason


def test_traced_path_t2_5_verifies():
    M = tucker_pattern("II", 5)
    path = ((1, 5), (2, 5), (3, 5), (4, 5), (4, 1), (5, 1))
    assert verify_forcing_path(M, ForcingPathCertificate(5, path))


def test_path_to_cycle_length_law():
    for kind, k, m, L in [("III", 4, 7, 7), ("IV", None, 6, 5), ("V", None, 10, 9)]:
        M = tucker_pattern(kind, k)
        p = shortest_forcing_path(build_forcing_graph(M))
        assert len(p) == m
        c = path_to_cycle(p, M)
        assert len(c) == L
        assert verify_odd_cycle(M, c)


def test_path_to_cycle_rejects_bad_paths(t3_4):
    with pytest.raises(CertificateError):
        path_to_cycle(ForcingPathCertificate(4, ((1, 2), (1, 3))))
    with pytest.raises(CertificateError):
        path_to_cycle(ForcingPathCertificate(4, ((1, 2), (4, 2), (2, 1))), t3_4)


def test_cycle_to_path_examples(t3_4):
    c = soc(t3_4)
    p = cycle_to_path(c, t3_4)
    assert len(p) <= 8 and verify_forcing_path(t3_4, p)

    T = tucker_pattern("I", 3)
    tri = OddCycleCertificate(3, ((1, 3), (3, 2), (2, 1)))
    assert verify_odd_cycle(T, tri)
    p = cycle_to_path(tri, T)
    assert len(p) <= 4 and verify_forcing_path(T, p)
    # frozen from running the construction: (1,3) (2,3) (2,1) (3,1)
    assert p.vertices == ((1, 3), (2, 3), (2, 1), (3, 1))


def test_cycle_to_path_rejects_even(t3_4):
    with pytest.raises(CertificateError):
        cycle_to_path(OddCycleCertificate(4, ((1, 2), (2, 1), (1, 3), (3, 1))))


@pytest.mark.parametrize("kind, k", PATTERNS)
def test_round_trip_on_patterns(kind, k):
    M = tucker_pattern(kind, k)
    c = soc(M)
    p = cycle_to_path(c, M)
    assert verify_forcing_path(M, p)
    assert len(p) <= len(c) + 1
    c2 = path_to_cycle(p, M)
    assert verify_odd_cycle(M, c2)
    assert len(c2) <= len(c)
    F = build_forcing_graph(M)
    sp = shortest_forcing_path(F)
    c3 = path_to_cycle(sp, M)
    assert len(c3) == (len(sp) - 1 if len(sp) % 2 == 0 else len(sp))
    assert verify_odd_cycle(M, c3)


@pytest.mark.parametrize("kind, k", PATTERNS)
def test_alternating_walk_length_law_all_pairs(kind, k):
    # every per-pair shortest path: the walk obeys the law exactly, and the
    # extracted cycle is odd, valid and no longer than the walk
    M = tucker_pattern(kind, k)
    F = build_forcing_graph(M)
    for i in range(1, M.n + 1):
        for j in range(1, M.n + 1):
            p = forcing_path(F, i, j) if i != j else None
            if p is None:
                continue
            m = len(p)
            walk = alternating_walk(p)
            assert len(walk) == (m - 1 if m % 2 == 0 else m)
            assert all(rule_adjacent(M, walk[x], walk[(x + 1) % len(walk)]) for x in range(len(walk)))
            c = path_to_cycle(p, M)
            assert verify_odd_cycle(M, c) and len(c) <= len(walk)


def test_alternating_walk_can_fold():
    # T_II(6), pair (2,3): the 10-vertex path folds onto a pair twice, so the
    # simple odd cycle inside the 9-step walk is shorter
    M = tucker_pattern("II", 6)
    p = forcing_path(build_forcing_graph(M), 2, 3)
    assert len(p) == 10 and len(alternating_walk(p)) == 9
    assert len(set(alternating_walk(p))) < 9
    assert len(path_to_cycle(p, M)) == 7


@settings(max_examples=80)
@given(matrices(max_m=5, max_n=6, min_n=3))
def test_round_trip_random(M):
    c = soc(M)
    if c is None:
        return
    p = cycle_to_path(c, M)
    assert verify_forcing_path(M, p) and len(p) <= len(c) + 1
    c2 = path_to_cycle(p, M)
    assert verify_odd_cycle(M, c2) and len(c2) <= len(c)


@pytest.mark.parametrize("k", [4, 5, 6, 7, 8])
def test_minimality_floor(k):
    for kind in ("I", "II"):
        assert len(soc(tucker_pattern(kind, k))) >= k


def test_verify_odd_cycle_rejections(t3_4):
    c = soc(t3_4)
    verts = list(c.vertices)
    verts[2] = (1, 2)
    v = verify_odd_cycle(t3_4, OddCycleCertificate(4, tuple(verts)))
    assert not v and v.reason == "edge 3 is not an incompatibility edge"
    # a genuine 4-cycle of G: two type-1 edges joined by row-2 edges
    even = OddCycleCertificate(4, ((1, 2), (2, 1), (1, 3), (3, 1)))
    v = verify_odd_cycle(t3_4, even)
    assert not v and "not odd" in v.reason
    v = verify_odd_cycle(t3_4, OddCycleCertificate(4, ((1, 2), (2, 1), (1, 5))))
    assert not v and "not a column pair" in v.reason


def test_verify_rejects_repeated_vertex():
    # a closed walk that is odd and edge-valid but not a simple cycle
    M = tucker_pattern("I", 3)
    tri = [(1, 3), (3, 2), (2, 1)]
    walk = tri + [(1, 2), (2, 1)]
    assert all(rule_adjacent(M, walk[x], walk[(x + 1) % 5]) for x in range(5))
    v = verify_odd_cycle(M, OddCycleCertificate(3, tuple(walk)))
    assert not v and "repeats" in v.reason


def test_certificate_file_round_trip(t3_4):
    c = soc(t3_4)
    text = serialize_certificate(c)
    assert text.splitlines()[:3] == ["c1p-cert 1", "odd-cycle 7", "1 2"]
    assert parse_certificate(text, 4) == c
    p = cycle_to_path(c)
    text = serialize_certificate(p)
    assert text.splitlines()[1] == f"forcing-path {len(p)}"
    assert parse_certificate(text, 4) == p


@pytest.mark.parametrize("text", [
    "", "c1p-cert 2\nodd-cycle 1\n1 2\n", "c1p-cert 1\ncycle 1\n1 2\n",
    "c1p-cert 1\nodd-cycle 2\n1 2\n", "c1p-cert 1\nodd-cycle 1\n1 x\n",
])
def test_certificate_parse_errors(text):
    with pytest.raises(CertificateError):
        parse_certificate(text, 4)
