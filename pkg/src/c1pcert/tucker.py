"""Locate and classify a Tucker submatrix inside a non-C1P matrix."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Optional

from .graphs import build_incompatibility_graph, is_bipartite
from .matrix import BinaryMatrix, TuckerKind, submatrix, tucker_pattern


class MatrixIsC1PError(ValueError):
    pass


class TuckerConsistencyError(RuntimeError):
    """A minimal non-C1P submatrix matched no Tucker pattern.  Tucker's
    theorem says this cannot happen, so it always indicates a bug."""


@dataclass(frozen=True)
class TuckerMatch:
    """A Tucker pattern found inside a host matrix.

    ``row_indices``/``col_indices`` are sorted 1-based host indices.  The
    permutations are 1-based positions into those lists: pattern entry
    (t, u) equals host entry (row_indices[row_perm[t]], col_indices[col_perm[u]]).
    """

    kind: TuckerKind
    k: Optional[int]
    row_indices: tuple[int, ...]
    col_indices: tuple[int, ...]
    row_perm: tuple[int, ...]
    col_perm: tuple[int, ...]

    def pattern(self) -> BinaryMatrix:
        return tucker_pattern(self.kind, self.k)

    def extract(self, M: BinaryMatrix) -> BinaryMatrix:
        """The host submatrix with rows and columns put in pattern order."""
        rows = [self.row_indices[t - 1] for t in self.row_perm]
        cols = [self.col_indices[u - 1] for u in self.col_perm]
        return submatrix(M, rows, cols)

    def verify(self, M: BinaryMatrix) -> bool:
        return self.extract(M) == self.pattern()

    def report(self) -> str:
        def fmt(xs):
            return ",".join(str(x) for x in xs)

        k = self.k if self.k is not None else self.pattern().n
        return "\n".join([
            f"kind={self.kind.value} k={k}",
            f"rows={fmt(self.row_indices)}",
            f"cols={fmt(self.col_indices)}",
            f"row_perm={fmt(self.row_perm)}",
            f"col_perm={fmt(self.col_perm)}",
        ]) + "\n"


def is_c1p(M: BinaryMatrix) -> bool:
    return bool(is_bipartite(build_incompatibility_graph(M)))


def minimal_nonc1p_rows(M: BinaryMatrix) -> list[int]:
    """Greedy ascending row deletion down to a row-minimal non-C1P set."""
    cols = range(1, M.n + 1)
    if is_c1p(M):
        raise MatrixIsC1PError("matrix is C1P")
    rows = list(range(1, M.m + 1))
    for r in range(1, M.m + 1):
        trial = [x for x in rows if x != r]
        if trial and not is_c1p(submatrix(M, trial, cols)):
            rows = trial
    return rows


def minimal_nonc1p_cols(M: BinaryMatrix, rows: Iterable[int]) -> list[int]:
    rows = list(rows)
    cols = list(range(1, M.n + 1))
    if is_c1p(submatrix(M, rows, cols)):
        raise MatrixIsC1PError("matrix restricted to the given rows is C1P")
    for c in range(1, M.n + 1):
        trial = [x for x in cols if x != c]
        if trial and not is_c1p(submatrix(M, rows, trial)):
            cols = trial
    return cols


def _candidates(m: int, n: int) -> list[tuple[TuckerKind, Optional[int]]]:
    out = []
    if m == n and n >= 3:
        out.append((TuckerKind.I, n))
    if m == n and n >= 4:
        out.append((TuckerKind.II, n))
    if n == m + 1 and n >= 4:
        out.append((TuckerKind.III, n))
    if (m, n) == (4, 5):
        out.append((TuckerKind.IV, None))
    if (m, n) == (4, 6):
        out.append((TuckerKind.V, None))
    return out


def _match(A: BinaryMatrix, P: BinaryMatrix) -> Optional[tuple[tuple[int, ...], tuple[int, ...]]]:
    """Find permutations with P[t][u] == A[row_perm[t]][col_perm[u]].

    Columns are assigned in pattern order; after each assignment the multiset
    of row prefixes must agree, which prunes almost everything.
    """
    m, n = A.shape
    a_cols = [tuple(A.rows[r][c] for r in range(m)) for c in range(n)]
    p_cols = [tuple(P.rows[r][c] for r in range(m)) for c in range(n)]
    if sorted(map(sum, a_cols)) != sorted(map(sum, p_cols)):
        return None
    if Counter(map(sum, A.rows)) != Counter(map(sum, P.rows)):
        return None
    p_prefix = [Counter(tuple(row[:t]) for row in P.rows) for t in range(n + 1)]
    chosen: list[int] = []

    def extend() -> bool:
        t = len(chosen)
        if t == n:
            return True
        want = sum(p_cols[t])
        for c in range(n):
            if c in chosen or sum(a_cols[c]) != want:
                continue
            chosen.append(c)
            prefix = Counter(tuple(A.rows[r][x] for x in chosen) for r in range(m))
            if prefix == p_prefix[t + 1] and extend():
                return True
            chosen.pop()
        return False

    if not extend():
        return None
    # pair each pattern row with an unused host row of identical content
    used = [False] * m
    row_perm = []
    for prow in P.rows:
        for r in range(m):
            if not used[r] and tuple(A.rows[r][c] for c in chosen) == prow:
                used[r] = True
                row_perm.append(r + 1)
                break
    return tuple(row_perm), tuple(c + 1 for c in chosen)


def classify_pattern(M: BinaryMatrix):
    """``(kind, k, row_perm, col_perm)`` if M is a Tucker pattern up to row
    and column permutation, else None.  ``k`` is None for kinds IV and V."""
    for kind, k in _candidates(*M.shape):
        hit = _match(M, tucker_pattern(kind, k))
        if hit is not None:
            return kind, k, hit[0], hit[1]
    return None


def find_tucker(M: BinaryMatrix) -> TuckerMatch:
    rows = minimal_nonc1p_rows(M)
    cols = minimal_nonc1p_cols(M, rows)
    sub = submatrix(M, rows, cols)
    found = classify_pattern(sub)
    if found is None:
        raise TuckerConsistencyError(
            f"minimal non-C1P submatrix (rows {rows}, cols {cols}) matches no Tucker pattern:\n{sub}")
    kind, k, row_perm, col_perm = found
    match = TuckerMatch(kind, k, tuple(rows), tuple(cols), row_perm, col_perm)
    if not match.verify(M):  # pragma: no cover - guarded by _match
        raise TuckerConsistencyError("match does not reproduce the canonical pattern")
    return match
