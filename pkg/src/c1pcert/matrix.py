"""Binary matrices, their text format, Tucker pattern generators and the
exhaustive C1P oracle.

All indices exposed by this module are 1-based, matching the column names
c_1..c_n used throughout the package.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import permutations
from typing import Iterable, Optional, Sequence

import numpy as np

#: Largest column count the factorial oracle will accept by default.
ORACLE_CAP = 9


class MatrixFormatError(ValueError):
    pass


class OracleLimitError(RuntimeError):
    pass


@dataclass(frozen=True)
class BinaryMatrix:
    """An immutable m x n 0/1 matrix stored as a tuple of row tuples."""

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in r) for r in self.rows)
        if not rows or not rows[0]:
            raise MatrixFormatError("empty matrix")
        n = len(rows[0])
        for idx, r in enumerate(rows, 1):
            if len(r) != n:
                raise MatrixFormatError(f"row {idx} has {len(r)} entries, expected {n}")
            if any(x not in (0, 1) for x in r):
                raise MatrixFormatError(f"row {idx} has an entry outside {{0,1}}")
        object.__setattr__(self, "rows", rows)

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[int]]) -> "BinaryMatrix":
        return cls(tuple(tuple(r) for r in rows))

    @classmethod
    def from_strings(cls, *rows: str) -> "BinaryMatrix":
        """``BinaryMatrix.from_strings("1100", "0110")``"""
        return cls(tuple(tuple(int(ch) for ch in r) for r in rows))

    @property
    def m(self) -> int:
        return len(self.rows)

    @property
    def n(self) -> int:
        return len(self.rows[0])

    @property
    def shape(self) -> tuple[int, int]:
        return self.m, self.n

    def __getitem__(self, rc: tuple[int, int]) -> int:
        """1-based entry access, ``M[row, col]``."""
        r, c = rc
        return self.rows[r - 1][c - 1]

    def to_numpy(self) -> np.ndarray:
        return np.array(self.rows, dtype=np.uint8)

    def ones(self, row: int) -> tuple[int, ...]:
        """1-based column indices holding a 1 in ``row`` (1-based)."""
        return tuple(c for c, x in enumerate(self.rows[row - 1], 1) if x)

    def delete_row(self, row: int) -> "BinaryMatrix":
        keep = [r for r in range(1, self.m + 1) if r != row]
        return submatrix(self, keep, range(1, self.n + 1))

    def __str__(self) -> str:
        return serialize_matrix(self)


class TuckerKind(enum.Enum):
    I = "I"
    II = "II"
    III = "III"
    IV = "IV"
    V = "V"

    @property
    def min_k(self) -> Optional[int]:
        return {"I": 3, "II": 4, "III": 4}.get(self.value)

    @property
    def fixed(self) -> bool:
        return self.min_k is None

    def columns(self, k: Optional[int] = None) -> int:
        if self is TuckerKind.IV:
            return 5
        if self is TuckerKind.V:
            return 6
        return k

    def rows(self, k: Optional[int] = None) -> int:
        if self.fixed:
            return 4
        return k - 1 if self is TuckerKind.III else k

    @classmethod
    def parse(cls, text: str) -> "TuckerKind":
        try:
            return cls(text.strip().upper())
        except ValueError:
            raise ValueError(f"unknown Tucker kind {text!r}; expected one of I, II, III, IV, V") from None


def _check_k(kind: TuckerKind, k: Optional[int]) -> Optional[int]:
    if kind.fixed:
        return None
    if k is None or k < kind.min_k:
        raise ValueError(f"Tucker pattern {kind.value} needs k >= {kind.min_k}, got {k}")
    return k


def tucker_pattern(kind: TuckerKind | str, k: Optional[int] = None) -> BinaryMatrix:
    """Canonical Tucker pattern, columns in the usual drawing order.

    Kinds I, II and III take a size parameter ``k`` (the number of columns);
    IV (4x5) and V (4x6) are fixed and ignore ``k``.
    """
    kind = TuckerKind.parse(kind) if isinstance(kind, str) else kind
    k = _check_k(kind, k)

    def row(ones, width):
        return tuple(1 if c in ones else 0 for c in range(1, width + 1))

    if kind is TuckerKind.I:
        rows = [row({i, i + 1}, k) for i in range(1, k)] + [row({1, k}, k)]
    elif kind is TuckerKind.II:
        rows = [row({i, i + 1}, k) for i in range(1, k - 1)]
        rows.append(row(set(range(1, k - 1)) | {k}, k))
        rows.append(row(set(range(2, k + 1)), k))
    elif kind is TuckerKind.III:
        rows = [row({i, i + 1}, k) for i in range(1, k - 1)]
        rows.append(row(set(range(2, k - 1)) | {k}, k))
    elif kind is TuckerKind.IV:
        return BinaryMatrix.from_strings("11000", "11110", "00110", "10011")
    else:
        return BinaryMatrix.from_strings("110000", "001100", "000011", "010101")
    return BinaryMatrix(tuple(rows))


# -- text format ------------------------------------------------------------


def parse_matrix(text: str) -> BinaryMatrix:
    """Parse the ``m n`` header followed by m rows of n space-separated bits."""
    lines = text.splitlines()
    while lines and not lines[-1].strip():
        lines.pop()
    if not lines:
        raise MatrixFormatError("empty matrix")
    header = lines[0].split()
    if len(header) != 2 or not all(h.isdigit() for h in header):
        raise MatrixFormatError(f"bad header {lines[0]!r}, expected 'm n'")
    m, n = int(header[0]), int(header[1])
    if m < 1 or n < 1:
        raise MatrixFormatError("empty matrix")
    body = lines[1:]
    if len(body) != m:
        raise MatrixFormatError(f"header declares {m} rows, found {len(body)}")
    rows = []
    for idx, line in enumerate(body, 1):
        tokens = line.split()
        if len(tokens) != n:
            noun = "token" if len(tokens) == 1 else "tokens"
            raise MatrixFormatError(f"row {idx} has {len(tokens)} {noun}, expected {n}")
        bad = [t for t in tokens if t not in ("0", "1")]
        if bad:
            raise MatrixFormatError(f"row {idx} has token {bad[0]!r}, expected 0 or 1")
        rows.append(tuple(int(t) for t in tokens))
    return BinaryMatrix(tuple(rows))


def serialize_matrix(M: BinaryMatrix) -> str:
    lines = [f"{M.m} {M.n}"]
    lines += [" ".join(str(x) for x in r) for r in M.rows]
    return "\n".join(lines) + "\n"


def read_matrix(path) -> BinaryMatrix:
    with open(path, encoding="utf-8") as fh:
        return parse_matrix(fh.read())


# -- orderings and the oracle ----------------------------------------------


def check_ordering(M: BinaryMatrix, order: Sequence[int]) -> bool:
    """True iff placing the columns in ``order`` (1-based) makes every row's
    ones contiguous."""
    if len(order) != M.n or sorted(order) != list(range(1, M.n + 1)):
        raise ValueError(f"order must be a permutation of 1..{M.n}, got {list(order)}")
    position = {c: pos for pos, c in enumerate(order)}
    for r in M.rows:
        pos = [position[c] for c, x in enumerate(r, 1) if x]
        if pos and max(pos) - min(pos) + 1 != len(pos):
            return False
    return True


def brute_force_c1p(M: BinaryMatrix, cap: int = ORACLE_CAP) -> Optional[tuple[int, ...]]:
    """Exhaustive C1P test: the lexicographically first good column order,
    or None if no order works.

    Raises OracleLimitError when ``M.n`` exceeds ``cap``.
    """
    if M.n > cap:
        raise OracleLimitError(f"oracle limit exceeded: n={M.n} > cap={cap}")
    # rows as sorted 0-based supports, skipping rows that are trivially fine
    supports = {tuple(c for c, x in enumerate(r) if x) for r in M.rows}
    supports = [s for s in supports if len(s) > 1]
    pos = [0] * M.n
    for perm in permutations(range(M.n)):
        for p, c in enumerate(perm):
            pos[c] = p
        for s in supports:
            ps = [pos[c] for c in s]
            if max(ps) - min(ps) + 1 != len(s):
                break
        else:
            return tuple(c + 1 for c in perm)
    return None


def submatrix(M: BinaryMatrix, row_set: Iterable[int], col_set: Iterable[int]) -> BinaryMatrix:
    """Rows and columns selected by 1-based index, in the order given."""
    rows, cols = list(row_set), list(col_set)
    for name, idx, bound in (("row", rows, M.m), ("column", cols, M.n)):
        if not idx:
            raise ValueError(f"empty {name} selection")
        if len(set(idx)) != len(idx):
            raise ValueError(f"duplicate {name} index in {idx}")
        bad = [i for i in idx if not 1 <= i <= bound]
        if bad:
            raise ValueError(f"{name} index {bad[0]} out of range 1..{bound}")
    return BinaryMatrix(tuple(tuple(M.rows[r - 1][c - 1] for c in cols) for r in rows))


def random_matrix(m: int, n: int, density: float, seed: int) -> BinaryMatrix:
    if not 0.0 <= density <= 1.0:
        raise ValueError(f"density must lie in [0, 1], got {density}")
    if m < 1 or n < 1:
        raise ValueError("matrix dimensions must be positive")
    rng = np.random.default_rng(seed)
    return BinaryMatrix.from_rows((rng.random((m, n)) < density).astype(int).tolist())
