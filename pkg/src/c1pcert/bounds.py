"""Closed-form odd-cycle lengths for the Tucker families, a golden-table
reproduction of the tight bound, and a randomized stress test."""

from __future__ import annotations

import csv
import io
from collections import Counter
from dataclasses import dataclass, field
from typing import Optional

from .certify import shortest_odd_cycle
from .graphs import build_incompatibility_graph
from .matrix import BinaryMatrix, TuckerKind, random_matrix, serialize_matrix, tucker_pattern

K_CAP = 12
STRESS_COL_CAP = 12


class BoundViolation(AssertionError):
    def __init__(self, matrix: BinaryMatrix, length: int, bound: int):
        self.matrix = matrix
        self.length = length
        self.bound = bound
        super().__init__(
            f"shortest odd cycle {length} exceeds bound {bound} for matrix:\n{serialize_matrix(matrix)}")


def theorem_bound(k: int) -> int:
    """Worst-case shortest odd cycle over all non-C1P matrices with k columns."""
    if k < 3:
        raise ValueError(f"k={k}: every matrix with fewer than 3 columns is C1P")
    if k == 3:
        return 3
    return k + 2 if k % 2 else k + 3


def expected_pattern_length(kind: TuckerKind | str, k: Optional[int] = None) -> int:
    kind = TuckerKind.parse(kind) if isinstance(kind, str) else kind
    if kind is TuckerKind.IV:
        return 5
    if kind is TuckerKind.V:
        return 9
    if k is None or k < kind.min_k:
        raise ValueError(f"Tucker pattern {kind.value} needs k >= {kind.min_k}, got {k}")
    if kind is TuckerKind.III:
        return k + 2 if k % 2 else k + 3
    return k if k % 2 else k + 1


@dataclass(frozen=True)
class BoundRow:
    kind: TuckerKind
    k: Optional[int]
    n_cols: int
    computed: Optional[int]
    expected: int
    bound: int

    @property
    def tight(self) -> bool:
        return self.computed == self.bound

    @property
    def ok(self) -> bool:
        return self.computed == self.expected and self.computed <= self.bound


@dataclass
class BoundReport:
    rows: list[BoundRow]

    @property
    def passed(self) -> bool:
        return all(r.ok for r in self.rows)

    def verdict(self) -> str:
        bad = sum(not r.ok for r in self.rows)
        return "PASS" if self.passed else f"FAIL ({bad} mismatches)"

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["kind", "k", "n_cols", "computed", "expected", "bound", "tight"])
        for r in self.rows:
            w.writerow([r.kind.value, "" if r.k is None else r.k, r.n_cols, r.computed,
                        r.expected, r.bound, str(r.tight).lower()])
        return buf.getvalue()

    def to_text(self) -> str:
        header = ("kind", "k", "n_cols", "computed", "expected", "bound", "tight")
        body = [(r.kind.value, "-" if r.k is None else str(r.k), str(r.n_cols), str(r.computed),
                 str(r.expected), str(r.bound), "yes" if r.tight else "no") for r in self.rows]
        widths = [max(len(x) for x in col) for col in zip(header, *body)]
        lines = ["  ".join(x.rjust(w) for x, w in zip(line, widths)) for line in [header, *body]]
        lines.append(f"verdict: {self.verdict()}")
        return "\n".join(lines) + "\n"


def _table_cells(k_min: int, k_max: int) -> list[tuple[TuckerKind, Optional[int]]]:
    cells = []
    for kind in (TuckerKind.I, TuckerKind.II, TuckerKind.III):
        cells += [(kind, k) for k in range(max(k_min, kind.min_k), k_max + 1)]
    # the fixed-size patterns appear once whenever the range reaches k = 4
    if k_max >= 4:
        cells += [(TuckerKind.IV, None), (TuckerKind.V, None)]
    return cells


def _compute_cell(cell) -> BoundRow:
    kind, k = cell
    M = tucker_pattern(kind, k)
    cycle = shortest_odd_cycle(build_incompatibility_graph(M))
    return BoundRow(kind, k, M.n, None if cycle is None else len(cycle),
                    expected_pattern_length(kind, k), theorem_bound(M.n))


def reproduce_table(k_min: int = 3, k_max: int = 8, cap: int = K_CAP) -> BoundReport:
    if not 3 <= k_min <= k_max <= cap:
        raise ValueError(f"need 3 <= k_min <= k_max <= {cap}, got {k_min}..{k_max}")
    return BoundReport([_compute_cell(c) for c in _table_cells(k_min, k_max)])


@dataclass
class StressReport:
    trials: int
    m: int
    n: int
    density: float
    seed: int
    bound: int
    non_c1p: int = 0
    lengths: Counter = field(default_factory=Counter)

    @property
    def max_length(self) -> Optional[int]:
        return max(self.lengths) if self.lengths else None

    def to_text(self) -> str:
        dist = " ".join(f"{L}:{c}" for L, c in sorted(self.lengths.items())) or "-"
        return (f"trials={self.trials} m={self.m} n={self.n} density={self.density} seed={self.seed}\n"
                f"non_c1p={self.non_c1p} bound={self.bound} max_length={self.max_length or '-'}"
                f" violations=0\n"
                f"lengths {dist}\n")

    def to_csv(self) -> str:
        lines = ["length,count"] + [f"{L},{c}" for L, c in sorted(self.lengths.items())]
        return "\n".join(lines) + "\n"


def stress_bound(trials: int, m: int, n: int, density: float, seed: int) -> StressReport:
    """Shortest odd cycles of seeded random matrices against the bound.

    Trial t uses seed ``seed + t``.  A violation raises BoundViolation.
    """
    if n < 4:
        raise ValueError("stress test needs n >= 4")
    if n > STRESS_COL_CAP:
        raise ValueError(f"n={n} exceeds the cycle-search cap {STRESS_COL_CAP}")
    bound = theorem_bound(n)
    report = StressReport(trials, m, n, density, seed, bound)
    for t in range(trials):
        M = random_matrix(m, n, density, seed + t)
        cycle = shortest_odd_cycle(build_incompatibility_graph(M))
        if cycle is None:
            continue
        report.non_c1p += 1
        report.lengths[len(cycle)] += 1
        if len(cycle) > bound:
            raise BoundViolation(M, len(cycle), bound)
    return report
