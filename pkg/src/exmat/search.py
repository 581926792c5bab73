"""Exact weight and column extremal values by pruned exhaustive search.

ex_weight(m, n, S) is the maximum number of ones in an m x n 0-1 matrix
avoiding every pattern in S; ex_columns is the maximum number of columns of
an m-row matrix with at least k ones per column avoiding S.  Both searches
are branch and bound with incremental containment checks: extending an
avoiding matrix by one cell (or one appended column) can only create an
embedding through that cell (that column), so only pinned embeddings are
re-tested.

Boundary semantics for ex_columns:
  * k > m: the value is 0 (no column can hold k ones).
  * k below the minimum, over patterns, of the number of rows containing
    ones: unbounded, because ones filling the first k rows of arbitrarily
    many columns avoid every pattern.
  * some pattern has at most k rows in total: finite, and capped by
    (cols-1) * C(m, rows) via pigeonhole on column supports.  When no such
    certificate exists and the unbounded case does not fire, the search
    refuses with UnknownBoundError instead of looping forever.

Budgets are node counts, never wall time, so runs are reproducible.  A
budget-exhausted result carries exact=False and a witness-backed lower
bound.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import comb

from .matrix import (
    Matrix01,
    PatternSet,
    _contains_using_cell,
    _contains_using_last_col,
    avoids_all,
    contains_oracle,
    is_range_overlapping,
)

UNBOUNDED = math.inf

ORACLE_CELL_LIMIT = 16


class UnknownBoundError(RuntimeError):
    """No finiteness certificate applies; refusing an unbounded column search."""


class OracleSizeError(ValueError):
    """Requested size exceeds the exhaustive-enumeration limit."""


class _BudgetExhausted(Exception):
    pass


@dataclass(frozen=True)
class ExtremalResult:
    """Outcome of an extremal computation.

    value is an integer, or UNBOUNDED (math.inf).  exact=True means proven
    optimum; exact=False means best witness found within the node budget,
    which is still a valid lower bound.
    """

    value: int | float
    witness: Matrix01 | None
    nodes_explored: int
    exact: bool

    @property
    def unbounded(self) -> bool:
        return self.value == UNBOUNDED


@dataclass(frozen=True)
class ColumnExtremalQuery:
    m: int
    k: int
    patterns: PatternSet

    def __post_init__(self):
        if self.m < 1 or self.k < 1:
            raise ValueError("m and k must be at least 1")


def _canonical_seeds(m: int, n: int) -> list[Matrix01]:
    single_col = Matrix01(m, n, (1,) * m)
    single_row = Matrix01(m, n, ((1 << n) - 1,) + (0,) * (m - 1))
    return [Matrix01.zeros(m, n), single_col, single_row]


def ex_weight(m: int, n: int, patterns: PatternSet, budget: int | None = None) -> ExtremalResult:
    """Maximum weight of an m x n matrix avoiding every pattern.

    Cells are decided in row-major order, trying 1 before 0; a branch dies
    as soon as its partial matrix contains a pattern or cannot beat the
    incumbent.  The incumbent starts from the best avoiding matrix among
    the zero matrix, a single all-ones column and a single all-ones row, so
    any result, exact or budget-cut, is at least that seed's weight.
    """
    if m < 1 or n < 1:
        raise ValueError("m and n must be at least 1")
    pats = tuple(patterns)
    if not avoids_all(Matrix01.zeros(m, n), patterns):
        raise ValueError(
            "an all-zero pattern fits inside every host; no avoiding matrix exists"
        )
    best_m = Matrix01.zeros(m, n)
    best_w = 0
    for seed in _canonical_seeds(m, n):
        if seed.weight > best_w and avoids_all(seed, patterns):
            best_m, best_w = seed, seed.weight

    rows = [0] * m
    total = m * n
    nodes = 0

    def rec(t: int, w: int):
        nonlocal nodes, best_m, best_w
        nodes += 1
        if budget is not None and nodes > budget:
            raise _BudgetExhausted
        if w + (total - t) <= best_w:
            return
        if t == total:
            best_w = w
            best_m = Matrix01(m, n, tuple(rows))
            return
        r, c = divmod(t, n)
        rows[r] |= 1 << c
        if not any(_contains_using_cell(rows, m, n, p, r, c) for p in pats):
            rec(t + 1, w + 1)
        rows[r] ^= 1 << c
        rec(t + 1, w)

    exact = True
    try:
        rec(0, 0)
    except _BudgetExhausted:
        exact = False
    return ExtremalResult(best_w, best_m, nodes, exact)


@lru_cache(maxsize=None)
def ex_weight_oracle(m: int, n: int, patterns: PatternSet) -> ExtremalResult:
    """Exhaustive enumeration of all 2^(m*n) matrices; always exact.

    Enforces m*n <= 16.  Avoidance is tested with contains_oracle so the
    whole route is independent of the pruned search and of contains().
    """
    if m < 1 or n < 1:
        raise ValueError("m and n must be at least 1")
    if m * n > ORACLE_CELL_LIMIT:
        raise OracleSizeError(f"{m}x{n} exceeds the {ORACLE_CELL_LIMIT}-cell oracle limit")
    pats = tuple(patterns)
    col_mask = (1 << n) - 1
    best_w = -1
    best = None
    for mask in range(1 << (m * n)):
        if mask.bit_count() <= best_w:
            continue
        host = Matrix01(m, n, tuple((mask >> (r * n)) & col_mask for r in range(m)))
        if any(contains_oracle(host, p) for p in pats):
            continue
        best_w = host.weight
        best = host
    if best is None:
        raise ValueError(
            "an all-zero pattern fits inside every host; no avoiding matrix exists"
        )
    return ExtremalResult(best_w, best, 1 << (m * n), True)


def _finiteness_certificate(m: int, k: int, pats) -> tuple[Matrix01, int, int, int] | None:
    """Pattern giving the smallest pigeonhole cap (cols-1)*C(m, rows), if any."""
    best = None
    for p in pats:
        if p.rows <= k:
            cap = (p.cols - 1) * comb(m, p.rows)
            if best is None or cap < best[3]:
                best = (p, p.rows, p.cols, cap)
    return best


def ex_columns(
    query: ColumnExtremalQuery,
    budget: int | None = None,
    shuffle_seed: int | None = None,
) -> ExtremalResult:
    """Maximum number of columns with >= k ones each avoiding the patterns.

    Columns (row subsets of size >= k) are appended left to right in
    lexicographic order of their sorted row tuples; shuffle_seed reorders
    the candidate types, which must not change the optimum.  Pruning uses
    the certificate pattern's support slots: every k'-subset of rows can
    support at most cols-1 chosen columns, and each appended column consumes
    at least one slot.
    """
    m, k = query.m, query.k
    pats = tuple(query.patterns)
    if k > m:
        return ExtremalResult(0, Matrix01(m, 0, (0,) * m), 0, True)
    min_one_rows = min(sum(1 for bits in p.row_bits if bits) for p in pats)
    if k < min_one_rows:
        return ExtremalResult(UNBOUNDED, None, 0, True)
    cert = _finiteness_certificate(m, k, pats)
    if cert is None:
        raise UnknownBoundError(
            f"no pattern with at most k={k} rows and no unbounded certificate for m={m}"
        )
    _, cert_rows, cert_cols, cap = cert
    if cap == 0:
        return ExtremalResult(0, Matrix01(m, 0, (0,) * m), 0, True)

    candidates = []
    for size in range(k, m + 1):
        for rows_sel in combinations(range(m), size):
            candidates.append(sum(1 << r for r in rows_sel))
    candidates.sort(key=lambda mask: tuple(r for r in range(m) if (mask >> r) & 1))
    if shuffle_seed is not None:
        random.Random(shuffle_seed).shuffle(candidates)

    slot_masks = [sum(1 << r for r in sel) for sel in combinations(range(m), cert_rows)]
    occ = {t: 0 for t in slot_masks}
    slack = (cert_cols - 1) * len(slot_masks)

    host_rows = [0] * m
    chosen: list[int] = []
    best = 0
    best_cols: list[int] = []
    nodes = 0

    def rec():
        nonlocal nodes, best, best_cols, slack
        nodes += 1
        if budget is not None and nodes > budget:
            raise _BudgetExhausted
        depth = len(chosen)
        if depth > best:
            best = depth
            best_cols = chosen.copy()
        if depth + slack <= best:
            return
        new_col = depth
        bit = 1 << new_col
        for cmask in candidates:
            covered = [t for t in slot_masks if t & cmask == t]
            if any(occ[t] >= cert_cols - 1 for t in covered):
                continue
            sel = cmask
            while sel:
                low = sel & -sel
                host_rows[low.bit_length() - 1] |= bit
                sel ^= low
            chosen.append(cmask)
            if not any(
                _contains_using_last_col(host_rows, m, new_col + 1, p) for p in pats
            ):
                for t in covered:
                    occ[t] += 1
                slack -= len(covered)
                rec()
                for t in covered:
                    occ[t] -= 1
                slack += len(covered)
            chosen.pop()
            sel = cmask
            while sel:
                low = sel & -sel
                host_rows[low.bit_length() - 1] &= ~bit
                sel ^= low

    exact = True
    try:
        rec()
    except _BudgetExhausted:
        exact = False
    wit_rows = [0] * m
    for j, cmask in enumerate(best_cols):
        for r in range(m):
            if (cmask >> r) & 1:
                wit_rows[r] |= 1 << j
    witness = Matrix01(m, len(best_cols), tuple(wit_rows))
    return ExtremalResult(best, witness, nodes, exact)


# ---------------------------------------------------------------------------
# finite-instance inequality checks
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class RangeOverlapBoundReport:
    """ex(m,n,P) <= k * (ex_k(m,P) + n) for a range-overlapping P."""

    m: int
    n: int
    k: int
    weight_value: int
    column_value: int | float
    rhs: int | float
    holds: bool


def check_range_overlap_inequality(
    pattern: Matrix01, m: int, n: int, k: int
) -> RangeOverlapBoundReport:
    """Evaluate both sides exactly at oracle scale and compare.

    The pattern must be range-overlapping (that hypothesis is what makes
    the cluster-splitting argument behind the inequality work).
    """
    if not is_range_overlapping(pattern):
        raise ValueError("pattern is not range-overlapping")
    if k < 1:
        raise ValueError("k must be positive")
    single = PatternSet.of(pattern)
    lhs = ex_weight_oracle(m, n, single).value
    col = ex_columns(ColumnExtremalQuery(m, k, single))
    rhs = UNBOUNDED if col.unbounded else k * (col.value + n)
    return RangeOverlapBoundReport(m, n, k, lhs, col.value, rhs, lhs <= rhs)


@dataclass(frozen=True)
class LinearCertificateReport:
    """From a verified bound exs(m,n,S) <= g_m + c*n follows exs_k <= g_m/(k-c)."""

    m: int
    k: int
    c: int
    g_m: int
    checked_n: tuple[int, ...]
    failed_n: tuple[int, ...]
    column_value: int | float
    bound: Fraction
    holds: bool


def check_column_bound_from_linear_weight(
    patterns: PatternSet, m: int, k: int, c: int, g_m: int, n_values
) -> LinearCertificateReport:
    """Verify the linear weight certificate on n_values, then the column bound.

    The chain exs_k * k <= exs(m, exs_k, S) <= g_m + c * exs_k needs the
    certificate at n = exs_k(m, S), so that point is checked as well.
    """
    if k <= c:
        raise ValueError(f"need k > c, got k={k}, c={c}")
    col = ex_columns(ColumnExtremalQuery(m, k, patterns))
    ns = sorted(set(int(n) for n in n_values))
    if not col.unbounded and col.value >= 1 and col.value not in ns:
        ns.append(int(col.value))
        ns.sort()
    failed = []
    for n in ns:
        if m * n <= ORACLE_CELL_LIMIT:
            w = ex_weight_oracle(m, n, patterns).value
        else:
            w = ex_weight(m, n, patterns).value
        if w > g_m + c * n:
            failed.append(n)
    bound = Fraction(g_m, k - c)
    holds = not failed and not col.unbounded and col.value <= bound
    return LinearCertificateReport(
        m, k, c, g_m, tuple(ns), tuple(failed), col.value, bound, holds
    )


@dataclass(frozen=True)
class MonotonicityReport:
    m: int
    ks: tuple[int, ...]
    values: tuple[int | float, ...]
    nonincreasing: bool


def check_monotonicity(m: int, patterns: PatternSet, k_range) -> MonotonicityReport:
    """Column extremal values never increase as the per-column minimum k grows."""
    ks = tuple(k_range)
    values = tuple(ex_columns(ColumnExtremalQuery(m, k, patterns)).value for k in ks)
    ok = all(a >= b for a, b in zip(values, values[1:]))
    return MonotonicityReport(m, ks, values, ok)


@dataclass(frozen=True)
class RectMaxReport:
    m: int
    n: int
    rect_value: int
    square_m_value: int
    square_n_value: int
    holds: bool


def check_rect_square_max(m: int, n: int, patterns: PatternSet) -> RectMaxReport:
    """exs(m,n,S) <= max(exs(m,S), exs(n,S)), all sides by oracle."""
    rect = ex_weight_oracle(m, n, patterns).value
    sq_m = ex_weight_oracle(m, m, patterns).value
    sq_n = ex_weight_oracle(n, n, patterns).value
    return RectMaxReport(m, n, rect, sq_m, sq_n, rect <= max(sq_m, sq_n))
