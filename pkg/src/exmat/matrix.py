"""Dense 0-1 matrices and ordered pattern containment.

A 0-1 matrix A contains a pattern M when there are strictly increasing row
indices i1 < ... < ip and column indices j1 < ... < jq (p, q the pattern
dimensions) such that A[ia, jb] = 1 wherever M[a, b] = 1.  Otherwise A
avoids M.  Row and column order is kept; extra ones in A are allowed.

Rows are packed into integer bitmasks (bit j of row_bits[i] is the cell in
row i, column j), so the inner candidate tests of the containment search are
single AND operations.  Everything in this API is 0-based; the text format
and the CLI are 1-based.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations


class DegeneratePatternError(ValueError):
    """A pattern violates a structural precondition (e.g. an all-zero column)."""


@dataclass(frozen=True)
class Matrix01:
    """Immutable dense 0-1 matrix.

    Zero-dimension matrices (rows == 0 or cols == 0) are legal so that
    operations whose result has no columns can return an explicit empty
    matrix; patterns used for avoidance must be at least 1x1 (enforced by
    PatternSet).
    """

    rows: int
    cols: int
    row_bits: tuple[int, ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ValueError("dimensions must be nonnegative")
        if len(self.row_bits) != self.rows:
            raise ValueError("row_bits length does not match rows")
        full = (1 << self.cols) - 1
        for bits in self.row_bits:
            if bits < 0 or bits & ~full:
                raise ValueError("row mask does not fit in cols bits")

    @classmethod
    def from_rows(cls, data) -> "Matrix01":
        """Build from an iterable of rows, each an iterable of 0/1 values."""
        grid = [[int(v) for v in row] for row in data]
        rows = len(grid)
        cols = len(grid[0]) if rows else 0
        for row in grid:
            if len(row) != cols:
                raise ValueError("ragged rows")
            if any(v not in (0, 1) for v in row):
                raise ValueError("entries must be 0 or 1")
        bits = tuple(sum(v << j for j, v in enumerate(row)) for row in grid)
        return cls(rows, cols, bits)

    @classmethod
    def from_ones(cls, rows: int, cols: int, ones) -> "Matrix01":
        """Build from (row, col) positions of the one-cells (0-based)."""
        masks = [0] * rows
        for i, j in ones:
            if not (0 <= i < rows and 0 <= j < cols):
                raise ValueError(f"cell ({i},{j}) outside {rows}x{cols}")
            masks[i] |= 1 << j
        return cls(rows, cols, tuple(masks))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "Matrix01":
        return cls(rows, cols, (0,) * rows)

    @classmethod
    def filled(cls, rows: int, cols: int) -> "Matrix01":
        return cls(rows, cols, ((1 << cols) - 1,) * rows)

    def cell(self, i: int, j: int) -> int:
        return (self.row_bits[i] >> j) & 1

    @property
    def weight(self) -> int:
        return sum(b.bit_count() for b in self.row_bits)

    def ones(self):
        """Yield (row, col) of every one-cell in row-major order."""
        for i, bits in enumerate(self.row_bits):
            while bits:
                low = bits & -bits
                yield i, low.bit_length() - 1
                bits ^= low

    def col_bits(self, j: int) -> int:
        """Bitmask over rows of the ones in column j."""
        mask = 0
        for i, bits in enumerate(self.row_bits):
            mask |= ((bits >> j) & 1) << i
        return mask

    def columns(self) -> list[int]:
        return [self.col_bits(j) for j in range(self.cols)]

    def to_text(self) -> str:
        if self.rows == 0 or self.cols == 0:
            raise ValueError("empty matrix has no text form")
        return "\n".join(
            "".join("1" if (bits >> j) & 1 else "0" for j in range(self.cols))
            for bits in self.row_bits
        )

    def __str__(self):  # pragma: no cover - debugging aid
        return self.to_text() if self.rows and self.cols else f"<empty {self.rows}x{self.cols}>"


@dataclass(frozen=True)
class PatternSet:
    """Nonempty ordered collection of patterns avoided simultaneously."""

    patterns: tuple[Matrix01, ...]

    def __post_init__(self):
        if not self.patterns:
            raise ValueError("pattern set must be nonempty")
        for p in self.patterns:
            if p.rows < 1 or p.cols < 1:
                raise ValueError("patterns must have at least one row and column")

    @classmethod
    def of(cls, *patterns: Matrix01) -> "PatternSet":
        return cls(tuple(patterns))

    def __iter__(self):
        return iter(self.patterns)

    def __len__(self):
        return len(self.patterns)


@dataclass(frozen=True)
class ColumnRange:
    """Rows spanned by the ones of one column: topmost and bottommost one."""

    col: int
    top: int
    bottom: int


# ---------------------------------------------------------------------------
# containment core
#
# The search assigns host rows to pattern rows in increasing order.  After
# every assignment a greedy left-to-right column check runs: the candidate
# host columns for pattern column b are the AND of the assigned host rows
# that b requires, and the greedy strictly-increasing choice of lowest set
# bits is feasible iff some choice is (exchange argument).  Masks only
# shrink as rows get assigned, so the partial check is a sound prune.
# ---------------------------------------------------------------------------


@lru_cache(maxsize=4096)
def _col_requirements(pattern: Matrix01) -> tuple[tuple[int, ...], ...]:
    """Per pattern column: the pattern rows that must map onto ones."""
    req = [[] for _ in range(pattern.cols)]
    for a, bits in enumerate(pattern.row_bits):
        while bits:
            low = bits & -bits
            req[low.bit_length() - 1].append(a)
            bits ^= low
    return tuple(tuple(r) for r in req)


def _cols_embeddable(hrows, n, req, assigned, pin_b, pin_c):
    cur = -1
    na = len(assigned)
    full = (1 << n) - 1
    for b, need in enumerate(req):
        mask = full
        for a in need:
            if a < na:
                mask &= hrows[assigned[a]]
                if not mask:
                    return False
        if b == pin_b:
            mask &= 1 << pin_c
        mask >>= cur + 1
        if not mask:
            return False
        cur += (mask & -mask).bit_length()
    return True


def _embeds(hrows, hm, n, pattern, pin_row=None, pin_col=None):
    """Embedding test on raw row bitmasks.

    pin_row = (a0, r0) forces pattern row a0 onto host row r0; pin_col =
    (b0, c0) forces pattern column b0 onto host column c0.
    """
    p, q = pattern.rows, pattern.cols
    if p > hm or q > n:
        return False
    req = _col_requirements(pattern)
    pin_b, pin_c = pin_col if pin_col is not None else (-1, -1)
    a0, r0 = pin_row if pin_row is not None else (-1, -1)
    ppop = [bits.bit_count() for bits in pattern.row_bits]
    hpop = [bits.bit_count() for bits in hrows]
    assigned: list[int] = []

    def rec(a, start):
        if a == p:
            return True
        if a == a0:
            lo, hi = r0, r0
            if start > r0:
                return False
        else:
            lo = start
            hi = hm - (p - a)
            if a < a0:
                hi = min(hi, r0 - (a0 - a))
        for i in range(lo, hi + 1):
            if hpop[i] < ppop[a]:
                continue
            assigned.append(i)
            if _cols_embeddable(hrows, n, req, assigned, pin_b, pin_c) and rec(a + 1, i + 1):
                return True
            assigned.pop()
        return False

    return rec(0, 0)


def _contains_using_cell(hrows, hm, n, pattern, r, c):
    """True iff an embedding exists that maps some pattern one onto host cell (r, c).

    This is exactly the new containment created by switching (r, c) from 0
    to 1 in a previously avoiding host.
    """
    for a, bits in enumerate(pattern.row_bits):
        col_bits = bits
        while col_bits:
            low = col_bits & -col_bits
            b = low.bit_length() - 1
            col_bits ^= low
            if _embeds(hrows, hm, n, pattern, pin_row=(a, r), pin_col=(b, c)):
                return True
    return False


def _contains_using_last_col(hrows, hm, n, pattern):
    """True iff an embedding exists whose last pattern column maps to host column n-1.

    When columns are appended on the right of an avoiding host, this is the
    only way new containment can arise.
    """
    return _embeds(hrows, hm, n, pattern, pin_col=(pattern.cols - 1, n - 1))


def contains(host: Matrix01, pattern: Matrix01) -> bool:
    """Ordered containment of pattern in host.

    An all-zero pattern that fits dimension-wise is vacuously contained.
    """
    return _embeds(host.row_bits, host.rows, host.cols, pattern)


def contains_oracle(host: Matrix01, pattern: Matrix01) -> bool:
    """Plain enumeration over all row-subset/column-subset pairs.

    No pruning or bit tricks; the independent reference for contains().
    """
    p, q = pattern.rows, pattern.cols
    if p > host.rows or q > host.cols:
        return False
    pattern_ones = list(pattern.ones())
    for rsel in combinations(range(host.rows), p):
        for csel in combinations(range(host.cols), q):
            if all(host.cell(rsel[a], csel[b]) for a, b in pattern_ones):
                return True
    return False


def avoids_all(host: Matrix01, patterns: PatternSet) -> bool:
    return not any(contains(host, p) for p in patterns)


def column_ranges(matrix: Matrix01) -> list[ColumnRange]:
    """One ColumnRange per column that has at least one one, in column order."""
    out = []
    cols = matrix.columns()
    for j, bits in enumerate(cols):
        if bits:
            top = (bits & -bits).bit_length() - 1
            bottom = bits.bit_length() - 1
            out.append(ColumnRange(j, top, bottom))
    return out


def is_range_overlapping(pattern: Matrix01) -> bool:
    """Every pair of columns' top-to-bottom one segments meets a common row.

    Requires every column to contain a one; an all-zero column has no
    segment and raises DegeneratePatternError.
    """
    ranges = column_ranges(pattern)
    if len(ranges) != pattern.cols:
        bad = sorted(set(range(pattern.cols)) - {r.col for r in ranges})
        raise DegeneratePatternError(f"all-zero column(s) {bad} have no row segment")
    for a, b in combinations(ranges, 2):
        if a.bottom < b.top or b.bottom < a.top:
            return False
    return True


def is_light(pattern: Matrix01) -> bool:
    """No column holds two ones."""
    return all(bits.bit_count() <= 1 for bits in pattern.columns())


_IDENTITY2 = Matrix01(2, 2, (0b01, 0b10))


def has_identity_or_row_pair(pattern: Matrix01) -> bool:
    """Pattern contains the 2x2 identity matrix or has two ones in one row."""
    if any(bits.bit_count() >= 2 for bits in pattern.row_bits):
        return True
    return contains(pattern, _IDENTITY2)


def flip_h(matrix: Matrix01) -> Matrix01:
    """Mirror over a vertical line (reverse column order)."""
    n = matrix.cols
    rev = tuple(
        sum(((bits >> j) & 1) << (n - 1 - j) for j in range(n)) for bits in matrix.row_bits
    )
    return Matrix01(matrix.rows, n, rev)


def flip_v(matrix: Matrix01) -> Matrix01:
    """Mirror over a horizontal line (reverse row order)."""
    return Matrix01(matrix.rows, matrix.cols, tuple(reversed(matrix.row_bits)))


# ---------------------------------------------------------------------------
# text format: one line per row of characters '0'/'1'; a blank line separates
# matrices inside a pattern-set file.
# ---------------------------------------------------------------------------


def parse_matrix(text: str) -> Matrix01:
    lines = [ln.strip() for ln in text.strip().splitlines() if ln.strip()]
    if not lines:
        raise ValueError("no matrix rows found")
    width = len(lines[0])
    for ln in lines:
        if len(ln) != width:
            raise ValueError("rows have unequal length")
        if set(ln) - {"0", "1"}:
            raise ValueError(f"invalid characters in row {ln!r}")
    return Matrix01.from_rows([[int(ch) for ch in ln] for ln in lines])


def parse_pattern_set(text: str) -> PatternSet:
    blocks: list[list[str]] = [[]]
    for raw in text.splitlines():
        line = raw.strip()
        if line:
            blocks[-1].append(line)
        elif blocks[-1]:
            blocks.append([])
    mats = [parse_matrix("\n".join(b)) for b in blocks if b]
    if not mats:
        raise ValueError("no matrices found")
    return PatternSet(tuple(mats))


def format_matrix(matrix: Matrix01) -> str:
    return matrix.to_text()


def format_pattern_set(patterns: PatternSet) -> str:
    return "\n\n".join(m.to_text() for m in patterns)
