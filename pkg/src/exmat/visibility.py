"""Bar visibility hypergraphs over disjoint horizontal bars.

A layout is a set of horizontal bars, each with a distinct integer height
and an exact rational x-interval; all 2n interval endpoints must be
pairwise distinct.  For a visibility parameter s, an edge is any set of s+2
bars that some vertical segment meets while meeting no other bar.  Such a
set is always s+2 consecutively stacked bars among those whose intervals
contain the segment's x.

sweep_edges enumerates edges with a left-to-right endpoint sweep: new edges
can only appear when a bar starts (windows through its stack position, at
most s+2 of them) or ends (windows bridging the gap it leaves, at most s+1),
which also proves the (2s+3)n bound on distinct edges.  A witness x is
recorded every time a window (re)appears, so an edge's witness count equals
its number of maximal realization intervals.

matrix_to_visibility turns a 0-1 matrix into such a layout: trim the first
and last s+1 ones of every row and then the bottom r ones of every column;
each surviving row becomes a bar spanning its first to last remaining one;
each surviving one with s+1 ones below it in its column anchors a vertical
witness segment through the next s+1 bars covering that column.  Geometry
uses Fractions throughout; a per-row rational nudge of the bar ends keeps
all endpoints distinct without changing which columns a bar covers.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .matrix import Matrix01, PatternSet, avoids_all
from .patterns import TrsParams, generate_T


class LayoutError(ValueError):
    """Layout violates the bar model (duplicate endpoints or heights, ...)."""


@dataclass(frozen=True)
class Bar:
    y_rank: int
    x_left: Fraction
    x_right: Fraction

    def __post_init__(self):
        object.__setattr__(self, "x_left", Fraction(self.x_left))
        object.__setattr__(self, "x_right", Fraction(self.x_right))
        if self.x_left >= self.x_right:
            raise LayoutError(f"bar needs x_left < x_right, got {self.x_left} >= {self.x_right}")

    def covers(self, x: Fraction) -> bool:
        return self.x_left <= x <= self.x_right


@dataclass(frozen=True)
class BarLayout:
    bars: tuple[Bar, ...]
    s: int

    def __post_init__(self):
        if self.s < 0:
            raise LayoutError("s must be nonnegative")
        ys = [b.y_rank for b in self.bars]
        if len(set(ys)) != len(ys):
            raise LayoutError("bars must have pairwise distinct y_rank")
        ends = [b.x_left for b in self.bars] + [b.x_right for b in self.bars]
        if len(set(ends)) != len(ends):
            raise LayoutError("all endpoint x-coordinates must be distinct")


@dataclass(frozen=True)
class VisEdge:
    """An edge (s+2 bar indices) plus one witness x per maximal realization
    interval (for matrix-derived layouts: per witness column)."""

    members: tuple[int, ...]
    witnesses: tuple[Fraction, ...]

    @property
    def multiplicity(self) -> int:
        return len(self.witnesses)


def bars_at(layout: BarLayout, x: Fraction) -> list[int]:
    """Indices of bars covering x, sorted by height."""
    hit = [i for i, b in enumerate(layout.bars) if b.covers(x)]
    hit.sort(key=lambda i: layout.bars[i].y_rank)
    return hit


def witness_is_exact(layout: BarLayout, members, x: Fraction) -> bool:
    """A vertical segment at x through the member span meets exactly the members."""
    mset = set(members)
    stab = bars_at(layout, x)
    if not mset <= set(stab):
        return False
    ys = [layout.bars[i].y_rank for i in members]
    lo, hi = min(ys), max(ys)
    covered = {i for i in stab if lo <= layout.bars[i].y_rank <= hi}
    return covered == mset


def sweep_edges(layout: BarLayout) -> list[VisEdge]:
    """All distinct edges via the endpoint sweep, in first-seen order."""
    size = layout.s + 2
    bars = layout.bars
    events = sorted(
        [(b.x_left, 0, i) for i, b in enumerate(bars)]
        + [(b.x_right, 1, i) for i, b in enumerate(bars)]
    )
    active: list[tuple[int, int]] = []  # (y_rank, bar index), sorted by height
    seen: dict[frozenset, list[Fraction]] = {}

    def record(window, x):
        key = frozenset(idx for _, idx in window)
        seen.setdefault(key, []).append(x)

    for ei, (x, kind, bi) in enumerate(events):
        entry = (bars[bi].y_rank, bi)
        if kind == 0:
            pos = 0
            while pos < len(active) and active[pos] < entry:
                pos += 1
            active.insert(pos, entry)
            lo = max(0, pos - (size - 1))
            hi = min(pos, len(active) - size)
            for i in range(lo, hi + 1):
                record(active[i : i + size], x)
        else:
            pos = active.index(entry)
            active.pop(pos)
            lo = max(0, pos - (size - 1))
            hi = min(pos - 1, len(active) - size)
            if lo <= hi and ei + 1 < len(events):
                wx = (x + events[ei + 1][0]) / 2
                for i in range(lo, hi + 1):
                    record(active[i : i + size], wx)
    return [
        VisEdge(tuple(sorted(key)), tuple(wit)) for key, wit in seen.items()
    ]


def sweep_edges_oracle(layout: BarLayout) -> list[VisEdge]:
    """Reference enumeration: test every (s+2)-subset of bars against the
    midpoint of every gap between consecutive endpoint coordinates.

    Adjacent realizing gaps belong to one maximal interval (the separating
    endpoint cannot block an edge realized on both sides), so runs of gaps
    are merged and the witness count matches sweep_edges.
    """
    size = layout.s + 2
    bars = layout.bars
    n = len(bars)
    if n < size:
        return []
    ends = sorted([b.x_left for b in bars] + [b.x_right for b in bars])
    mids = [(a + b) / 2 for a, b in zip(ends, ends[1:])]
    seen: dict[frozenset, list[Fraction]] = {}
    prev: set[frozenset] = set()
    for x in mids:
        current: set[frozenset] = set()
        for combo in combinations(range(n), size):
            if not all(bars[i].covers(x) for i in combo):
                continue
            ys = [bars[i].y_rank for i in combo]
            lo, hi = min(ys), max(ys)
            blocked = any(
                lo < bars[j].y_rank < hi and bars[j].covers(x)
                for j in range(n)
                if j not in combo
            )
            if blocked:
                continue
            key = frozenset(combo)
            current.add(key)
            if key not in prev:
                seen.setdefault(key, []).append(x)
        prev = current
    return [VisEdge(tuple(sorted(key)), tuple(wit)) for key, wit in seen.items()]


# ---------------------------------------------------------------------------
# matrix reduction
# ---------------------------------------------------------------------------


def _trimmed_cells(matrix: Matrix01, r: int, s: int) -> dict[int, list[int]]:
    """Surviving ones per column after the row and column trims."""
    by_row: dict[int, list[int]] = {}
    for i in range(matrix.rows):
        cols = [j for j in range(matrix.cols) if matrix.cell(i, j)]
        kept = cols[s + 1 : len(cols) - (s + 1)]
        if kept:
            by_row[i] = kept
    by_col: dict[int, list[int]] = {}
    for i, cols in by_row.items():
        for j in cols:
            by_col.setdefault(j, []).append(i)
    out: dict[int, list[int]] = {}
    for j, rows in sorted(by_col.items()):
        rows.sort()
        kept = rows[: len(rows) - r] if r > 0 else rows
        if kept:
            out[j] = kept
    return out


def matrix_to_visibility(
    matrix: Matrix01, r: int, s: int
) -> tuple[BarLayout, list[VisEdge]]:
    """Layout and anchored witness edges of the trimmed matrix.

    Bars get y_rank = 1-based row number and x-interval from the first to
    the last surviving one (1-based column coordinates), widened by
    row-dependent multiples of eps = 1/(2*rows+2) so that all endpoints are
    distinct while column coverage is unchanged.  Edge members are bar
    indices; an edge's witnesses are the distinct columns anchoring it, so
    its multiplicity is its witness-column count.
    """
    if r < 0 or s < 0:
        raise ValueError("r and s must be nonnegative")
    cells = _trimmed_cells(matrix, r, s)
    by_row: dict[int, list[int]] = {}
    for j, rows in cells.items():
        for i in rows:
            by_row.setdefault(i, []).append(j)
    bar_rows = sorted(by_row)
    eps = Fraction(1, 2 * matrix.rows + 2) if matrix.rows else Fraction(1)
    bars = []
    span = {}
    for i in bar_rows:
        cols = sorted(by_row[i])
        first, last = cols[0], cols[-1]
        span[i] = (first, last)
        bars.append(
            Bar(i + 1, Fraction(first + 1) - (i + 1) * eps, Fraction(last + 1) + (i + 1) * eps)
        )
    layout = BarLayout(tuple(bars), s)
    bar_index = {row: idx for idx, row in enumerate(bar_rows)}

    seen: dict[tuple[int, ...], list[Fraction]] = {}
    for j in sorted(cells):
        rows = cells[j]
        for pos, i in enumerate(rows):
            if len(rows) - pos - 1 < s + 1:
                continue
            below = [
                i2
                for i2 in bar_rows
                if i2 > i and span[i2][0] <= j <= span[i2][1]
            ][: s + 1]
            members = tuple(sorted([bar_index[i]] + [bar_index[i2] for i2 in below]))
            seen.setdefault(members, []).append(Fraction(j + 1))
    edges = [VisEdge(members, tuple(wit)) for members, wit in seen.items()]
    return layout, edges


@dataclass(frozen=True)
class AvoiderWeightReport:
    """weight(M) <= (3s+3+r)*n + (r-1)*(2s+3)*(n-r) for n x n avoiders of the
    T family with parameters (r, s)."""

    n: int
    r: int
    s: int
    weight: int
    bound: int
    holds: bool


def check_avoider_weight_bound(matrix: Matrix01, r: int, s: int) -> AvoiderWeightReport:
    """Verify the closed-form weight bound on a square matrix avoiding the
    whole T family for (r, s).

    Requires r >= 1: the bound's second term counts witness segments per
    edge, at most r-1 of them, and degenerates for r = 0.
    """
    if r < 1:
        raise ValueError("the weight bound needs r >= 1")
    if s < 0:
        raise ValueError("s must be nonnegative")
    if matrix.rows != matrix.cols:
        raise ValueError("matrix must be square")
    if not avoids_all(matrix, generate_T(TrsParams(r, s))):
        raise ValueError("matrix contains a member of the forbidden family")
    n = matrix.rows
    bound = (3 * s + 3 + r) * n + (r - 1) * (2 * s + 3) * (n - r)
    return AvoiderWeightReport(n, r, s, matrix.weight, bound, matrix.weight <= bound)


# ---------------------------------------------------------------------------
# layout text format: one bar per line, "y_rank x_left x_right", coordinates
# as integers or fractions "p/q".
# ---------------------------------------------------------------------------


def parse_layout(text: str, s: int) -> BarLayout:
    bars = []
    for ln in text.strip().splitlines():
        parts = ln.split()
        if not parts:
            continue
        if len(parts) != 3:
            raise ValueError(f"expected 'y_rank x_left x_right', got {ln!r}")
        try:
            bars.append(Bar(int(parts[0]), Fraction(parts[1]), Fraction(parts[2])))
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"bad bar line {ln!r}: {exc}") from exc
    return BarLayout(tuple(bars), s)


def format_layout(layout: BarLayout) -> str:
    return "\n".join(f"{b.y_rank} {b.x_left} {b.x_right}" for b in layout.bars)
