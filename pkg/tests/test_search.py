import random
from fractions import Fraction
from itertools import combinations
from math import comb, inf

import pytest

from exmat import (
    UNBOUNDED,
    ColumnExtremalQuery,
    Matrix01,
    OracleSizeError,
    PatternSet,
    UnknownBoundError,
    avoids_all,
    check_column_bound_from_linear_weight,
    check_monotonicity,
    check_range_overlap_inequality,
    check_rect_square_max,
    contains_oracle,
    ex_columns,
    ex_weight,
    ex_weight_oracle,
    pattern_L,
    pattern_P,
)
from exmat.patterns import TrsParams, generate_T

DIAMOND = generate_T(TrsParams(1, 0)).patterns[0]
P22 = PatternSet.of(pattern_P(2, 2))


def brute_ex_columns(m, k, patterns, max_cols):
    """Unpruned reference: every column sequence up to max_cols, avoidance by
    contains_oracle only."""
    types = []
    for size in range(k, m + 1):
        for sel in combinations(range(m), size):
            types.append(sel)

    best = 0

    def as_matrix(cols):
        rows = [0] * m
        for j, sel in enumerate(cols):
            for r in sel:
                rows[r] |= 1 << j
        return Matrix01(m, len(cols), tuple(rows))

    def rec(cols):
        nonlocal best
        best = max(best, len(cols))
        if len(cols) == max_cols:
            return
        for t in types:
            nxt = cols + [t]
            host = as_matrix(nxt)
            if not any(contains_oracle(host, p) for p in patterns):
                rec(nxt)

    rec([])
    return best


class TestExWeight:
    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_no_two_ones_in_a_row(self, n):
        res = ex_weight(n, n, PatternSet.of(pattern_P(1, 2)))
        assert res.exact and res.value == n

    def test_pattern_taller_than_host(self):
        res = ex_weight(2, 2, PatternSet.of(pattern_L(1)))
        assert res.value == 4 and res.witness == Matrix01.filled(2, 2)

    @pytest.mark.parametrize("pats", [P22, PatternSet.of(DIAMOND), PatternSet.of(pattern_P(1, 1))])
    @pytest.mark.parametrize("m,n", [(1, 1), (2, 3), (3, 3), (3, 4)])
    def test_matches_oracle(self, pats, m, n):
        fast = ex_weight(m, n, pats)
        slow = ex_weight_oracle(m, n, pats)
        assert fast.exact
        assert fast.value == slow.value
        assert fast.witness.weight == fast.value
        assert avoids_all(fast.witness, pats)

    def test_full_matrix_when_pattern_does_not_fit(self):
        for n in (2, 3):
            res = ex_weight(n, n, PatternSet.of(pattern_P(n + 1, 1)))
            assert res.value == n * n

    def test_budget_exhaustion_keeps_seed_floor(self):
        res = ex_weight(5, 5, PatternSet.of(DIAMOND), budget=50)
        assert not res.exact
        assert res.value >= 5
        assert avoids_all(res.witness, PatternSet.of(DIAMOND))

    def test_all_zero_pattern_makes_query_infeasible(self):
        with pytest.raises(ValueError):
            ex_weight(2, 2, PatternSet.of(Matrix01.zeros(1, 1)))

    def test_weight_floor_for_two_one_patterns(self):
        for pat in (pattern_P(2, 1), pattern_P(1, 2), DIAMOND, pattern_L(1)):
            res = ex_weight(4, 4, PatternSet.of(pat), budget=20000)
            assert res.value >= 4


class TestExWeightOracle:
    def test_size_limit(self):
        with pytest.raises(OracleSizeError):
            ex_weight_oracle(5, 4, P22)

    def test_one_cell_pattern(self):
        assert ex_weight_oracle(2, 3, PatternSet.of(pattern_P(1, 1))).value == 0

    def test_oversized_pattern_gives_full_weight(self):
        assert ex_weight_oracle(2, 2, PatternSet.of(pattern_P(3, 3))).value == 4


class TestExColumns:
    def test_closed_form_instance(self):
        res = ex_columns(ColumnExtremalQuery(3, 2, P22))
        assert res.exact and res.value == 3
        assert res.witness.cols == 3
        assert avoids_all(res.witness, P22)

    def test_unbounded_below_one_rows(self):
        res = ex_columns(ColumnExtremalQuery(5, 1, P22))
        assert res.unbounded and res.witness is None and res.exact

    def test_zero_when_k_exceeds_rows(self):
        res = ex_columns(ColumnExtremalQuery(2, 3, P22))
        assert res.value == 0 and res.exact
        assert res.witness.cols == 0

    def test_unknown_bound_guard(self):
        # single one in the bottom row: two total rows needed per embedding
        # never materialize as a certificate, and the unbounded case cannot
        # fire either, so the search must refuse.
        pat = Matrix01.from_ones(3, 1, [(2, 0)])
        with pytest.raises(UnknownBoundError):
            ex_columns(ColumnExtremalQuery(3, 2, PatternSet.of(pat)))

    @pytest.mark.parametrize("m,k,c", [(3, 2, 2), (4, 2, 2), (4, 2, 3), (3, 3, 2)])
    def test_formula_grid(self, m, k, c):
        res = ex_columns(ColumnExtremalQuery(m, k, PatternSet.of(pattern_P(k, c))))
        assert res.exact and res.value == (c - 1) * comb(m, k)

    @pytest.mark.parametrize(
        "m,k,pats,max_cols",
        [
            (3, 2, P22, 4),
            (2, 2, P22, 2),
            (3, 3, PatternSet.of(DIAMOND), 3),
        ],
    )
    def test_against_unpruned_reference(self, m, k, pats, max_cols):
        res = ex_columns(ColumnExtremalQuery(m, k, pats))
        ref = brute_ex_columns(m, k, pats, max_cols)
        assert res.value == ref

    def test_optimum_independent_of_candidate_order(self):
        for seed in range(5):
            base = ex_columns(ColumnExtremalQuery(4, 2, P22))
            shuffled = ex_columns(ColumnExtremalQuery(4, 2, P22), shuffle_seed=seed)
            assert base.value == shuffled.value
            assert avoids_all(shuffled.witness, P22)

    def test_budget_gives_lower_bound(self):
        res = ex_columns(ColumnExtremalQuery(6, 3, PatternSet.of(pattern_P(3, 3))), budget=10)
        assert not res.exact
        assert res.value <= 2 * comb(6, 3)
        assert avoids_all(res.witness, PatternSet.of(pattern_P(3, 3)))

    @pytest.mark.parametrize("m", [2, 3, 4])
    @pytest.mark.parametrize("k", [2, 3])
    def test_wider_blocks_allow_more_columns(self, m, k):
        if k > m:
            return
        narrow = ex_columns(ColumnExtremalQuery(m, k, PatternSet.of(pattern_P(2, 2))))
        wide = ex_columns(ColumnExtremalQuery(m, k, PatternSet.of(pattern_P(2, 3))))
        assert wide.value >= narrow.value


class TestInequalityReports:
    def test_block_instance(self):
        rep = check_range_overlap_inequality(pattern_P(2, 2), 3, 3, 2)
        assert rep.weight_value == 6
        assert rep.column_value == 3
        assert rep.rhs == 12
        assert rep.holds

    def test_diamond_low_k_is_unbounded_rhs(self):
        rep = check_range_overlap_inequality(DIAMOND, 3, 3, 1)
        assert rep.column_value == UNBOUNDED
        assert rep.holds

    def test_rejects_non_range_overlapping(self):
        skew = Matrix01.from_ones(3, 2, [(0, 0), (2, 1)])
        with pytest.raises(ValueError):
            check_range_overlap_inequality(skew, 3, 3, 1)

    def test_random_small_patterns_always_hold(self):
        rng = random.Random(11)
        checked = 0
        while checked < 12:
            m = Matrix01(
                2,
                2,
                tuple(rng.randrange(4) for _ in range(2)),
            )
            if any(not bits for bits in m.columns()):
                continue
            try:
                rep = check_range_overlap_inequality(m, 3, 3, rng.randint(1, 3))
            except (ValueError, UnknownBoundError):
                continue
            checked += 1
            assert rep.holds

    def test_monotone_in_k(self):
        rep = check_monotonicity(4, P22, range(1, 6))
        assert rep.values == (inf, 6, 1, 1, 0)
        assert rep.nonincreasing

    def test_rect_max(self):
        for m, n in ((2, 4), (3, 4), (3, 3)):
            rep = check_rect_square_max(m, n, P22)
            assert rep.holds
            if m == n:
                assert rep.square_m_value == rep.square_n_value
        rep = check_rect_square_max(3, 4, PatternSet.of(DIAMOND))
        assert rep.holds

    def test_linear_certificate_example(self):
        # fit g from oracle values of the 3-row weight extremal function
        ns = range(1, 6)
        c = 2
        g = max(ex_weight_oracle(3, n, P22).value - c * n for n in ns)
        rep = check_column_bound_from_linear_weight(P22, 3, 3, c, g, ns)
        assert not rep.failed_n
        assert rep.column_value == 1
        assert rep.bound == Fraction(g, 1)
        assert rep.holds

    def test_linear_certificate_tight_fit(self):
        # the slope-1 fit gives g = 3 and the k = 2 bound 3/(2-1) is attained
        ns = range(1, 6)
        g = max(ex_weight_oracle(3, n, P22).value - n for n in ns)
        rep = check_column_bound_from_linear_weight(P22, 3, 2, 1, g, ns)
        assert not rep.failed_n
        assert rep.column_value == 3
        assert rep.bound == Fraction(3, 1)
        assert rep.holds

    def test_linear_certificate_requires_k_above_c(self):
        with pytest.raises(ValueError):
            check_column_bound_from_linear_weight(P22, 3, 2, 2, 1, [1, 2])

    def test_linear_certificate_reports_failing_n(self):
        rep = check_column_bound_from_linear_weight(P22, 3, 3, 0, 0, [1, 2, 3])
        assert rep.failed_n
        assert not rep.holds
