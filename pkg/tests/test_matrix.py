import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from exmat import (
    ColumnRange,
    DegeneratePatternError,
    Matrix01,
    PatternSet,
    avoids_all,
    column_ranges,
    contains,
    contains_oracle,
    flip_h,
    flip_v,
    format_pattern_set,
    has_identity_or_row_pair,
    is_light,
    is_range_overlapping,
    parse_matrix,
    parse_pattern_set,
    pattern_L,
    pattern_P,
    permutation_matrix,
)
from exmat.patterns import TrsParams, generate_T

from conftest import matrices, small_patterns

DIAMOND = generate_T(TrsParams(1, 0)).patterns[0]
IDENT2 = Matrix01(2, 2, (0b01, 0b10))


def all_hosts_3x3():
    for mask in range(1 << 9):
        yield Matrix01(3, 3, tuple((mask >> (3 * r)) & 0b111 for r in range(3)))


class TestContains:
    def test_pattern_contains_itself(self):
        l1 = pattern_L(1)
        assert contains(l1, l1)

    def test_identity_has_no_row_pair(self):
        ident = Matrix01.from_ones(5, 5, [(i, i) for i in range(5)])
        assert not contains(ident, pattern_P(1, 2))

    def test_all_ones_host_contains_diamond(self):
        host = Matrix01.filled(3, 3)
        assert contains_oracle(host, DIAMOND)
        assert contains(host, DIAMOND)

    def test_oversized_pattern_never_contained(self):
        assert not contains(Matrix01.filled(2, 2), pattern_P(3, 1))
        assert not contains(Matrix01.filled(2, 2), pattern_P(1, 3))

    def test_all_zero_pattern_vacuously_contained_when_it_fits(self):
        zero = Matrix01.zeros(2, 2)
        assert contains(Matrix01.zeros(3, 3), zero)
        assert contains_oracle(Matrix01.zeros(3, 3), zero)
        assert not contains(Matrix01.zeros(1, 3), zero)

    def test_single_cell_cases(self):
        one = pattern_P(1, 1)
        assert not contains_oracle(Matrix01.zeros(1, 1), one)
        assert contains_oracle(Matrix01.filled(1, 1), one)

    def test_exhaustive_3x3_hosts_match_oracle(self):
        pats = [pattern_P(2, 2), DIAMOND, IDENT2, pattern_P(1, 2)]
        for host in all_hosts_3x3():
            for pat in pats:
                assert contains(host, pat) == contains_oracle(host, pat)

    @given(matrices(max_rows=6, max_cols=6), small_patterns())
    def test_matches_oracle_on_random_pairs(self, host, pat):
        assert contains(host, pat) == contains_oracle(host, pat)

    @given(matrices(max_rows=5, max_cols=5), small_patterns(), st.randoms())
    def test_monotone_in_host_ones(self, host, pat, rnd):
        if not contains(host, pat):
            return
        rows = list(host.row_bits)
        r = rnd.randrange(host.rows)
        c = rnd.randrange(host.cols)
        rows[r] |= 1 << c
        bigger = Matrix01(host.rows, host.cols, tuple(rows))
        assert contains(bigger, pat)

    @given(matrices(max_rows=5, max_cols=5), small_patterns(), st.randoms())
    def test_monotone_in_pattern_ones(self, host, pat, rnd):
        if not contains(host, pat):
            return
        ones = list(pat.ones())
        if not ones:
            return
        drop = rnd.choice(ones)
        weaker = Matrix01.from_ones(pat.rows, pat.cols, [o for o in ones if o != drop])
        assert contains(host, weaker)

    @given(matrices(max_rows=5, max_cols=5), small_patterns())
    def test_reflection_symmetry(self, host, pat):
        res = contains(host, pat)
        assert res == contains(flip_h(host), flip_h(pat))
        assert res == contains(flip_v(host), flip_v(pat))

    @given(matrices(max_rows=5, max_cols=5), small_patterns())
    def test_containment_needs_room(self, host, pat):
        if contains(host, pat):
            assert pat.rows <= host.rows and pat.cols <= host.cols


class TestAvoidsAll:
    def test_single_column_avoids_multicolumn_pattern(self):
        host = Matrix01.from_ones(6, 1, [(i, 0) for i in range(6)])
        assert avoids_all(host, PatternSet.of(pattern_L(1)))

    def test_one_cell_pattern_dominates(self):
        host = Matrix01.from_ones(3, 3, [(1, 2)])
        assert not avoids_all(host, PatternSet.of(pattern_P(1, 1)))

    def test_set_avoidance_is_every_member(self):
        host = Matrix01.filled(2, 2)
        assert not avoids_all(host, PatternSet.of(pattern_P(3, 3), pattern_P(2, 2)))
        assert avoids_all(host, PatternSet.of(pattern_P(3, 3), pattern_P(1, 5)))


class TestColumnRanges:
    def test_all_ones_block(self):
        assert column_ranges(pattern_P(3, 2)) == [
            ColumnRange(0, 0, 2),
            ColumnRange(1, 0, 2),
        ]

    def test_diamond(self):
        assert column_ranges(DIAMOND) == [
            ColumnRange(0, 1, 1),
            ColumnRange(1, 0, 2),
            ColumnRange(2, 1, 1),
        ]

    def test_zero_columns_omitted(self):
        m = Matrix01.from_ones(3, 3, [(0, 0), (2, 2)])
        assert [r.col for r in column_ranges(m)] == [0, 2]


class TestRangeOverlapping:
    def test_all_ones_blocks(self):
        assert is_range_overlapping(pattern_P(3, 4))

    def test_disjoint_ranges(self):
        m = Matrix01.from_ones(3, 2, [(0, 0), (2, 1)])
        assert not is_range_overlapping(m)

    def test_diamond_overlaps_at_middle_row(self):
        assert is_range_overlapping(DIAMOND)

    def test_zero_column_rejected(self):
        m = Matrix01.from_ones(2, 2, [(0, 0)])
        with pytest.raises(DegeneratePatternError):
            is_range_overlapping(m)

    @given(matrices(max_rows=5, max_cols=5))
    def test_invariant_under_reflection_and_column_permutation(self, m):
        if any(not bits for bits in m.columns()):
            return
        base = is_range_overlapping(m)
        assert base == is_range_overlapping(flip_h(m))
        perm = list(range(m.cols))
        random.Random(m.cols * 31 + m.rows).shuffle(perm)
        cols = m.columns()
        shuffled = Matrix01.from_ones(
            m.rows,
            m.cols,
            [
                (r, j)
                for j, src in enumerate(perm)
                for r in range(m.rows)
                if (cols[src] >> r) & 1
            ],
        )
        assert base == is_range_overlapping(shuffled)


class TestStructuralPredicates:
    def test_permutation_matrices_are_light(self):
        assert is_light(permutation_matrix((3, 1, 2)))

    def test_all_ones_block_is_not_light(self):
        assert not is_light(pattern_P(2, 2))

    def test_l3_has_a_doubled_column(self):
        # column 3 of L3 carries ones in rows 1 and 4
        assert not is_light(pattern_L(3))
        assert pattern_L(3).col_bits(2).bit_count() == 2

    def test_row_pair_qualifies(self):
        assert has_identity_or_row_pair(pattern_L(3))

    def test_identity_qualifies(self):
        assert has_identity_or_row_pair(IDENT2)

    def test_single_column_does_not_qualify(self):
        assert not has_identity_or_row_pair(Matrix01.from_ones(4, 1, [(0, 0), (2, 0)]))


class TestTextFormat:
    def test_round_trip(self):
        text = "0110\n1001\n0100"
        assert parse_matrix(text).to_text() == text

    def test_pattern_set_round_trip(self):
        ps = generate_T(TrsParams(1, 1))
        again = parse_pattern_set(format_pattern_set(ps))
        assert again == ps

    def test_rejects_ragged_rows(self):
        with pytest.raises(ValueError):
            parse_matrix("01\n011")

    def test_rejects_bad_characters(self):
        with pytest.raises(ValueError):
            parse_matrix("012")

    def test_rejects_empty(self):
        with pytest.raises(ValueError):
            parse_matrix("  \n ")

    @given(matrices())
    def test_round_trip_random(self, m):
        assert parse_matrix(m.to_text()) == m


class TestMatrixBasics:
    def test_weight_counts_ones(self):
        assert pattern_P(3, 4).weight == 12
        assert Matrix01.zeros(5, 5).weight == 0

    def test_invalid_shapes_rejected(self):
        with pytest.raises(ValueError):
            Matrix01(2, 2, (0b100, 0b01))
        with pytest.raises(ValueError):
            Matrix01(2, 2, (0b01,))

    def test_pattern_set_must_be_nonempty(self):
        with pytest.raises(ValueError):
            PatternSet(())

    def test_pattern_set_rejects_empty_members(self):
        with pytest.raises(ValueError):
            PatternSet.of(Matrix01(0, 0, ()))

    @given(matrices())
    def test_flips_are_involutions(self, m):
        assert flip_h(flip_h(m)) == m
        assert flip_v(flip_v(m)) == m
