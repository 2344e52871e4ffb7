"""Closed forms, coefficient formulas and the verdict pipeline."""

import csv
import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from braidpoly.braid import BlockBraid
from braidpoly.burau import alexander
from braidpoly.conjecture import (
    NonIntegerCoefficientError,
    _exact_int_div,
    check_conjecture,
    closed_form_one_block,
    closed_form_two_block,
    determinant_two_block,
    leading_coeffs,
    scan_csv_lines,
    scan_rows,
    stable_length_one_block,
)
from braidpoly.laurent import (
    LaurentPoly,
    analyze_shape,
    normalize_symmetric,
    quantum_integer,
)

entries = st.integers(1, 5)


class TestOneBlockClosedForm:
    def test_unknot(self):
        assert closed_form_one_block(1, 1, 1) == LaurentPoly(0, (1,))

    def test_product_of_quantum_integers(self):
        expected = quantum_integer(3) * quantum_integer(2) * quantum_integer(5)
        assert closed_form_one_block(3, 2, 5) == expected

    def test_cube(self):
        assert closed_form_one_block(2, 2, 2) == LaurentPoly(0, (1, 3, 3, 1))

    def test_rejects_nonpositive(self):
        with pytest.raises(ValueError):
            closed_form_one_block(0, 1, 1)

    def test_degree_identity(self):
        for p, q, r in itertools.product(range(1, 9), repeat=3):
            assert closed_form_one_block(p, q, r).degree() == p + q + r - 3


class TestStableLengthOneBlock:
    @pytest.mark.parametrize(
        "pqr,expected",
        [((5, 2, 3), 1), ((2, 2, 2), 1), ((1, 1, 1), 0), ((1, 5, 1), 4)],
    )
    def test_values(self, pqr, expected):
        assert stable_length_one_block(*pqr) == expected

    def test_agrees_with_shape_scan(self):
        for p, q, r in itertools.product(range(1, 11), repeat=3):
            report = analyze_shape(closed_form_one_block(p, q, r))
            assert report.stable_length == stable_length_one_block(p, q, r)


class TestTwoBlockClosedForm:
    def test_all_ones(self):
        assert closed_form_two_block(1, 1, 1, 1, 1, 1) == LaurentPoly(0, (1, 5, 5, 1))

    @given(entries, entries, entries, entries, entries, entries)
    def test_block_swap_symmetry(self, p1, q1, r1, p2, q2, r2):
        assert closed_form_two_block(p1, q1, r1, p2, q2, r2) == closed_form_two_block(
            p2, q2, r2, p1, q1, r1
        )

    def test_burau_cross_check(self):
        braid = BlockBraid(4, [(2, 1, 1), (1, 2, 1)], 1)
        computed = alexander(braid.expand()).poly_s
        expected, _ = normalize_symmetric(closed_form_two_block(2, 1, 1, 1, 2, 1))
        assert computed == expected


class TestTwoBlockDeterminant:
    def test_all_ones(self):
        assert determinant_two_block(1, 1, 1, 1, 1, 1) == 12

    def test_hand_value(self):
        # q1q2(p1p2(r1+r2) + r1r2(p1+p2)) + (p1+p2)(q1+q2)(r1+r2)
        assert determinant_two_block(2, 1, 1, 1, 1, 1) == 19

    @given(entries, entries, entries, entries, entries, entries)
    def test_matches_coefficient_sum(self, p1, q1, r1, p2, q2, r2):
        poly = closed_form_two_block(p1, q1, r1, p2, q2, r2)
        assert determinant_two_block(p1, q1, r1, p2, q2, r2) == poly.evaluate(1)

    @given(entries, entries, entries, entries, entries, entries)
    @settings(max_examples=30, deadline=None)
    def test_matches_alexander_at_minus_one(self, p1, q1, r1, p2, q2, r2):
        braid = BlockBraid(4, [(p1, q1, r1), (p2, q2, r2)], 1)
        poly_t = alexander(braid.expand()).poly_t
        assert determinant_two_block(p1, q1, r1, p2, q2, r2) == abs(
            poly_t.evaluate(-1)
        )


class TestLeadingCoeffs:
    def test_four_strand_one_block(self):
        result = leading_coeffs(4, 1)
        assert (result.a0, result.a1, result.a2, result.a3) == (1, 3, 6, 10)

    def test_four_strand_two_blocks(self):
        result = leading_coeffs(4, 2)
        assert (result.a0, result.a1, result.a2, result.a3) == (1, 5, 16, 40)

    def test_four_strand_matches_specific_formulas(self):
        for m in range(1, 11):
            result = leading_coeffs(4, m)
            assert result.a1 == 2 * m + 1
            assert result.a2 == 2 * m * m + 4 * m
            assert result.a3 == 2 * m * (2 * m * m + 9 * m + 4) // 3

    def test_three_strand_special_cubic(self):
        assert leading_coeffs(3, 1).a3 == 4
        assert leading_coeffs(3, 2).a3 == 14
        assert leading_coeffs(3, 3).a3 == 30

    def test_threshold_masking(self):
        result = leading_coeffs(4, 1, min_entry=2)
        assert result.thresholds_met == (True, True, False, False)
        assert (result.a0, result.a1) == (1, 3)
        assert result.a2 is None and result.a3 is None

    def test_threshold_all_met(self):
        result = leading_coeffs(4, 1, min_entry=4)
        assert result.thresholds_met == (True, True, True, True)
        assert None not in (result.a0, result.a1, result.a2, result.a3)

    def test_threshold_none_met(self):
        result = leading_coeffs(4, 1, min_entry=1)
        assert result.thresholds_met == (False, False, False, False)
        assert (result.a0, result.a1, result.a2, result.a3) == (None,) * 4

    def test_validation(self):
        with pytest.raises(ValueError):
            leading_coeffs(2, 1)
        with pytest.raises(ValueError):
            leading_coeffs(4, 0)

    def test_exact_division_guard(self):
        with pytest.raises(NonIntegerCoefficientError):
            _exact_int_div(7, 2)


class TestCheckConjecture:
    def test_one_block_worked_example(self):
        report = check_conjecture(BlockBraid(4, [(3, 2, 5)], 1))
        assert report.components == 2
        assert report.sigma == -5
        assert report.shape.is_trapezoidal
        assert report.shape.stable_length == stable_length_one_block(3, 2, 5) == 1
        assert report.bound_holds is True

    def test_two_block_all_ones(self):
        report = check_conjecture(BlockBraid(4, [(1, 1, 1), (1, 1, 1)], 1))
        assert report.sigma == -1
        assert report.shape.stable_length == 1
        assert report.bound_holds is True

    def test_unknot(self):
        report = check_conjecture(BlockBraid(4, [(1, 1, 1)], 1))
        assert report.is_knot
        assert report.sigma == 0
        assert report.alexander.poly_s == LaurentPoly(0, (1,))
        assert report.shape.stable_length == 0
        assert report.bound_holds is True


class TestScan:
    def test_rows_for_small_grid(self):
        rows = list(scan_rows(4, [1], 2))
        assert len(rows) == 8
        assert [r.parameters for r in rows] == sorted(r.parameters for r in rows)
        assert all(r.bound_holds for r in rows)
        assert all(r.is_symmetric and r.is_trapezoidal for r in rows)

    def test_row_content(self):
        row = next(iter(scan_rows(4, [1], 1)))
        assert row.parameters == (1, 1, 1)
        assert row.components == 1
        assert row.sigma == 0
        assert row.degree == 0
        assert row.coeffs == (1,)
        assert row.stable_length == 0

    def test_csv_stream(self):
        lines = list(scan_csv_lines(4, [1], 2))
        assert len(lines) == 9  # header + 8 rows
        parsed = list(csv.reader(lines))
        header = parsed[0]
        assert header[:4] == ["n", "m", "sign", "params"]
        bound_col = header.index("bound_holds")
        assert all(record[bound_col] == "true" for record in parsed[1:])
        params_col = header.index("params")
        assert parsed[1][params_col] == "1,1,1"

    def test_csv_deterministic(self):
        first = "".join(scan_csv_lines(4, [1, 2], 1))
        second = "".join(scan_csv_lines(4, [1, 2], 1))
        assert first == second

    def test_multi_block_counts(self):
        rows = list(scan_rows(4, [1, 2], 1))
        assert [r.blocks for r in rows] == [1, 2]

    def test_validation(self):
        with pytest.raises(ValueError):
            list(scan_rows(4, [1], 0))
        with pytest.raises(ValueError):
            list(scan_rows(4, [0], 2))
