from fractions import Fraction as F

import pytest

from biperiodic import (
    Mat2,
    SeqParams,
    SequenceKind,
    SingularMatrixError,
    det_power,
    generating_matrix,
    matrix_power,
    matrix_power_counted,
    power_closed_form,
    term_fast,
    term_fast_counted,
    term_recurrence,
)
from conftest import brute_mat_pow, classical_fib, classical_lucas, oracle_fib_table, oracle_lucas_table

FIB = SequenceKind.FIBONACCI
LUC = SequenceKind.LUCAS

# the module's own verification grid; note it contains the singular
# points (2, -2) and (-2, 2) where ab + 4 = 0
MODULE_GRID = [
    (a, b)
    for a in (F(1), F(-1), F(2), F(-2), F(3), F(1, 2), F(5, 3))
    for b in (F(1), F(-1), F(2), F(-2), F(3), F(1, 2), F(5, 3))
]


def test_build_at_2_3():
    assert generating_matrix(SeqParams(2, 3)) == Mat2(F(16, 3), F(4, 3), 2, F(4, 3))


def test_build_at_1_1_is_classical_lucas_matrix():
    assert generating_matrix(SeqParams(1, 1)) == Mat2(3, 1, 1, 2)


def test_determinant_factorization():
    p = SeqParams(2, 3)
    g = generating_matrix(p)
    assert g.det() == F(40, 9)
    assert g.det() == (p.a**2 / p.b**2) * p.ab_plus_4


def test_square_matches_symbolic_expansion():
    # G^2 entries expanded by hand in (a, b)
    for a, b in ((F(2), F(3)), (F(5, 3), F(-7, 2))):
        g = generating_matrix(SeqParams(a, b))
        expected = Mat2(
            a**4 + 5 * a**3 / b + 4 * a**2 / b**2,
            a**4 / b + 4 * a**3 / b**2,
            a**3 + 4 * a**2 / b,
            a**3 / b + 4 * a**2 / b**2,
        )
        assert g * g == expected


class TestClosedForm:
    def test_structure_n1(self):
        p = SeqParams(2, 3)
        cf = power_closed_form(p, 1)
        assert (cf.parity, cf.scale_ab_pow, cf.scale_abp4_pow) == ("odd", 1, 0)
        # core holds lucas terms l2, l1, l0
        assert cf.core == Mat2(8, 2, 3, 2)
        assert cf.materialize() == generating_matrix(p)

    def test_structure_n2(self):
        p = SeqParams(2, 3)
        cf = power_closed_form(p, 2)
        assert (cf.parity, cf.scale_ab_pow, cf.scale_abp4_pow) == ("even", 2, 1)
        assert cf.core == Mat2(7, 2, 3, 1)
        assert cf.scale() == F(40, 9)

    def test_materializes_to_brute_power(self):
        p = SeqParams(2, 3)
        expected = brute_mat_pow(generating_matrix(p), 2)
        assert expected == Mat2(F(280, 9), F(80, 9), F(40, 3), F(40, 9))
        assert power_closed_form(p, 2).materialize() == expected

    def test_rejects_nonpositive_n(self):
        with pytest.raises(ValueError):
            power_closed_form(SeqParams(2, 3), 0)

    def test_equals_direct_power_over_module_grid(self):
        for a, b in MODULE_GRID:
            p = SeqParams(a, b)
            direct = Mat2.identity()
            g = generating_matrix(p)
            for n in range(1, 65):
                direct = direct * g
                assert power_closed_form(p, n).materialize() == direct, (a, b, n)

    def test_holds_at_singular_point(self):
        p = SeqParams(2, -2)
        assert p.ab_plus_4 == 0
        g = generating_matrix(p)
        assert power_closed_form(p, 1).materialize() == g
        assert g * g == Mat2(0, 0, 0, 0)
        assert power_closed_form(p, 5).materialize() == Mat2(0, 0, 0, 0)


class TestDirectPower:
    def test_zero_power(self):
        assert matrix_power(SeqParams(2, 3), 0) == Mat2.identity()

    def test_inverse_power_at_2_3(self):
        assert matrix_power(SeqParams(2, 3), -1) == Mat2(
            F(3, 10), F(-3, 10), F(-9, 20), F(6, 5)
        )

    def test_negative_power_requires_invertibility(self):
        with pytest.raises(SingularMatrixError):
            matrix_power(SeqParams(1, -4), -2)

    def test_inverse_power_cancellation(self):
        for a, b in MODULE_GRID:
            p = SeqParams(a, b)
            if p.ab_plus_4 == 0:
                continue
            for n in range(-16, 17):
                assert matrix_power(p, n) * matrix_power(p, -n) == Mat2.identity()


class TestDetPower:
    def test_frozen_values(self):
        assert det_power(SeqParams(2, 3), 1) == F(40, 9)
        assert det_power(SeqParams(2, 3), 2) == F(1600, 81)
        assert det_power(SeqParams(1, 1), 3) == 125

    def test_matches_brute_determinant(self):
        for a, b in MODULE_GRID:
            p = SeqParams(a, b)
            g = generating_matrix(p)
            power = Mat2.identity()
            for n in range(1, 33):
                power = power * g
                assert det_power(p, n) == power.det(), (a, b, n)

    def test_rejects_nonpositive_n(self):
        with pytest.raises(ValueError):
            det_power(SeqParams(2, 3), 0)


class TestTermFast:
    def test_frozen_examples(self):
        assert term_fast(SeqParams(2, 3), FIB, 5) == 55
        assert term_fast(SeqParams(2, 3), LUC, 5) == 142
        assert term_fast(SeqParams(1, 1), LUC, 7) == 29

    def test_equals_recurrence_over_wide_index_range(self):
        for a, b in ((F(2), F(3)), (F(1), F(1))):
            p = SeqParams(a, b)
            fib = oracle_fib_table(a, b, -1000, 1001)
            luc = oracle_lucas_table(a, b, -1000, 1001)
            for n in range(-1000, 1001):
                assert term_fast(p, FIB, n) == fib[n], (a, b, n)
                assert term_fast(p, LUC, n) == luc[n], (a, b, n)

    def test_equals_recurrence_on_rational_parameters(self):
        p = SeqParams(F(1, 2), F(-3, 2))
        for n in range(-60, 61):
            assert term_fast(p, FIB, n) == term_recurrence(p, FIB, n)
            assert term_fast(p, LUC, n) == term_recurrence(p, LUC, n)

    def test_multiplication_count_is_logarithmic(self):
        p = SeqParams(2, 3)
        for n in (1, 2, 63, 64, 1000, 4095):
            for kind in (FIB, LUC):
                _, count = term_fast_counted(p, kind, n)
                assert count <= 2 * (n + 1).bit_length()

    def test_degenerate_parameters_are_rejected(self):
        p = SeqParams(1, -4)
        with pytest.raises(SingularMatrixError):
            term_fast(p, FIB, 5)
        with pytest.raises(SingularMatrixError):
            term_fast(p, LUC, -3)

    def test_classical_values(self):
        p = SeqParams(1, 1)
        fib = classical_fib(31)
        lucas = classical_lucas(31)
        for n in range(31):
            assert term_fast(p, FIB, n) == fib[n]
            assert term_fast(p, LUC, n) == lucas[n]


def test_counted_power_reports_products():
    p = SeqParams(2, 3)
    m, count = matrix_power_counted(p, 10)
    assert m == brute_mat_pow(generating_matrix(p), 10)
    assert count <= 2 * (10).bit_length()
    _, count_neg = matrix_power_counted(p, -10)
    assert count_neg <= 2 * (10).bit_length()
