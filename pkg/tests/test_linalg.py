"""Tests for exact rational linear algebra."""

from fractions import Fraction

import numpy as np
import pytest

from algebra.linalg import (QMatrix, QVector, format_matrix, free_columns, hstack, in_column_span,
                            mat_mul, mat_vec, nullspace_basis, parse_matrix, rank, rref, to_rational,
                            transpose, vstack)
from errors import DimensionMismatchError, ParseError


def _random_matrix(rng, rows, cols):
    values = rng.integers(-4, 5, size=(rows, cols))
    mask = rng.random((rows, cols)) < 0.6
    return QMatrix.from_rows((values * mask).tolist(), cols)


def test_to_rational():
    assert to_rational('-135/4') == Fraction(-135, 4)
    assert to_rational(7) == Fraction(7)
    assert to_rational(np.int64(3)) == Fraction(3)
    with pytest.raises(ValueError):
        to_rational('1.5')
    with pytest.raises(ValueError):
        to_rational('3/0')


def test_rref_small():
    m = QMatrix.from_rows([[2, 4, 6], [1, 2, 4]])
    reduced, pivots, r = rref(m)
    assert r == 2, "Two independent rows"
    assert pivots == (0, 2)
    assert reduced.row(0) == QVector([1, 2, 0])
    assert reduced.row(1) == QVector([0, 0, 1])
    assert free_columns(m) == [1]


def test_nullspace_is_primitive_and_annihilated():
    m = QMatrix.from_rows([[1, 2, 3], [2, 4, 6]])
    basis = nullspace_basis(m)
    assert len(basis) == 2
    for v in basis:
        assert mat_vec(m, v).is_zero(), "Nullspace vector must be killed"
        assert v.primitive() == v, "Nullspace vectors are stored integer-primitive"
    assert basis[0] == QVector([2, -1, 0]).primitive()


def test_rank_nullity_random():
    rng = np.random.default_rng(7)
    for _ in range(100):
        rows, cols = rng.integers(1, 9, size=2)
        m = _random_matrix(rng, int(rows), int(cols))
        kernel = nullspace_basis(m)
        assert rank(m) + len(kernel) == m.cols, "Rank-nullity"
        assert rank(m) == rank(transpose(m)), "Row rank equals column rank"
        for v in kernel:
            assert mat_vec(m, v).is_zero()


def test_in_column_span():
    columns = [QVector([1, 0, 1]), QVector([0, 1, 1])]
    coefficients = in_column_span(columns, QVector([2, 3, 5]))
    assert coefficients == QVector([2, 3])
    assert in_column_span(columns, QVector([0, 0, 1])) is None
    assert in_column_span([], QVector([0, 0])) == QVector([])
    with pytest.raises(DimensionMismatchError):
        in_column_span(columns, QVector([1, 2]))


def test_products_and_stacking():
    a = QMatrix.from_rows([[1, Fraction(1, 2)], [0, 3]])
    b = QMatrix.identity(2)
    assert mat_mul(a, b) == a
    assert mat_mul(QMatrix.zeros(2, 0), QMatrix.zeros(0, 3)) == QMatrix.zeros(2, 3)
    assert hstack(a, b).shape == (2, 4)
    assert vstack(a, b).shape == (4, 2)
    with pytest.raises(DimensionMismatchError):
        mat_mul(a, QMatrix.zeros(3, 1))


def test_matrix_text_format():
    text = "2 3\n1 -2/3 0\n0 5 7\n"
    m = parse_matrix(text)
    assert m[0, 1] == Fraction(-2, 3)
    assert format_matrix(m) == text
    empty = parse_matrix("3 0\n")
    assert empty.shape == (3, 0)


def test_matrix_parse_errors_carry_line():
    with pytest.raises(ParseError) as info:
        parse_matrix("2 2\n1 2\n3 x\n", path='bad.txt')
    assert info.value.line == 3, "Bad token sits on line 3"
    assert 'bad.txt:3' in str(info.value)
    with pytest.raises(ParseError):
        parse_matrix("2 2\n1 2\n")


def test_rref_is_idempotent():
    rng = np.random.default_rng(21)
    for _ in range(100):
        rows, cols = rng.integers(1, 9, size=2)
        reduced, pivots, r = rref(_random_matrix(rng, int(rows), int(cols)))
        again, again_pivots, again_r = rref(reduced)
        assert again == reduced, "A reduced matrix is its own rref"
        assert (again_pivots, again_r) == (pivots, r)


def test_in_column_span_agrees_with_rank():
    rng = np.random.default_rng(22)
    for _ in range(100):
        rows, cols = rng.integers(1, 7, size=2)
        b = _random_matrix(rng, int(rows), int(cols))
        columns = b.column_list()
        if rng.random() < 0.5:
            weights = QVector(int(x) for x in rng.integers(-3, 4, size=b.cols))
            v = mat_vec(b, weights)
        else:
            v = QVector(int(x) for x in rng.integers(-3, 4, size=b.rows))
        inside = rank(hstack(b, QMatrix.from_columns([v], b.rows))) == rank(b)
        coefficients = in_column_span(columns, v)
        assert (coefficients is not None) == inside, "Membership iff the rank does not grow"
        if coefficients is not None:
            assert mat_vec(b, coefficients) == v, "Coefficients reconstruct the target"


def test_zero_and_identity_examples():
    reduced, pivots, r = rref(QMatrix.zeros(3, 3))
    assert (r, pivots) == (0, ())
    assert reduced.is_zero()
    reduced, pivots, r = rref(QMatrix.from_rows([[1, 1], [1, -1]]))
    assert reduced == QMatrix.identity(2)
    assert r == 2
    assert nullspace_basis(QMatrix.identity(4)) == []
    assert nullspace_basis(QMatrix.from_rows([[1, 1]])) == [QVector([1, -1])]
