import math
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import ALL_SEMIRINGS, elements
from idemcalc.errors import DimensionMismatch, DomainError, ParseError, SemiringMismatch
from idemcalc.matrices import (
    Matrix,
    approx_equal_matrix,
    closure_truncated,
    format_matrix,
    mat_add,
    mat_constants,
    mat_mul,
    mat_vec,
    parse_matrix,
    scalar_product,
)
from idemcalc.semirings import FIELD, INTERVAL_MAX_PLUS, INTERVAL_MIN_PLUS, MAX_PLUS, MIN_PLUS, Interval

INF = math.inf


def M(s, rows):
    return Matrix.from_rows(s, rows)


def matrices(s, n, m):
    return st.lists(elements(s), min_size=n * m, max_size=n * m).map(lambda d: Matrix(s, n, m, d))


# -- construction ----------------------------------------------------------------


def test_construction_validates():
    with pytest.raises(DimensionMismatch):
        Matrix(MAX_PLUS, 2, 2, [1, 2, 3])
    with pytest.raises(DomainError):
        M(MAX_PLUS, [[INF]])
    with pytest.raises(DimensionMismatch):
        M(MAX_PLUS, [[1, 2], [3]])
    A = M(MAX_PLUS, [[1, 2], [3, 4]])
    assert A[1, 0] == 3.0
    assert A.transpose().to_rows() == [[1, 3], [2, 4]]


def test_mat_constants():
    _, ident = mat_constants(MAX_PLUS, 2)
    assert ident.to_rows() == [[0, -INF], [-INF, 0]]
    zeros, _ = mat_constants(MIN_PLUS, 1)
    assert zeros.to_rows() == [[INF]]
    _, ident = mat_constants(FIELD, 2)
    assert ident.to_rows() == [[1, 0], [0, 1]]
    with pytest.raises(DimensionMismatch):
        mat_constants(FIELD, 0)


def test_mat_add_examples():
    A = M(MAX_PLUS, [[1, 2], [3, 4]])
    B = M(MAX_PLUS, [[4, 3], [2, 1]])
    assert mat_add(A, B).to_rows() == [[4, 3], [3, 4]]
    zeros, _ = mat_constants(MAX_PLUS, 2)
    assert mat_add(A, zeros) == A
    assert mat_add(A, A) == A


def test_mat_mul_examples():
    A = M(MIN_PLUS, [[0, 2], [INF, 0]])
    B = M(MIN_PLUS, [[0, INF], [3, 0]])
    assert mat_mul(A, B).to_rows() == [[0, 2], [3, 0]]
    _, ident = mat_constants(MIN_PLUS, 2)
    assert mat_mul(A, ident) == A
    F = mat_mul(M(FIELD, [[1, 2], [3, 4]]), M(FIELD, [[5, 6], [7, 8]]))
    assert F.to_rows() == [[19, 22], [43, 50]]


def test_mismatches():
    A = M(MAX_PLUS, [[1, 2]])
    with pytest.raises(DimensionMismatch):
        mat_mul(A, A)
    with pytest.raises(DimensionMismatch):
        mat_add(A, M(MAX_PLUS, [[1], [2]]))
    with pytest.raises(SemiringMismatch):
        mat_add(A, M(MIN_PLUS, [[1, 2]]))
    with pytest.raises(SemiringMismatch):
        scalar_product(A, M(FIELD, [[1, 2]]))


def test_scalar_product_examples():
    x = Matrix.column(MAX_PLUS, [1, 2, 3])
    y = Matrix.column(MAX_PLUS, [3, 2, 1])
    assert scalar_product(x, y) == 4
    zero = Matrix.column(MAX_PLUS, [-INF] * 3)
    assert scalar_product(zero, y) == -INF
    assert scalar_product(Matrix.row(FIELD, [1, 2]), Matrix.column(FIELD, [3, 4])) == 11
    with pytest.raises(DimensionMismatch):
        scalar_product(x, Matrix.column(MAX_PLUS, [1, 2]))


def test_mat_vec_examples():
    v = Matrix.column(MAX_PLUS, [5, 7])
    _, ident = mat_constants(MAX_PLUS, 2)
    assert mat_vec(ident, v) == v
    A = M(MAX_PLUS, [[0, 1], [-INF, 0]])
    assert mat_vec(A, v).values() == [8, 7]
    zeros, _ = mat_constants(MAX_PLUS, 2)
    assert mat_vec(zeros, v).values() == [-INF, -INF]


def test_closure_truncated_examples():
    A = M(MIN_PLUS, [[INF, 2], [3, INF]])
    _, ident = mat_constants(MIN_PLUS, 2)
    assert closure_truncated(A, 0) == ident
    assert closure_truncated(A, 2).to_rows() == [[0, 2], [3, 0]]
    with pytest.raises(DimensionMismatch):
        closure_truncated(M(MIN_PLUS, [[1, 2]]), 1)


# -- Mat_n(S) laws ----------------------------------------------------------------


@pytest.mark.parametrize("s", ALL_SEMIRINGS, ids=str)
@settings(max_examples=40, deadline=None)
@given(data=st.data())
def test_matrix_semiring_laws(s, data):
    n = data.draw(st.integers(1, 4))
    A, B, C = (data.draw(matrices(s, n, n)) for _ in range(3))
    eq = (lambda X, Y: X == Y) if s.idempotent else approx_equal_matrix
    zeros, ident = mat_constants(s, n)
    assert eq(mat_add(mat_add(A, B), C), mat_add(A, mat_add(B, C)))
    assert mat_add(A, B) == mat_add(B, A)
    assert approx_equal_matrix(mat_mul(mat_mul(A, B), C), mat_mul(A, mat_mul(B, C)))
    assert approx_equal_matrix(mat_mul(A, mat_add(B, C)), mat_add(mat_mul(A, B), mat_mul(A, C)))
    assert approx_equal_matrix(mat_mul(mat_add(A, B), C), mat_add(mat_mul(A, C), mat_mul(B, C)))
    assert mat_mul(A, ident) == A == mat_mul(ident, A)
    assert mat_add(A, zeros) == A
    assert mat_mul(A, zeros) == zeros == mat_mul(zeros, A)
    if s.idempotent:
        assert mat_add(A, A) == A


@pytest.mark.parametrize("s", ALL_SEMIRINGS, ids=str)
@settings(max_examples=50)
@given(data=st.data())
def test_scalar_product_is_row_times_column(s, data):
    n = data.draw(st.integers(1, 6))
    xs = data.draw(st.lists(elements(s), min_size=n, max_size=n))
    ys = data.draw(st.lists(elements(s), min_size=n, max_size=n))
    x, y = Matrix.column(s, xs), Matrix.column(s, ys)
    assert scalar_product(x, y) == mat_mul(Matrix.row(s, xs), y)[0, 0]


@pytest.mark.parametrize("s", [FIELD, MAX_PLUS, INTERVAL_MIN_PLUS], ids=str)
def test_parallel_product_is_bit_identical(s):
    rng = random.Random(7)
    n = 24
    data = lambda: [rng.uniform(-5, 5) for _ in range(n * n)]  # noqa: E731
    A, B = Matrix(s, n, n, data()), Matrix(s, n, n, data())
    assert mat_mul(A, B, workers=4).data == mat_mul(A, B).data


def test_field_product_matches_reference():
    np = pytest.importorskip("numpy")
    rng = np.random.default_rng(3)
    a, b = rng.normal(size=(5, 7)), rng.normal(size=(7, 4))
    got = mat_mul(Matrix.from_rows(FIELD, a.tolist()), Matrix.from_rows(FIELD, b.tolist()))
    assert approx_equal_matrix(got, Matrix.from_rows(FIELD, (a @ b).tolist()))


# -- text format -------------------------------------------------------------------


def test_format_matrix():
    A = M(MIN_PLUS, [[0, 2.5], [INF, -1]])
    assert format_matrix(A) == "2 2 min-plus\n0 2.5\ninf -1\n"


@pytest.mark.parametrize("s", ALL_SEMIRINGS, ids=str)
@settings(max_examples=30)
@given(data=st.data())
def test_matrix_text_round_trip(s, data):
    r, c = data.draw(st.integers(1, 3)), data.draw(st.integers(1, 3))
    A = data.draw(matrices(s, r, c))
    assert parse_matrix(format_matrix(A)) == A


def test_parse_intervals():
    A = parse_matrix("1 2 interval-max-plus\n1:2 3\n")
    assert A.to_rows() == [[Interval(1, 2), Interval(3, 3)]]


@pytest.mark.parametrize("text", [
    "",
    "2 2\n1 2\n3 4\n",
    "2 2 min-plus\n1 2\n",
    "1 2 min-plus\n1 x\n",
    "1 1 max-plus\ninf\n",
    "1 1 tropical\n0\n",
    "1 1 interval-max-plus\n3:1\n",
])
def test_parse_errors(text):
    with pytest.raises(ParseError):
        parse_matrix(text)


def test_interval_matrix_product():
    A = M(INTERVAL_MAX_PLUS, [[(0, 1), (-INF, -INF)], [(2, 2), (0, 0)]])
    v = Matrix.column(INTERVAL_MAX_PLUS, [(1, 3), (0, 0.5)])
    assert mat_vec(A, v).values() == [Interval(1, 4), Interval(3, 5)]
