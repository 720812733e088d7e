"""Dense matrices and vectors over an arbitrary semiring.

A vector is just a :class:`Matrix` with one column (or one row).  All
operations return new matrices; nothing is mutated after construction.
"""
from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from typing import Iterable, Sequence

from .errors import DimensionMismatch, DomainError, ParseError, SemiringMismatch
from .semirings import Element, Semiring, approx_equal, parse_semiring


class Matrix:
    """Row-major ``rows x cols`` array of elements of ``semiring``."""

    __slots__ = ("semiring", "rows", "cols", "data")

    def __init__(self, semiring: Semiring, rows: int, cols: int, data: Iterable, *, check: bool = True):
        if rows < 1 or cols < 1:
            raise DimensionMismatch(f"matrix dimensions must be positive, got {rows}x{cols}")
        data = tuple(semiring.coerce(x) for x in data) if check else tuple(data)
        if len(data) != rows * cols:
            raise DimensionMismatch(f"{rows}x{cols} matrix needs {rows * cols} entries, got {len(data)}")
        self.semiring = semiring
        self.rows = rows
        self.cols = cols
        self.data = data

    @classmethod
    def from_rows(cls, semiring: Semiring, rows: Sequence[Sequence]) -> Matrix:
        rows = [list(r) for r in rows]
        if not rows:
            raise DimensionMismatch("empty matrix")
        ncols = len(rows[0])
        if any(len(r) != ncols for r in rows):
            raise DimensionMismatch("ragged rows")
        return cls(semiring, len(rows), ncols, [x for r in rows for x in r])

    @classmethod
    def column(cls, semiring: Semiring, values: Sequence) -> Matrix:
        values = list(values)
        return cls(semiring, len(values), 1, values)

    @classmethod
    def row(cls, semiring: Semiring, values: Sequence) -> Matrix:
        values = list(values)
        return cls(semiring, 1, len(values), values)

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    @property
    def is_vector(self) -> bool:
        return self.rows == 1 or self.cols == 1

    def __getitem__(self, ij: tuple[int, int]) -> Element:
        i, j = ij
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(f"index {ij} out of range for {self.rows}x{self.cols} matrix")
        return self.data[i * self.cols + j]

    def to_rows(self) -> list[list[Element]]:
        c = self.cols
        return [list(self.data[i * c:(i + 1) * c]) for i in range(self.rows)]

    def row_values(self, i: int) -> list[Element]:
        return list(self.data[i * self.cols:(i + 1) * self.cols])

    def column_values(self, j: int) -> list[Element]:
        return list(self.data[j::self.cols])

    def values(self) -> list[Element]:
        """Entries of a vector, in order."""
        if not self.is_vector:
            raise DimensionMismatch(f"{self.rows}x{self.cols} matrix is not a vector")
        return list(self.data)

    def transpose(self) -> Matrix:
        cols = [self.column_values(j) for j in range(self.cols)]
        return Matrix(self.semiring, self.cols, self.rows, [x for c in cols for x in c], check=False)

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return (self.semiring == other.semiring and self.shape == other.shape
                and self.data == other.data)

    def __hash__(self):
        return hash((self.semiring, self.rows, self.cols, self.data))

    def __repr__(self):
        return f"Matrix({self.semiring.name}, {self.to_rows()!r})"


def _same_semiring(*ms: Matrix) -> Semiring:
    s = ms[0].semiring
    for m in ms[1:]:
        if m.semiring != s:
            raise SemiringMismatch(f"cannot combine {s.name} with {m.semiring.name}")
    return s


def mat_constants(s: Semiring, n: int) -> tuple[Matrix, Matrix]:
    """Return the ``n x n`` zero matrix and identity of Mat_n(s)."""
    if n < 1:
        raise DimensionMismatch(f"n must be >= 1, got {n}")
    zero, one = s.zero, s.one
    zeros = Matrix(s, n, n, [zero] * (n * n), check=False)
    ident = Matrix(s, n, n, [one if i == j else zero for i in range(n) for j in range(n)], check=False)
    return zeros, ident


def identity(s: Semiring, n: int) -> Matrix:
    return mat_constants(s, n)[1]


def zeros(s: Semiring, rows: int, cols: int) -> Matrix:
    return Matrix(s, rows, cols, [s.zero] * (rows * cols), check=False)


def mat_add(A: Matrix, B: Matrix) -> Matrix:
    s = _same_semiring(A, B)
    if A.shape != B.shape:
        raise DimensionMismatch(f"cannot add {A.shape} and {B.shape}")
    add = s.raw_add
    return Matrix(s, A.rows, A.cols, [add(a, b) for a, b in zip(A.data, B.data)], check=False)


def _product_row(s: Semiring, A: Matrix, B: Matrix, i: int) -> list[Element]:
    add, mul, zero = s.raw_add, s.raw_mul, s.zero
    n, m = A.cols, B.cols
    arow = A.data[i * n:(i + 1) * n]
    bdata = B.data
    out = []
    for j in range(m):
        acc = zero
        for k in range(n):  # ascending k: the result is independent of scheduling
            acc = add(acc, mul(arow[k], bdata[k * m + j]))
        out.append(acc)
    return out


def mat_mul(A: Matrix, B: Matrix, workers: int | None = None) -> Matrix:
    """Semiring product ``(AB)_ij = (+)_k a_ik (.) b_kj``.

    With ``workers > 1`` output rows are computed on a thread pool; each
    entry is still reduced in ascending ``k`` so the result is bit-identical
    to the sequential one.
    """
    s = _same_semiring(A, B)
    if A.cols != B.rows:
        raise DimensionMismatch(f"cannot multiply {A.shape} by {B.shape}")
    if workers and workers > 1 and A.rows > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(lambda i: _product_row(s, A, B, i), range(A.rows)))
    else:
        rows = [_product_row(s, A, B, i) for i in range(A.rows)]
    return Matrix(s, A.rows, B.cols, [x for r in rows for x in r], check=False)


def mat_vec(A: Matrix, v: Matrix) -> Matrix:
    if v.cols != 1:
        raise DimensionMismatch(f"expected a column vector, got shape {v.shape}")
    return mat_mul(A, v)


def scalar_product(x: Matrix, y: Matrix) -> Element:
    """``(x1 (.) y1) (+) ... (+) (xn (.) yn)`` for row or column vectors."""
    s = _same_semiring(x, y)
    xs, ys = x.values(), y.values()
    if len(xs) != len(ys):
        raise DimensionMismatch(f"vector lengths differ: {len(xs)} vs {len(ys)}")
    add, mul = s.raw_add, s.raw_mul
    acc = s.zero
    for a, b in zip(xs, ys):
        acc = add(acc, mul(a, b))
    return acc


def closure_truncated(A: Matrix, k: int) -> Matrix:
    """Partial closure ``1 (+) A (+) A^2 (+) ... (+) A^k`` by repeated products."""
    if not A.is_square:
        raise DimensionMismatch(f"closure needs a square matrix, got {A.shape}")
    if k < 0:
        raise DomainError(f"k must be nonnegative, got {k}")
    total = power = identity(A.semiring, A.rows)
    for _ in range(k):
        power = mat_mul(power, A)
        total = mat_add(total, power)
    return total


def approx_equal_matrix(A: Matrix, B: Matrix, **tol) -> bool:
    return (A.semiring == B.semiring and A.shape == B.shape
            and all(approx_equal(a, b, **tol) for a, b in zip(A.data, B.data)))


# -- text format -------------------------------------------------------------


def format_scalar(x: float) -> str:
    if x == math.inf:
        return "inf"
    if x == -math.inf:
        return "-inf"
    if float(x).is_integer() and abs(x) < 1e16:
        return str(int(x))
    return repr(float(x))


def format_element(x: Element) -> str:
    if isinstance(x, tuple):
        return f"{format_scalar(x[0])}:{format_scalar(x[1])}"
    return format_scalar(x)


def _parse_scalar(token: str) -> float:
    v = float(token)
    if math.isnan(v):
        raise ValueError("nan")
    return v


def parse_element(s: Semiring, token: str) -> Element:
    if s.is_interval and ":" in token:
        lo, _, hi = token.partition(":")
        value = (_parse_scalar(lo), _parse_scalar(hi))
    else:
        value = _parse_scalar(token)
    return s.coerce(value)


def format_matrix(A: Matrix) -> str:
    """Header ``rows cols semiring`` followed by one whitespace-separated line per row."""
    lines = [f"{A.rows} {A.cols} {A.semiring.name}"]
    for r in A.to_rows():
        lines.append(" ".join(format_element(x) for x in r))
    return "\n".join(lines) + "\n"


def parse_matrix(text: str) -> Matrix:
    lines = [(no, ln.strip()) for no, ln in enumerate(text.splitlines(), 1)]
    lines = [(no, ln) for no, ln in lines if ln]
    if not lines:
        raise ParseError("empty matrix text")
    no, header = lines[0]
    parts = header.split()
    if len(parts) != 3:
        raise ParseError("header must be 'rows cols semiring-name'", no)
    try:
        rows, cols = int(parts[0]), int(parts[1])
    except ValueError:
        raise ParseError("rows and cols must be integers", no) from None
    try:
        s = parse_semiring(parts[2])
    except DomainError as e:
        raise ParseError(str(e), no) from None
    body = lines[1:]
    if len(body) != rows:
        raise ParseError(f"expected {rows} rows, found {len(body)}", no)
    data = []
    for no, ln in body:
        tokens = ln.split()
        if len(tokens) != cols:
            raise ParseError(f"expected {cols} entries, found {len(tokens)}", no)
        for tok in tokens:
            try:
                data.append(parse_element(s, tok))
            except (ValueError, DomainError) as e:
                raise ParseError(f"bad entry {tok!r}: {e}", no) from None
    return Matrix(s, rows, cols, data, check=False)
