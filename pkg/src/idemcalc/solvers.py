"""Closure and Bellman-equation solvers that run unchanged over every semiring.

The same Gauss-Jordan elimination yields the shortest-path closure over
min-plus and the matrix inverse ``(1 - A)^-1`` over the reals; Jacobi and
Gauss-Seidel sweeps solve ``X = AX (+) B``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator

from .errors import DimensionMismatch, NonStabilizing, SemiringMismatch, StarUndefined
from .graphs import Graph, lower_graph
from .matrices import Matrix, approx_equal_matrix, mat_add, mat_mul
from .semirings import FIELD, MAX_MIN, MIN_PLUS, Semiring

RESIDUAL_TOL = 1e-10
FIELD_MAX_ITER = 10_000

PROBLEMS = ("shortest-path", "widest-path", "transitive-closure")


@dataclass(frozen=True)
class BellmanSolution:
    X: Matrix
    iterations: int
    stabilized: bool = True


def closure_gauss_jordan(A: Matrix) -> Matrix:
    """Closure ``A* = 1 (+) A (+) A^2 (+) ...`` by elimination with fixed pivot order.

    Pivot ``k`` applies ``a_ij <- a_ij (+) a_ik (.) star(a_kk) (.) a_kj`` using
    the row and column of ``k`` as they stood before the step; the unity is
    added to the diagonal at the end.  Raises NonStabilizing (with ``index``
    set to the pivot) when a pivot has no star.
    """
    if not A.is_square:
        raise DimensionMismatch(f"closure needs a square matrix, got {A.shape}")
    s = A.semiring
    n = A.rows
    add, mul, zero = s.raw_add, s.raw_mul, s.zero
    a = A.to_rows()
    for k in range(n):
        try:
            pivot_star = s.star(a[k][k])
        except StarUndefined as e:
            raise NonStabilizing(f"closure does not exist: {e}", index=k) from e
        col = [a[i][k] for i in range(n)]
        pivot_row = [mul(pivot_star, x) for x in a[k]]
        for i in range(n):
            aik = col[i]
            if aik == zero:
                continue
            row = a[i]
            for j in range(n):
                row[j] = add(row[j], mul(aik, pivot_row[j]))
    one = s.one
    for i in range(n):
        a[i][i] = add(one, a[i][i])
    return Matrix(s, n, n, [x for r in a for x in r], check=False)


def field_inverse_via_closure(A: Matrix) -> Matrix:
    """``(1 - A)^-1`` over the reals, computed by the universal closure routine."""
    if A.semiring != FIELD:
        raise SemiringMismatch(f"expected a field matrix, got {A.semiring.name}")
    return closure_gauss_jordan(A)


def field_inverse(M: Matrix) -> Matrix:
    """``M^-1`` as the closure of ``1 - M``."""
    if M.semiring != FIELD:
        raise SemiringMismatch(f"expected a field matrix, got {M.semiring.name}")
    if not M.is_square:
        raise DimensionMismatch(f"cannot invert a {M.shape} matrix")
    n = M.rows
    shifted = [(1.0 if i == j else 0.0) - M[i, j] for i in range(n) for j in range(n)]
    return field_inverse_via_closure(Matrix(FIELD, n, n, shifted))


# -- iterative Bellman solvers ----------------------------------------------


def _check_system(A: Matrix, B: Matrix) -> Semiring:
    if A.semiring != B.semiring:
        raise SemiringMismatch(f"cannot combine {A.semiring.name} with {B.semiring.name}")
    if not A.is_square:
        raise DimensionMismatch(f"A must be square, got {A.shape}")
    if A.rows != B.rows:
        raise DimensionMismatch(f"A is {A.shape} but B has {B.rows} rows")
    return A.semiring


def _residual(X, Y) -> float:
    worst = 0.0
    for a, b in zip(X, Y):
        if a == b:
            continue
        d = abs(a - b)
        if math.isnan(d) or d > worst:
            worst = math.inf if math.isnan(d) else d
    return worst


def _settled(s: Semiring, X: Matrix, Y: Matrix, tol: float) -> bool:
    if s.idempotent:
        return approx_equal_matrix(X, Y)
    return _residual(X.data, Y.data) < tol


def _first_changed_row(X: Matrix, Y: Matrix) -> int:
    for i in range(X.rows):
        if X.row_values(i) != Y.row_values(i):
            return i
    return 0


def _default_cap(s: Semiring, n: int) -> int:
    # idempotent iterations settle within n sweeps whenever A* exists
    return 10 * n if s.idempotent else max(10 * n, FIELD_MAX_ITER)


def jacobi_iterates(A: Matrix, B: Matrix) -> Iterator[Matrix]:
    """Yield ``X_0 = B, X_1, X_2, ...`` with ``X_{t+1} = A X_t (+) B``."""
    _check_system(A, B)
    X = B
    while True:
        yield X
        X = mat_add(mat_mul(A, X), B)


def solve_bellman_jacobi(A: Matrix, B: Matrix, *, tol: float = RESIDUAL_TOL,
                         max_iter: int | None = None) -> BellmanSolution:
    """Solve ``X = AX (+) B`` by simultaneous (Jacobi / Bellman) sweeps from ``X = B``.

    ``iterations`` counts sweeps, including the one that confirmed the fixed point.
    """
    s = _check_system(A, B)
    cap = max_iter if max_iter is not None else _default_cap(s, A.rows)
    it = jacobi_iterates(A, B)
    X = X_prev = next(it)
    for t in range(1, cap + 1):
        Y = next(it)
        if _settled(s, X, Y, tol):
            return BellmanSolution(Y, t)
        X_prev, X = X, Y
    raise NonStabilizing(f"Jacobi iteration did not settle in {cap} sweeps",
                         index=_first_changed_row(X_prev, X))


def gauss_seidel_sweeps(A: Matrix, B: Matrix) -> Iterator[Matrix]:
    """Yield ``B`` and then the matrix after each in-place (Gauss-Seidel / Ford) sweep."""
    s = _check_system(A, B)
    add, mul, zero = s.raw_add, s.raw_mul, s.zero
    n, m = B.rows, B.cols
    arows = A.to_rows()
    b = B.to_rows()
    x = B.to_rows()
    while True:
        yield Matrix(s, n, m, [v for r in x for v in r], check=False)
        for i in range(n):
            ai = arows[i]
            new = []
            for j in range(m):
                acc = zero
                for k in range(n):
                    acc = add(acc, mul(ai[k], x[k][j]))
                new.append(add(acc, b[i][j]))
            x[i] = new


def solve_bellman_gauss_seidel(A: Matrix, B: Matrix, *, tol: float = RESIDUAL_TOL,
                               max_iter: int | None = None) -> BellmanSolution:
    """Same fixed point as :func:`solve_bellman_jacobi`, reusing updated rows within a sweep."""
    s = _check_system(A, B)
    cap = max_iter if max_iter is not None else _default_cap(s, A.rows)
    it = gauss_seidel_sweeps(A, B)
    X = X_prev = next(it)
    for t in range(1, cap + 1):
        Y = next(it)
        if _settled(s, X, Y, tol):
            return BellmanSolution(Y, t)
        X_prev, X = X, Y
    raise NonStabilizing(f"Gauss-Seidel iteration did not settle in {cap} sweeps",
                         index=_first_changed_row(X_prev, X))


# -- path problems on graphs -------------------------------------------------


def problem_matrix(g: Graph, problem: str) -> Matrix:
    """Lower ``g`` into the semiring that encodes ``problem``."""
    if problem == "shortest-path":
        return lower_graph(g, MIN_PLUS)
    if problem == "widest-path":
        return lower_graph(g, MAX_MIN)
    if problem == "transitive-closure":
        return lower_graph(g, MAX_MIN, weight=lambda w: MAX_MIN.one)
    raise ValueError(f"unknown problem {problem!r}; expected one of {PROBLEMS}")


def _named(err: NonStabilizing, g: Graph) -> NonStabilizing:
    if err.index is not None and err.index < len(g.nodes):
        err.node = g.nodes[err.index]
    return err


def closure_of_graph(g: Graph, s: Semiring) -> Matrix:
    """Closure of the adjacency matrix of ``g`` over ``s``; errors name the node."""
    try:
        return closure_gauss_jordan(lower_graph(g, s))
    except NonStabilizing as e:
        raise _named(e, g) from e.__cause__


def solve_path_problem(g: Graph, problem: str, source: str | None = None,
                       target: str | None = None):
    """Solve an algebraic path problem on ``g``.

    Returns ``{from: {to: value}}`` when no endpoint is given, ``{node: value}``
    for a single source (values from the source) or a single target (values
    to the target), and one value when both are given.  Transitive-closure
    values are booleans (reachable or not).
    """
    A = problem_matrix(g, problem)
    s = A.semiring
    n = A.rows
    src = g.index(source) if source is not None else None
    dst = g.index(target) if target is not None else None

    if problem == "transitive-closure":
        convert = lambda v: v != s.zero  # noqa: E731
    else:
        convert = lambda v: v  # noqa: E731

    try:
        if src is None and dst is None:
            star = closure_gauss_jordan(A)
            return {g.nodes[i]: {g.nodes[j]: convert(star[i, j]) for j in range(n)}
                    for i in range(n)}
        if src is not None:
            # x = A^T x (+) e_src  gives  x_j = (A*)_{src, j}
            unit = [s.one if i == src else s.zero for i in range(n)]
            sol = solve_bellman_jacobi(A.transpose(), Matrix(s, n, 1, unit, check=False))
        else:
            unit = [s.one if i == dst else s.zero for i in range(n)]
            sol = solve_bellman_jacobi(A, Matrix(s, n, 1, unit, check=False))
    except NonStabilizing as e:
        raise _named(e, g) from e.__cause__
    values = sol.X.values()
    if src is not None and dst is not None:
        return convert(values[dst])
    return {g.nodes[i]: convert(values[i]) for i in range(n)}


def closure_times(A: Matrix, B: Matrix) -> Matrix:
    """``A* (.) B``, the least solution of ``X = AX (+) B`` when ``A*`` exists."""
    return mat_mul(closure_gauss_jordan(A), B)


__all__ = [
    "BellmanSolution",
    "closure_gauss_jordan",
    "closure_of_graph",
    "closure_times",
    "field_inverse",
    "field_inverse_via_closure",
    "gauss_seidel_sweeps",
    "jacobi_iterates",
    "problem_matrix",
    "solve_bellman_gauss_seidel",
    "solve_bellman_jacobi",
    "solve_path_problem",
]
