"""Idempotent analysis on sampled functions.

A function ``X -> S`` is represented by its values on a strictly increasing
grid.  Integrals become ``(+)``-reductions, integral operators become
matrix-vector products, and the Fourier transform over max-plus becomes the
Legendre (Fenchel) transform.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import DomainError, GridMismatch, ParseError, SemiringMismatch, UnsupportedOperation
from .matrices import Matrix, format_element, format_scalar, mat_vec
from .semirings import MAX_PLUS, Element, Semiring


def _strictly_increasing(xs: Sequence[float]) -> bool:
    return all(a < b for a, b in zip(xs, xs[1:]))


@dataclass(frozen=True)
class SampledFunction:
    xs: tuple[float, ...]
    values: tuple[Element, ...]
    semiring: Semiring

    def __post_init__(self):
        xs = tuple(float(x) for x in self.xs)
        if any(not math.isfinite(x) for x in xs):
            raise DomainError("grid points must be finite")
        if not _strictly_increasing(xs):
            raise DomainError("grid must be strictly increasing")
        values = tuple(self.semiring.coerce(v) for v in self.values)
        if len(values) != len(xs):
            raise DomainError(f"{len(xs)} grid points but {len(values)} values")
        object.__setattr__(self, "xs", xs)
        object.__setattr__(self, "values", values)

    @classmethod
    def sample(cls, f, xs: Iterable[float], semiring: Semiring = MAX_PLUS) -> SampledFunction:
        xs = list(xs)
        return cls(tuple(xs), tuple(f(x) for x in xs), semiring)

    @classmethod
    def constant(cls, c, xs: Iterable[float], semiring: Semiring = MAX_PLUS) -> SampledFunction:
        xs = list(xs)
        return cls(tuple(xs), (c,) * len(xs), semiring)

    def __len__(self):
        return len(self.xs)

    def __add__(self, other: SampledFunction) -> SampledFunction:
        """Pointwise ``(+)``."""
        _check_same_grid(self, other)
        add = self.semiring.raw_add
        return SampledFunction(self.xs, tuple(add(a, b) for a, b in zip(self.values, other.values)),
                               self.semiring)

    def scale(self, c) -> SampledFunction:
        """Pointwise ``c (.) f``."""
        s = self.semiring
        c = s.coerce(c)
        return SampledFunction(self.xs, tuple(s.raw_mul(c, v) for v in self.values), s)


@dataclass(frozen=True)
class Kernel:
    xs: tuple[float, ...]
    ys: tuple[float, ...]
    K: Matrix

    def __post_init__(self):
        xs = tuple(float(x) for x in self.xs)
        ys = tuple(float(y) for y in self.ys)
        if not (_strictly_increasing(xs) and _strictly_increasing(ys)):
            raise DomainError("kernel grids must be strictly increasing")
        if self.K.shape != (len(xs), len(ys)):
            raise GridMismatch(f"kernel matrix {self.K.shape} does not match grids "
                               f"({len(xs)}, {len(ys)})")
        object.__setattr__(self, "xs", xs)
        object.__setattr__(self, "ys", ys)

    @classmethod
    def from_function(cls, k, xs, ys, semiring: Semiring = MAX_PLUS) -> Kernel:
        xs, ys = list(xs), list(ys)
        data = [k(x, y) for x in xs for y in ys]
        return cls(tuple(xs), tuple(ys), Matrix(semiring, len(xs), len(ys), data))


def _check_same_grid(f: SampledFunction, g: SampledFunction) -> None:
    if f.semiring != g.semiring:
        raise SemiringMismatch(f"cannot combine {f.semiring.name} with {g.semiring.name}")
    if f.xs != g.xs:
        raise GridMismatch("functions are sampled on different grids")


def _as_element(s: Semiring, x: float) -> Element:
    return s.coerce(x)


def riemann_universal(phi: SampledFunction) -> Element:
    """Generalized Riemann sum ``(+)_{i=1..N} phi(x_i) (.) Delta_i``.

    ``Delta_i = x_i - x_{i-1}`` enters the semiring unchanged, so over the
    field this is the ordinary rectangle sum and over max-plus it is
    ``max_i (phi(x_i) + Delta_i)``, which tends to ``sup phi`` as the mesh shrinks.
    """
    if len(phi) < 2:
        raise DomainError("a Riemann sum needs at least two grid points")
    s = phi.semiring
    add, mul = s.raw_add, s.raw_mul
    acc = s.zero
    xs, vs = phi.xs, phi.values
    for i in range(1, len(xs)):
        acc = add(acc, mul(vs[i], _as_element(s, xs[i] - xs[i - 1])))
    return acc


def idempotent_integral(phi: SampledFunction) -> Element:
    """``(+)`` of all samples: the exact integral of the finite model (sup over max-plus)."""
    s = phi.semiring
    if not s.idempotent:
        raise UnsupportedOperation(f"idempotent integral needs an idempotent semiring, not {s.name}")
    acc = s.zero
    for v in phi.values:
        acc = s.raw_add(acc, v)
    return acc


def measure(phi: SampledFunction, indices: Iterable[int]) -> Element:
    """Idempotent measure ``m_phi(B)`` of a set of grid indices; the empty set has measure zero."""
    s = phi.semiring
    if not s.idempotent:
        raise UnsupportedOperation(f"idempotent measure needs an idempotent semiring, not {s.name}")
    acc = s.zero
    n = len(phi)
    for i in set(indices):
        if not isinstance(i, int) or not 0 <= i < n:
            raise DomainError(f"index {i!r} out of range for a grid of {n} points")
        acc = s.raw_add(acc, phi.values[i])
    return acc


def scalar_product_fn(phi: SampledFunction, psi: SampledFunction) -> Element:
    _check_same_grid(phi, psi)
    s = phi.semiring
    acc = s.zero
    for a, b in zip(phi.values, psi.values):
        acc = s.raw_add(acc, s.raw_mul(a, b))
    return acc


def integral_operator(K: Kernel, phi: SampledFunction) -> SampledFunction:
    """``(K phi)(x_i) = (+)_j K(x_i, y_j) (.) phi(y_j)``, evaluated as a matrix-vector product."""
    if K.K.semiring != phi.semiring:
        raise SemiringMismatch(f"kernel is over {K.K.semiring.name}, function over {phi.semiring.name}")
    if K.ys != phi.xs:
        raise GridMismatch("function grid differs from the kernel's y grid")
    if not phi.xs:
        raise GridMismatch("cannot apply a kernel to an empty function")
    v = Matrix(phi.semiring, len(phi), 1, phi.values, check=False)
    return SampledFunction(K.xs, tuple(mat_vec(K.K, v).values()), phi.semiring)


def legendre_transform(phi: SampledFunction, xi_grid: Iterable[float]) -> SampledFunction:
    """Max-plus Fourier transform ``xi -> sup_i (xi * x_i + phi(x_i))``.

    Every ``xi`` scans the whole sample grid; no convex-hull shortcut is taken.
    """
    if phi.semiring != MAX_PLUS:
        raise SemiringMismatch(f"the Legendre transform is defined over max-plus, not {phi.semiring.name}")
    xis = tuple(float(x) for x in xi_grid)
    if not phi.xs or not xis:
        raise DomainError("Legendre transform needs nonempty grids")
    s = MAX_PLUS
    add, mul = s.raw_add, s.raw_mul
    out = []
    for xi in xis:
        acc = s.zero
        for x, v in zip(phi.xs, phi.values):
            acc = add(acc, mul(xi * x, v))
        out.append(acc)
    return SampledFunction(xis, tuple(out), s)


def trapezoid_field(phi: SampledFunction) -> float:
    """Trapezoid rule; only meaningful over the field (it halves sums)."""
    if phi.semiring.kind != "field":
        raise UnsupportedOperation("the trapezoid rule is only provided over the field")
    if len(phi) < 2:
        raise DomainError("the trapezoid rule needs at least two grid points")
    xs, vs = phi.xs, phi.values
    return sum((xs[i] - xs[i - 1]) * (vs[i] + vs[i - 1]) / 2 for i in range(1, len(xs)))


# -- CSV format --------------------------------------------------------------


def parse_function_csv(text: str, semiring: Semiring = MAX_PLUS) -> SampledFunction:
    """Read ``x,value`` CSV (header required; ``inf``/``-inf`` allowed in ``value``)."""
    lines = [(no, ln.strip()) for no, ln in enumerate(text.splitlines(), 1)]
    lines = [(no, ln) for no, ln in lines if ln]
    if not lines:
        raise ParseError("empty function file")
    no, header = lines[0]
    if [h.strip() for h in header.split(",")] != ["x", "value"]:
        raise ParseError("header must be 'x,value'", no)
    xs, vs = [], []
    for no, ln in lines[1:]:
        parts = ln.split(",")
        if len(parts) != 2:
            raise ParseError("expected 'x,value'", no)
        try:
            x, v = float(parts[0]), float(parts[1])
        except ValueError:
            raise ParseError(f"non-numeric field in {ln!r}", no) from None
        if math.isnan(x) or math.isnan(v):
            raise ParseError("nan not allowed", no)
        xs.append(x)
        vs.append(v)
    try:
        return SampledFunction(tuple(xs), tuple(vs), semiring)
    except DomainError as e:
        raise ParseError(str(e)) from None


def format_function_csv(phi: SampledFunction) -> str:
    rows = ["x,value"]
    rows += [f"{format_scalar(x)},{format_element(v)}" for x, v in zip(phi.xs, phi.values)]
    return "\n".join(rows) + "\n"
