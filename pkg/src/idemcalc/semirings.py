"""Semiring instances, the standard order, scalar closure and dequantization.

Elements are plain Python floats (with ``-inf``/``inf`` standing for the
neutral elements where the carrier needs them) or :class:`Interval` pairs for
the two interval kinds.  A :class:`Semiring` is a small immutable descriptor;
all arithmetic is dispatched on its ``kind``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple, Union

from .errors import DomainError, StarUndefined, UnsupportedOperation

INF = math.inf
NEG_INF = -math.inf

ABS_TOL = 1e-12
REL_TOL = 1e-9

KINDS = (
    "max-plus",
    "min-plus",
    "max-min",
    "field",
    "deformed",
    "interval-max-plus",
    "interval-min-plus",
)


class Interval(NamedTuple):
    """Closed interval ``[lo, hi]`` with ``lo`` below ``hi`` in the base semiring's order.

    For ``interval-min-plus`` the order is reversed, so ``lo >= hi`` numerically.
    """

    lo: float
    hi: float

    def __repr__(self):
        return f"[{self.lo!r}, {self.hi!r}]"


Element = Union[float, Interval]


def _is_real(x) -> bool:
    return isinstance(x, (int, float)) and not isinstance(x, bool) and not math.isnan(x)


@dataclass(frozen=True)
class Semiring:
    kind: str
    h: float | None = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise DomainError(f"unknown semiring kind {self.kind!r}")
        if self.kind == "deformed":
            if self.h is None or not _is_real(self.h) or not (0 < self.h < INF):
                raise DomainError(f"deformed semiring needs a finite h > 0, got {self.h!r}")
            object.__setattr__(self, "h", float(self.h))
        elif self.h is not None:
            raise DomainError("parameter h only applies to the deformed semiring")

    # -- descriptor flags ----------------------------------------------------

    @property
    def idempotent(self) -> bool:
        return self.kind not in ("field", "deformed")

    @property
    def has_division(self) -> bool:
        # semifields: every nonzero element is invertible
        return self.kind in ("max-plus", "min-plus", "field", "deformed")

    @property
    def is_interval(self) -> bool:
        return self.kind.startswith("interval-")

    @property
    def base(self) -> Semiring | None:
        """Scalar semiring underlying an interval kind."""
        if self.kind == "interval-max-plus":
            return MAX_PLUS
        if self.kind == "interval-min-plus":
            return MIN_PLUS
        return None

    @property
    def name(self) -> str:
        if self.kind == "deformed":
            return f"deformed:h={self.h!r}"
        return self.kind

    def __str__(self):
        return self.name

    # -- neutral elements ----------------------------------------------------

    @property
    def zero(self) -> Element:
        if self.is_interval:
            z = self.base.zero
            return Interval(z, z)
        return _ZERO[self.kind]

    @property
    def one(self) -> Element:
        return Interval(0.0, 0.0) if self.is_interval else _ONE[self.kind]

    # -- carrier -------------------------------------------------------------

    def contains(self, x) -> bool:
        kind = self.kind
        if self.is_interval:
            if not isinstance(x, tuple) or len(x) != 2:
                return False
            base = self.base
            lo, hi = x
            if not (base.contains(lo) and base.contains(hi)):
                return False
            return lo <= hi if kind == "interval-max-plus" else lo >= hi
        if not _is_real(x):
            return False
        if kind in ("max-plus", "deformed"):
            return x != INF
        if kind == "min-plus":
            return x != NEG_INF
        if kind == "max-min":
            return True
        return math.isfinite(x)  # field

    def coerce(self, x) -> Element:
        """Return ``x`` as a canonical element (float or Interval) or raise DomainError.

        Interval kinds also accept a bare scalar, read as a degenerate interval.
        """
        if self.is_interval:
            if _is_real(x):
                x = (x, x)
            if isinstance(x, (tuple, list)) and len(x) == 2 and all(_is_real(v) for v in x):
                x = Interval(float(x[0]), float(x[1]))
        elif _is_real(x):
            x = float(x)
        if not self.contains(x):
            raise DomainError(f"{x!r} is not in the carrier of {self.name}")
        return x

    # -- checked operations --------------------------------------------------

    def add(self, a, b) -> Element:
        return self.raw_add(self.coerce(a), self.coerce(b))

    def mul(self, a, b) -> Element:
        return self.raw_mul(self.coerce(a), self.coerce(b))

    def leq(self, a, b) -> bool:
        """Standard order: ``a <= b`` iff ``a (+) b == b``."""
        if not self.idempotent:
            raise UnsupportedOperation(f"{self.name} is not idempotent; it has no standard order")
        return approx_equal(self.add(a, b), self.coerce(b))

    def star(self, a) -> Element:
        """Scalar closure ``1 (+) a (+) a^2 (+) ...``."""
        a = self.coerce(a)
        kind = self.kind
        if kind == "field":
            if a == 1.0:
                raise StarUndefined("1/(1-a) undefined at a = 1")
            return 1.0 / (1.0 - a)
        if kind == "deformed":
            # image of the geometric series under w = h ln u
            if a == NEG_INF:
                return 0.0
            gap = -math.expm1(a / self.h)  # 1 - e^(a/h)
            if a >= 0 or gap <= 0:
                raise StarUndefined(f"series diverges for a = {a!r} under {self.name}")
            return -self.h * math.log(gap)
        one = self.one
        if not approx_equal(self.raw_add(one, a), one):
            raise StarUndefined(f"closure of {a!r} leaves the carrier of {self.name}")
        return one

    # -- unchecked operations (inputs assumed in the carrier) ----------------

    def raw_add(self, a, b):
        return _ADD[self.kind](self, a, b)

    def raw_mul(self, a, b):
        return _MUL[self.kind](self, a, b)


_ZERO = {"max-plus": NEG_INF, "min-plus": INF, "max-min": NEG_INF, "field": 0.0, "deformed": NEG_INF}
_ONE = {"max-plus": 0.0, "min-plus": 0.0, "max-min": INF, "field": 1.0, "deformed": 0.0}


def _plus_absorbing(zero):
    def mul(s, a, b):
        if a == zero or b == zero:
            return zero
        return a + b
    return mul


def _interval_add(s, a, b):
    add = s.base.raw_add
    return Interval(add(a.lo, b.lo), add(a.hi, b.hi))


def _interval_mul(s, a, b):
    zero = s.zero
    if a == zero or b == zero:
        return zero
    mul = s.base.raw_mul
    return Interval(mul(a.lo, b.lo), mul(a.hi, b.hi))


_ADD = {
    "max-plus": lambda s, a, b: a if a >= b else b,
    "min-plus": lambda s, a, b: a if a <= b else b,
    "max-min": lambda s, a, b: a if a >= b else b,
    "field": lambda s, a, b: a + b,
    "deformed": lambda s, a, b: deformed_add(a, b, s.h),
    "interval-max-plus": _interval_add,
    "interval-min-plus": _interval_add,
}

_MUL = {
    "max-plus": _plus_absorbing(NEG_INF),
    "min-plus": _plus_absorbing(INF),
    "max-min": lambda s, a, b: a if a <= b else b,
    "field": lambda s, a, b: a * b,
    "deformed": _plus_absorbing(NEG_INF),
    "interval-max-plus": _interval_mul,
    "interval-min-plus": _interval_mul,
}

MAX_PLUS = Semiring("max-plus")
MIN_PLUS = Semiring("min-plus")
MAX_MIN = Semiring("max-min")
FIELD = Semiring("field")
INTERVAL_MAX_PLUS = Semiring("interval-max-plus")
INTERVAL_MIN_PLUS = Semiring("interval-min-plus")


def deformed(h: float) -> Semiring:
    return Semiring("deformed", h)


def parse_semiring(name: str) -> Semiring:
    """Inverse of :attr:`Semiring.name` (``max-plus``, ``deformed:h=0.1``, ...)."""
    name = name.strip()
    if name.startswith("deformed:"):
        param = name[len("deformed:"):]
        if not param.startswith("h="):
            raise DomainError(f"expected deformed:h=<float>, got {name!r}")
        try:
            h = float(param[2:])
        except ValueError:
            raise DomainError(f"bad h in {name!r}") from None
        return deformed(h)
    if name == "deformed":
        raise DomainError("deformed semiring needs a parameter: deformed:h=<float>")
    return Semiring(name)


# -- functional interface ----------------------------------------------------


def constants(s: Semiring) -> tuple[Element, Element]:
    """Return ``(zero, one)`` of ``s``."""
    return s.zero, s.one


def add(s: Semiring, a, b) -> Element:
    return s.add(a, b)


def mul(s: Semiring, a, b) -> Element:
    return s.mul(a, b)


def leq(s: Semiring, a, b) -> bool:
    return s.leq(a, b)


def star(s: Semiring, a) -> Element:
    return s.star(a)


def approx_equal(a, b, abs_tol: float = ABS_TOL, rel_tol: float = REL_TOL) -> bool:
    """Equality up to the package tolerance; infinities compare exactly.

    Works on scalars and on intervals (componentwise).
    """
    if isinstance(a, tuple) or isinstance(b, tuple):
        if not (isinstance(a, tuple) and isinstance(b, tuple)) or len(a) != len(b):
            return False
        return all(approx_equal(x, y, abs_tol, rel_tol) for x, y in zip(a, b))
    if math.isinf(a) or math.isinf(b):
        return a == b
    return math.isclose(a, b, rel_tol=rel_tol, abs_tol=abs_tol)


def dequantize(u: float, h: float) -> float:
    """Map ``u >= 0`` to ``h ln u``, sending 0 to ``-inf``."""
    if not _is_real(h) or not (0 < h < INF):
        raise DomainError(f"h must be a finite positive real, got {h!r}")
    if not _is_real(u) or u < 0 or u == INF:
        raise DomainError(f"dequantize needs a finite u >= 0, got {u!r}")
    if u == 0:
        return NEG_INF
    return h * math.log(u)


def deformed_add(w1: float, w2: float, h: float) -> float:
    """``h ln(exp(w1/h) + exp(w2/h))`` evaluated without overflow."""
    if not _is_real(h) or not (0 < h < INF):
        raise DomainError(f"h must be a finite positive real, got {h!r}")
    for w in (w1, w2):
        if not _is_real(w) or w == INF:
            raise DomainError(f"{w!r} is not in R u {{-inf}}")
    if w1 == NEG_INF:
        return float(w2)
    if w2 == NEG_INF:
        return float(w1)
    hi, lo = (w1, w2) if w1 >= w2 else (w2, w1)
    return hi + h * math.log1p(math.exp((lo - hi) / h))


def classical_interval_ops(a, b) -> tuple[Interval, Interval]:
    """Traditional interval sum and product, for contrast with the idempotent kinds."""
    a = Interval(float(a[0]), float(a[1]))
    b = Interval(float(b[0]), float(b[1]))
    for iv in (a, b):
        if not (math.isfinite(iv.lo) and math.isfinite(iv.hi) and iv.lo <= iv.hi):
            raise DomainError(f"not a real interval: {iv!r}")
    products = [a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi]
    return Interval(a.lo + b.lo, a.hi + b.hi), Interval(min(products), max(products))
