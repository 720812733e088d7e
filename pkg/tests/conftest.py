import math
import random

import pytest
from hypothesis import strategies as st

from idemcalc.semirings import (
    FIELD,
    INTERVAL_MAX_PLUS,
    INTERVAL_MIN_PLUS,
    MAX_MIN,
    MAX_PLUS,
    MIN_PLUS,
    Interval,
    deformed,
)

INF = math.inf

ALL_SEMIRINGS = [
    MAX_PLUS,
    MIN_PLUS,
    MAX_MIN,
    FIELD,
    deformed(0.1),
    INTERVAL_MAX_PLUS,
    INTERVAL_MIN_PLUS,
]
IDEMPOTENT = [s for s in ALL_SEMIRINGS if s.idempotent]

# -- hypothesis strategies ---------------------------------------------------

_ties = st.integers(-5, 5).map(float)
_finite = st.one_of(_ties, st.floats(-10, 10, allow_nan=False, allow_infinity=False))


def elements(s):
    kind = s.kind
    if kind in ("max-plus", "deformed"):
        return st.one_of(_finite, st.just(-INF))
    if kind == "min-plus":
        return st.one_of(_finite, st.just(INF))
    if kind == "max-min":
        return st.one_of(_finite, st.just(INF), st.just(-INF))
    if kind == "field":
        return _finite
    base = s.base
    descending = kind == "interval-min-plus"

    def order(pair):
        lo, hi = sorted(pair, reverse=descending)
        return Interval(lo, hi)

    return st.one_of(st.just(s.zero), st.tuples(elements(base), elements(base)).map(order))


# -- acceptance reporting ----------------------------------------------------

ACCEPTANCE_LINES = []


@pytest.fixture
def report():
    def _report(criterion, passed, detail=""):
        ACCEPTANCE_LINES.append(f"[{'PASS' if passed else 'FAIL'}] {criterion}: {detail}")
        return passed
    return _report


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture
def rng():
    return random.Random(20261018)
