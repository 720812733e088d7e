"""Exception hierarchy shared by all modules."""


class IdemcalcError(Exception):
    pass


class DomainError(IdemcalcError, ValueError):
    """A value lies outside the carrier of its semiring (or outside an op's domain)."""


class UnsupportedOperation(IdemcalcError, TypeError):
    """The operation is not defined for this kind of semiring."""


class DimensionMismatch(IdemcalcError, ValueError):
    pass


class SemiringMismatch(IdemcalcError, ValueError):
    pass


class GridMismatch(IdemcalcError, ValueError):
    pass


class UnknownNode(IdemcalcError, KeyError):
    def __str__(self):
        return f"unknown node: {self.args[0]!r}"


class ParseError(IdemcalcError, ValueError):
    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class AlgebraError(IdemcalcError, ArithmeticError):
    """Base for failures of the algebra itself (closures that do not exist)."""


class StarUndefined(AlgebraError):
    """The series 1 + a + a^2 + ... does not converge to a carrier element."""


class NonStabilizing(AlgebraError):
    """A closure or Bellman iteration has no solution in the carrier.

    ``index`` is the pivot (Gauss-Jordan) or the first still-changing row
    (iterative solvers); ``node`` is filled in when the matrix came from a graph.
    """

    def __init__(self, message, index=None, node=None):
        super().__init__(message)
        self.index = index
        self.node = node

    def __str__(self):
        msg = self.args[0]
        if self.node is not None:
            return f"{msg} (at node {self.node})"
        if self.index is not None:
            return f"{msg} (at index {self.index})"
        return msg
