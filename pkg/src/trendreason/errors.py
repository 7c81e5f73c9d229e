"""Exception hierarchy shared by all modules."""

from __future__ import annotations


class TrendError(Exception):
    """Base class for every error raised by this package."""


class ModelError(TrendError):
    def __init__(self, violations):
        self.violations = list(violations)
        super().__init__("; ".join(str(v) for v in self.violations) or "invalid model")


class ParseError(ModelError):
    def __init__(self, message: str, line: int, column: int):
        self.message = message
        self.line = line
        self.column = column
        TrendError.__init__(self, f"line {line}, column {column}: {message}")
        self.violations = [self]

    def __str__(self) -> str:
        return f"line {self.line}, column {self.column}: {self.message}"


class OracleCapExceeded(TrendError):
    pass


class EmptyScenarioSet(TrendError):
    pass


class ModelMismatch(TrendError):
    """Scenarios or scenario sets drawn from incompatible variable lists."""


class NoSteadyState(TrendError):
    pass


class FilterError(TrendError):
    """Malformed filter, or one that names an undeclared variable."""


class FilterMatchesNothing(TrendError):
    pass


class MatrixError(TrendError):
    pass


class RemovalExhausted(TrendError):
    def __init__(self, trace):
        self.trace = trace
        super().__init__(
            f"no coefficients left after {len(trace.removals)} removals; model still degenerate"
        )
