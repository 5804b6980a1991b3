"""Exception hierarchy shared by all modules."""


class RankredError(Exception):
    """Base class for every error raised by this package."""


class InputError(RankredError, ValueError):
    """Malformed input or parameter out of range."""


class InfeasibleError(RankredError):
    """The instance has no feasible solution (e.g. t > number of edges)."""


class CapExceeded(InputError):
    """An exhaustive solver was asked to enumerate beyond its cap."""


class ParseError(InputError):
    """A text file could not be parsed; ``line`` is 1-based."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class NotMaximumError(InputError):
    """A matching passed as maximum admits an augmenting path."""


class OracleInconsistency(RankredError):
    """Independence oracles behaved in a way no matroid can."""


class StrategyFault(RankredError):
    """A t-edge strategy returned a vertex set inducing fewer than t edges."""


class NotNiceError(InputError):
    """A partial vertex cover is not nice; ``violations`` lists why."""

    def __init__(self, violations: list[str]):
        self.violations = violations
        super().__init__("not nice: " + "; ".join(violations))
