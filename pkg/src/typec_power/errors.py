"""Exception hierarchy shared across the package."""


class UsageError(ValueError):
    """Bad arguments: table mismatch, out-of-range index, unknown variable."""


class ParseError(UsageError):
    def __init__(self, message, line=1, column=1):
        super().__init__(f"{message} (line {line}, column {column})")
        self.line = line
        self.column = column


class SubstitutionError(ValueError):
    """A negative exponent was mapped to something that is not invertible."""


class EvaluationError(ZeroDivisionError):
    """Zero assigned to a variable that occurs with a negative exponent."""


class InvariantError(RuntimeError):
    """An internal invariant failed (e.g. a result expected to be integral is not).

    Never caused by valid input; it indicates a bug.
    """
