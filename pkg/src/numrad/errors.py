"""
Exception hierarchy shared by every numrad package.

The CLI maps these onto exit codes: parse and usage problems exit 2,
applicability and domain problems exit 3, numerical failures exit 1.
"""


class NumradError(Exception):
    """Root of every error raised by numrad."""


class InvalidInputError(NumradError, ValueError):
    """Rejected input: non-square, non-finite, mismatched dimensions, bad tolerance."""


class SingularMatrixError(NumradError, ArithmeticError):
    def __init__(self, message: str, pivot: float, index: int) -> None:
        super().__init__(message)
        self.pivot = pivot
        self.index = index


class ConvergenceError(NumradError, RuntimeError):
    def __init__(self, message: str, achieved: float) -> None:
        super().__init__(message)
        self.achieved = achieved


class DomainError(NumradError, ValueError):
    """The matrix lies outside the class an operation is defined on (e.g. not accretive)."""


class ApplicabilityError(NumradError):
    def __init__(self, bound_id: str, predicate: str, detail: str = "") -> None:
        message = f"{bound_id}: predicate '{predicate}' failed"
        if detail:
            message += f" ({detail})"
        super().__init__(message)
        self.bound_id = bound_id
        self.predicate = predicate
        self.detail = detail


class NotConeConfinedError(ApplicabilityError):
    def __init__(self, alpha_min: float, alpha_max: float) -> None:
        super().__init__(
            "cone_fit",
            "cone",
            f"argument range [{alpha_min:.6g}, {alpha_max:.6g}] straddles 0",
        )
        self.alpha_min = alpha_min
        self.alpha_max = alpha_max


class ParseError(NumradError, ValueError):
    def __init__(self, source: str, location: str, message: str) -> None:
        super().__init__(f"{source}: {location}: {message}")
        self.source = source
        self.location = location
