"""Error taxonomy shared by the library and the command line."""

from typing import Any


class TopologyError(Exception):
    """Base class for all library errors.

    Each subclass carries a stable ``code`` and the process exit code the
    CLI reports for it: 2 for domain errors, 1 for syntax and IO errors.
    """

    code = "topology-error"
    exit_code = 2

    def __init__(self, message: str, **details: Any):
        super().__init__(message)
        self.message = message
        self.details = details

    def to_dict(self) -> dict[str, Any]:
        return {"error": self.code, "message": self.message, "details": self.details}


class PreconditionError(TopologyError, ValueError):
    code = "precondition"


class InvalidDeltaSetError(TopologyError, ValueError):
    code = "invalid-delta-set"

    def __init__(self, report):
        first = report.violations[0] if report.violations else None
        super().__init__(
            f"Delta-set fails validation ({len(report.violations)} violations)",
            first_violation=list(first) if first else None,
        )
        self.report = report


class InvalidMapError(TopologyError, ValueError):
    code = "invalid-map"


class NotAutomorphismError(TopologyError, ValueError):
    code = "not-automorphism"


class GroupMismatchError(TopologyError, ValueError):
    code = "group-mismatch"


class NotFreeError(TopologyError):
    code = "not-free"

    def __init__(self, element: int, dimension: int, simplex: int):
        super().__init__(
            f"Group element {element} fixes {dimension}-simplex {simplex}",
            element=element,
            dimension=dimension,
            simplex=simplex,
        )
        self.element = element
        self.dimension = dimension
        self.simplex = simplex


class NonPrimeParameterError(TopologyError, ValueError):
    code = "non-prime-parameter"

    def __init__(self, index: int, gcd: int):
        super().__init__(
            f"Lens parameter l_{index} shares factor {gcd} with the modulus",
            index=index,
            gcd=gcd,
        )
        self.index = index
        self.gcd = gcd


class SimplexLimitExceededError(TopologyError):
    code = "simplex-limit"

    def __init__(self, predicted: int, limit: int):
        super().__init__(
            f"Construction would create {predicted} simplices (limit {limit})",
            predicted=predicted,
            limit=limit,
        )
        self.predicted = predicted
        self.limit = limit


class ExpressionSyntaxError(TopologyError):
    code = "syntax"
    exit_code = 1

    def __init__(self, line: int, col: int, expected: str):
        super().__init__(
            f"{line}:{col}: expected {expected}",
            line=line,
            col=col,
            expected=expected,
        )
        self.line = line
        self.col = col
        self.expected = expected


class SpaceFileError(TopologyError):
    code = "io"
    exit_code = 1
