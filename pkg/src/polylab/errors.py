"""Exception hierarchy shared by all modules."""


class PolylabError(Exception):
    """Base class for every error raised by polylab."""


class NoRoot(PolylabError, ArithmeticError):
    pass


class DegenerateInput(PolylabError, ValueError):
    pass


class DegenerateFrame(DegenerateInput):
    pass


class NoCubic(PolylabError, ValueError):
    pass


class SingularPoint(PolylabError, ValueError):
    pass


class NotFound(PolylabError, LookupError):
    pass


class Degenerate(DegenerateInput):
    pass


class DomainError(PolylabError, ValueError):
    pass


class NotAUnit(PolylabError, ValueError):
    pass


class InvalidProgression(PolylabError, ValueError):
    pass


class NotCollinear(PolylabError, ValueError):
    def __init__(self, label, message=None):
        self.label = label
        super().__init__(message or f"double points for label {label} are not collinear")


class DegeneratePentagon(DegenerateInput):
    pass


class BasePoint(PolylabError, ValueError):
    pass


class Indeterminate(PolylabError, ValueError):
    pass


class NotCoprime(PolylabError, ValueError):
    pass


class OperatorFailure(PolylabError, RuntimeError):
    def __init__(self, index, cause):
        self.index = index
        self.cause = cause
        super().__init__(f"operator failed on iterate {index}: {cause!r}")
