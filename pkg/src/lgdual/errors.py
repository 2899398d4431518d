"""Exception hierarchy shared by every module."""


class LGDualError(Exception):
    """Base class for all library errors."""


class DimensionError(LGDualError, ValueError):
    pass


class RankError(LGDualError, ValueError):
    pass


class ParseError(LGDualError, ValueError):
    pass


class NotInvariantError(LGDualError, ValueError):
    """The superpotential does not descend to the quotient by the group."""


class PreconditionError(LGDualError, ValueError):
    pass


class EnumerationCapError(LGDualError, RuntimeError):
    """Refusal to enumerate more elements than the configured cap."""

    def __init__(self, required: int, cap: int, what: str = "elements"):
        self.required = required
        self.cap = cap
        super().__init__(f"refusing to enumerate {required} {what}: cap is {cap} (raise --cap to at least {required})")


class InvariantViolation(LGDualError, AssertionError):
    """An internal consistency check failed; indicates a bug or a smuggled invalid object."""


class DomainError(LGDualError, ValueError):
    """Evaluation outside the torus (a zero coordinate)."""
