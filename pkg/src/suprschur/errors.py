"""Exception types shared across the package."""


class InvalidParameterError(ValueError):
    """An argument is outside the documented domain of an operation."""


class MalformedInputError(ValueError):
    """Structured input (tableau, word, order) fails its invariants."""


class ResourceLimitError(RuntimeError):
    """A computation would exceed the configured monomial budget."""

    def __init__(self, message: str, required: int | None = None):
        super().__init__(message)
        self.required = required


class NotSymmetricError(ValueError):
    """A quasisymmetric vector that should be symmetric is not."""


class VerificationFailureError(RuntimeError):
    """Two routes that should agree produced different answers."""


class ConstructionFailureError(RuntimeError):
    """A combinatorial construction hit an input violating its axioms."""

    def __init__(self, message: str, word=None, position=None):
        super().__init__(message)
        self.word = word
        self.position = position
