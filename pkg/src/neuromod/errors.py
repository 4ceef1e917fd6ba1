"""Error types shared across the package.

Exit-code / HTTP mapping (see cli and service):
ValidationError -> exit 2 / HTTP 400 (422 for the w21=0 curve precondition),
DivergenceError -> exit 3 / HTTP 500, I/O errors -> exit 4.
"""


class NeuromodError(Exception):
    pass


class ValidationError(NeuromodError):
    """Bad parameter, bad scenario file, bad request."""

    def __init__(self, message, field=None):
        super().__init__(message)
        self.field = field


class DomainError(ValidationError):
    """Non-finite input where a finite activation is required."""


class DivergenceError(NeuromodError):
    """An orbit left the |x| <= 1e12 guard.

    step is the number of map applications performed when the guard
    tripped (first application = step 1).
    """

    def __init__(self, step):
        super().__init__(f"orbit diverged at step {step}")
        self.step = step
