"""Exception hierarchy shared across the package."""


class DomainError(ValueError):
    """An operation was called outside its mathematical domain."""


class AlgebraMismatchError(TypeError):
    """Two operands live over different coefficient algebras."""


class CapabilityError(RuntimeError):
    """A configured desk-scale bound (weight, cobar level, cap) was exceeded."""


class ExpressionError(ValueError):
    """Syntax or semantic error in a textual expression.

    Carries the 1-based column at which the problem was detected.
    """

    def __init__(self, message, column):
        super().__init__("%s at column %d" % (message, column))
        self.message = message
        self.column = column
