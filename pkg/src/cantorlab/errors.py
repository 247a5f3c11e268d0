"""Exceptions shared across the package."""


class InvalidInputError(ValueError):
    """An argument lies outside an operation's domain."""


class UndecidableError(RuntimeError):
    """A point query on a Cantor set did not resolve within its depth cap.

    Raised instead of returning an approximate answer: the query point sits
    so deep inside the construction that deciding membership/successorship
    would require descending past the cap.
    """

    def __init__(self, message: str, *, scale=None, depth: int | None = None):
        super().__init__(message)
        self.scale = scale
        self.depth = depth
