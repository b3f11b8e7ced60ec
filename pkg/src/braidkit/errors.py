"""Exception types shared across the package."""


class BraidError(ValueError):
    """Domain error: bad input or an operation undefined for its arguments."""


class ParseError(BraidError):
    pass


class ResourceCapExceeded(RuntimeError):
    """A configured enumeration or recursion budget was exhausted."""

    def __init__(self, what: str, cap: int):
        super().__init__(f"{what} exceeded cap {cap}")
        self.what = what
        self.cap = cap
