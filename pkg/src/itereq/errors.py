"""Exception types shared across the package."""


class IllConditionedError(ArithmeticError):
    """A numerical result failed its internal consistency check.

    Raised when a root extraction cannot reproduce the input polynomial
    within tolerance, or when a closed-form coefficient system is singular.
    """


class OrbitEscapeError(ValueError):
    """An iterate of a candidate function left its domain.

    ``index`` is the first iterate (1-based) that fell outside.
    """

    def __init__(self, message: str, index: int):
        super().__init__(message)
        self.index = index
