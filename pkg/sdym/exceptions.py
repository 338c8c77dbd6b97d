class SdymError(Exception):
    """Base class for every error raised by the symmetry engine."""


# algebra

class DimensionMismatchError(SdymError):
    pass


class SingularMatrixError(SdymError):
    pass


class NotClosedError(SdymError):
    """A bracket of basis elements falls outside their span."""


class NotTracelessError(SdymError):
    """A Lie basis element has nonzero trace."""


class LinearlyDependentError(SdymError):
    pass


# jetexpr

class ParseError(SdymError):
    """Syntax error in the expression language, with a (start, end) position."""

    def __init__(self, text: str, position: tuple[int, int] | None = None, message: str | None = None):
        self.text = text
        self.position = position
        self.message = message or "syntax error"
        super().__init__(self.message)

    def __str__(self) -> str:
        if self.position is None:
            return self.message
        start, end = self.position
        highlight = " " * start + "^" * max(end - start, 1)
        return f"{self.message} at {start}:\n  {self.text}\n  {highlight}"


class UnknownIdentifierError(ParseError):
    pass


class RewriteLimitError(SdymError):
    """The rewrite step counter tripped; the rewrite system failed to terminate."""


# frechet

class MissingCharacteristicError(SdymError):
    pass


# hierarchy

class LevelOutOfRangeError(SdymError):
    pass


class LevelCapExceededError(SdymError):
    pass


class SeedNotSymmetryError(SdymError):
    pass


# series

class UnresolvedAtomError(SdymError):
    pass


class NonlocalConflictError(SdymError):
    """The two defining relations of a nonlocal atom disagree on a fixture."""

    def __init__(self, name: str, witness: tuple[int, ...]):
        self.name = name
        self.witness = witness
        super().__init__(f"Nonlocal {name} is inconsistent at monomial {witness}")


class SingularSeriesError(SdymError):
    pass
