"""Exception hierarchy shared by every edgecode module."""


class EdgeCodeError(Exception):
    """Base class for all errors raised by this package."""


class BadParams(EdgeCodeError, ValueError):
    pass


class NotAPrimePower(BadParams):
    pass


class Unsupported(BadParams):
    pass


class DivisionByZero(EdgeCodeError, ZeroDivisionError):
    pass


class InvalidVertex(BadParams):
    pass


class DuplicateEdge(BadParams):
    pass


class DuplicateLabels(BadParams):
    pass


class FullEdge(BadParams):
    """An edge equals the whole vertex set, so its complement would be empty."""


class NotUniform(BadParams):
    pass


class ParseError(BadParams):
    def __init__(self, message, locus=None):
        self.locus = locus
        super().__init__(f"{locus}: {message}" if locus else message)


class DegenerateField(BadParams):
    """Codes need q >= 3; over F_2 the torus is a single point."""


class LengthMismatch(BadParams):
    pass


class ZeroPolynomial(BadParams):
    pass


class EmbeddingMissing(BadParams):
    pass


class NotCovered(EdgeCodeError):
    """Parameters fall outside every branch of the closed form."""


class ResourceLimit(EdgeCodeError):
    """A computation was refused because it exceeds a configured limit."""

    def __init__(self, message, required, limit):
        self.required = required
        self.limit = limit
        super().__init__(f"{message}: requires {required}, limit is {limit}")


class TooLarge(ResourceLimit):
    pass


class SearchTooLarge(ResourceLimit):
    pass
