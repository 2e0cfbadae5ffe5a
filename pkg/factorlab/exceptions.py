"""
Error hierarchy shared by every factorlab app.

Refusals (a subset that is not a factor, a size tuple with no
factorization) are returned as values; these exceptions signal bad input
or a violated precondition.
"""


class FactorLabError(Exception):
    """Base class for all factorlab errors."""


class OrderOutOfRange(FactorLabError):
    def __init__(self, order, limit=64):
        self.order = order
        self.limit = limit
        super().__init__(f"Group order {order} is outside the supported range 1..{limit}")


class NotPrime(FactorLabError):
    def __init__(self, value):
        self.value = value
        super().__init__(f"{value} is not a prime")


class NotAGroup(FactorLabError):
    """A Cayley table violates a group axiom."""

    def __init__(self, reason, triple=None):
        self.reason = reason
        self.triple = triple
        message = f"Not a group: {reason}"
        if triple is not None:
            message += f" at {tuple(triple)}"
        super().__init__(message)


class SpecParseError(FactorLabError):
    def __init__(self, text, position, message):
        self.text = text
        self.position = position
        super().__init__(f"Cannot parse group spec {text!r} at position {position}: {message}")


class SubsetParseError(FactorLabError):
    pass


class TableFileError(FactorLabError):
    pass


class EmptySubset(FactorLabError):
    def __init__(self, operation):
        super().__init__(f"{operation} requires a nonempty subset")


class NotASubgroup(FactorLabError):
    pass


class NotLagrange(FactorLabError):
    def __init__(self, size, order):
        self.size = size
        self.order = order
        super().__init__(f"Size {size} does not divide the group order {order}")


class SizeMismatch(FactorLabError):
    pass


class NotAFactorOfH(FactorLabError):
    pass


class OddOrder(FactorLabError):
    """{e, x} has no complement because x has odd order."""

    def __init__(self, element, order):
        self.element = element
        self.order = order
        super().__init__(f"Element {element} has odd order {order}; {{e, x}} is not a factor")


class NotElementaryAbelian2(FactorLabError):
    pass


class NotElementaryAbelian3(FactorLabError):
    pass


class WrongSize(FactorLabError):
    def __init__(self, expected, actual):
        self.expected = expected
        self.actual = actual
        super().__init__(f"Expected a subset of size {expected}, got {actual}")


class BadParams(FactorLabError):
    def __init__(self, constraint):
        self.constraint = constraint
        super().__init__(f"Bad witness parameters: {constraint}")


class CatalogBoundExceeded(FactorLabError):
    def __init__(self, max_order, bound):
        self.max_order = max_order
        self.bound = bound
        super().__init__(f"max_order {max_order} exceeds the catalog bound {bound}")


class UnsoundCertificate(FactorLabError):
    """A complement or factorization failed re-verification."""
