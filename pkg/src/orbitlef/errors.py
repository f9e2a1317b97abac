"""Exception types shared across orbitlef."""


class OrbitLefError(Exception):
    """Base class for all orbitlef errors."""


class InvalidRank(OrbitLefError, ValueError):
    pass


class NotTraceless(OrbitLefError, ValueError):
    pass


class NotDominant(OrbitLefError, ValueError):
    """Raised when a characteristic element is not weakly decreasing."""


class NotRegular(OrbitLefError, ValueError):
    pass


class NotCritical(OrbitLefError, ValueError):
    pass


class DimensionMismatch(OrbitLefError, ValueError):
    pass


class NotHomogeneous(OrbitLefError, ValueError):
    pass


class VariableClash(OrbitLefError, ValueError):
    """Raised when a homogenizing variable already exists in the ring."""


class ParseError(OrbitLefError, ValueError):
    pass


class UnknownEntries(OrbitLefError, ValueError):
    """Raised when an operation needs a fully known Hodge diamond."""


class BudgetExceeded(OrbitLefError):
    """A computation ran past its wall-clock budget.

    ``partial`` holds whatever state was reached (see
    :class:`orbitlef.polyalg.groebner.PartialResult`).
    """

    def __init__(self, message, partial=None):
        super().__init__(message)
        self.partial = partial
