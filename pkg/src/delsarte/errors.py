"""Exception hierarchy shared by every module of the package."""


class DelsarteError(Exception):
    """Base class for all package errors."""


class DimensionError(DelsarteError, ValueError):
    """A matrix has the wrong shape for the requested operation."""


class DomainError(DelsarteError, ValueError):
    """An argument lies outside the domain of an operation."""


class ConstructionError(DelsarteError, ValueError):
    """A threefold cannot be built from the given data."""


class IntegrityError(DelsarteError):
    """Input passed validation but violates a structural assumption."""


class CapacityError(DelsarteError):
    """An enumeration would exceed its size cap."""

    def __init__(self, message, predicted):
        super().__init__(message)
        self.predicted = predicted


class AtlasFormatError(DelsarteError, ValueError):
    """A persisted atlas or threefold document is malformed."""
