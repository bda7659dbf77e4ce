"""Exceptions raised by the pure computation layer."""


class DomainError(ValueError):
    """Input outside the mathematical domain of an operation."""


class InsufficientData(ValueError):
    """A season window could not be filled from the available records."""

    def __init__(self, missing_dates):
        self.missing_dates = list(missing_dates)
        dates = ", ".join(str(d) for d in self.missing_dates)
        super().__init__(f"records missing for dates: {dates}")


class MismatchedSeries(ValueError):
    """Series passed to a comparison do not share attribute, unit or length."""


class EmptySeries(ValueError):
    """Operation requires at least one non-missing value."""


class UnknownAttribute(KeyError):
    """Attribute id not present in the catalog."""
