"""Exception types shared across the package."""


class DescellError(Exception):
    """Base class for every error raised by this library."""


class DuplicateIdError(DescellError):
    """A cell id is already present in the complex."""


class MissingFaceError(DescellError):
    """A boundary entry references a cell that does not exist."""


class DimensionMismatchError(DescellError):
    """Dimensions of related objects are inconsistent."""


class InvalidComplexError(DescellError):
    """A structurally invalid complex was handed to an operation that
    requires a valid one. Carries the offending validation report."""

    def __init__(self, violations):
        self.violations = list(violations)
        lines = "; ".join(str(v) for v in self.violations[:5])
        super().__init__(f"complex fails validation: {lines}")


class TooLargeError(DescellError):
    """Cell count exceeds the brute-force enumeration bound."""


class MissingCellError(DescellError):
    """A probe table leaves at least one cell without a descriptor."""


class DuplicateEntryError(DescellError):
    """The same cell appears twice in a probe table."""


class ArityMismatchError(DescellError):
    """Descriptor vectors of different lengths were mixed."""


class ForeignCellError(DescellError):
    """A cell id does not belong to the expected complex or subset."""


class EmptyChartError(DescellError):
    """Charts must cover at least one cell."""


class EmptyOverlapError(DescellError):
    """Two charts or regions share no cells, so no transition exists."""


class NonMonotoneThetaError(DescellError):
    """Scenario parameter values must be strictly increasing."""


class MetadataMismatchError(DescellError):
    """Two signatures were built with different settings."""


class StepCountMismatchError(DescellError):
    """Two signatures cover a different number of parameter steps."""
