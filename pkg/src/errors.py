
from typing import Optional


class ToolkitError(ValueError):
    """Base class for every domain error raised by the toolkit."""


class ConsistencyError(ToolkitError):
    """An internal postcondition failed."""


# -- arrangement files -------------------------------------------------------

class ArrangementParseError(ToolkitError):
    def __init__(self, message: str, line_no: Optional[int] = None, line: str = ""):
        self.line_no = line_no
        self.line = line
        where = f"line {line_no}: " if line_no is not None else ""
        super().__init__(f"{where}{message}" + (f" ({line.strip()!r})" if line.strip() else ""))


class MalformedLineError(ArrangementParseError):
    pass


class MalformedRationalError(ArrangementParseError):
    pass


class ZeroNormalError(ArrangementParseError):
    pass


class DuplicateHyperplaneError(ArrangementParseError):
    pass


class DimensionMismatchError(ArrangementParseError):
    pass


class ArrangementError(ToolkitError):
    pass


# -- cohomology classes ------------------------------------------------------

class GeneratorIndexError(ToolkitError):
    pass


class DegreeError(ToolkitError):
    pass


class RingMismatchError(ToolkitError):
    pass


class ClassSyntaxError(ToolkitError):
    pass


# -- representations ---------------------------------------------------------

class RepresentationError(ToolkitError):
    pass


class RepParseError(RepresentationError):
    def __init__(self, message: str, line_no: Optional[int] = None):
        self.line_no = line_no
        where = f"line {line_no}: " if line_no is not None else ""
        super().__init__(f"{where}{message}")


# -- braids ------------------------------------------------------------------

class BraidWordError(ToolkitError):
    pass


class NonUnitError(ToolkitError):
    pass


class ConfigurationError(ToolkitError):
    pass


class PermutationError(ToolkitError):
    pass


class TripleError(ToolkitError):
    pass


class ExactValueError(ToolkitError):
    """A rational or Gaussian rational could not be parsed."""


class InputFileError(ToolkitError):
    """An input file could not be found or read."""
