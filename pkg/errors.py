"""Exception hierarchy for the hamforms toolkit."""

from pathlib import Path
from typing import Optional, Union


class HamFormsError(Exception):
    """Base class for every error raised by the toolkit."""


class LocatedError(HamFormsError):
    """Error tied to a file and, optionally, a line in it."""

    def __init__(self, message: str, path: Optional[Union[str, Path]] = None,
                 line: Optional[int] = None):
        self.path = str(path) if path is not None else None
        self.line = line
        location = ''
        if self.path is not None:
            location = self.path if line is None else f"{self.path}:{line}"
            location += ': '
        super().__init__(f"{location}{message}")


class DimensionMismatchError(HamFormsError, ValueError):
    """Operands have incompatible shapes or variable orders."""


class ParseError(LocatedError, ValueError):
    """A matrix or Gröbner listing could not be parsed."""


class FixtureError(LocatedError):
    """Fixture files are missing, malformed or fail their checksum."""


class ContainmentError(HamFormsError):
    """The image ideal is not contained in the kernel ideal."""


class GradingError(HamFormsError):
    """A cochain left the graded Sp-basic subspace it should live in."""


class UsageError(HamFormsError):
    """Command-line arguments do not describe a valid run."""


class VerificationMismatch(HamFormsError):
    """A recomputed object disagrees with its recorded expectation."""

    def __init__(self, name: str, expected: object, actual: object):
        self.name = name
        self.expected = expected
        self.actual = actual
        super().__init__(f"{name}: expected {expected}, got {actual}")
