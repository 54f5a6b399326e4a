"""Exception types shared across the package.

The distinctions matter to callers: the command line maps FormatError,
TheoremViolationError and CapExceededError to dedicated exit codes, and
tests tell ZeroModuleError apart from generic misuse.
"""


class NMismatchError(ValueError):
    """Two objects over different ground sets [n] met in one operation."""


class ZeroModuleError(ValueError):
    """An operation that needs a nonzero module got the zero module."""


class NonSquarefreeError(ValueError):
    """Squarefree input was required (ideal generators or the module itself)."""


class InternalCheckError(AssertionError):
    """Two internal computation routes disagreed; indicates a bug, not bad input."""


class FormatError(ValueError):
    """An instance or report file failed to parse; message names line/field."""


class TheoremViolationError(AssertionError):
    """A proved identity failed on an instance; indicates a bug, not a finding."""


class CapExceededError(ValueError):
    """The requested computation exceeds the configured size cap."""
