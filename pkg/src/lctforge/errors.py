"""Exception hierarchy.

``InputError`` covers malformed or inconsistent input (CLI exit status 2);
``MathematicalError`` covers well-formed input on which a computation cannot
succeed (CLI exit status 3).  Every ``MathematicalError`` may carry a
``certificate`` dict explaining the failure.
"""


class LctForgeError(Exception):
    """Base class for all library errors."""


class InputError(LctForgeError, ValueError):
    """Malformed input: dimension mismatch, bad literal, invalid relation..."""


class MathematicalError(LctForgeError):
    def __init__(self, message, certificate=None):
        super().__init__(message)
        self.certificate = dict(certificate or {})


class ThresholdUndefined(MathematicalError):
    """The unit ideal has no finite log-canonical threshold."""


class ReductionStuck(MathematicalError):
    """A chart ideal did not reduce to the normal form ``(x^h y^k, z)``.

    This signals a modelling bug, never a user error.
    """


class InvalidCurveConfiguration(MathematicalError):
    pass


class NotPseudoEffective(MathematicalError):
    pass


class InconsistentMorseInput(MathematicalError):
    pass
