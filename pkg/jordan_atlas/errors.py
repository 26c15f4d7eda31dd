"""Exception hierarchy shared by every module of the atlas.

Validation problems are usually returned as lists of strings; the classes
below are raised when an operation cannot produce a value at all.
"""


class AtlasError(Exception):
    """Base class for every error raised on purpose by this package."""

    # Exit status used by the CLI when this error reaches the top.
    exit_code = 3

    def to_dict(self) -> dict:
        return {"error": type(self).__name__, "detail": str(self)}


class ValidationError(AtlasError):
    exit_code = 2


class ShapeError(AtlasError):
    pass


class DegenerateScalar(AtlasError, ZeroDivisionError):
    pass


class SingularMatrix(AtlasError):
    pass


class NotSymmetric(AtlasError):
    pass


class NotSkew(AtlasError):
    pass


class NoIdentity(AtlasError):
    pass


class Unrecognized(AtlasError):
    pass


class EnvelopeNotSemisimple(AtlasError):
    pass


class MismatchedAlgebra(AtlasError):
    pass


class DegenerateSeed(AtlasError):
    pass


class InvariantViolation(AtlasError):
    """A builder produced something that fails its own postcondition."""


class ParseError(ValidationError):
    pass


class AmbientMismatch(ValidationError):
    pass


class UnsupportedAmbient(ValidationError):
    pass


class SpecInvalid(ValidationError):
    def __init__(self, violations, message=None):
        self.violations = list(violations)
        super().__init__(message or "; ".join(self.violations) or "invalid spec")

    def to_dict(self) -> dict:
        payload = super().to_dict()
        payload["violations"] = self.violations
        return payload


class EmbeddingUnavailable(SpecInvalid):
    """The spin case analysis rules the requested embedding out."""


class NotInAmbient(ValidationError):
    pass
