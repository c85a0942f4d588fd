"""
Exception hierarchy for mayatupi.

Verifiers never raise for a wrong certificate (they return a Verdict); these
exceptions signal bad input, exceeded caps, or broken internal invariants.
"""


class MayaTupiError(Exception):
    """Base class for every error raised by the package"""

    exit_code = 2


class GraphFormatError(MayaTupiError):
    """Malformed graph6 or edge-list input"""

    def __init__(self, message, offset=None):
        self.offset = offset
        if offset is not None:
            message = f"{message} (at offset {offset})"
        super().__init__(message)


class SizeLimitError(MayaTupiError):
    """An operation was asked to handle a graph above its order cap"""

    exit_code = 3

    def __init__(self, what, order, cap):
        self.what = what
        self.order = order
        self.cap = cap
        super().__init__(f"{what}: order {order} exceeds cap {cap}")


class PromiseViolation(MayaTupiError):
    """Input lies outside the class a restricted recognizer is promised"""

    exit_code = 3

    def __init__(self, message, certificate=None):
        self.certificate = certificate
        super().__init__(message)


class BudgetExceeded(MayaTupiError):
    exit_code = 3


class CatalogError(MayaTupiError):
    """A catalog failed its transcription, dedup or minimality gate"""


class CertificateError(MayaTupiError):
    """Certificate document or input partition is structurally unusable"""


class RecognitionError(MayaTupiError):
    """Internal inconsistency that no verification gate could repair"""

    exit_code = 3
