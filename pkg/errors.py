# errors.py
"""
Error types shared by the library, the CLI and the HTTP routes.

Every error knows how it surfaces:
  - http_status : status code used by the blueprints
  - exit_code   : CLI exit status (1 = input error, 2 = result contradicts
                  the expected mathematics or a search came up empty)
"""


class AnalysisError(Exception):
    http_status = 400
    exit_code = 1

    def __init__(self, message, **details):
        super().__init__(message)
        self.message = message
        self.details = details

    def to_dict(self):
        body = {"error": self.message, "kind": type(self).__name__}
        body.update(self.details)
        return body


# ---------- Input errors ----------

class ParseError(AnalysisError):
    pass


class NotAMatroid(AnalysisError):
    pass


class EmptyFamily(AnalysisError):
    pass


class HasLoops(AnalysisError):
    pass


class HasColoops(AnalysisError):
    pass


class InvalidDegree(AnalysisError):
    pass


class DimensionMismatch(AnalysisError):
    pass


class ComplexTooLarge(AnalysisError):
    pass


class InvalidModulus(AnalysisError):
    pass


# ---------- Search / consistency failures ----------

class LsopNotFound(AnalysisError):
    http_status = 422
    exit_code = 2


class WitnessNotFound(AnalysisError):
    http_status = 422
    exit_code = 2


class InconsistentResult(AnalysisError):
    """Two independent computations of the same quantity disagree."""

    http_status = 409
    exit_code = 2
