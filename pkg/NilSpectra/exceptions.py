class NilSpectraError(Exception):
    """Base class of every error raised by NilSpectra."""

    category = "error"

    def __init__(self, message):
        super().__init__(message)

    def to_dict(self):
        return {"error": self.category, "message": str(self)}


class InvalidParameterError(NilSpectraError, ValueError):
    category = "invalid-parameter"

    def __init__(self, message, parameter=None):
        super().__init__(message)
        self.parameter = parameter

    def to_dict(self):
        data = super().to_dict()
        if self.parameter is not None:
            data["parameter"] = self.parameter
        return data


class IncompatibleOperandsError(NilSpectraError):
    category = "incompatible-operands"


class UnsupportedStepError(NilSpectraError):
    category = "unsupported-step"

    def __init__(self, message, step):
        super().__init__(message)
        self.step = step


class InvalidChartError(NilSpectraError):
    category = "invalid-chart"

    def __init__(self, message, chart=None):
        super().__init__(message)
        self.chart = chart


class NotAnAutomorphismError(NilSpectraError):
    category = "not-an-automorphism"

    def __init__(self, message, triple):
        super().__init__(message)
        self.triple = triple

    def to_dict(self):
        data = super().to_dict()
        data["triple"] = list(self.triple)
        return data


class DegenerateOrbitError(NilSpectraError):
    category = "degenerate-orbit"


class DegenerateRepresentationError(NilSpectraError):
    category = "degenerate-representation"


class UnsupportedAlgebraError(NilSpectraError):
    category = "unsupported"


class NotHomogeneousError(NilSpectraError):
    category = "not-homogeneous"

    def __init__(self, message, terms):
        super().__init__(message)
        self.terms = terms

    def to_dict(self):
        data = super().to_dict()
        data["terms"] = [str(term) for term in self.terms]
        return data


class UnvalidatedFormError(NilSpectraError):
    category = "unvalidated-form"


class InvalidGridError(NilSpectraError, ValueError):
    category = "invalid-grid"


class VariableMismatchError(NilSpectraError):
    category = "variable-mismatch"


class MismatchedProblemsError(NilSpectraError):
    category = "mismatched-problems"


class TooFewPointsError(NilSpectraError):
    category = "too-few-points"

    def __init__(self, message, count):
        super().__init__(message)
        self.count = count


class ExponentRangeError(NilSpectraError, ValueError):
    category = "out-of-range"


class AlgebraDocumentError(NilSpectraError):
    category = "invalid-document"

    def __init__(self, message, violations):
        super().__init__(message)
        self.violations = violations

    def to_dict(self):
        data = super().to_dict()
        data["violations"] = list(self.violations)
        return data


class ConvergenceWarning(UserWarning):
    def __init__(self, message):
        super().__init__(message)


class QuasiTriangleWarning(UserWarning):
    def __init__(self, message):
        super().__init__(message)
