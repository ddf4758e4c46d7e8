#!/usr/bin/python3


class GlabError(Exception):
    pass


class FieldMismatchError(GlabError, TypeError):
    def __init__(self, message='field mismatch'):
        super().__init__(message)


class DimensionMismatchError(GlabError, ValueError):
    pass


class DegenerateEvaluationError(GlabError, ValueError):
    pass


class NotDecomposableError(GlabError, ValueError):
    def __init__(self, message='not decomposable'):
        super().__init__(message)


class OffDivisorError(GlabError, ValueError):
    def __init__(self, message='not on H_Π'):
        super().__init__(message)


class OutsideChartError(GlabError, ValueError):
    def __init__(self, message='outside chart'):
        super().__init__(message)


class ProjectionUndefinedError(GlabError, ValueError):
    def __init__(self, message='projection undefined on family'):
        super().__init__(message)


class HypothesisViolatedError(GlabError, ValueError):
    def __init__(self, message='hypothesis violated'):
        super().__init__(message)


class WitnessError(GlabError, ValueError):
    pass


class UsageError(GlabError):
    pass


class NotHomogeneousError(GlabError, ValueError):
    pass


class PolyParseError(GlabError, ValueError):
    pass


class FamilyFormatError(GlabError, ValueError):
    pass
