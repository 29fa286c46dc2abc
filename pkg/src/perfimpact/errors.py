"""Exception hierarchy shared by every pipeline stage."""


class PerfImpactError(Exception):
    """Base class for operational errors surfaced by the CLI."""


class ParseError(PerfImpactError):
    def __init__(self, message: str, line: int, column: int, path: str = "<string>"):
        super().__init__(f"{path}:{line}:{column}: {message}")
        self.line = line
        self.column = column
        self.path = path


class EmptyFile(PerfImpactError):
    pass


class EmptyCorpus(PerfImpactError):
    pass


class DegenerateVocabulary(UserWarning):
    pass


class DirtyWorkingTree(PerfImpactError):
    pass


class UnknownSnapshot(PerfImpactError):
    pass


class Timeout(PerfImpactError):
    pass


class MalformedReport(UserWarning):
    pass


class ConfigError(PerfImpactError):
    pass


class MissingTiming(PerfImpactError):
    pass


class EmptySnapshot(UserWarning):
    pass


class SchemaMismatch(PerfImpactError):
    pass


class TooFewRows(PerfImpactError):
    pass


class DimensionMismatch(PerfImpactError):
    pass


class NonFiniteInput(PerfImpactError):
    pass


class LengthMismatch(PerfImpactError):
    pass


class FoldFitError(PerfImpactError):
    def __init__(self, fold: int, cause: Exception):
        super().__init__(f"fold {fold}: {type(cause).__name__}: {cause}")
        self.fold = fold
        self.cause = cause


class EmptyReport(PerfImpactError):
    pass
