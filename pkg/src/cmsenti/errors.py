"""Exception hierarchy. Everything raised for bad input data derives from DataError."""


class CmSentiError(Exception):
    pass


class DataError(CmSentiError, ValueError):
    """Bad input data (files, labels, tokens). The CLI maps these to exit code 2."""


class LexiconError(DataError):
    pass


class CorpusError(DataError):
    """Parse failure. `problems` holds (line_number, message) pairs when aggregated."""

    def __init__(self, message, problems=()):
        super().__init__(message)
        self.problems = list(problems)


class TrainingError(DataError):
    pass


class ModelFormatError(DataError):
    pass


class EvaluationError(DataError):
    pass
