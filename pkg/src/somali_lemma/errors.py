"""Exception types raised while loading lemmatizer resources."""


class LemmaError(Exception):
    """Base class for every error this package raises on bad input."""


class LexiconFormatError(LemmaError, ValueError):
    def __init__(self, message, path=None, line=None, column=None):
        self.path = path
        self.line = line
        self.column = column
        where = ""
        if path is not None:
            where = str(path)
            if line is not None:
                where += f":{line}"
                if column is not None:
                    where += f":{column}"
            where += ": "
        super().__init__(where + message)


class EmptyLexiconError(LexiconFormatError):
    pass


class LexiconValidationError(LemmaError, ValueError):
    """Raised when an operation requires a lexicon free of certain violations."""

    def __init__(self, violations):
        self.violations = list(violations)
        shown = ", ".join(str(v) for v in self.violations[:5])
        more = "" if len(self.violations) <= 5 else f" (+{len(self.violations) - 5} more)"
        super().__init__(f"lexicon has blocking violations: {shown}{more}")


class RuleFormatError(LemmaError, ValueError):
    def __init__(self, message, line=None, path=None):
        self.line = line
        self.path = path
        prefix = f"{path}:" if path is not None else "line "
        if line is not None:
            message = f"{prefix}{line}: {message}"
        super().__init__(message)


class DuplicateRuleError(RuleFormatError):
    pass


class CorpusError(LemmaError):
    pass


class MissingDocumentError(CorpusError, FileNotFoundError):
    pass


class DuplicateDocumentError(CorpusError, ValueError):
    pass


class UnknownCategoryError(CorpusError, ValueError):
    pass


class UndefinedAccuracyError(LemmaError, ValueError):
    """A document with no content words has no accuracy."""
