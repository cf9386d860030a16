"""Exception hierarchy shared across the package."""


class HalqaError(Exception):
    """Base class for all errors raised by this package."""


class EmptyWord(HalqaError):
    """An operation that requires a non-empty word received an empty one."""


class MalformedQuestion(HalqaError):
    """The question cannot be parsed into a nominal or verbal structure."""


class EmptyCorpus(HalqaError):
    """No document in the corpus yielded an indexable paragraph."""


class LexiconParseError(HalqaError):
    """A lexicon/thesaurus/questions file is malformed.

    Carries the offending path and 1-based line number.
    """

    def __init__(self, message: str, path=None, line: int | None = None):
        self.path = path
        self.line = line
        where = ""
        if path is not None:
            where = f"{path}:"
            if line is not None:
                where += f"{line}:"
            where += " "
        super().__init__(where + message)


class ThesaurusConflict(HalqaError):
    """A word is listed as both synonym and antonym of the same key."""
