"""Exception types shared across the package.

Data-file problems (ontology, cue lists, lexicons) carry the 1-based line
number of the offending line, both as an attribute and in the message.
"""


class EmodetectError(Exception):
    """Base class for all errors raised by this package."""


class DataFormatError(EmodetectError):
    """A data file violates its format; ``line`` is the 1-based line number."""

    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


class MalformedLineError(DataFormatError):
    """A line does not match the expected syntax."""


class DuplicateNameError(DataFormatError):
    """An ontology node name was declared twice (names are case-insensitive)."""


class DuplicateKeywordError(DataFormatError):
    """A keyword is attached to more than one ontology node."""

    def __init__(self, line: int, keyword: str, first_node: str, second_node: str):
        super().__init__(
            line,
            f"duplicate keyword '{keyword}' in {first_node} and {second_node}",
        )
        self.keyword = keyword
        self.first_node = first_node
        self.second_node = second_node


class DepthExceededError(DataFormatError):
    """A node path has more than three segments."""


class OrphanPathError(DataFormatError):
    """A node's parent path has not been declared on an earlier line."""


class UnknownNodeError(EmodetectError):
    """A referenced node name does not exist in the ontology."""


class UnknownPrimaryError(EmodetectError):
    """A referenced primary class name does not exist in the score table."""


class MismatchedPrimariesError(EmodetectError):
    """Two score tables do not cover the same primary classes."""
