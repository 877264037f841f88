"""Exception types shared across the toolkit."""


class GlexError(Exception):
    """Base class for all toolkit errors."""


class PredicateSyntaxError(GlexError):
    """Malformed predicate text; carries the byte offset of the problem."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (at byte {offset})")
        self.offset = offset


class DuplicateVariable(GlexError):
    """A variable token occurs twice in one predicate."""


class UnknownType(GlexError):
    """A type name is not a node of the hierarchy."""


class DuplicateType(GlexError):
    """A type name is already a node of the hierarchy."""


class BadPath(GlexError):
    """Unknown attribute name in a feature path."""


class ParseError(GlexError):
    """Malformed lexicon document; carries a 1-based line number."""

    def __init__(self, message: str, line: int = 0):
        if line:
            super().__init__(f"line {line}: {message}")
        else:
            super().__init__(message)
        self.line = line


class ValidationFailed(GlexError):
    """A lexicon or entry failed validation; carries the report."""

    def __init__(self, report):
        problems = "; ".join(
            f"{key}/{path}: {msg}" for key, path, msg in report.problems
        )
        super().__init__(f"validation failed: {problems}")
        self.report = report


class DuplicateKey(GlexError):
    """Two records share the same dn / entry key."""


class BadFilter(GlexError):
    """Unsupported search filter syntax."""


class NotFound(GlexError):
    """No entry under the requested key."""


class Forbidden(GlexError):
    """The session role does not permit this operation."""


class AuthFailed(GlexError):
    """Bad credentials or missing/expired session."""


class Conflict(GlexError):
    """Compare-and-set write against a stale entry hash."""


class UnknownWord(GlexError):
    """Surface form matches no lemma, with or without plural stripping."""


class NoRelation(GlexError):
    """No qualia probe links the head to the modifier."""

    def __init__(self, reasons):
        super().__init__("no relation detected: " + "; ".join(reasons))
        self.reasons = tuple(reasons)


class BadTemplate(GlexError):
    """Sentence template does not have exactly three %s slots."""


class ConnectFailed(GlexError):
    """Could not reach the server or open the lexicon file."""
