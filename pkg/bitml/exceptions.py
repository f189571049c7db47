# -*- coding: utf-8 -*-

"""Collection of errors raised by the toolchain"""


class BitmlException(Exception):
    """Base exception class for unknown errors"""

    title = "Unknown error"
    exit_code = 70
    source = None

    def __init__(
        self, detail, source=None, title=None, exit_code=None, code=None, meta=None
    ):
        """Initialize a bitml exception

        :param str detail: the detail of the error
        :param dict source: where the error comes from (file position, template name...)
        """
        super(BitmlException, self).__init__(detail)
        self.detail = detail
        if source is not None:
            self.source = source
        self.code = code
        self.meta = meta or {}
        if title is not None:
            self.title = title
        if exit_code is not None:
            self.exit_code = exit_code

    def to_dict(self):
        """Return values of each populated field of the error"""
        error_dict = {}
        for field in ("exit_code", "source", "title", "detail", "code", "meta"):
            if getattr(self, field, None):
                error_dict.update({field: getattr(self, field)})

        return error_dict


class ParseError(BitmlException):
    """Lexical or grammatical error in a contract, strategy or query"""

    title = "Parse error"
    exit_code = 1

    def __init__(self, detail, line=1, column=1, expected=None, **kwargs):
        kwargs.setdefault("source", {"line": line, "column": column})
        if expected is not None:
            kwargs.setdefault("meta", {"expected": expected})
        super(ParseError, self).__init__(detail, **kwargs)
        self.line = line
        self.column = column
        self.expected = expected

    def __str__(self):
        return "{}:{}: {}".format(self.line, self.column, self.detail)


class StaticCheckFailed(BitmlException):
    """The contract parsed but is not well-formed"""

    title = "Static check failed"
    exit_code = 2

    def __init__(self, errors, **kwargs):
        detail = "; ".join(error.detail for error in errors)
        super(StaticCheckFailed, self).__init__(detail, **kwargs)
        self.errors = list(errors)


class UnboundSecret(BitmlException):
    """A predicate mentions a secret whose length is unknown"""

    title = "Unbound secret"


class PathNotFound(BitmlException):
    """A branch path does not address a branch of the contract"""

    title = "Branch path not found"


class IllegalMove(BitmlException):
    """A move was applied to a configuration in which it is not enabled"""

    title = "Illegal move"


class StateLimitExceeded(BitmlException):
    """Exploration hit the configured state bound"""

    title = "State limit exceeded"
    exit_code = 4


class InsufficientFees(BitmlException):
    """Fee deposits do not cover the generated transactions"""

    title = "Insufficient fees"
    exit_code = 5


class StandardnessViolation(BitmlException):
    """A compiled script breaks a Bitcoin standardness rule"""

    title = "Standardness violation"
    exit_code = 6


class PushTooLarge(StandardnessViolation):
    """A single push exceeds 520 bytes"""

    title = "Push too large"


class TooManyKeys(StandardnessViolation):
    """A multisig check needs more keys than a standard script can carry"""

    title = "Too many keys"


class MissingSlot(BitmlException):
    """A script refers to a witness slot that was not supplied"""

    title = "Missing witness slot"


class MalformedBytes(BitmlException):
    """Raw bytes do not decode as a transaction"""

    title = "Malformed transaction bytes"


class IndexOutOfRange(BitmlException):
    """An input index does not exist in the transaction"""

    title = "Input index out of range"


class SigningError(BitmlException):
    """The signer refused or failed to sign"""

    title = "Signing error"


class InvalidStrategy(BitmlException):
    """A strategy names moves its participant cannot perform"""

    title = "Invalid strategy"
    exit_code = 1


class NoQuery(BitmlException):
    """``verify`` was given nothing to check"""

    title = "No query"
    exit_code = 1
