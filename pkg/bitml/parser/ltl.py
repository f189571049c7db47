# -*- coding: utf-8 -*-

"""LTL queries in the concrete syntax of ``check-query``.

Precedence, loosest first: ``=>`` (right associative), ``\\/``, ``/\\``,
``U`` (right associative), then the prefix operators ``!``, ``[]``, ``<>``
and ``X``.
"""

import re

from bitml.core.paths import path_from_ints
from bitml.exceptions import ParseError
from bitml.semantics.atoms import (
    Authorized,
    HasDeposit,
    SecretKnown,
    SecretRevealed,
    Terminated,
)
from bitml.verifier.formula import (
    Atomic,
    Const,
    FAnd,
    FNot,
    FOr,
    Finally,
    Globally,
    Implies,
    Next,
    Until,
)

TOKEN_RE = re.compile(
    r"""
    (?P<newline>\n)
  | (?P<space>[ \t\r\f\v]+)
  | (?P<op>\[\]|<>|=>|\\/|/\\|!|\(|\))
  | (?P<string>"[^"\n]*")
  | (?P<int>[0-9]+)
  | (?P<word>[A-Za-z_][A-Za-z0-9_'\-]*(?:>=)?)
  | (?P<error>.)
    """,
    re.VERBOSE,
)

PREDICATES = ("revealed", "known", "has-deposit>=", "authorized")
PREFIX = {"!": FNot, "[]": Globally, "<>": Finally, "X": Next}


class _Token(object):
    __slots__ = ("kind", "text", "line", "column")

    def __init__(self, kind, text, line, column):
        self.kind = kind
        self.text = text
        self.line = line
        self.column = column


def _tokenize(text):
    tokens = []
    line, line_start = 1, 0
    for match in TOKEN_RE.finditer(text):
        kind = match.lastgroup
        column = match.start() - line_start + 1
        if kind == "newline":
            line, line_start = line + 1, match.end()
        elif kind == "error":
            raise ParseError(
                "unexpected character {!r}".format(match.group()), line, column
            )
        elif kind != "space":
            tokens.append(_Token(kind, match.group(), line, column))
    tokens.append(_Token("eof", "", line, len(text) - line_start + 1))
    return tokens


class _Parser(object):
    def __init__(self, text):
        self.tokens = _tokenize(text)
        self.position = 0

    @property
    def current(self):
        return self.tokens[self.position]

    def peek(self, offset=1):
        index = min(self.position + offset, len(self.tokens) - 1)
        return self.tokens[index]

    def advance(self):
        token = self.current
        if token.kind != "eof":
            self.position += 1
        return token

    def fail(self, detail, expected=None, token=None):
        token = token or self.current
        found = "end of input" if token.kind == "eof" else repr(token.text)
        raise ParseError(
            "{}, got {}".format(detail, found), token.line, token.column, expected
        )

    def expect(self, text):
        if self.current.text != text or self.current.kind in ("string", "eof"):
            self.fail("expected {!r}".format(text), expected=text)
        return self.advance()

    def at(self, text):
        return self.current.kind in ("op", "word") and self.current.text == text

    def parse(self):
        formula = self.implication()
        if self.current.kind != "eof":
            self.fail("expected end of formula")
        return formula

    def implication(self):
        left = self.disjunction()
        if self.at("=>"):
            self.advance()
            return Implies(left, self.implication())
        return left

    def disjunction(self):
        left = self.conjunction()
        while self.at("\\/"):
            self.advance()
            left = FOr(left, self.conjunction())
        return left

    def conjunction(self):
        left = self.until()
        while self.at("/\\"):
            self.advance()
            left = FAnd(left, self.until())
        return left

    def until(self):
        left = self.unary()
        if self.at("U") and not self._starts_atom():
            self.advance()
            return Until(left, self.until())
        return left

    def unary(self):
        token = self.current
        if token.text in PREFIX and token.kind in ("op", "word"):
            if not self._starts_atom():
                self.advance()
                return PREFIX[token.text](self.unary())
        return self.primary()

    def _starts_atom(self):
        return self.peek().kind == "word" and self.peek().text in PREDICATES

    def primary(self):
        token = self.current
        if self.at("("):
            self.advance()
            formula = self.implication()
            self.expect(")")
            return formula
        if token.kind == "word" and token.text in ("true", "false"):
            self.advance()
            return Const(token.text == "true")
        if token.kind == "word" and token.text == "contract-terminated":
            self.advance()
            return Atomic(Terminated())
        if token.kind in ("word", "string") and self._starts_atom():
            return Atomic(self.atom())
        self.fail("expected an atom or '('", expected="atom")

    def name(self):
        token = self.advance()
        return token.text[1:-1] if token.kind == "string" else token.text

    def integer(self, what):
        if self.current.kind != "int":
            self.fail("expected {}".format(what), expected="INT")
        return int(self.advance().text)

    def atom(self):
        subject = self.name()
        predicate = self.advance().text
        if predicate == "revealed":
            return SecretRevealed(subject)
        if predicate == "known":
            return SecretKnown(subject)
        if predicate == "has-deposit>=":
            amount = self.integer("an amount")
            self.expect("satoshi")
            return HasDeposit(subject, amount)
        self.expect("(")
        self.expect("branch")
        coordinates = [self.integer("a path coordinate")]
        while self.current.kind == "int":
            coordinates.append(int(self.advance().text))
        self.expect(")")
        return Authorized(subject, path_from_ints(coordinates))


def parse_ltl(text):
    """Parse an LTL query

    :param str text: e.g. ``[](a revealed => <>A has-deposit>= 100000000 satoshi)``
    :return Formula: the formula
    :raise ParseError: on any syntax error
    """
    return _Parser(text).parse()
