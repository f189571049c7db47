# -*- coding: utf-8 -*-

"""Tokenizer and reader for s-expressions.

Atoms keep their raw text next to their value, so hex strings made only of
digits (public keys, txids) are not lost to integer conversion.
"""

import re
from dataclasses import dataclass
from typing import Tuple

from bitml.exceptions import ParseError

TOKEN_RE = re.compile(
    r"""
    (?P<space>[ \t\r\f\v]+)
  | (?P<newline>\n)
  | (?P<comment>;[^\n]*)
  | (?P<lparen>\()
  | (?P<rparen>\))
  | (?P<string>"[^"\n]*")
  | (?P<atom>[^\s()";]+)
  | (?P<error>.)
    """,
    re.VERBOSE,
)

INT_RE = re.compile(r"^-?[0-9]+$")


@dataclass(frozen=True)
class Token(object):
    kind: str
    text: str
    line: int
    column: int

    @property
    def value(self):
        if self.kind == "string":
            return self.text[1:-1]
        if self.kind == "int":
            return int(self.text)
        return self.text

    def describe(self):
        return "end of input" if self.kind == "eof" else repr(self.text)


@dataclass(frozen=True)
class SList(object):
    items: Tuple[object, ...]
    line: int
    column: int
    end: Token = None

    kind = "list"

    def __len__(self):
        return len(self.items)

    def __getitem__(self, index):
        return self.items[index]

    @property
    def head(self):
        """Symbol text of the first item, or None"""
        if self.items and isinstance(self.items[0], Token):
            if self.items[0].kind == "symbol":
                return self.items[0].text
        return None

    def describe(self):
        return "a list"


def tokenize(text):
    """Split source text into tokens

    :param str text: the source
    :return list: the tokens, ending with an ``eof`` token
    :raise ParseError: on an unterminated string or a stray character
    """
    tokens = []
    line, line_start = 1, 0
    for match in TOKEN_RE.finditer(text):
        kind = match.lastgroup
        column = match.start() - line_start + 1
        if kind == "newline":
            line, line_start = line + 1, match.end()
        elif kind == "error":
            if match.group() == '"':
                raise ParseError("unterminated string", line, column, expected='"')
            raise ParseError(
                "unexpected character {!r}".format(match.group()), line, column
            )
        elif kind == "atom":
            kind = "int" if INT_RE.match(match.group()) else "symbol"
            tokens.append(Token(kind, match.group(), line, column))
        elif kind not in ("space", "comment"):
            tokens.append(Token(kind, match.group(), line, column))
    tokens.append(Token("eof", "", line, len(text) - line_start + 1))
    return tokens


def read_all(text):
    """Read every top-level form of a source text

    :param str text: the source
    :return list: Tokens and SLists
    """
    tokens = tokenize(text)
    forms = []
    position = 0
    while tokens[position].kind != "eof":
        try:
            form, position = _read(tokens, position)
        except RecursionError:
            token = tokens[position]
            raise ParseError("nesting too deep", token.line, token.column)
        forms.append(form)
    return forms


def _read(tokens, position):
    token = tokens[position]
    if token.kind == "rparen":
        raise ParseError("unbalanced ')'", token.line, token.column)
    if token.kind != "lparen":
        return token, position + 1

    items = []
    position += 1
    while tokens[position].kind != "rparen":
        if tokens[position].kind == "eof":
            end = tokens[position]
            raise ParseError(
                "list opened at {}:{} is never closed".format(token.line, token.column),
                end.line,
                end.column,
                expected=")",
            )
        item, position = _read(tokens, position)
        items.append(item)
    return SList(tuple(items), token.line, token.column, tokens[position]), position + 1


IDENT_RE = re.compile(r"^[a-z_][A-Za-z0-9_']*$")
HEX_RE = re.compile(r"^[0-9a-fA-F]+$")


def _fail(item, detail, expected=None):
    raise ParseError(detail, item.line, item.column, expected=expected)


def expect_form(item, head, min_items=1, max_items=None):
    """Check that ``item`` is a list ``(head ...)`` of an acceptable length"""
    if not isinstance(item, SList) or item.head != head:
        _fail(item, "expected ({} ...), got {}".format(head, item.describe()), head)
    if len(item) < min_items or (max_items is not None and len(item) > max_items):
        _fail(item, "malformed ({} ...) form".format(head), head)
    return item


def expect_string(item, what="a quoted name"):
    if not isinstance(item, Token) or item.kind != "string":
        _fail(item, "expected {}, got {}".format(what, item.describe()), '"')
    return item.value


def expect_int(item, what="an integer", minimum=None):
    if not isinstance(item, Token) or item.kind != "int":
        _fail(item, "expected {}, got {}".format(what, item.describe()), "INT")
    if minimum is not None and item.value < minimum:
        _fail(item, "expected {} of at least {}".format(what, minimum), "INT")
    return item.value


def expect_ident(item, what="a secret name"):
    if not isinstance(item, Token) or item.kind != "symbol" or not IDENT_RE.match(
        item.text
    ):
        _fail(item, "expected {}, got {}".format(what, item.describe()), "IDENT")
    return item.text


def expect_symbol(item, text):
    if not isinstance(item, Token) or item.text != text:
        _fail(item, "expected {}, got {}".format(text, item.describe()), text)
    return item.text


def expect_hex(item, length, what):
    """Accept ``length`` hex digits; digit-only strings arrive as int tokens"""
    if (
        not isinstance(item, Token)
        or item.kind not in ("symbol", "int")
        or len(item.text) != length
        or not HEX_RE.match(item.text)
    ):
        _fail(
            item,
            "expected {} ({} hex digits), got {}".format(what, length, item.describe()),
            "HEX",
        )
    return item.text.lower()
