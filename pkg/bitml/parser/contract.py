# -*- coding: utf-8 -*-

"""Contract files: participants, the contract, strategies and queries"""

import logging
import os
from dataclasses import dataclass, field
from typing import Optional, Tuple

from bitml.core.nodes import (
    After,
    Auth,
    Contract,
    ContractSpec,
    Deposit,
    Outpoint,
    Participant,
    Precondition,
    Reveal,
    SecretCommitment,
    Split,
    SplitArm,
    Withdraw,
)
from bitml.core.predicate import (
    Add,
    And,
    Eq,
    IntConst,
    Lt,
    Not,
    Or,
    PTrue,
    SecretLen,
    Sub,
)
from bitml.exceptions import ParseError
from bitml.parser.ltl import parse_ltl
from bitml.parser.sexpr import (
    SList,
    Token,
    expect_form,
    expect_hex,
    expect_ident,
    expect_int,
    expect_string,
    expect_symbol,
    read_all,
)
from bitml.parser.strategy import parse_strategy_form

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SourceFile(object):
    text: str
    path: str = "<string>"

    @classmethod
    def read(cls, path):
        with open(path, "rb") as handle:
            raw = handle.read()
        return cls(decode(raw), path)


def decode(raw):
    """Decode UTF-8 source bytes, reporting bad bytes as a ParseError"""
    try:
        return raw.decode("utf-8")
    except UnicodeDecodeError as error:
        prefix = raw[: error.start]
        line = prefix.count(b"\n") + 1
        column = error.start - (prefix.rfind(b"\n") + 1) + 1
        raise ParseError("invalid UTF-8 byte in source", line, column)


@dataclass(frozen=True)
class LiquidityQuery(object):
    def __str__(self):
        return "liquidity"


@dataclass(frozen=True)
class FormulaQuery(object):
    text: str
    formula: object = field(compare=False)

    def __str__(self):
        return self.text


@dataclass(frozen=True)
class SourceBundle(object):
    spec: ContractSpec
    strategies: Tuple[object, ...] = ()
    queries: Tuple[object, ...] = ()
    path: Optional[str] = None


def _fail(item, detail, expected=None):
    raise ParseError(detail, item.line, item.column, expected=expected)


def _parse_participant(form):
    expect_form(form, "participant", 3, 3)
    name = expect_string(form[1], "a participant name")
    pubkey = expect_hex(form[2], 66, "a compressed public key")
    try:
        return Participant(name, pubkey)
    except ValueError as error:
        _fail(form[2], str(error), "HEXPUBKEY")


def _parse_outpoint(form):
    expect_form(form, "outpoint", 3, 3)
    txid = expect_hex(form[1], 64, "a transaction id")
    return Outpoint(txid, expect_int(form[2], "an output index", minimum=0))


def _parse_precondition(form):
    expect_form(form, "pre")
    persistent, secrets, fees = [], [], []
    for item in form.items[1:]:
        head = item.head if isinstance(item, SList) else None
        if head in ("deposit", "fee"):
            expect_form(item, head, 4, 4)
            deposit = Deposit(
                expect_string(item[1], "a participant name"),
                expect_int(item[2], "an amount in satoshi", minimum=1),
                _parse_outpoint(item[3]),
            )
            (persistent if head == "deposit" else fees).append(deposit)
        elif head == "secret":
            expect_form(item, head, 4, 4)
            secrets.append(
                SecretCommitment(
                    expect_string(item[1], "a participant name"),
                    expect_ident(item[2]),
                    expect_hex(item[3], 64, "a SHA-256 hash"),
                )
            )
        else:
            _fail(item, "expected deposit, fee or secret", "deposit")
    return Precondition(tuple(persistent), tuple(secrets), tuple(fees))


def _parse_expression(item):
    if isinstance(item, Token) and item.kind == "int":
        return IntConst(item.value)
    head = item.head if isinstance(item, SList) else None
    if head == "len":
        expect_form(item, head, 2, 2)
        return SecretLen(expect_ident(item[1]))
    if head in ("+", "-"):
        expect_form(item, head, 3, 3)
        kind = Add if head == "+" else Sub
        return kind(_parse_expression(item[1]), _parse_expression(item[2]))
    _fail(item, "expected an integer expression", "INT")


def _parse_predicate(item):
    if isinstance(item, Token) and item.text == "true":
        return PTrue()
    head = item.head if isinstance(item, SList) else None
    if head == "not":
        expect_form(item, head, 2, 2)
        return Not(_parse_predicate(item[1]))
    if head in ("and", "or"):
        expect_form(item, head, 3, 3)
        kind = And if head == "and" else Or
        return kind(_parse_predicate(item[1]), _parse_predicate(item[2]))
    if head in ("=", "<"):
        expect_form(item, head, 3, 3)
        kind = Eq if head == "=" else Lt
        return kind(_parse_expression(item[1]), _parse_expression(item[2]))
    _fail(item, "expected a predicate", "true")


def _parse_contract(item):
    if isinstance(item, SList) and item.head == "choice":
        expect_form(item, "choice", 2)
        return Contract(tuple(_parse_branch(branch) for branch in item.items[1:]))
    return Contract((_parse_branch(item),))


def _parse_branch(item):
    head = item.head if isinstance(item, SList) else None
    if head == "withdraw":
        expect_form(item, head, 2, 2)
        return Withdraw(expect_string(item[1], "a participant name"))
    if head == "split":
        expect_form(item, head, 2)
        return Split(tuple(_parse_arm(arm) for arm in item.items[1:]))
    if head == "auth":
        expect_form(item, head, 3, 3)
        return Auth(expect_string(item[1], "a participant name"), _parse_branch(item[2]))
    if head == "after":
        expect_form(item, head, 3, 3)
        height = expect_int(item[1], "a block height", minimum=1)
        return After(height, _parse_branch(item[2]))
    if head == "reveal":
        return _parse_reveal(item)
    _fail(item, "expected withdraw, split, auth, after or reveal", "withdraw")


def _parse_arm(item):
    if not isinstance(item, SList) or len(item) != 3:
        _fail(item, "expected (INT -> contract)", "(")
    value = expect_int(item[0], "an arm value in satoshi", minimum=1)
    expect_symbol(item[1], "->")
    return SplitArm(value, _parse_contract(item[2]))


def _parse_reveal(item):
    expect_form(item, "reveal", 3, 4)
    names = item[1]
    if not isinstance(names, SList) or not names.items:
        _fail(names, "expected a parenthesized list of secret names", "(")
    secrets = tuple(expect_ident(name) for name in names.items)
    predicate = PTrue()
    if len(item) == 4:
        predicate_form = expect_form(item[2], "pred", 2, 2)
        predicate = _parse_predicate(predicate_form[1])
    return Reveal(secrets, predicate, _parse_contract(item[-1]))


def _parse_query(form):
    if form.head == "check-liquid":
        expect_form(form, "check-liquid", 1, 1)
        return LiquidityQuery()
    expect_form(form, "check-query", 2, 2)
    text = expect_string(form[1], "a quoted LTL formula")
    try:
        return FormulaQuery(text, parse_ltl(text))
    except ParseError as error:
        # positions inside the query are relative to the string literal
        raise ParseError(
            error.detail,
            form[1].line + error.line - 1,
            (form[1].column + error.column if error.line == 1 else error.column),
            expected=error.expected,
        )


def _stage_of(form):
    head = form.head if isinstance(form, SList) else None
    return {
        "participant": 0,
        "contract": 1,
        "strategy": 2,
        "check-liquid": 3,
        "check-query": 3,
    }.get(head)


def _parse_forms(forms, src, text):
    participants, strategies, queries = [], [], []
    spec = None
    stage = 0
    for form in forms:
        form_stage = _stage_of(form)
        if form_stage is None:
            _fail(form, "expected participant, contract, strategy or query", "(")
        if form_stage < stage or (form_stage == 1 and spec is not None):
            _fail(form, "form out of order", None)
        stage = form_stage
        if form_stage == 0:
            participants.append(_parse_participant(form))
        elif form_stage == 1:
            expect_form(form, "contract", 3, 3)
            precondition = _parse_precondition(form[1])
            contract = _parse_contract(form[2])
            name = os.path.splitext(os.path.basename(src.path))[0]
            spec = ContractSpec(tuple(participants), precondition, contract, name)
        elif form_stage == 2:
            strategies.append(parse_strategy_form(form))
        else:
            queries.append(_parse_query(form))

    if spec is None:
        raise ParseError(
            "missing (contract ...) form",
            len(text.splitlines()) or 1,
            1,
            expected="(contract",
        )
    logger.debug(
        "parsed %s: %d participants, %d strategies, %d queries",
        src.path,
        len(spec.participants),
        len(strategies),
        len(queries),
    )
    return SourceBundle(spec, tuple(strategies), tuple(queries), src.path)


def parse_file(src):
    """Parse a whole contract file

    :param SourceFile src: the source
    :return SourceBundle: the contract with its in-file strategies and queries
    :raise ParseError: on any lexical or grammatical error
    """
    text = decode(src.text) if isinstance(src.text, bytes) else src.text
    forms = read_all(text)
    try:
        return _parse_forms(forms, src, text)
    except RecursionError:
        raise ParseError("nesting too deep", 1, 1)


def parse_contract(src):
    """Parse the contract of a source file

    Names are not resolved here; undeclared participants and secrets are
    reported by ``check_static``.

    :param SourceFile src: the source
    :return ContractSpec: the contract
    :raise ParseError: on any lexical or grammatical error
    """
    return parse_file(src).spec
