# -*- coding: utf-8 -*-

"""Strategy forms: ``(strategy "A" (do-reveal a) (if (revealed b)))``"""

from bitml.core.paths import path_from_ints
from bitml.exceptions import ParseError
from bitml.parser.sexpr import (
    SList,
    expect_form,
    expect_ident,
    expect_int,
    expect_string,
    read_all,
)
from bitml.verifier.strategy import (
    AuthAction,
    AuthorizedCond,
    CondAnd,
    RevealAction,
    Revealed,
    Rule,
    Strategy,
    TimeReached,
)


def parse_branch_path(item):
    """``(branch INT+)`` to a path of steps"""
    expect_form(item, "branch", min_items=2)
    return path_from_ints(
        expect_int(coordinate, "a path coordinate", minimum=0)
        for coordinate in item.items[1:]
    )


def parse_action(item):
    if isinstance(item, SList) and item.head == "do-reveal":
        expect_form(item, "do-reveal", 2, 2)
        return RevealAction(expect_ident(item[1]))
    if isinstance(item, SList) and item.head == "do-auth":
        expect_form(item, "do-auth", 2, 2)
        return AuthAction(parse_branch_path(item[1]))
    raise ParseError(
        "expected (do-reveal ...) or (do-auth ...)",
        item.line,
        item.column,
        expected="do-reveal",
    )


def parse_condition(item):
    head = item.head if isinstance(item, SList) else None
    if head == "revealed":
        expect_form(item, head, 2, 2)
        return Revealed(expect_ident(item[1]))
    if head == "authorized":
        expect_form(item, head, 3, 3)
        return AuthorizedCond(expect_string(item[1]), parse_branch_path(item[2]))
    if head == "time>=":
        expect_form(item, head, 2, 2)
        return TimeReached(expect_int(item[1], "a block height", minimum=0))
    if head == "and":
        expect_form(item, head, 3, 3)
        return CondAnd(parse_condition(item[1]), parse_condition(item[2]))
    raise ParseError(
        "expected a strategy condition", item.line, item.column, expected="revealed"
    )


def parse_strategy_form(form):
    """Parse one ``(strategy ...)`` form into a single-rule Strategy"""
    expect_form(form, "strategy", 3, 4)
    participant = expect_string(form[1])
    action = parse_action(form[2])
    if len(form) == 4:
        condition = expect_form(form[3], "if", 2, 2)
        return Strategy(participant, (Rule(action, parse_condition(condition[1])),))
    return Strategy(participant, (Rule(action),))


def parse_strategy(text):
    """Parse the text of a strategy

    :param str text: one ``(strategy ...)`` form
    :return Strategy: the strategy
    :raise ParseError: on any syntax error
    """
    forms = read_all(text)
    if len(forms) != 1:
        line, column = (forms[1].line, forms[1].column) if forms else (1, 1)
        raise ParseError(
            "expected exactly one strategy form", line, column, expected="(strategy"
        )
    return parse_strategy_form(forms[0])


def parse_strategies(text):
    """Parse a strategy file: any number of ``(strategy ...)`` forms

    :param str text: the file contents
    :return tuple: the strategies, in file order
    """
    return tuple(parse_strategy_form(form) for form in read_all(text))
