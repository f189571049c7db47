# -*- coding: utf-8 -*-

from bitml.parser.contract import (
    FormulaQuery,
    LiquidityQuery,
    SourceBundle,
    SourceFile,
    parse_contract,
    parse_file,
)
from bitml.parser.strategy import parse_strategies, parse_strategy
from bitml.parser.ltl import parse_ltl
from bitml.parser.printer import format_strategy, pretty_print

__all__ = [
    "FormulaQuery",
    "LiquidityQuery",
    "SourceBundle",
    "SourceFile",
    "parse_contract",
    "parse_file",
    "parse_strategy",
    "parse_strategies",
    "parse_ltl",
    "format_strategy",
    "pretty_print",
]
