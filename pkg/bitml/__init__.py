# -*- coding: utf-8 -*-

__version__ = "0.1.0"

from bitml.core import ContractSpec, check_static, check_value_flow
from bitml.parser import parse_contract, parse_file, parse_ltl, parse_strategy
from bitml.verifier import check_liquidity, check_ltl
from bitml.compiler import check_standardness, compile, suggest_flattening
from bitml.txwire import finalize
from bitml.exceptions import BitmlException

__all__ = [
    "__version__",
    "ContractSpec",
    "check_static",
    "check_value_flow",
    "parse_contract",
    "parse_file",
    "parse_ltl",
    "parse_strategy",
    "check_liquidity",
    "check_ltl",
    "check_standardness",
    "compile",
    "suggest_flattening",
    "finalize",
    "BitmlException",
]
