# -*- coding: utf-8 -*-

from bitml.compiler.keys import KeyRef
from bitml.compiler.script import (
    AndE,
    CheckMultiAll,
    CheckSig,
    OrE,
    PreimageHashEq,
    SizeCmp,
    SizeEq,
    SizeGe,
    TrueE,
)
from bitml.compiler.templates import TxDag, TxTemplate
from bitml.compiler.compile import compile, script_of, template_count
from bitml.compiler.standardness import (
    RewriteHint,
    check_standardness,
    suggest_flattening,
)

__all__ = [
    "KeyRef",
    "AndE",
    "CheckMultiAll",
    "CheckSig",
    "OrE",
    "PreimageHashEq",
    "SizeCmp",
    "SizeEq",
    "SizeGe",
    "TrueE",
    "TxDag",
    "TxTemplate",
    "compile",
    "script_of",
    "template_count",
    "RewriteHint",
    "check_standardness",
    "suggest_flattening",
]
