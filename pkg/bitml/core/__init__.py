# -*- coding: utf-8 -*-

from bitml.core.nodes import (
    BTC,
    After,
    Auth,
    Branch,
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
    strip_guards,
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
    eval_predicate,
)
from bitml.core.paths import Step, format_path, path_from_ints, resolve
from bitml.core.checks import check_static, check_value_flow

__all__ = [
    "BTC",
    "After",
    "Auth",
    "Branch",
    "Contract",
    "ContractSpec",
    "Deposit",
    "Outpoint",
    "Participant",
    "Precondition",
    "Reveal",
    "SecretCommitment",
    "Split",
    "SplitArm",
    "Withdraw",
    "strip_guards",
    "Add",
    "And",
    "Eq",
    "IntConst",
    "Lt",
    "Not",
    "Or",
    "PTrue",
    "SecretLen",
    "Sub",
    "eval_predicate",
    "Step",
    "format_path",
    "path_from_ints",
    "resolve",
    "check_static",
    "check_value_flow",
]
