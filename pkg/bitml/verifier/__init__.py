# -*- coding: utf-8 -*-

from bitml.verifier.strategy import (
    AuthAction,
    AuthorizedCond,
    CondAnd,
    CondTrue,
    MoveClass,
    RevealAction,
    Revealed,
    Rule,
    Strategy,
    TimeReached,
    classify_move,
    merge_strategies,
    validate_strategies,
)
from bitml.verifier.regions import sample_secret_regions
from bitml.verifier.graph import StateGraph, reachable_states
from bitml.verifier.result import FrozenState, Lasso, VerificationResult, replay
from bitml.verifier.liquidity import check_liquidity
from bitml.verifier.modelcheck import check_ltl, evaluate_lasso

__all__ = [
    "AuthAction",
    "AuthorizedCond",
    "CondAnd",
    "CondTrue",
    "MoveClass",
    "RevealAction",
    "Revealed",
    "Rule",
    "Strategy",
    "TimeReached",
    "classify_move",
    "merge_strategies",
    "validate_strategies",
    "sample_secret_regions",
    "StateGraph",
    "reachable_states",
    "FrozenState",
    "Lasso",
    "VerificationResult",
    "replay",
    "check_liquidity",
    "check_ltl",
    "evaluate_lasso",
]
