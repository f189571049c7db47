# -*- coding: utf-8 -*-

"""Verdicts, witnesses and their replay"""

from dataclasses import dataclass, field
from typing import Optional, Tuple

from bitml.semantics.configuration import initial_configuration
from bitml.semantics.moves import apply_move


@dataclass(frozen=True)
class FrozenState(object):
    """A reachable configuration from which liquidation cannot be guaranteed"""

    assignment: Tuple[Tuple[str, int], ...]
    trace: Tuple[object, ...]
    cfg: object

    def to_dict(self):
        return {
            "type": "frozen-state",
            "assignment": dict(self.assignment),
            "trace": [str(move) for move in self.trace],
            "configuration": self.cfg.describe(),
        }


@dataclass(frozen=True)
class Lasso(object):
    """A trace ``prefix`` followed by ``cycle`` repeated forever.

    Both are sequences of moves; ``None`` stands for a stutter step at a
    deadlock.
    """

    assignment: Tuple[Tuple[str, int], ...]
    prefix: Tuple[object, ...]
    cycle: Tuple[object, ...]

    def to_dict(self):
        def label(move):
            return "stutter" if move is None else str(move)

        return {
            "type": "lasso",
            "assignment": dict(self.assignment),
            "prefix": [label(move) for move in self.prefix],
            "cycle": [label(move) for move in self.cycle],
        }


@dataclass
class VerificationResult(object):
    verdict: bool
    witness: Optional[object] = None
    stats: dict = field(default_factory=dict)
    query: str = "liquidity"

    def to_dict(self):
        return {
            "query": self.query,
            "verdict": self.verdict,
            "witness": self.witness.to_dict() if self.witness else None,
            "stats": dict(self.stats),
        }


def _run(spec, assignment, moves):
    cfg = initial_configuration(spec, dict(assignment))
    visited = [cfg]
    for move in moves:
        if move is not None:
            cfg = apply_move(cfg, move, spec)
        visited.append(cfg)
    return visited


def replay(spec, witness):
    """Re-execute a witness with ``apply_move``

    :param ContractSpec spec: the contract the witness was produced for
    :param witness: a FrozenState or a Lasso
    :return list: the configurations visited; for a lasso, the cycle part is
        appended once and must close on the configuration it started from
    :raise IllegalMove: if some move of the witness is not enabled
    """
    if isinstance(witness, FrozenState):
        visited = _run(spec, witness.assignment, witness.trace)
        if visited[-1] != witness.cfg:
            raise ValueError("trace does not reach the frozen configuration")
        return visited
    visited = _run(spec, witness.assignment, tuple(witness.prefix) + tuple(witness.cycle))
    if visited[len(witness.prefix)] != visited[-1]:
        raise ValueError("cycle does not close")
    return visited
