# -*- coding: utf-8 -*-

"""Participant strategies and the classification of controlled moves"""

import enum
from dataclasses import dataclass
from typing import Tuple

from bitml.core.nodes import Auth
from bitml.core.paths import format_path, path_to_ints, resolve
from bitml.exceptions import InvalidStrategy, PathNotFound
from bitml.semantics.moves import Authorize, RevealSecret


class MoveClass(enum.Enum):
    GUARANTEED = "guaranteed"
    ADVERSARIAL = "adversarial"
    PROHIBITED = "prohibited"


class Cond(object):
    __slots__ = ()


@dataclass(frozen=True)
class CondTrue(Cond):
    def holds(self, cfg):
        return True

    def __str__(self):
        return "true"


@dataclass(frozen=True)
class Revealed(Cond):
    secret: str

    def holds(self, cfg):
        return cfg.is_revealed(self.secret)

    def __str__(self):
        return "(revealed {})".format(self.secret)


@dataclass(frozen=True)
class AuthorizedCond(Cond):
    participant: str
    path: tuple

    def holds(self, cfg):
        return (self.participant, tuple(self.path)) in cfg.auths

    def __str__(self):
        return '(authorized "{}" (branch {}))'.format(
            self.participant, " ".join(str(i) for i in path_to_ints(self.path))
        )


@dataclass(frozen=True)
class TimeReached(Cond):
    height: int

    def holds(self, cfg):
        return cfg.partition.reached(cfg.interval, self.height)

    def __str__(self):
        return "(time>= {})".format(self.height)


@dataclass(frozen=True)
class CondAnd(Cond):
    left: Cond
    right: Cond

    def holds(self, cfg):
        return self.left.holds(cfg) and self.right.holds(cfg)

    def __str__(self):
        return "(and {} {})".format(self.left, self.right)


@dataclass(frozen=True)
class RevealAction(object):
    secret: str

    def matches(self, move):
        return isinstance(move, RevealSecret) and move.secret == self.secret


@dataclass(frozen=True)
class AuthAction(object):
    path: tuple

    def matches(self, move):
        return isinstance(move, Authorize) and tuple(move.path) == tuple(self.path)


@dataclass(frozen=True)
class Rule(object):
    action: object
    condition: Cond = CondTrue()


@dataclass(frozen=True)
class Strategy(object):
    participant: str
    rules: Tuple[Rule, ...]


def merge_strategies(strategies):
    """Merge strategies by participant

    :param iterable strategies: Strategy objects, possibly several per participant
    :return dict: participant name -> merged Strategy
    """
    merged = {}
    for strategy in strategies:
        previous = merged.get(strategy.participant)
        rules = (previous.rules if previous else ()) + tuple(strategy.rules)
        merged[strategy.participant] = Strategy(strategy.participant, rules)
    return merged


def validate_strategies(strategies, spec):
    """Check that each rule controls a move of its own participant

    :raise InvalidStrategy: on the first offending rule
    """
    owners = {secret.name: secret.owner for secret in spec.precondition.secrets}
    for participant, strategy in strategies.items():
        if participant not in spec.participant_names:
            raise InvalidStrategy(
                "strategy for undeclared participant {}".format(participant)
            )
        for rule in strategy.rules:
            action = rule.action
            if isinstance(action, RevealAction):
                if owners.get(action.secret) != participant:
                    raise InvalidStrategy(
                        "{} cannot reveal secret {}".format(participant, action.secret)
                    )
            else:
                try:
                    node = resolve(spec.contract, action.path)
                except PathNotFound as error:
                    raise InvalidStrategy(error.detail)
                if not isinstance(node, Auth) or node.authorizer != participant:
                    raise InvalidStrategy(
                        "{} has no authorization at {}".format(
                            participant, format_path(action.path)
                        )
                    )


def classify_move(move, strategies, cfg):
    """Classify a move under the declared strategies

    A participant without a strategy behaves adversarially. A declared
    strategy fully specifies its participant: a move is guaranteed when some
    rule matches it and the rule's condition holds, prohibited otherwise.

    :param Move move: the move
    :param dict strategies: participant name -> Strategy
    :param Configuration cfg: the configuration the move leaves from
    :return MoveClass: the class of the move
    """
    if not isinstance(move, (RevealSecret, Authorize)):
        return MoveClass.GUARANTEED
    strategy = strategies.get(move.participant)
    if strategy is None:
        return MoveClass.ADVERSARIAL
    for rule in strategy.rules:
        if rule.action.matches(move) and rule.condition.holds(cfg):
            return MoveClass.GUARANTEED
    return MoveClass.PROHIBITED
