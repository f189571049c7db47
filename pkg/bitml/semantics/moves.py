# -*- coding: utf-8 -*-

"""Moves of the abstract semantics: enabledness and effects"""

from dataclasses import dataclass

from bitml.core.nodes import After, Auth, Reveal, Split, Withdraw, strip_guards
from bitml.core.paths import child_path, format_path
from bitml.exceptions import IllegalMove
from bitml.semantics.configuration import ActiveContract


class Move(object):
    __slots__ = ()


@dataclass(frozen=True)
class Delay(Move):
    """Advance time to the next interval"""

    def __str__(self):
        return "delay"


@dataclass(frozen=True)
class RevealSecret(Move):
    participant: str
    secret: str
    length: int

    def __str__(self):
        return "{} reveals {} (length {})".format(
            self.participant, self.secret, self.length
        )


@dataclass(frozen=True)
class Authorize(Move):
    participant: str
    path: tuple

    def __str__(self):
        return "{} authorizes {}".format(self.participant, format_path(self.path))


@dataclass(frozen=True)
class Fire(Move):
    """Execute a branch of an active contract; anyone may do it"""

    cid: str
    path: tuple

    def __str__(self):
        return "fire {} of contract {}".format(format_path(self.path), self.cid)


def _branch_enabled(cfg, active, index, branch):
    guards, body = strip_guards(branch)
    for depth, guard in enumerate(guards):
        if isinstance(guard, After):
            if not cfg.partition.reached(cfg.interval, guard.height):
                return False
        elif isinstance(guard, Auth):
            key = (guard.authorizer, child_path(active.path, index, depth))
            if key not in cfg.auths:
                return False
    if isinstance(body, Reveal):
        state = cfg.secret_state
        if any(state.get(name) is None for name in body.secrets):
            return False
        return body.predicate.evaluate(cfg.revealed_lengths)
    return True


def auth_positions(active):
    """``(participant, path)`` of every Auth guard on the top-level choice"""
    positions = []
    for index, branch in enumerate(active.contract.branches):
        guards, _ = strip_guards(branch)
        for depth, guard in enumerate(guards):
            if isinstance(guard, Auth):
                positions.append(
                    (guard.authorizer, child_path(active.path, index, depth))
                )
    return positions


def enumerate_moves(cfg, spec):
    """Return every move enabled in a configuration, in a canonical order

    :param Configuration cfg: the configuration
    :param ContractSpec spec: the contract being executed
    :return list: the enabled moves
    """
    moves = []
    if cfg.interval + 1 < cfg.partition.count:
        moves.append(Delay())

    assignment = dict(cfg.assignment)
    for commitment in sorted(spec.precondition.secrets, key=lambda s: s.name):
        if not cfg.is_revealed(commitment.name):
            moves.append(
                RevealSecret(
                    commitment.owner, commitment.name, assignment[commitment.name]
                )
            )

    seen = set()
    for active in cfg.sorted_active():
        for position in auth_positions(active):
            if position not in cfg.auths and position not in seen:
                seen.add(position)
                moves.append(Authorize(*position))

    for active in cfg.sorted_active():
        for index, branch in enumerate(active.contract.branches):
            if _branch_enabled(cfg, active, index, branch):
                moves.append(Fire(active.cid, child_path(active.path, index)))
    return moves


def _fire(cfg, move):
    active = cfg.contract(move.cid)
    index = move.path[-1].choice
    _, body = strip_guards(active.contract.branches[index])
    branch_path = child_path(active.path, index)
    remaining = cfg.active - {active}

    if isinstance(body, Withdraw):
        deposits = tuple(sorted(cfg.deposits + ((body.recipient, active.balance),)))
        return cfg.replace(active=remaining, deposits=deposits)
    if isinstance(body, Split):
        spawned = frozenset(
            ActiveContract(
                "{}.{}".format(active.cid, arm_index),
                child_path(branch_path, arm_index),
                arm.contract,
                arm.value,
            )
            for arm_index, arm in enumerate(body.arms)
        )
        return cfg.replace(active=remaining | spawned)
    if isinstance(body, Reveal):
        continued = ActiveContract(
            active.cid, branch_path, body.continuation, active.balance
        )
        return cfg.replace(
            active=remaining | {continued},
            exhibited=cfg.exhibited | frozenset(body.secrets),
        )
    raise IllegalMove("cannot fire a branch with body {!r}".format(body))


def step(cfg, move):
    """Apply a move without checking that it is enabled"""
    if isinstance(move, Delay):
        return cfg.replace(interval=cfg.interval + 1)
    if isinstance(move, RevealSecret):
        secrets = tuple(
            (name, move.length if name == move.secret else length)
            for name, length in cfg.secrets
        )
        return cfg.replace(secrets=secrets)
    if isinstance(move, Authorize):
        return cfg.replace(auths=cfg.auths | {(move.participant, move.path)})
    if isinstance(move, Fire):
        return _fire(cfg, move)
    raise IllegalMove("unknown move {!r}".format(move))


def apply_move(cfg, move, spec):
    """Apply an enabled move

    :param Configuration cfg: the configuration
    :param Move move: a move enabled in ``cfg``
    :param ContractSpec spec: the contract
    :return Configuration: the successor configuration
    """
    if move not in enumerate_moves(cfg, spec):
        raise IllegalMove(
            "{} is not enabled".format(move), source={"move": str(move)}
        )
    return step(cfg, move)
