# -*- coding: utf-8 -*-

"""Abstract syntax of contracts: participants, preconditions and the contract tree.

All nodes are frozen dataclasses holding tuples, so they hash and compare
structurally and can be shared freely between configurations.
"""

import re
from dataclasses import dataclass, field
from typing import Optional, Tuple

from bitml.core.predicate import PTrue, Predicate

HEX_RE = re.compile(r"^[0-9a-fA-F]*$")

#: 1 BTC in satoshi
BTC = 10 ** 8


def _is_hex(value, length):
    return isinstance(value, str) and len(value) == length and HEX_RE.match(value)


@dataclass(frozen=True)
class Participant(object):
    name: str
    pubkey: str

    def __post_init__(self):
        if not self.name:
            raise ValueError("participant name must be nonempty")
        if not _is_hex(self.pubkey, 66) or self.pubkey[:2] not in ("02", "03"):
            raise ValueError(
                "{} has an invalid compressed public key {!r}".format(
                    self.name, self.pubkey
                )
            )

    @property
    def pubkey_bytes(self):
        return bytes.fromhex(self.pubkey)


@dataclass(frozen=True)
class Outpoint(object):
    txid: str
    vout: int

    def __post_init__(self):
        if not _is_hex(self.txid, 64):
            raise ValueError("txid must be 64 hex characters: {!r}".format(self.txid))
        if self.vout < 0:
            raise ValueError("output index must be non-negative")

    def __str__(self):
        return "{}:{}".format(self.txid, self.vout)


@dataclass(frozen=True)
class Deposit(object):
    """A persistent or fee deposit named in the precondition"""

    owner: str
    value: int
    outpoint: Outpoint


@dataclass(frozen=True)
class SecretCommitment(object):
    owner: str
    name: str
    hash: str


@dataclass(frozen=True)
class Precondition(object):
    persistent_deposits: Tuple[Deposit, ...] = ()
    secrets: Tuple[SecretCommitment, ...] = ()
    fee_deposits: Tuple[Deposit, ...] = ()

    @property
    def balance(self):
        return sum(deposit.value for deposit in self.persistent_deposits)

    @property
    def fees(self):
        return sum(deposit.value for deposit in self.fee_deposits)

    @property
    def outpoints(self):
        deposits = self.persistent_deposits + self.fee_deposits
        return tuple(deposit.outpoint for deposit in deposits)

    def secret(self, name):
        for commitment in self.secrets:
            if commitment.name == name:
                return commitment
        return None


class Branch(object):
    """One alternative of a choice"""

    __slots__ = ()


@dataclass(frozen=True)
class Withdraw(Branch):
    recipient: str


@dataclass(frozen=True)
class SplitArm(object):
    value: int
    contract: "Contract"


@dataclass(frozen=True)
class Split(Branch):
    arms: Tuple[SplitArm, ...]

    def __post_init__(self):
        if not self.arms:
            raise ValueError("split needs at least one arm")
        if any(arm.value <= 0 for arm in self.arms):
            raise ValueError("split arm values must be positive")


@dataclass(frozen=True)
class Auth(Branch):
    authorizer: str
    inner: Branch


@dataclass(frozen=True)
class After(Branch):
    height: int
    inner: Branch

    def __post_init__(self):
        if self.height <= 0:
            raise ValueError("deadlines must be positive block heights")


@dataclass(frozen=True)
class Reveal(Branch):
    secrets: Tuple[str, ...]
    predicate: Predicate
    continuation: "Contract"


@dataclass(frozen=True)
class Contract(object):
    """A choice among branches; a singleton tuple means no alternative"""

    branches: Tuple[Branch, ...]

    def __post_init__(self):
        if not self.branches:
            raise ValueError("a contract needs at least one branch")

    def __hash__(self):
        # configurations hash whole contract trees on every lookup
        try:
            return self._hash
        except AttributeError:
            object.__setattr__(self, "_hash", hash(self.branches))
            return self._hash


GUARDS = (Auth, After)


def strip_guards(branch):
    """Split a branch into its guard chain and its body

    :param Branch branch: the branch
    :return tuple: the list of Auth/After guards, outermost first, and the unguarded body
    """
    guards = []
    while isinstance(branch, GUARDS):
        guards.append(branch)
        branch = branch.inner
    return guards, branch


def reveal_of(branch):
    """Return the Reveal body of a branch, or None"""
    _, body = strip_guards(branch)
    return body if isinstance(body, Reveal) else None


@dataclass(frozen=True)
class ContractSpec(object):
    participants: Tuple[Participant, ...]
    precondition: Precondition
    contract: Contract
    name: Optional[str] = field(default=None, compare=False)

    @property
    def deadlines(self):
        """The sorted set of every After height in the contract"""
        heights = set()
        stack = [self.contract]
        while stack:
            contract = stack.pop()
            for branch in contract.branches:
                guards, body = strip_guards(branch)
                heights.update(g.height for g in guards if isinstance(g, After))
                stack.extend(children(body))
        return tuple(sorted(heights))

    @property
    def participant_names(self):
        return tuple(participant.name for participant in self.participants)

    def participant(self, name):
        for participant in self.participants:
            if participant.name == name:
                return participant
        raise KeyError(name)


def children(body):
    """Contracts directly nested in an unguarded branch body"""
    if isinstance(body, Split):
        return [arm.contract for arm in body.arms]
    if isinstance(body, Reveal):
        return [body.continuation]
    return []


def reveal(secrets, continuation, predicate=None):
    """Shorthand used by the benchmark generators"""
    return Reveal(tuple(secrets), predicate or PTrue(), continuation)
