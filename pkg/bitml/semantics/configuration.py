# -*- coding: utf-8 -*-

"""Configurations of the abstract semantics"""

from dataclasses import dataclass, field
from typing import FrozenSet, Optional, Tuple

from bitml.core.paths import ROOT
from bitml.semantics.time import TimePartition

ROOT_CID = "0"


@dataclass(frozen=True)
class ActiveContract(object):
    cid: str
    path: tuple
    contract: object
    balance: int


@dataclass(frozen=True)
class Configuration(object):
    """A state of the abstract transition system.

    ``secrets`` maps each committed secret to ``None`` (committed) or its
    revealed length, as a sorted tuple of pairs. ``exhibited`` holds the
    secrets a fired Reveal branch has shown on chain. The time partition and
    the length assignment are fixed for a whole exploration and are not part
    of the state identity.
    """

    active: FrozenSet[ActiveContract]
    deposits: Tuple[Tuple[str, int], ...]
    secrets: Tuple[Tuple[str, Optional[int]], ...]
    auths: FrozenSet[Tuple[str, tuple]]
    interval: int
    exhibited: FrozenSet[str] = frozenset()
    partition: TimePartition = field(default=TimePartition(), compare=False, repr=False)
    assignment: Tuple[Tuple[str, int], ...] = field(
        default=(), compare=False, repr=False
    )

    def __hash__(self):
        try:
            return self._hash
        except AttributeError:
            value = hash(
                (
                    self.active,
                    self.deposits,
                    self.secrets,
                    self.auths,
                    self.interval,
                    self.exhibited,
                )
            )
            object.__setattr__(self, "_hash", value)
            return value

    def replace(self, **changes):
        values = {
            "active": self.active,
            "deposits": self.deposits,
            "secrets": self.secrets,
            "auths": self.auths,
            "interval": self.interval,
            "exhibited": self.exhibited,
            "partition": self.partition,
            "assignment": self.assignment,
        }
        values.update(changes)
        return Configuration(**values)

    @property
    def secret_state(self):
        return dict(self.secrets)

    @property
    def revealed_lengths(self):
        return {name: length for name, length in self.secrets if length is not None}

    def is_revealed(self, secret):
        return self.secret_state.get(secret) is not None

    def sorted_active(self):
        return sorted(self.active, key=lambda active: active.cid)

    def contract(self, cid):
        for active in self.active:
            if active.cid == cid:
                return active
        return None

    @property
    def locked(self):
        """Balance still held by active contracts"""
        return sum(active.balance for active in self.active)

    def deposit_of(self, participant):
        return sum(value for owner, value in self.deposits if owner == participant)

    @property
    def total(self):
        return self.locked + sum(value for _, value in self.deposits)

    def describe(self):
        return {
            "active": [
                {"cid": a.cid, "balance": a.balance} for a in self.sorted_active()
            ],
            "deposits": [{"owner": o, "value": v} for o, v in self.deposits],
            "secrets": {
                name: ("committed" if length is None else length)
                for name, length in self.secrets
            },
            "exhibited": sorted(self.exhibited),
            "auths": sorted(
                "{}@{}".format(p, "_".join("{}.{}".format(*s) for s in path))
                for p, path in self.auths
            ),
            "interval": self.partition.describe(self.interval),
        }


def initial_configuration(spec, lengths_assignment):
    """Build the configuration right after stipulation

    :param ContractSpec spec: a statically well-formed contract
    :param dict lengths_assignment: secret name -> length it will have once revealed
    :return Configuration: one active contract holding every persistent deposit
    """
    names = sorted(secret.name for secret in spec.precondition.secrets)
    missing = [name for name in names if name not in lengths_assignment]
    if missing:
        raise ValueError("no length assigned to secrets {}".format(", ".join(missing)))
    root = ActiveContract(ROOT_CID, ROOT, spec.contract, spec.precondition.balance)
    return Configuration(
        active=frozenset((root,)),
        deposits=(),
        secrets=tuple((name, None) for name in names),
        auths=frozenset(),
        interval=0,
        partition=TimePartition.of(spec),
        assignment=tuple((name, lengths_assignment[name]) for name in names),
    )
