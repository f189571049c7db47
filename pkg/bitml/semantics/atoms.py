# -*- coding: utf-8 -*-

"""State predicates usable as LTL atoms"""

from dataclasses import dataclass

from bitml.core.paths import path_to_ints


class Atom(object):
    __slots__ = ()


@dataclass(frozen=True)
class SecretRevealed(Atom):
    """``s revealed``: a fired Reveal branch has shown the secret on chain"""

    secret: str

    def holds(self, cfg):
        return self.secret in cfg.exhibited

    def __str__(self):
        return "{} revealed".format(self.secret)


@dataclass(frozen=True)
class SecretKnown(Atom):
    """``s known``: the owner has revealed the secret off chain"""

    secret: str

    def holds(self, cfg):
        return cfg.is_revealed(self.secret)

    def __str__(self):
        return "{} known".format(self.secret)


@dataclass(frozen=True)
class HasDeposit(Atom):
    participant: str
    amount: int

    def holds(self, cfg):
        return cfg.deposit_of(self.participant) >= self.amount

    def __str__(self):
        return "{} has-deposit>= {} satoshi".format(self.participant, self.amount)


@dataclass(frozen=True)
class Authorized(Atom):
    participant: str
    path: tuple

    def holds(self, cfg):
        return (self.participant, tuple(self.path)) in cfg.auths

    def __str__(self):
        return "{} authorized (branch {})".format(
            self.participant, " ".join(str(i) for i in path_to_ints(self.path))
        )


@dataclass(frozen=True)
class Terminated(Atom):
    def holds(self, cfg):
        return not cfg.active

    def __str__(self):
        return "contract-terminated"


def atom_holds(cfg, atom):
    """Evaluate an atom in a configuration

    :param Configuration cfg: the configuration
    :param Atom atom: the atom
    :return bool: whether it holds
    """
    return atom.holds(cfg)
