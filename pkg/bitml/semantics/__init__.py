# -*- coding: utf-8 -*-

from bitml.semantics.time import TimePartition
from bitml.semantics.configuration import (
    ActiveContract,
    Configuration,
    initial_configuration,
)
from bitml.semantics.moves import (
    Authorize,
    Delay,
    Fire,
    Move,
    RevealSecret,
    apply_move,
    enumerate_moves,
)
from bitml.semantics.atoms import (
    Authorized,
    HasDeposit,
    SecretKnown,
    SecretRevealed,
    Terminated,
    atom_holds,
)

__all__ = [
    "TimePartition",
    "ActiveContract",
    "Configuration",
    "initial_configuration",
    "Authorize",
    "Delay",
    "Fire",
    "Move",
    "RevealSecret",
    "apply_move",
    "enumerate_moves",
    "Authorized",
    "HasDeposit",
    "SecretKnown",
    "SecretRevealed",
    "Terminated",
    "atom_holds",
]
