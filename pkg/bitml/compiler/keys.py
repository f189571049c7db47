# -*- coding: utf-8 -*-

"""References to the keys a template is signed with"""

from dataclasses import dataclass

from bitml.core.paths import child_path, format_path

DEPOSIT = "deposit"


@dataclass(frozen=True, order=True)
class KeyRef(object):
    """A participant key derived for one position of the contract.

    ``path`` is the formatted branch path, with ``/auth`` appended for the key
    that signs an authorization; ``deposit`` names the key owning the
    participant's precondition deposits.
    """

    participant: str
    path: str

    def __str__(self):
        return "{}@{}".format(self.participant, self.path)


def branch_key(participant, contract_path, branch):
    return KeyRef(participant, format_path(child_path(contract_path, branch)))


def auth_key(participant, contract_path, branch):
    return KeyRef(
        participant, format_path(child_path(contract_path, branch)) + "/auth"
    )


def deposit_key(participant):
    return KeyRef(participant, DEPOSIT)
