# -*- coding: utf-8 -*-

"""Static checks over a parsed contract"""

import logging
from collections import Counter

from bitml.core.nodes import Auth, Split, Withdraw, Reveal, strip_guards
from bitml.core.paths import ROOT, child_path, continuation_paths, format_path

logger = logging.getLogger(__name__)


class StaticError(object):
    """A well-formedness violation; returned, never raised"""

    kind = "StaticError"

    def __init__(self, detail, source=None):
        self.detail = detail
        self.source = source or {}

    def to_dict(self):
        error_dict = {"title": self.kind, "detail": self.detail}
        if self.source:
            error_dict["source"] = self.source
        return error_dict

    def _key(self):
        return (self.kind, self.detail, sorted(self.source.items()))

    def __eq__(self, other):
        return isinstance(other, StaticError) and self._key() == other._key()

    def __lt__(self, other):
        return self._key() < other._key()

    def __hash__(self):
        return hash((self.kind, self.detail))

    def __repr__(self):
        return "{}({!r})".format(self.kind, self.detail)


class DuplicateSecretHash(StaticError):
    kind = "DuplicateSecretHash"


class DuplicateOutpoint(StaticError):
    kind = "DuplicateOutpoint"


class DuplicateSecretName(StaticError):
    kind = "DuplicateSecretName"


class DuplicateParticipant(StaticError):
    kind = "DuplicateParticipant"


class UnknownParticipant(StaticError):
    kind = "UnknownParticipant"


class UnknownSecret(StaticError):
    kind = "UnknownSecret"


class ValueFlowMismatch(StaticError):
    kind = "ValueFlowMismatch"


def _duplicates(values):
    return sorted(value for value, count in Counter(values).items() if count > 1)


def check_static(spec):
    """Return every well-formedness violation of a contract

    :param ContractSpec spec: the contract
    :return list: the violations, sorted; empty when the contract is well-formed
    """
    pre = spec.precondition
    errors = []

    for name in _duplicates(spec.participant_names):
        errors.append(
            DuplicateParticipant(
                "participant {} declared twice".format(name), {"participant": name}
            )
        )
    for digest in _duplicates(secret.hash.lower() for secret in pre.secrets):
        errors.append(
            DuplicateSecretHash(
                "secrets commit the same hash {}".format(digest), {"hash": digest}
            )
        )
    for name in _duplicates(secret.name for secret in pre.secrets):
        errors.append(
            DuplicateSecretName(
                "secret {} committed twice".format(name), {"secret": name}
            )
        )
    for outpoint in _duplicates(str(outpoint) for outpoint in pre.outpoints):
        errors.append(
            DuplicateOutpoint(
                "outpoint {} is spent twice".format(outpoint), {"outpoint": outpoint}
            )
        )

    declared = set(spec.participant_names)
    owners = [deposit.owner for deposit in pre.persistent_deposits + pre.fee_deposits]
    owners += [secret.owner for secret in pre.secrets]
    for owner in sorted(set(owners) - declared):
        errors.append(
            UnknownParticipant(
                "precondition names undeclared participant {}".format(owner),
                {"participant": owner},
            )
        )

    committed = set(secret.name for secret in pre.secrets)
    errors.extend(_check_tree(spec.contract, ROOT, declared, committed, frozenset()))
    errors.extend(check_value_flow(spec))

    errors = sorted(set(errors))
    if errors:
        logger.debug("%d static errors in %s", len(errors), spec.name or "contract")
    return errors


def _check_tree(contract, prefix, declared, committed, revealed):
    errors = []
    for index, branch in enumerate(contract.branches):
        path = child_path(prefix, index)
        source = {"path": format_path(path)}
        guards, body = strip_guards(branch)
        for guard in guards:
            if isinstance(guard, Auth) and guard.authorizer not in declared:
                errors.append(
                    UnknownParticipant(
                        "auth by undeclared participant {}".format(guard.authorizer),
                        dict(source, participant=guard.authorizer),
                    )
                )
        if isinstance(body, Withdraw) and body.recipient not in declared:
            errors.append(
                UnknownParticipant(
                    "withdraw to undeclared participant {}".format(body.recipient),
                    dict(source, participant=body.recipient),
                )
            )
        inner_revealed = revealed
        if isinstance(body, Reveal):
            for name in body.secrets:
                if name not in committed:
                    errors.append(
                        UnknownSecret(
                            "reveal of uncommitted secret {}".format(name),
                            dict(source, secret=name),
                        )
                    )
            inner_revealed = revealed | frozenset(body.secrets)
            for name in sorted(body.predicate.secrets() - inner_revealed):
                errors.append(
                    UnknownSecret(
                        "predicate reads secret {} which is not revealed".format(name),
                        dict(source, secret=name),
                    )
                )
        nested = continuation_paths(prefix, index, body)
        if isinstance(body, Split):
            contracts = [arm.contract for arm in body.arms]
        elif isinstance(body, Reveal):
            contracts = [body.continuation]
        else:
            contracts = []
        for nested_path, nested_contract in zip(nested, contracts):
            errors.extend(
                _check_tree(
                    nested_contract, nested_path, declared, committed, inner_revealed
                )
            )
    return errors


def check_value_flow(spec):
    """Report every split whose arms do not tile the balance entering it

    :param ContractSpec spec: the contract
    :return list: ValueFlowMismatch errors
    """
    errors = []
    stack = [(spec.contract, ROOT, spec.precondition.balance)]
    while stack:
        contract, prefix, balance = stack.pop()
        for index, branch in enumerate(contract.branches):
            _, body = strip_guards(branch)
            if isinstance(body, Split):
                total = sum(arm.value for arm in body.arms)
                path = child_path(prefix, index)
                if total != balance:
                    errors.append(
                        ValueFlowMismatch(
                            "split at {} distributes {} of a {} balance".format(
                                format_path(path), total, balance
                            ),
                            {"path": format_path(path)},
                        )
                    )
                nested = continuation_paths(prefix, index, body)
                for nested_path, arm in zip(nested, body.arms):
                    stack.append((arm.contract, nested_path, arm.value))
            elif isinstance(body, Reveal):
                stack.append((body.continuation, child_path(prefix, index), balance))
    return sorted(errors)
