# -*- coding: utf-8 -*-

"""Canonical surface syntax of a contract"""

from bitml.core.nodes import After, Auth, Reveal, Split, Withdraw
from bitml.core.paths import path_to_ints
from bitml.core.predicate import (
    Add,
    And,
    Eq,
    IntConst,
    Lt,
    Not,
    Or,
    PTrue,
    SecretLen,
    Sub,
)

INDENT = "  "


def _expression(expr):
    if isinstance(expr, IntConst):
        return str(expr.n)
    if isinstance(expr, SecretLen):
        return "(len {})".format(expr.secret)
    symbol = "+" if isinstance(expr, Add) else "-"
    assert isinstance(expr, (Add, Sub))
    return "({} {} {})".format(symbol, _expression(expr.left), _expression(expr.right))


def format_predicate(predicate):
    if isinstance(predicate, PTrue):
        return "true"
    if isinstance(predicate, Not):
        return "(not {})".format(format_predicate(predicate.operand))
    if isinstance(predicate, (And, Or)):
        return "({} {} {})".format(
            "and" if isinstance(predicate, And) else "or",
            format_predicate(predicate.left),
            format_predicate(predicate.right),
        )
    assert isinstance(predicate, (Eq, Lt))
    return "({} {} {})".format(
        "=" if isinstance(predicate, Eq) else "<",
        _expression(predicate.left),
        _expression(predicate.right),
    )


def format_branch_path(path):
    return "(branch {})".format(" ".join(str(i) for i in path_to_ints(path)))


def _contract(contract, depth):
    if len(contract.branches) == 1:
        return _branch(contract.branches[0], depth)
    pad = INDENT * (depth + 1)
    inner = "\n".join(pad + _branch(b, depth + 1) for b in contract.branches)
    return "(choice\n{})".format(inner)


def _branch(branch, depth):
    pad = INDENT * (depth + 1)
    if isinstance(branch, Withdraw):
        return '(withdraw "{}")'.format(branch.recipient)
    if isinstance(branch, Auth):
        return '(auth "{}" {})'.format(branch.authorizer, _branch(branch.inner, depth))
    if isinstance(branch, After):
        return "(after {} {})".format(branch.height, _branch(branch.inner, depth))
    if isinstance(branch, Split):
        arms = "\n".join(
            "{}({} -> {})".format(pad, arm.value, _contract(arm.contract, depth + 1))
            for arm in branch.arms
        )
        return "(split\n{})".format(arms)
    assert isinstance(branch, Reveal)
    predicate = ""
    if not isinstance(branch.predicate, PTrue):
        predicate = " (pred {})".format(format_predicate(branch.predicate))
    return "(reveal ({}){}\n{}{})".format(
        " ".join(branch.secrets),
        predicate,
        pad,
        _contract(branch.continuation, depth + 1),
    )


def _outpoint(outpoint):
    return "(outpoint {} {})".format(outpoint.txid, outpoint.vout)


def pretty_print(spec):
    """Render a contract in the surface syntax read by ``parse_contract``

    :param ContractSpec spec: the contract
    :return str: source text that parses back to an equal ContractSpec
    """
    lines = [
        '(participant "{}" {})'.format(p.name, p.pubkey) for p in spec.participants
    ]
    pre = spec.precondition
    items = [
        '(deposit "{}" {} {})'.format(d.owner, d.value, _outpoint(d.outpoint))
        for d in pre.persistent_deposits
    ]
    items += [
        '(secret "{}" {} {})'.format(s.owner, s.name, s.hash) for s in pre.secrets
    ]
    items += [
        '(fee "{}" {} {})'.format(d.owner, d.value, _outpoint(d.outpoint))
        for d in pre.fee_deposits
    ]
    lines.append("(contract")
    lines.append(INDENT + "(pre")
    lines.extend(INDENT * 2 + item for item in items)
    lines[-1] += ")"
    lines.append(INDENT + _contract(spec.contract, 1) + ")")
    return "\n".join(lines) + "\n"


def format_strategy(strategy):
    """Render a single-rule strategy as ``(strategy ...)`` forms, one per rule"""
    forms = []
    for rule in strategy.rules:
        action = rule.action
        if hasattr(action, "secret"):
            text = "(do-reveal {})".format(action.secret)
        else:
            text = "(do-auth {})".format(format_branch_path(action.path))
        condition = str(rule.condition)
        suffix = "" if condition == "true" else " (if {})".format(condition)
        forms.append('(strategy "{}" {}{})'.format(strategy.participant, text, suffix))
    return "\n".join(forms)
