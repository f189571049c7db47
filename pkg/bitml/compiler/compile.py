# -*- coding: utf-8 -*-

"""Translation of a contract into a DAG of transaction templates.

One template per branch of every choice node, plus ``T_init`` which gathers
the precondition deposits. Each template burns exactly ``fee_per_tx``; every
contract output carries the fees of its deepest execution, and the surplus
of the fee deposits rides along until a withdraw pays it out.
"""

import logging

from bitml.config import DEFAULTS
from bitml.core.nodes import After, Auth, Reveal, Split, Withdraw, strip_guards
from bitml.core.paths import ROOT, child_path, format_path, walk
from bitml.core.predicate import Add, And, Eq, IntConst, Lt, Not, Or, PTrue, SecretLen
from bitml.exceptions import InsufficientFees
from bitml.compiler.keys import auth_key, branch_key
from bitml.compiler.script import (
    AndE,
    CheckMultiAll,
    CheckSig,
    CmpAnd,
    CmpEq,
    CmpLt,
    CmpNot,
    CmpOr,
    CmpTrue,
    Minus,
    Num,
    OrE,
    Plus,
    PreimageHashEq,
    Size,
    SizeCmp,
    SizeEq,
    SizeGe,
    auth_slot,
    branch_slots,
    secret_slot,
    signature_slot,
)
from bitml.compiler.templates import (
    INIT,
    P2PKH,
    P2SH,
    ExternalSource,
    InternalSource,
    TxDag,
    TxInput,
    TxOutput,
    TxTemplate,
)

logger = logging.getLogger(__name__)


def _term(expr):
    if isinstance(expr, IntConst):
        return Num(expr.n)
    if isinstance(expr, SecretLen):
        return Size(secret_slot(expr.secret))
    kind = Plus if isinstance(expr, Add) else Minus
    return kind(_term(expr.left), _term(expr.right))


def _condition(predicate):
    if isinstance(predicate, PTrue):
        return CmpTrue()
    if isinstance(predicate, Not):
        return CmpNot(_condition(predicate.operand))
    if isinstance(predicate, (And, Or)):
        kind = CmpAnd if isinstance(predicate, And) else CmpOr
        return kind(_condition(predicate.left), _condition(predicate.right))
    kind = CmpEq if isinstance(predicate, Eq) else CmpLt
    return kind(_term(predicate.left), _term(predicate.right))


def compile_predicate(predicate, pad):
    """Script checks for a predicate over the sizes of padded preimages

    ``len s = n`` at the top of a predicate becomes an exact size check.
    """
    if isinstance(predicate, PTrue):
        return []
    if isinstance(predicate, Eq):
        sides = (predicate.left, predicate.right)
        for secret, constant in (sides, sides[::-1]):
            if isinstance(secret, SecretLen) and isinstance(constant, IntConst):
                return [SizeEq(secret_slot(secret.secret), pad + constant.n)]
    return [SizeCmp(_condition(predicate), pad)]


def _conjunct(spec, contract_path, index, branch, pad):
    guards, body = strip_guards(branch)
    names = spec.participant_names
    parts = [
        CheckMultiAll(
            tuple(branch_key(name, contract_path, index) for name in names),
            tuple(signature_slot(name) for name in names),
        )
    ]
    if isinstance(body, Reveal):
        for name in body.secrets:
            commitment = spec.precondition.secret(name)
            slot = secret_slot(name)
            parts.append(PreimageHashEq(slot, bytes.fromhex(commitment.hash)))
            parts.append(SizeGe(slot, pad))
        parts.extend(compile_predicate(body.predicate, pad))
    for guard in guards:
        if isinstance(guard, Auth):
            parts.append(
                CheckSig(
                    auth_key(guard.authorizer, contract_path, index),
                    auth_slot(guard.authorizer),
                )
            )
    return parts[0] if len(parts) == 1 else AndE(tuple(parts))


def script_of(contract, spec, contract_path=ROOT, pad=None):
    """Redeem condition of the output that holds ``contract``

    :param Contract contract: a choice node
    :param ContractSpec spec: the enclosing contract
    :param tuple contract_path: path of the node, for key derivation
    :param int pad: byte pad of secret preimages (default ``SECRET_PAD``)
    :return ScriptExpr: one conjunct per branch, in an OrE when there are several
    """
    if pad is None:
        pad = DEFAULTS["SECRET_PAD"]
    conjuncts = tuple(
        _conjunct(spec, contract_path, index, branch, pad)
        for index, branch in enumerate(contract.branches)
    )
    return conjuncts[0] if len(conjuncts) == 1 else OrE(conjuncts)


def transaction_count(contract):
    """Templates along the longest execution starting at ``contract``"""
    best = 0
    for branch in contract.branches:
        _, body = strip_guards(branch)
        if isinstance(body, Withdraw):
            count = 1
        elif isinstance(body, Split):
            count = 1 + sum(transaction_count(arm.contract) for arm in body.arms)
        else:
            count = 1 + transaction_count(body.continuation)
        best = max(best, count)
    return best


def template_count(spec):
    """Templates ``compile`` generates: ``T_init`` plus one per branch"""
    return 1 + sum(len(node.branches) for _, node in walk(spec.contract))


class _Compiler(object):
    def __init__(self, spec, fee_per_tx, pad):
        self.spec = spec
        self.fee = fee_per_tx
        self.pad = pad
        self.dag = TxDag(spec, fee_per_tx)

    def output(self, contract, path, value):
        script = script_of(contract, self.spec, path, self.pad)
        return TxOutput(value, P2SH(script, path))

    def init(self):
        pre = self.spec.precondition
        inputs = tuple(
            TxInput(ExternalSource(d.outpoint, d.owner), d.value, ("sig", "pubkey"))
            for d in pre.persistent_deposits + pre.fee_deposits
        )
        value = pre.balance + pre.fees - self.fee
        output = self.output(self.spec.contract, ROOT, value)
        self.dag.add(TxTemplate(INIT, inputs, (output,)))
        self.branches(self.spec.contract, ROOT, INIT, 0, output)

    def branches(self, contract, path, parent, index, output):
        for choice, branch in enumerate(contract.branches):
            self.branch(contract, path, choice, branch, parent, index, output)

    def branch(self, contract, path, choice, branch, parent, index, output):
        guards, body = strip_guards(branch)
        branch_path = child_path(path, choice)
        script = output.payout.script
        spend = TxInput(
            InternalSource(parent, index),
            output.value,
            branch_slots(script, choice),
            script,
            choice,
        )
        locktime = max(
            [g.height for g in guards if isinstance(g, After)], default=0
        )
        available = output.value - self.fee
        name = "T_" + format_path(branch_path)

        if isinstance(body, Withdraw):
            outputs = (TxOutput(available, P2PKH(body.recipient)),)
            nested = []
        elif isinstance(body, Reveal):
            outputs = (self.output(body.continuation, branch_path, available),)
            nested = [(body.continuation, branch_path)]
        else:
            values = [
                arm.value + self.fee * transaction_count(arm.contract)
                for arm in body.arms
            ]
            values[0] += available - sum(values)
            nested = [
                (arm.contract, child_path(branch_path, arm_index))
                for arm_index, arm in enumerate(body.arms)
            ]
            outputs = tuple(
                self.output(arm_contract, arm_path, value)
                for (arm_contract, arm_path), value in zip(nested, values)
            )

        self.dag.add(TxTemplate(name, (spend,), outputs, locktime, branch_path))
        for out_index, (nested_contract, nested_path) in enumerate(nested):
            self.branches(
                nested_contract, nested_path, name, out_index, outputs[out_index]
            )


def compile(spec, fee_per_tx=None, pad=None):
    """Compile a contract into transaction templates

    :param ContractSpec spec: a contract that passed ``check_static``
    :param int fee_per_tx: satoshi burned by every template (default ``FEE_PER_TX``)
    :param int pad: byte pad of secret preimages (default ``SECRET_PAD``)
    :return TxDag: the templates in topological order
    :raise InsufficientFees: when the fee deposits do not cover every template
    """
    if fee_per_tx is None:
        fee_per_tx = DEFAULTS["FEE_PER_TX"]
    if pad is None:
        pad = DEFAULTS["SECRET_PAD"]
    required = fee_per_tx * template_count(spec)
    available = spec.precondition.fees
    if available < required:
        raise InsufficientFees(
            "fee deposits of {} satoshi do not cover {} transactions at {} each".format(
                available, template_count(spec), fee_per_tx
            ),
            meta={"required": required, "available": available},
        )
    compiler = _Compiler(spec, fee_per_tx, pad)
    compiler.init()
    logger.info(
        "compiled %s into %d templates", spec.name or "contract", len(compiler.dag)
    )
    return compiler.dag
