# -*- coding: utf-8 -*-

"""Tree-level evaluation of script expressions against a witness"""

from bitml.compiler.script import (
    AndE,
    CheckMultiAll,
    CheckSig,
    OrE,
    PreimageHashEq,
    SELECTOR,
    SizeCmp,
    SizeEq,
    SizeGe,
    TrueE,
)
from bitml.exceptions import MissingSlot
from bitml.txwire.opcodes import decode_num
from bitml.txwire.signer import verify_signature
from bitml.utils import sha256


class SignatureChecker(object):
    """Checks signatures of one digest against the keys of a signer"""

    def __init__(self, signer, digest):
        self.signer = signer
        self.digest = digest

    def check_sig(self, keyref, signature):
        return verify_signature(self.signer.pubkey(keyref), signature, self.digest)


def _require(script, witness):
    slots = script.slots()
    if isinstance(script, OrE):
        selected = _selected(script, witness)
        slots = script.branch_slots(selected) if selected is not None else (SELECTOR,)
    for slot in slots:
        if slot not in witness:
            raise MissingSlot(
                "no witness for slot {}".format(slot), source={"slot": slot}
            )


def _selected(script, witness):
    if SELECTOR not in witness:
        raise MissingSlot("no witness for slot {}".format(SELECTOR))
    raw = bytes(witness[SELECTOR])
    if len(raw) > 4:
        return None
    index = decode_num(raw)
    return index if 0 <= index < len(script.parts) else None


def _evaluate(script, witness, ctx):
    if isinstance(script, TrueE):
        return True
    if isinstance(script, CheckSig):
        return ctx.check_sig(script.key, witness[script.slot])
    if isinstance(script, CheckMultiAll):
        return all(
            ctx.check_sig(key, witness[slot])
            for key, slot in zip(script.keys, script.sig_slots)
        )
    if isinstance(script, PreimageHashEq):
        return sha256(witness[script.slot]) == script.digest
    if isinstance(script, SizeEq):
        return len(witness[script.slot]) == script.n
    if isinstance(script, SizeGe):
        return len(witness[script.slot]) >= script.n
    if isinstance(script, SizeCmp):
        sizes = {slot: len(witness[slot]) for slot in script.slots()}
        return script.cond.evaluate(sizes, script.pad)
    if isinstance(script, AndE):
        return all(_evaluate(part, witness, ctx) for part in script.parts)
    if isinstance(script, OrE):
        index = _selected(script, witness)
        return index is not None and _evaluate(script.parts[index], witness, ctx)
    raise ValueError("unknown script expression {!r}".format(script))


def interpret(script, witness, ctx):
    """Evaluate a redeem condition

    :param ScriptExpr script: the condition
    :param dict witness: slot name -> bytes
    :param ctx: object with ``check_sig(keyref, signature) -> bool``
    :return bool: whether the witness satisfies the condition
    :raise MissingSlot: when a slot the witness must cover is absent
    """
    _require(script, witness)
    return _evaluate(script, witness, ctx)
