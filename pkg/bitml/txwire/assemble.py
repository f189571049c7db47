# -*- coding: utf-8 -*-

"""Lowering of script expressions to Bitcoin script bytes.

A conjunct consumes its witness items from the top of the stack: first the
preimages, in first-use order, then the signatures of each signature check
in turn. Preimage sizes are parked on the alt stack while the preimages are
hashed, then brought back for the size checks. A disjunction reads its
selector from the top of the stack.
"""

from bitml.compiler.script import (
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
    SELECTOR,
    Size,
    SizeCmp,
    SizeEq,
    SizeGe,
)
from bitml.exceptions import MissingSlot, TooManyKeys
from bitml.txwire.opcodes import (
    OP_1,
    OP_2DROP,
    OP_ADD,
    OP_BOOLAND,
    OP_BOOLOR,
    OP_CHECKMULTISIGVERIFY,
    OP_CHECKSIG,
    OP_CHECKSIGVERIFY,
    OP_DROP,
    OP_DUP,
    OP_ELSE,
    OP_ENDIF,
    OP_EQUAL,
    OP_EQUALVERIFY,
    OP_FROMALTSTACK,
    OP_GREATERTHANOREQUAL,
    OP_HASH160,
    OP_IF,
    OP_LESSTHAN,
    OP_NOT,
    OP_NUMEQUAL,
    OP_NUMEQUALVERIFY,
    OP_PICK,
    OP_SHA256,
    OP_SIZE,
    OP_SUB,
    OP_TOALTSTACK,
    OP_VERIFY,
    decode_num,
    encode_num,
    push_data,
    push_int,
)
from bitml.txwire.signer import TestSigner
from bitml.utils import hash160

MAX_MULTISIG_KEYS = 15

SIZE_LEAVES = (PreimageHashEq, SizeEq, SizeGe, SizeCmp)


def _ops(*opcodes):
    return bytes(opcodes)


def _size_slots(leaves):
    slots = []
    for leaf in leaves:
        if isinstance(leaf, SIZE_LEAVES):
            slots.extend(s for s in leaf.slots() if s not in slots)
    return slots


def _term(term, depth, extra):
    if isinstance(term, Size):
        return push_int(depth[term.slot] + extra) + _ops(OP_PICK)
    if isinstance(term, Num):
        return push_int(term.n)
    assert isinstance(term, (Plus, Minus))
    left = _term(term.left, depth, extra)
    right = _term(term.right, depth, extra + 1)
    return left + right + _ops(OP_ADD if isinstance(term, Plus) else OP_SUB)


def _padded(term, pad):
    """Rewrite Size(slot) into Size(slot) - pad at the term level"""
    if isinstance(term, Size):
        return Minus(term, Num(pad))
    if isinstance(term, (Plus, Minus)):
        return type(term)(_padded(term.left, pad), _padded(term.right, pad))
    return term


def _condition(cond, depth, extra, pad):
    if isinstance(cond, CmpTrue):
        return _ops(OP_1)
    if isinstance(cond, CmpNot):
        return _condition(cond.operand, depth, extra, pad) + _ops(OP_NOT)
    if isinstance(cond, (CmpAnd, CmpOr)):
        opcode = OP_BOOLAND if isinstance(cond, CmpAnd) else OP_BOOLOR
        left = _condition(cond.left, depth, extra, pad)
        right = _condition(cond.right, depth, extra + 1, pad)
        return left + right + _ops(opcode)
    opcode = OP_NUMEQUAL if isinstance(cond, CmpEq) else OP_LESSTHAN
    assert isinstance(cond, (CmpEq, CmpLt))
    left = _term(_padded(cond.left, pad), depth, extra)
    right = _term(_padded(cond.right, pad), depth, extra + 1)
    return left + right + _ops(opcode)


def _conjunct(expr, signer):
    leaves = expr.leaves()
    slots = _size_slots(leaves)
    code = bytearray()

    for slot in slots:
        digests = [
            leaf.digest
            for leaf in leaves
            if isinstance(leaf, PreimageHashEq) and leaf.slot == slot
        ]
        code += _ops(OP_SIZE, OP_TOALTSTACK)
        if not digests:
            code += _ops(OP_DROP)
        for position, digest in enumerate(digests):
            if position < len(digests) - 1:
                code += _ops(OP_DUP)
            code += _ops(OP_SHA256) + push_data(digest) + _ops(OP_EQUALVERIFY)
    code += _ops(OP_FROMALTSTACK) * len(slots)

    depth = {slot: index for index, slot in enumerate(slots)}
    for leaf in leaves:
        if isinstance(leaf, SizeEq):
            code += push_int(depth[leaf.slot]) + _ops(OP_PICK)
            code += push_int(leaf.n) + _ops(OP_NUMEQUALVERIFY)
        elif isinstance(leaf, SizeGe):
            code += push_int(depth[leaf.slot]) + _ops(OP_PICK)
            code += push_int(leaf.n) + _ops(OP_GREATERTHANOREQUAL, OP_VERIFY)
        elif isinstance(leaf, SizeCmp):
            code += _condition(leaf.cond, depth, 0, leaf.pad) + _ops(OP_VERIFY)
    code += _ops(OP_2DROP) * (len(slots) // 2) + _ops(OP_DROP) * (len(slots) % 2)

    for leaf in leaves:
        if isinstance(leaf, CheckSig):
            code += push_data(signer.pubkey(leaf.key)) + _ops(OP_CHECKSIGVERIFY)
        elif isinstance(leaf, CheckMultiAll):
            count = len(leaf.keys)
            if count > MAX_MULTISIG_KEYS:
                raise TooManyKeys(
                    "{} keys in one multisig check, at most {}".format(
                        count, MAX_MULTISIG_KEYS
                    ),
                    meta={"keys": count},
                )
            code += push_int(count)
            for key in leaf.keys:
                code += push_data(signer.pubkey(key))
            code += push_int(count) + _ops(OP_CHECKMULTISIGVERIFY)
    return bytes(code)


def assemble_script(expr, signer=None):
    """Assemble a redeem script

    :param ScriptExpr expr: the expression
    :param Signer signer: provides the public key of every KeyRef (default: test signer)
    :return bytes: the script
    :raise PushTooLarge: if a single push exceeds 520 bytes
    :raise TooManyKeys: if a multisig check has more than 15 keys
    """
    signer = signer or TestSigner()
    if not isinstance(expr, OrE):
        return _conjunct(expr, signer) + _ops(OP_1)

    code = bytearray()
    last = len(expr.parts) - 1
    for index, part in enumerate(expr.parts[:-1]):
        code += _ops(OP_DUP) + push_int(index) + _ops(OP_NUMEQUAL, OP_IF, OP_DROP)
        code += _conjunct(part, signer) + _ops(OP_ELSE)
    code += push_int(last) + _ops(OP_NUMEQUALVERIFY)
    code += _conjunct(expr.parts[-1], signer)
    code += _ops(OP_ENDIF) * last
    return bytes(code + _ops(OP_1))


def _lookup(witness, slot):
    try:
        return bytes(witness[slot])
    except KeyError:
        raise MissingSlot("no witness for slot {}".format(slot), source={"slot": slot})


def _conjunct_items(expr, witness):
    leaves = expr.leaves()
    items = [_lookup(witness, slot) for slot in _size_slots(leaves)]
    for leaf in leaves:
        if isinstance(leaf, CheckSig):
            items.append(_lookup(witness, leaf.slot))
        elif isinstance(leaf, CheckMultiAll):
            items.extend(_lookup(witness, slot) for slot in reversed(leaf.sig_slots))
            items.append(b"")
    return items


def selector(index):
    """Witness value choosing alternative ``index`` of a disjunction"""
    return encode_num(index)


def witness_stack(expr, witness):
    """Witness items in push order (first pushed first) for a redeem script

    :param ScriptExpr expr: the redeem condition
    :param dict witness: slot name -> bytes
    :return list: the items to push before the redeem script
    :raise MissingSlot: when a needed slot is absent
    """
    if isinstance(expr, OrE):
        choice = _lookup(witness, SELECTOR)
        index = decode_num(choice)
        items = [choice]
        if 0 <= index < len(expr.parts):
            items.extend(_conjunct_items(expr.parts[index], witness))
    else:
        items = _conjunct_items(expr, witness)
    return list(reversed(items))


def script_sig(items, redeem_script=None):
    """Push-only script_sig: the witness items, then the serialized redeem script"""
    pushes = [push_data(item) for item in items]
    if redeem_script is not None:
        pushes.append(push_data(redeem_script))
    return b"".join(pushes)


def p2sh_script_pubkey(redeem_script):
    return _ops(OP_HASH160) + push_data(hash160(redeem_script)) + _ops(OP_EQUAL)


def p2pkh_script_pubkey(pubkey):
    return (
        _ops(OP_DUP, OP_HASH160)
        + push_data(hash160(pubkey))
        + _ops(OP_EQUALVERIFY, OP_CHECKSIG)
    )
