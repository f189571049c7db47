# -*- coding: utf-8 -*-

"""A small stack machine for the opcodes compiled scripts use.

It follows Bitcoin Core's semantics closely enough to tell whether a
finalized input spends its P2SH output: push-only script_sig, HASH160 check
of the serialized redeem script, then execution of the redeem script.
"""

import hashlib

from bitml.txwire.opcodes import (
    OP_1,
    OP_16,
    OP_1NEGATE,
    OP_2DROP,
    OP_ADD,
    OP_BOOLAND,
    OP_BOOLOR,
    OP_CHECKMULTISIG,
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
    iter_script,
)
from bitml.utils import hash160


class ScriptFailure(Exception):
    pass


def cast_to_bool(element):
    for index, byte in enumerate(element):
        if byte:
            # negative zero is false
            return not (index == len(element) - 1 and byte == 0x80)
    return False


def _bool(value):
    return encode_num(1 if value else 0)


def run_script(script, stack, check_sig):
    """Execute ``script`` on ``stack`` (top at the end), in place

    :param callable check_sig: ``(pubkey, signature) -> bool``
    :return list: the final stack
    :raise ScriptFailure: when a VERIFY fails or the stack underflows
    """
    alt = []
    conditions = []

    def pop():
        if not stack:
            raise ScriptFailure("stack underflow")
        return stack.pop()

    def verify(value):
        if not value:
            raise ScriptFailure("verify failed")

    for opcode, payload in iter_script(script):
        if opcode == OP_IF:
            conditions.append(cast_to_bool(pop()) if all(conditions) else False)
            continue
        if opcode == OP_ELSE:
            conditions[-1] = not conditions[-1]
            continue
        if opcode == OP_ENDIF:
            conditions.pop()
            continue
        if not all(conditions):
            continue

        if payload is not None:
            stack.append(payload)
        elif OP_1 <= opcode <= OP_16:
            stack.append(encode_num(opcode - OP_1 + 1))
        elif opcode == OP_1NEGATE:
            stack.append(encode_num(-1))
        elif opcode == OP_VERIFY:
            verify(cast_to_bool(pop()))
        elif opcode == OP_TOALTSTACK:
            alt.append(pop())
        elif opcode == OP_FROMALTSTACK:
            stack.append(alt.pop())
        elif opcode == OP_2DROP:
            pop()
            pop()
        elif opcode == OP_DROP:
            pop()
        elif opcode == OP_DUP:
            top = pop()
            stack.extend([top, top])
        elif opcode == OP_PICK:
            depth = decode_num(pop())
            if depth >= len(stack):
                raise ScriptFailure("pick out of range")
            stack.append(stack[-1 - depth])
        elif opcode == OP_SIZE:
            if not stack:
                raise ScriptFailure("stack underflow")
            stack.append(encode_num(len(stack[-1])))
        elif opcode in (OP_EQUAL, OP_EQUALVERIFY):
            right, left = pop(), pop()
            if opcode == OP_EQUAL:
                stack.append(_bool(left == right))
            else:
                verify(left == right)
        elif opcode in (OP_ADD, OP_SUB):
            right, left = decode_num(pop()), decode_num(pop())
            stack.append(encode_num(left + right if opcode == OP_ADD else left - right))
        elif opcode == OP_NOT:
            stack.append(_bool(decode_num(pop()) == 0))
        elif opcode in (OP_BOOLAND, OP_BOOLOR):
            right, left = decode_num(pop()) != 0, decode_num(pop()) != 0
            value = (left and right) if opcode == OP_BOOLAND else (left or right)
            stack.append(_bool(value))
        elif opcode in (OP_NUMEQUAL, OP_NUMEQUALVERIFY):
            right, left = decode_num(pop()), decode_num(pop())
            if opcode == OP_NUMEQUAL:
                stack.append(_bool(left == right))
            else:
                verify(left == right)
        elif opcode == OP_LESSTHAN:
            right, left = decode_num(pop()), decode_num(pop())
            stack.append(_bool(left < right))
        elif opcode == OP_GREATERTHANOREQUAL:
            right, left = decode_num(pop()), decode_num(pop())
            stack.append(_bool(left >= right))
        elif opcode == OP_SHA256:
            stack.append(hashlib.sha256(pop()).digest())
        elif opcode == OP_HASH160:
            stack.append(hash160(pop()))
        elif opcode in (OP_CHECKSIG, OP_CHECKSIGVERIFY):
            pubkey, signature = pop(), pop()
            valid = check_sig(pubkey, signature)
            if opcode == OP_CHECKSIG:
                stack.append(_bool(valid))
            else:
                verify(valid)
        elif opcode in (OP_CHECKMULTISIG, OP_CHECKMULTISIGVERIFY):
            keys = [pop() for _ in range(decode_num(pop()))][::-1]
            signatures = [pop() for _ in range(decode_num(pop()))][::-1]
            if pop() != b"":
                raise ScriptFailure("multisig dummy must be empty")
            position = 0
            valid = True
            for signature in signatures:
                while position < len(keys) and not check_sig(
                    keys[position], signature
                ):
                    position += 1
                if position == len(keys):
                    valid = False
                    break
                position += 1
            if opcode == OP_CHECKMULTISIG:
                stack.append(_bool(valid))
            else:
                verify(valid)
        else:
            raise ScriptFailure("unsupported opcode 0x{:02x}".format(opcode))
    if conditions:
        raise ScriptFailure("unbalanced IF")
    return stack


def accepts(script, stack, check_sig):
    """Whether ``script`` leaves exactly one true element on ``stack``"""
    try:
        final = run_script(script, list(stack), check_sig)
    except ScriptFailure:
        return False
    return len(final) == 1 and cast_to_bool(final[0])


def spends_p2sh(script_sig, script_pubkey, check_sig):
    """Evaluate a P2SH spend: push-only script_sig, hash check, redeem script"""
    stack = []
    for opcode, payload in iter_script(script_sig):
        if payload is not None:
            stack.append(payload)
        elif OP_1 <= opcode <= OP_16:
            stack.append(encode_num(opcode - OP_1 + 1))
        elif opcode == OP_1NEGATE:
            stack.append(encode_num(-1))
        else:
            return False
    if not stack:
        return False
    redeem = stack.pop()
    if not accepts(script_pubkey, [redeem], check_sig):
        return False
    return accepts(redeem, stack, check_sig)
