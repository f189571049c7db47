# -*- coding: utf-8 -*-

"""Opcodes used by compiled scripts and canonical push encodings"""

import struct

from bitml.exceptions import PushTooLarge

MAX_PUSH = 520
SIGHASH_ALL = 0x01

OP_0 = 0x00
OP_PUSHDATA1 = 0x4C
OP_PUSHDATA2 = 0x4D
OP_1NEGATE = 0x4F
OP_1 = 0x51
OP_16 = 0x60
OP_IF = 0x63
OP_ELSE = 0x67
OP_ENDIF = 0x68
OP_VERIFY = 0x69
OP_TOALTSTACK = 0x6B
OP_FROMALTSTACK = 0x6C
OP_2DROP = 0x6D
OP_DROP = 0x75
OP_DUP = 0x76
OP_PICK = 0x79
OP_SIZE = 0x82
OP_EQUAL = 0x87
OP_EQUALVERIFY = 0x88
OP_ADD = 0x93
OP_SUB = 0x94
OP_NOT = 0x91
OP_BOOLAND = 0x9A
OP_BOOLOR = 0x9B
OP_NUMEQUAL = 0x9C
OP_NUMEQUALVERIFY = 0x9D
OP_LESSTHAN = 0x9F
OP_GREATERTHANOREQUAL = 0xA2
OP_SHA256 = 0xA8
OP_HASH160 = 0xA9
OP_CHECKSIG = 0xAC
OP_CHECKSIGVERIFY = 0xAD
OP_CHECKMULTISIG = 0xAE
OP_CHECKMULTISIGVERIFY = 0xAF

NAMES = {
    value: name[3:]
    for name, value in list(globals().items())
    if name.startswith("OP_") and isinstance(value, int)
}
NAMES.update({OP_1 + n - 1: str(n) for n in range(1, 17)})
NAMES[OP_0] = "0"


def encode_num(num):
    """Minimal little-endian sign-magnitude encoding of a script number"""
    if num == 0:
        return b""
    magnitude = abs(num)
    result = bytearray()
    while magnitude:
        result.append(magnitude & 0xFF)
        magnitude >>= 8
    if result[-1] & 0x80:
        result.append(0x80 if num < 0 else 0)
    elif num < 0:
        result[-1] |= 0x80
    return bytes(result)


def decode_num(element):
    if not element:
        return 0
    big_endian = element[::-1]
    negative = bool(big_endian[0] & 0x80)
    result = big_endian[0] & 0x7F
    for byte in big_endian[1:]:
        result = (result << 8) + byte
    return -result if negative else result


def push_data(data):
    """Canonical minimal push of a byte string

    :raise PushTooLarge: for payloads above 520 bytes
    """
    data = bytes(data)
    size = len(data)
    if size > MAX_PUSH:
        raise PushTooLarge(
            "push of {} bytes exceeds {}".format(size, MAX_PUSH),
            meta={"size": size},
        )
    if size == 0:
        return bytes([OP_0])
    if size == 1 and 1 <= data[0] <= 16:
        return bytes([OP_1 + data[0] - 1])
    if size == 1 and data[0] == 0x81:
        return bytes([OP_1NEGATE])
    if size < OP_PUSHDATA1:
        return bytes([size]) + data
    if size <= 0xFF:
        return bytes([OP_PUSHDATA1, size]) + data
    return bytes([OP_PUSHDATA2]) + struct.pack("<H", size) + data


def push_int(num):
    return push_data(encode_num(num))


def iter_script(script):
    """Yield ``(opcode, payload)``; payload is None for non-push opcodes

    :raise ValueError: on a truncated push
    """
    position = 0
    while position < len(script):
        opcode = script[position]
        position += 1
        if OP_0 < opcode < OP_PUSHDATA1:
            size = opcode
        elif opcode == OP_PUSHDATA1:
            size = script[position] if position < len(script) else -1
            position += 1
        elif opcode == OP_PUSHDATA2:
            if position + 2 > len(script):
                raise ValueError("truncated push length")
            size = struct.unpack("<H", script[position : position + 2])[0]
            position += 2
        else:
            yield opcode, (b"" if opcode == OP_0 else None)
            continue
        if size < 0 or position + size > len(script):
            raise ValueError("truncated push")
        yield opcode, bytes(script[position : position + size])
        position += size


def disassemble(script):
    """Human-readable form used by docs and failing tests"""
    words = []
    for opcode, payload in iter_script(script):
        if payload is not None and opcode != OP_0:
            words.append(payload.hex())
        else:
            words.append(NAMES.get(opcode, "0x{:02x}".format(opcode)))
    return " ".join(words)
