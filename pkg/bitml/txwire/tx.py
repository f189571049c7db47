# -*- coding: utf-8 -*-

"""Legacy Bitcoin transaction wire format, txids and SIGHASH_ALL digests"""

import struct
from dataclasses import dataclass, field, replace
from io import BytesIO
from typing import Tuple

from bitml.exceptions import IndexOutOfRange, MalformedBytes
from bitml.txwire.opcodes import SIGHASH_ALL
from bitml.utils import hash256

VERSION = 2
FINAL_SEQUENCE = 0xFFFFFFFF
LOCKTIME_SEQUENCE = 0xFFFFFFFE


@dataclass(frozen=True)
class TxIn(object):
    prev_txid: bytes
    prev_vout: int
    script_sig: bytes = b""
    sequence: int = FINAL_SEQUENCE

    def __post_init__(self):
        if len(self.prev_txid) != 32:
            raise ValueError("prev_txid has 32 bytes in internal byte order")


@dataclass(frozen=True)
class TxOut(object):
    value: int
    script_pubkey: bytes


@dataclass(frozen=True)
class RawTx(object):
    inputs: Tuple[TxIn, ...] = field(default_factory=tuple)
    outputs: Tuple[TxOut, ...] = field(default_factory=tuple)
    locktime: int = 0
    version: int = VERSION

    def serialize(self):
        return serialize(self)

    @property
    def txid(self):
        return txid(self)


def encode_compact_size(n):
    if n < 0xFD:
        return bytes([n])
    if n <= 0xFFFF:
        return b"\xfd" + struct.pack("<H", n)
    if n <= 0xFFFFFFFF:
        return b"\xfe" + struct.pack("<I", n)
    return b"\xff" + struct.pack("<Q", n)


def _bytes_with_size(data):
    return encode_compact_size(len(data)) + data


def serialize(tx):
    """Legacy (non-witness) serialization

    :param RawTx tx: the transaction
    :return bytes: the wire bytes
    """
    parts = [struct.pack("<i", tx.version), encode_compact_size(len(tx.inputs))]
    for txin in tx.inputs:
        parts.append(bytes(txin.prev_txid))
        parts.append(struct.pack("<I", txin.prev_vout))
        parts.append(_bytes_with_size(bytes(txin.script_sig)))
        parts.append(struct.pack("<I", txin.sequence))
    parts.append(encode_compact_size(len(tx.outputs)))
    for txout in tx.outputs:
        parts.append(struct.pack("<q", txout.value))
        parts.append(_bytes_with_size(bytes(txout.script_pubkey)))
    parts.append(struct.pack("<I", tx.locktime))
    return b"".join(parts)


class _Reader(object):
    def __init__(self, data):
        self.stream = BytesIO(data)
        self.size = len(data)

    def read(self, n):
        chunk = self.stream.read(n)
        if len(chunk) != n:
            raise MalformedBytes(
                "truncated transaction: wanted {} bytes at offset {}".format(
                    n, self.stream.tell() - len(chunk)
                )
            )
        return chunk

    def unpack(self, fmt):
        return struct.unpack(fmt, self.read(struct.calcsize(fmt)))[0]

    def compact_size(self):
        first = self.read(1)[0]
        if first < 0xFD:
            return first
        fmt, minimum = {0xFD: ("<H", 0xFD), 0xFE: ("<I", 0x10000)}.get(
            first, ("<Q", 0x100000000)
        )
        value = self.unpack(fmt)
        if value < minimum:
            raise MalformedBytes("non-canonical compact size")
        return value

    def sized_bytes(self):
        size = self.compact_size()
        if size > self.size:
            raise MalformedBytes("length {} exceeds the input".format(size))
        return self.read(size)

    def at_end(self):
        return self.stream.tell() == self.size


def deserialize(data):
    """Parse legacy wire bytes

    :param bytes data: the bytes
    :return RawTx: the transaction
    :raise MalformedBytes: on truncated, non-canonical or trailing bytes
    """
    reader = _Reader(bytes(data))
    version = reader.unpack("<i")
    inputs = []
    for _ in range(reader.compact_size()):
        prev_txid = reader.read(32)
        prev_vout = reader.unpack("<I")
        script_sig = reader.sized_bytes()
        sequence = reader.unpack("<I")
        inputs.append(TxIn(prev_txid, prev_vout, script_sig, sequence))
    outputs = []
    for _ in range(reader.compact_size()):
        value = reader.unpack("<q")
        outputs.append(TxOut(value, reader.sized_bytes()))
    locktime = reader.unpack("<I")
    if not reader.at_end():
        raise MalformedBytes("trailing bytes after the locktime")
    return RawTx(tuple(inputs), tuple(outputs), locktime, version)


def txid(tx):
    """Hex id in display order: byte-reversed double SHA-256 of the wire bytes"""
    return hash256(serialize(tx))[::-1].hex()


def sighash_all(tx, input_index, redeem_script):
    """Legacy SIGHASH_ALL digest of one input

    :param RawTx tx: the transaction
    :param int input_index: the input being signed
    :param bytes redeem_script: script placed in the signed input
    :return bytes: the 32-byte digest
    :raise IndexOutOfRange: if the input does not exist
    """
    if not 0 <= input_index < len(tx.inputs):
        raise IndexOutOfRange(
            "input {} of a transaction with {} inputs".format(
                input_index, len(tx.inputs)
            ),
            meta={"index": input_index},
        )
    inputs = tuple(
        replace(txin, script_sig=redeem_script if i == input_index else b"")
        for i, txin in enumerate(tx.inputs)
    )
    blanked = replace(tx, inputs=inputs)
    return hash256(serialize(blanked) + struct.pack("<I", SIGHASH_ALL))
