# -*- coding: utf-8 -*-

import hashlib
import json

from Crypto.Hash import RIPEMD160


class JSONEncoder(json.JSONEncoder):
    def default(self, obj):
        if isinstance(obj, (bytes, bytearray)):
            return bytes(obj).hex()
        elif isinstance(obj, (set, frozenset)):
            return sorted(obj)
        return json.JSONEncoder.default(self, obj)


def sha256(data):
    return hashlib.sha256(data).digest()


def hash256(data):
    """Double SHA-256, used for txids and signature digests"""
    return sha256(sha256(data))


def hash160(data):
    """RIPEMD-160 of SHA-256, used for P2PKH and P2SH hashes"""
    return RIPEMD160.new(sha256(data)).digest()
