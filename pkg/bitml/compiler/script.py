# -*- coding: utf-8 -*-

"""Script expression trees of P2SH redeem conditions.

Leaves read named witness slots: ``sig:P`` and ``auth:P`` hold signatures,
``secret:s`` holds the preimage of secret ``s`` and ``branch`` the selector
of an OrE.
"""

from dataclasses import dataclass
from typing import Tuple

SELECTOR = "branch"


def signature_slot(participant):
    return "sig:{}".format(participant)


def auth_slot(participant):
    return "auth:{}".format(participant)


def secret_slot(secret):
    return "secret:{}".format(secret)


class ScriptExpr(object):
    __slots__ = ()

    def slots(self):
        """Witness slots read by the expression, in first-use order"""
        return ()

    def leaves(self):
        return (self,)


@dataclass(frozen=True)
class TrueE(ScriptExpr):
    def leaves(self):
        return ()

    def to_dict(self):
        return {"op": "true"}


@dataclass(frozen=True)
class CheckSig(ScriptExpr):
    key: object
    slot: str

    def slots(self):
        return (self.slot,)

    def to_dict(self):
        return {"op": "checksig", "key": str(self.key), "slot": self.slot}


@dataclass(frozen=True)
class CheckMultiAll(ScriptExpr):
    """Every key must sign; ``sig_slots[i]`` holds the signature of ``keys[i]``"""

    keys: Tuple[object, ...]
    sig_slots: Tuple[str, ...]

    def __post_init__(self):
        if len(self.keys) != len(self.sig_slots) or not self.keys:
            raise ValueError("one signature slot per key is required")

    def slots(self):
        return self.sig_slots

    def to_dict(self):
        return {
            "op": "checkmultisig",
            "keys": [str(key) for key in self.keys],
            "slots": list(self.sig_slots),
        }


@dataclass(frozen=True)
class PreimageHashEq(ScriptExpr):
    slot: str
    digest: bytes

    def __post_init__(self):
        if len(self.digest) != 32:
            raise ValueError("a SHA-256 digest has 32 bytes")

    def slots(self):
        return (self.slot,)

    def to_dict(self):
        return {"op": "sha256-equal", "slot": self.slot, "digest": self.digest.hex()}


@dataclass(frozen=True)
class SizeEq(ScriptExpr):
    slot: str
    n: int

    def slots(self):
        return (self.slot,)

    def to_dict(self):
        return {"op": "size-equal", "slot": self.slot, "size": self.n}


@dataclass(frozen=True)
class SizeGe(ScriptExpr):
    slot: str
    n: int

    def slots(self):
        return (self.slot,)

    def to_dict(self):
        return {"op": "size-at-least", "slot": self.slot, "size": self.n}


# terms and conditions of SizeCmp; ``Size`` reads the slot size minus the pad


@dataclass(frozen=True)
class Size(object):
    slot: str

    def evaluate(self, sizes, pad):
        return sizes[self.slot] - pad

    def slots(self):
        return (self.slot,)

    def __str__(self):
        return "(size {})".format(self.slot)


@dataclass(frozen=True)
class Num(object):
    n: int

    def evaluate(self, sizes, pad):
        return self.n

    def slots(self):
        return ()

    def __str__(self):
        return str(self.n)


@dataclass(frozen=True)
class Plus(object):
    left: object
    right: object

    def evaluate(self, sizes, pad):
        return self.left.evaluate(sizes, pad) + self.right.evaluate(sizes, pad)

    def slots(self):
        return self.left.slots() + self.right.slots()

    def __str__(self):
        return "(+ {} {})".format(self.left, self.right)


@dataclass(frozen=True)
class Minus(object):
    left: object
    right: object

    def evaluate(self, sizes, pad):
        return self.left.evaluate(sizes, pad) - self.right.evaluate(sizes, pad)

    def slots(self):
        return self.left.slots() + self.right.slots()

    def __str__(self):
        return "(- {} {})".format(self.left, self.right)


@dataclass(frozen=True)
class CmpTrue(object):
    def evaluate(self, sizes, pad):
        return True

    def slots(self):
        return ()

    def __str__(self):
        return "true"


@dataclass(frozen=True)
class CmpNot(object):
    operand: object

    def evaluate(self, sizes, pad):
        return not self.operand.evaluate(sizes, pad)

    def slots(self):
        return self.operand.slots()

    def __str__(self):
        return "(not {})".format(self.operand)


class _CmpBinary(object):
    __slots__ = ()
    symbol = None

    def slots(self):
        return self.left.slots() + self.right.slots()

    def __str__(self):
        return "({} {} {})".format(self.symbol, self.left, self.right)


@dataclass(frozen=True)
class CmpAnd(_CmpBinary):
    left: object
    right: object
    symbol = "and"

    def evaluate(self, sizes, pad):
        left, right = self.left.evaluate(sizes, pad), self.right.evaluate(sizes, pad)
        return left and right


@dataclass(frozen=True)
class CmpOr(_CmpBinary):
    left: object
    right: object
    symbol = "or"

    def evaluate(self, sizes, pad):
        left, right = self.left.evaluate(sizes, pad), self.right.evaluate(sizes, pad)
        return left or right


@dataclass(frozen=True)
class CmpEq(_CmpBinary):
    left: object
    right: object
    symbol = "="

    def evaluate(self, sizes, pad):
        return self.left.evaluate(sizes, pad) == self.right.evaluate(sizes, pad)


@dataclass(frozen=True)
class CmpLt(_CmpBinary):
    left: object
    right: object
    symbol = "<"

    def evaluate(self, sizes, pad):
        return self.left.evaluate(sizes, pad) < self.right.evaluate(sizes, pad)


@dataclass(frozen=True)
class SizeCmp(ScriptExpr):
    cond: object
    pad: int

    def slots(self):
        return tuple(dict.fromkeys(self.cond.slots()))

    def to_dict(self):
        return {"op": "size-compare", "condition": str(self.cond), "pad": self.pad}


@dataclass(frozen=True)
class AndE(ScriptExpr):
    parts: Tuple[ScriptExpr, ...]

    def slots(self):
        return tuple(dict.fromkeys(s for part in self.parts for s in part.slots()))

    def leaves(self):
        return tuple(leaf for part in self.parts for leaf in part.leaves())

    def to_dict(self):
        return {"op": "and", "parts": [part.to_dict() for part in self.parts]}


@dataclass(frozen=True)
class OrE(ScriptExpr):
    """Disjunction resolved by the integer in the ``branch`` slot"""

    parts: Tuple[ScriptExpr, ...]

    def __post_init__(self):
        if len(self.parts) < 2:
            raise ValueError("a disjunction needs at least two alternatives")

    def slots(self):
        keys = (SELECTOR,) + tuple(s for part in self.parts for s in part.slots())
        return tuple(dict.fromkeys(keys))

    def branch_slots(self, index):
        return (SELECTOR,) + tuple(self.parts[index].slots())

    def leaves(self):
        raise ValueError("a disjunction is not a conjunct")

    def to_dict(self):
        return {"op": "or", "parts": [part.to_dict() for part in self.parts]}


def branch_slots(script, index):
    """Witness slots a spender taking alternative ``index`` must supply"""
    if isinstance(script, OrE):
        return script.branch_slots(index)
    return tuple(script.slots())


def alternative(script, index):
    """The conjunct of alternative ``index``"""
    if isinstance(script, OrE):
        return script.parts[index]
    return script
