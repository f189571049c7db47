# -*- coding: utf-8 -*-

import pytest
from hypothesis import given, settings, strategies as st

from bitml.benchmarks import bind_preimages, load_benchmark
from bitml.compiler import (
    AndE,
    CheckMultiAll,
    CheckSig,
    KeyRef,
    OrE,
    PreimageHashEq,
    SizeEq,
    TrueE,
    script_of,
)
from bitml.compiler.script import SELECTOR, alternative
from bitml.core import Step
from bitml.exceptions import MissingSlot, PushTooLarge
from bitml.txwire import SignatureChecker, TestSigner, assemble_script, interpret
from bitml.txwire import witness_stack
from bitml.txwire.assemble import selector
from bitml.txwire.opcodes import (
    decode_num,
    disassemble,
    encode_num,
    push_data,
    push_int,
)
from bitml.txwire.signer import verify_signature
from bitml.utils import sha256
from tests.script_machine import accepts

SIGNER = TestSigner()
DIGEST = sha256(b"digest under test")
DIGEST_HEX = "a1" * 32


def machine_check(pubkey, signature):
    return verify_signature(pubkey, signature, DIGEST)


def sign(key):
    return SIGNER.sign(key, DIGEST) + b"\x01"


def agree(expr, witness):
    """Run the assembled script and the tree evaluator on the same witness"""
    script = assemble_script(expr, SIGNER)
    by_machine = accepts(script, witness_stack(expr, witness), machine_check)
    by_tree = interpret(expr, witness, SignatureChecker(SIGNER, DIGEST))
    assert by_machine is by_tree
    return by_tree


@pytest.mark.parametrize(
    "num,encoded",
    [(0, b""), (1, b"\x01"), (-1, b"\x81"), (127, b"\x7f"), (128, b"\x80\x00"),
     (-128, b"\x80\x80"), (255, b"\xff\x00"), (256, b"\x00\x01")],
)
def test_script_numbers(num, encoded):
    assert encode_num(num) == encoded
    assert decode_num(encoded) == num


def test_minimal_pushes():
    assert push_data(b"") == b"\x00"
    assert push_data(b"\x05") == b"\x55"
    assert push_data(b"\x81") == b"\x4f"
    assert push_data(b"\x00") == b"\x01\x00"
    assert push_data(b"x" * 75)[:1] == b"\x4b"
    assert push_data(b"x" * 76)[:2] == b"\x4c\x4c"
    assert push_data(b"x" * 300)[:3] == b"\x4d\x2c\x01"
    assert push_int(16) == b"\x60"
    assert push_int(17) == b"\x01\x11"
    with pytest.raises(PushTooLarge):
        push_data(b"x" * 521)


def test_true_is_op_1():
    assert assemble_script(TrueE()) == b"\x51"


def test_preimage_check_bytes():
    digest = bytes.fromhex(DIGEST_HEX)
    script = assemble_script(PreimageHashEq("secret:a", digest))
    assert script == (
        bytes([0x82, 0x6B, 0xA8, 0x20]) + digest + bytes([0x88, 0x6C, 0x75, 0x51])
    )


def test_size_check_bytes():
    script = assemble_script(SizeEq("secret:a", 19))
    assert disassemble(script) == "SIZE TOALTSTACK DROP FROMALTSTACK 0 PICK 13 NUMEQUALVERIFY DROP 1"


def test_multisig_size():
    keys = tuple(KeyRef(name, "0.0") for name in "ABCD")
    slots = tuple("sig:{}".format(name) for name in "ABCD")
    script = assemble_script(CheckMultiAll(keys, slots), SIGNER)
    assert len(script) == 140
    assert script[0] == script[-3] == 0x54
    assert script[-2:] == b"\xaf\x51"
    assert script[2:35] == SIGNER.pubkey(keys[0])


def test_disjunction_layout():
    script = assemble_script(OrE((TrueE(), TrueE(), TrueE())))
    assert disassemble(script) == (
        "DUP 0 NUMEQUAL IF DROP ELSE DUP 1 NUMEQUAL IF DROP ELSE "
        "2 NUMEQUALVERIFY ENDIF ENDIF 1"
    )


def test_witness_push_order():
    key = KeyRef("M", "0.0/auth")
    multisig = CheckMultiAll(
        (KeyRef("A", "0.0"), KeyRef("B", "0.0")), ("sig:A", "sig:B")
    )
    expr = OrE((TrueE(), AndE((multisig, CheckSig(key, "auth:M")))))
    witness = {SELECTOR: selector(1), "sig:A": b"a", "sig:B": b"b", "auth:M": b"m"}
    # first pushed first; the selector ends on top
    assert witness_stack(expr, witness) == [b"m", b"", b"a", b"b", b"\x01"]


def test_missing_slot():
    expr = CheckSig(KeyRef("A", "0.0"), "sig:A")
    with pytest.raises(MissingSlot):
        witness_stack(expr, {})
    with pytest.raises(MissingSlot):
        interpret(expr, {}, SignatureChecker(SIGNER, DIGEST))


def test_signature_check_agrees():
    key = KeyRef("A", "0.0")
    expr = CheckSig(key, "sig:A")
    assert agree(expr, {"sig:A": sign(key)}) is True
    assert agree(expr, {"sig:A": sign(KeyRef("B", "0.0"))}) is False
    assert agree(expr, {"sig:A": b"\x01"}) is False


def lottery_case(length_a, length_b):
    spec, preimages = bind_preimages(
        load_benchmark("lottery"), {"a": length_a, "b": length_b}
    )
    continuation = spec.contract.branches[0].continuation
    return script_of(continuation, spec, (Step(0, 0),), pad=16), preimages


def honest_witness(script, branch, preimages):
    conjunct = alternative(script, branch)
    witness = {SELECTOR: selector(branch)}
    for slot in conjunct.slots():
        if slot.startswith("secret:"):
            witness[slot] = preimages[slot.split(":", 1)[1]]
    for leaf in conjunct.leaves():
        if isinstance(leaf, CheckMultiAll):
            for key, slot in zip(leaf.keys, leaf.sig_slots):
                witness[slot] = sign(key)
    return witness


@settings(max_examples=40, deadline=None)
@given(
    st.integers(min_value=0, max_value=3),
    st.integers(min_value=0, max_value=3),
    st.integers(min_value=0, max_value=3),
    st.sampled_from(["none", "signature", "preimage"]),
)
def test_assembled_scripts_agree_with_interpreter(length_a, length_b, branch, tamper):
    script, preimages = lottery_case(length_a, length_b)
    witness = honest_witness(script, min(branch, 2), preimages)
    if branch == 3:
        witness[SELECTOR] = selector(3)
    if tamper == "signature" and "sig:B" in witness:
        witness["sig:B"] = witness["sig:A"]
    if tamper == "preimage" and "secret:b" in witness:
        witness["secret:b"] = preimages["b"][:-1] + bytes([preimages["b"][-1] ^ 1])

    accepted = agree(script, witness)
    if branch == 3 or (tamper != "none" and branch < 2) or tamper == "signature":
        assert accepted is False
    elif branch == 0:
        assert accepted is (length_a == length_b)
    elif branch == 1:
        assert accepted is (length_a != length_b)
    else:
        assert accepted is True
