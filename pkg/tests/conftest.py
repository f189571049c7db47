# -*- coding: utf-8 -*-

import pytest

from bitml.benchmarks import bind_preimages, load_benchmark, load_source
from bitml.config import Config
from bitml.parser import SourceFile, parse_contract
from bitml.txwire import TestSigner

PK_A = "0279be667ef9dcbbac55a06295ce870b07029bfcdb2dce28d959f2815b16f81798"
PK_B = "02c6047f9441ed7d6d3045406e95c07cd85c778e4b8cef3ca7abac09b95c709ee5"
TXID_A = "1" * 64
TXID_B = "2" * 64
HASH_A = "a1" * 32
HASH_B = "b2" * 32


def contract_source(body, pre=None, participants=("A", "B")):
    """Text of a small contract over participants A and B"""
    keys = {"A": PK_A, "B": PK_B}
    lines = ['(participant "{}" {})'.format(name, keys[name]) for name in participants]
    if pre is None:
        pre = '(deposit "A" 100000000 (outpoint {} 0))'.format(TXID_A)
    lines.append("(contract (pre {}) {})".format(pre, body))
    return "\n".join(lines)


def parse_text(text, path="<string>"):
    return parse_contract(SourceFile(text, path))


@pytest.fixture(scope="session")
def config():
    return Config()


@pytest.fixture(scope="session")
def signer():
    return TestSigner()


@pytest.fixture(scope="session")
def mutual_tc():
    return load_benchmark("mutual-tc")


@pytest.fixture(scope="session")
def mutual_tc_noafter():
    return load_benchmark("mutual-tc-noafter")


@pytest.fixture(scope="session")
def mutual_tc_bundle():
    return load_source("mutual-tc")


@pytest.fixture(scope="session")
def lottery():
    return load_benchmark("lottery")


@pytest.fixture(scope="session")
def escrow():
    return load_benchmark("escrow-3p")


@pytest.fixture(scope="session")
def oversized():
    return load_benchmark("oversized-choice")


@pytest.fixture(scope="session")
def flattened():
    return load_benchmark("flattened-choice")


@pytest.fixture(scope="session")
def bound_mutual_tc(mutual_tc):
    """Mutual timed commitment whose hashes commit to known preimages"""
    return bind_preimages(mutual_tc)


@pytest.fixture(scope="function")
def withdraw_spec():
    """``(withdraw "A")`` with one 1 BTC deposit and a 10000 satoshi fee"""
    pre = (
        '(deposit "A" 100000000 (outpoint {0} 0)) '
        '(fee "A" 10000 (outpoint {0} 1))'
    ).format(TXID_A)
    return parse_text(contract_source('(withdraw "A")', pre))
