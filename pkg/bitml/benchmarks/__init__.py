# -*- coding: utf-8 -*-

"""Benchmark contracts shipped with the toolchain

The ``.bitml`` files of this directory are loaded by name with
``load_benchmark``; ``mutual_tc`` generates the N-party mutual timed
commitment used by the scaling report.
"""

import dataclasses
import logging
import os

from bitml.compiler import compile, template_count
from bitml.config import DEFAULTS
from bitml.core.nodes import (
    BTC,
    After,
    Contract,
    ContractSpec,
    Deposit,
    Outpoint,
    Participant,
    Precondition,
    SecretCommitment,
    Split,
    SplitArm,
    Withdraw,
    reveal,
)
from bitml.parser import SourceFile, parse_file
from bitml.txwire.signer import make_preimage
from bitml.utils import sha256
from bitml.verifier import check_liquidity

logger = logging.getLogger(__name__)

HERE = os.path.dirname(os.path.abspath(__file__))

#: x-coordinates of 1G..5G on secp256k1, compressed
PUBKEYS = (
    "0279be667ef9dcbbac55a06295ce870b07029bfcdb2dce28d959f2815b16f81798",
    "02c6047f9441ed7d6d3045406e95c07cd85c778e4b8cef3ca7abac09b95c709ee5",
    "02f9308a019258c31049344f85f89d5229b531c845836f99b08601f113bce036f9",
    "02e493dbf1c10d80f3581e4904930b1404cc6c13900ee0758474fa94abe8c4cd13",
    "022f8bde4d1a07209355b4a7250a5c5128e88b84bddc619ab7cba8d569b240efe4",
)

#: (templates, verification seconds) reported for the reference toolchain
REFERENCE = {
    "mutual-tc": (15, 0.083),
    "mutual-tc-2": (15, 0.083),
    "mutual-tc-3": (34, 0.103),
    "mutual-tc-4": (75, 0.454),
    "mutual-tc-5": (164, 13.0),
    "escrow-3p": (12, 8.0),
    "lottery": (8, 0.142),
}

FIRST_DEADLINE = 100000
DEADLINE_STEP = 50


def benchmark_names():
    """Names accepted by ``load_benchmark``, sorted"""
    return sorted(
        os.path.splitext(name)[0]
        for name in os.listdir(HERE)
        if name.endswith(".bitml")
    )


def benchmark_path(name):
    return os.path.join(HERE, "{}.bitml".format(name))


def load_source(name):
    """Parse a shipped benchmark with its in-file strategies and queries

    :param str name: file name without the ``.bitml`` extension
    :return SourceBundle: the parsed file
    """
    if name not in benchmark_names():
        raise KeyError("unknown benchmark {}".format(name))
    return parse_file(SourceFile.read(benchmark_path(name)))


def load_benchmark(name):
    """Return the ContractSpec of a shipped benchmark"""
    return load_source(name).spec


def reference_templates(spec):
    """Template count reported for the same benchmark by the reference toolchain"""
    return REFERENCE.get(spec.name, (None, None))[0]


def bind_preimages(spec, lengths=None, pad=None):
    """Rebind every secret commitment to the hash of a known test preimage

    :param ContractSpec spec: the contract
    :param dict lengths: secret name -> length (default 1 for every secret)
    :param int pad: preimage pad (default ``SECRET_PAD``)
    :return tuple: the rebound ContractSpec and the preimages by secret name
    """
    lengths = lengths or {}
    pad = DEFAULTS["SECRET_PAD"] if pad is None else pad
    preimages = {}
    secrets = []
    for commitment in spec.precondition.secrets:
        preimage = make_preimage(commitment.name, lengths.get(commitment.name, 1), pad)
        preimages[commitment.name] = preimage
        secrets.append(dataclasses.replace(commitment, hash=sha256(preimage).hex()))
    precondition = dataclasses.replace(spec.precondition, secrets=tuple(secrets))
    return dataclasses.replace(spec, precondition=precondition), preimages


def _refund(recipients, balance):
    if len(recipients) == 1:
        return Withdraw(recipients[0])
    share, rest = divmod(balance, len(recipients))
    arms = tuple(
        SplitArm(share + (rest if i == 0 else 0), Contract((Withdraw(name),)))
        for i, name in enumerate(recipients)
    )
    return Split(arms)


def _stage(names, index, balance):
    """Contract asking participant ``index`` to reveal, or everyone to be paid back"""
    if index == len(names):
        arms = tuple(SplitArm(BTC, Contract((Withdraw(name),))) for name in names)
        return Contract((Split(arms),))
    others = [name for i, name in enumerate(names) if i != index]
    deadline = FIRST_DEADLINE + DEADLINE_STEP * index
    return Contract(
        (
            reveal([names[index].lower()], _stage(names, index + 1, balance)),
            After(deadline, _refund(others, balance)),
        )
    )


def mutual_tc(n, fee_per_tx=None):
    """N-party mutual timed commitment

    Participants reveal their secret in turn; the first one who misses their
    deadline loses their 1 BTC stake to the others. When all secrets are out
    everybody gets their deposit back.

    :param int n: number of participants, 2 to 5
    :param int fee_per_tx: fee used to size the fee deposits (default ``FEE_PER_TX``)
    :return ContractSpec: the contract, its commitments bound to test preimages of length 1
    """
    if not 2 <= n <= len(PUBKEYS):
        raise ValueError("mutual_tc supports 2 to {} participants".format(len(PUBKEYS)))
    fee_per_tx = DEFAULTS["FEE_PER_TX"] if fee_per_tx is None else fee_per_tx
    names = [chr(ord("A") + i) for i in range(n)]
    participants = tuple(Participant(name, PUBKEYS[i]) for i, name in enumerate(names))
    txids = ["{:x}".format(i + 1) * 64 for i in range(n)]
    deposits = tuple(
        Deposit(name, BTC, Outpoint(txids[i], 0)) for i, name in enumerate(names)
    )
    secrets = tuple(
        SecretCommitment(name, name.lower(), "{:02x}".format(i) * 32)
        for i, name in enumerate(names)
    )
    contract = _stage(names, 0, n * BTC)
    spec = ContractSpec(
        participants,
        Precondition(deposits, secrets),
        contract,
        "mutual-tc-{}".format(n),
    )
    per_party = -(-template_count(spec) * fee_per_tx // n)
    fees = tuple(
        Deposit(name, per_party, Outpoint(txids[i], 1)) for i, name in enumerate(names)
    )
    spec = dataclasses.replace(
        spec, precondition=dataclasses.replace(spec.precondition, fee_deposits=fees)
    )
    return bind_preimages(spec)[0]


def scaling_table(max_n=4, verify=True):
    """Template counts and liquidity times of ``mutual_tc(n)`` for n = 2..max_n

    :return list: one dict per n, with the reference values next to ours
    """
    rows = []
    for n in range(2, max_n + 1):
        spec = mutual_tc(n)
        dag = compile(spec)
        reference, reference_seconds = REFERENCE[spec.name]
        row = {
            "n": n,
            "templates": len(dag),
            "reference_templates": reference,
            "reference_seconds": reference_seconds,
        }
        if verify:
            result = check_liquidity(spec)
            row.update(
                verdict=result.verdict,
                states=result.stats["states"],
                seconds=result.stats["wall_time"],
            )
        logger.info("mutual-tc-%d: %s", n, row)
        rows.append(row)
    return rows
