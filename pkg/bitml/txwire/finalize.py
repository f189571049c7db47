# -*- coding: utf-8 -*-

"""Instantiation of a template DAG into signed raw transactions"""

import logging

from bitml.compiler.keys import deposit_key
from bitml.compiler.script import SELECTOR, CheckMultiAll, CheckSig, alternative
from bitml.compiler import standardness
from bitml.compiler.templates import P2PKH, ExternalSource
from bitml.txwire.assemble import (
    assemble_script,
    p2pkh_script_pubkey,
    p2sh_script_pubkey,
    script_sig,
    selector,
    witness_stack,
)
from bitml.txwire.opcodes import SIGHASH_ALL
from bitml.txwire.signer import TestSigner
from bitml.txwire.tx import (
    FINAL_SEQUENCE,
    LOCKTIME_SEQUENCE,
    RawTx,
    TxIn,
    TxOut,
    sighash_all,
    txid,
)

logger = logging.getLogger(__name__)


def _signature(signer, keyref, digest):
    return signer.sign(keyref, digest) + bytes([SIGHASH_ALL])


def _contract_witness(txinput, digest, signer, preimages):
    script = txinput.redeem_script
    conjunct = alternative(script, txinput.branch)
    witness = {SELECTOR: selector(txinput.branch)}
    for leaf in conjunct.leaves():
        if isinstance(leaf, CheckMultiAll):
            for key, slot in zip(leaf.keys, leaf.sig_slots):
                witness[slot] = _signature(signer, key, digest)
        elif isinstance(leaf, CheckSig):
            witness[leaf.slot] = _signature(signer, leaf.key, digest)
    for slot in txinput.slots:
        if slot.startswith("secret:"):
            name = slot.split(":", 1)[1]
            if name not in preimages:
                logger.info("no preimage for %s, pushing an empty placeholder", name)
            witness[slot] = preimages.get(name, b"")
    return witness


def finalize(dag, signer=None, preimages=None):
    """Turn templates into signed transactions, parents first

    Reveal inputs carry the supplied preimages; a missing preimage is pushed
    as an empty placeholder, which makes that transaction unspendable until
    it is re-finalized with the secret.

    :param TxDag dag: the compiled templates
    :param Signer signer: signs every key reference (default: test signer)
    :param dict preimages: secret name -> preimage bytes
    :return list: RawTx in the order of ``dag``
    :raise StandardnessViolation: if the DAG is not standard
    """
    signer = signer or TestSigner()
    preimages = preimages or {}
    violations = standardness.check_standardness(dag, signer)
    if violations:
        raise violations[0]

    spec = dag.spec
    txids = {}
    transactions = []
    for template in dag:
        sequence = LOCKTIME_SEQUENCE if template.locktime else FINAL_SEQUENCE
        inputs, subscripts = [], []
        for txinput in template.inputs:
            source = txinput.source
            if isinstance(source, ExternalSource):
                prev = bytes.fromhex(source.outpoint.txid)[::-1]
                vout = source.outpoint.vout
                pubkey = spec.participant(source.owner).pubkey_bytes
                subscripts.append(p2pkh_script_pubkey(pubkey))
            else:
                prev = bytes.fromhex(txids[source.template])[::-1]
                vout = source.index
                subscripts.append(assemble_script(txinput.redeem_script, signer))
            inputs.append(TxIn(prev, vout, b"", sequence))

        outputs = []
        for output in template.outputs:
            if isinstance(output.payout, P2PKH):
                pubkey = spec.participant(output.payout.participant).pubkey_bytes
                spk = p2pkh_script_pubkey(pubkey)
            else:
                spk = p2sh_script_pubkey(assemble_script(output.payout.script, signer))
            outputs.append(TxOut(output.value, spk))

        unsigned = RawTx(tuple(inputs), tuple(outputs), template.locktime)
        signed_inputs = []
        for index, (txinput, txin) in enumerate(zip(template.inputs, inputs)):
            digest = sighash_all(unsigned, index, subscripts[index])
            if isinstance(txinput.source, ExternalSource):
                owner = txinput.source.owner
                sig = _signature(signer, deposit_key(owner), digest)
                pubkey = spec.participant(owner).pubkey_bytes
                sig_script = script_sig([sig, pubkey])
            else:
                witness = _contract_witness(txinput, digest, signer, preimages)
                items = witness_stack(txinput.redeem_script, witness)
                sig_script = script_sig(items, subscripts[index])
            signed_inputs.append(
                TxIn(txin.prev_txid, txin.prev_vout, sig_script, txin.sequence)
            )

        tx = RawTx(tuple(signed_inputs), tuple(outputs), template.locktime)
        txids[template.name] = txid(tx)
        transactions.append(tx)
    logger.info("finalized %d transactions", len(transactions))
    return transactions
