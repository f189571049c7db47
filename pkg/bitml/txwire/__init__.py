# -*- coding: utf-8 -*-

from bitml.txwire.tx import RawTx, TxIn, TxOut, deserialize, serialize, sighash_all, txid
from bitml.txwire.signer import Signer, TestSigner
from bitml.txwire.assemble import assemble_script, witness_stack
from bitml.txwire.interpreter import SignatureChecker, interpret
from bitml.txwire.finalize import finalize

__all__ = [
    "RawTx",
    "TxIn",
    "TxOut",
    "deserialize",
    "serialize",
    "sighash_all",
    "txid",
    "Signer",
    "TestSigner",
    "assemble_script",
    "witness_stack",
    "SignatureChecker",
    "interpret",
    "finalize",
]
