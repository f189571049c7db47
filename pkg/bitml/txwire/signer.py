# -*- coding: utf-8 -*-

"""Signers of transaction digests. To plug in real key management, inherit from ``Signer``"""

import hashlib

from ecdsa import BadSignatureError, SECP256k1, SigningKey, VerifyingKey
from ecdsa.der import UnexpectedDER
from ecdsa.util import sigdecode_der, sigencode_der_canonize

from bitml.exceptions import SigningError

DEFAULT_SEED = b"bitml test signer"


class Signer(object):
    """Base class of a signer"""

    def __init__(self, **kwargs):
        """Initialize a signer with kwargs

        :param kwargs: attributes of the signer instance
        """
        for key, value in kwargs.items():
            setattr(self, key, value)

    def pubkey(self, keyref):
        """Return the compressed public key of a key reference

        :param KeyRef keyref: the key reference
        :return bytes: 33 bytes
        """
        raise NotImplementedError

    def sign(self, keyref, digest):
        """Sign a 32-byte digest

        :param KeyRef keyref: the key reference
        :param bytes digest: the digest
        :return bytes: a DER signature, without sighash type byte
        """
        raise NotImplementedError


class TestSigner(Signer):
    """Deterministic keys derived from a seed and the key reference.

    NOT broadcast-safe: anyone knowing the seed can spend. Signatures are
    RFC 6979 deterministic with low S.
    """

    seed = DEFAULT_SEED
    __test__ = False

    def __init__(self, **kwargs):
        super(TestSigner, self).__init__(**kwargs)
        self._keys = {}

    def signing_key(self, keyref):
        key = self._keys.get(keyref)
        if key is None:
            material = "{}/{}".format(keyref.participant, keyref.path).encode("utf-8")
            digest = hashlib.sha256(self.seed + material).digest()
            exponent = int.from_bytes(digest, "big")
            exponent = exponent % (SECP256k1.order - 1) + 1
            key = SigningKey.from_secret_exponent(exponent, curve=SECP256k1)
            self._keys[keyref] = key
        return key

    def pubkey(self, keyref):
        return self.signing_key(keyref).get_verifying_key().to_string("compressed")

    def sign(self, keyref, digest):
        if len(digest) != 32:
            raise SigningError(
                "digests to sign have 32 bytes, got {}".format(len(digest))
            )
        return self.signing_key(keyref).sign_digest_deterministic(
            digest, hashfunc=hashlib.sha256, sigencode=sigencode_der_canonize
        )


def verify_signature(pubkey, signature, digest):
    """Check a DER signature followed by its sighash type byte

    :param bytes pubkey: compressed public key
    :param bytes signature: DER signature plus one sighash type byte
    :param bytes digest: the signed digest
    :return bool: whether the signature is valid
    """
    if len(signature) < 2:
        return False
    try:
        key = VerifyingKey.from_string(bytes(pubkey), curve=SECP256k1)
        return key.verify_digest(signature[:-1], digest, sigdecode=sigdecode_der)
    except (BadSignatureError, UnexpectedDER, ValueError, AssertionError):
        return False


def make_preimage(secret, length, pad=16, seed=DEFAULT_SEED):
    """Deterministic preimage of ``pad + length`` bytes for a test secret"""
    material = b""
    counter = 0
    while len(material) < pad + length:
        block = "{}/{}/{}".format(secret, length, counter).encode("utf-8")
        material += hashlib.sha256(seed + block).digest()
        counter += 1
    return material[: pad + length]
