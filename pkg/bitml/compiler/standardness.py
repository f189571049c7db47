# -*- coding: utf-8 -*-

"""Standardness of compiled scripts and hints to restore it.

Only the 520-byte push limit (which bounds P2SH redeem scripts) and the
15-key multisig limit are checked; other relay policies are not.
"""

import logging
from dataclasses import dataclass
from typing import Tuple

from bitml.compiler.compile import script_of
from bitml.compiler.templates import P2SH
from bitml.core.paths import format_path, walk
from bitml.exceptions import StandardnessViolation
from bitml.txwire import assemble
from bitml.txwire.opcodes import MAX_PUSH

logger = logging.getLogger(__name__)


def _script_violation(script, signer, source):
    """Assemble a script; return a violation or None"""
    try:
        size = len(assemble.assemble_script(script, signer))
    except StandardnessViolation as error:
        error.source = dict(source)
        return error
    if size > MAX_PUSH:
        return StandardnessViolation(
            "redeem script of {} bytes exceeds {}".format(size, MAX_PUSH),
            source=dict(source),
            meta={"size": size},
        )
    return None


def check_standardness(dag, signer=None):
    """Collect the standardness violations of every P2SH redeem script

    :param TxDag dag: the compiled templates
    :param Signer signer: source of public keys (default: test signer)
    :return list: StandardnessViolation instances, in template order
    """
    violations = []
    for template in dag:
        for index, output in enumerate(template.outputs):
            if not isinstance(output.payout, P2SH):
                continue
            source = {
                "template": template.name,
                "output": index,
                "path": format_path(output.payout.contract_path),
            }
            violation = _script_violation(output.payout.script, signer, source)
            if violation is not None:
                logger.warning("%s output %d: %s", template.name, index, violation)
                violations.append(violation)
    return violations


@dataclass(frozen=True)
class RewriteHint(object):
    """Proposal to split an oversized choice into a 2-level nested choice"""

    path: tuple
    size: int
    groups: Tuple[Tuple[int, ...], ...]

    @property
    def detail(self):
        location = format_path(self.path) or "the root"
        groups = " and ".join(
            "({})".format(" ".join(str(i) for i in group)) for group in self.groups
        )
        return (
            "choice at {} compiles to {} bytes; nest its branches as {} "
            "so that each level stays under {} bytes".format(
                location, self.size, groups, MAX_PUSH
            )
        )

    def to_dict(self):
        return {
            "path": format_path(self.path),
            "size": self.size,
            "groups": [list(group) for group in self.groups],
            "detail": self.detail,
        }


def suggest_flattening(spec, signer=None, pad=None):
    """Hint a nesting for every choice whose redeem script is not standard

    :param ContractSpec spec: the contract
    :return list: RewriteHint per oversized choice, in tree order
    """
    hints = []
    for path, contract in walk(spec.contract):
        script = script_of(contract, spec, path, pad)
        violation = _script_violation(script, signer, {"path": format_path(path)})
        if violation is None:
            continue
        count = len(contract.branches)
        half = (count + 1) // 2
        groups = tuple(
            group
            for group in (tuple(range(half)), tuple(range(half, count)))
            if group
        )
        hint = RewriteHint(path, violation.meta.get("size", 0), groups)
        logger.warning(hint.detail)
        hints.append(hint)
    return hints
