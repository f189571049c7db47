# -*- coding: utf-8 -*-

"""Abstract transaction templates and the DAG they form"""

from collections import OrderedDict
from dataclasses import dataclass, field
from typing import Optional, Tuple

INIT = "T_init"


@dataclass(frozen=True)
class ExternalSource(object):
    """A precondition deposit, spent through its owner's P2PKH output"""

    outpoint: object
    owner: str

    def to_dict(self):
        return {"kind": "external", "outpoint": str(self.outpoint), "owner": self.owner}


@dataclass(frozen=True)
class InternalSource(object):
    """Output ``index`` of the template named ``template``"""

    template: str
    index: int

    def to_dict(self):
        return {"kind": "internal", "template": self.template, "index": self.index}


@dataclass(frozen=True)
class TxInput(object):
    source: object
    value: int
    slots: Tuple[str, ...]
    redeem_script: Optional[object] = None
    branch: int = 0

    @property
    def internal(self):
        return isinstance(self.source, InternalSource)

    def to_dict(self):
        return {
            "source": self.source.to_dict(),
            "value": self.value,
            "slots": list(self.slots),
            "branch": self.branch,
            "redeem_script": (
                self.redeem_script.to_dict() if self.redeem_script is not None else None
            ),
        }


@dataclass(frozen=True)
class P2PKH(object):
    participant: str

    kind = "p2pkh"


@dataclass(frozen=True)
class P2SH(object):
    script: object
    contract_path: tuple = ()

    kind = "p2sh"


@dataclass(frozen=True)
class TxOutput(object):
    value: int
    payout: object


@dataclass(frozen=True)
class TxTemplate(object):
    name: str
    inputs: Tuple[TxInput, ...]
    outputs: Tuple[TxOutput, ...]
    locktime: int = 0
    path: tuple = field(default=(), compare=False)

    @property
    def fee(self):
        return sum(i.value for i in self.inputs) - sum(o.value for o in self.outputs)

    @property
    def parents(self):
        return tuple(
            dict.fromkeys(i.source.template for i in self.inputs if i.internal)
        )


class TxDag(object):
    """Templates keyed by name, in topological order, rooted at ``T_init``"""

    def __init__(self, spec, fee_per_tx, templates=()):
        self.spec = spec
        self.fee_per_tx = fee_per_tx
        self.templates = OrderedDict()
        for template in templates:
            self.add(template)

    def add(self, template):
        if template.name in self.templates:
            raise ValueError("duplicate template {}".format(template.name))
        for parent in template.parents:
            if parent not in self.templates:
                raise ValueError(
                    "{} spends unknown template {}".format(template.name, parent)
                )
        self.templates[template.name] = template

    def __len__(self):
        return len(self.templates)

    def __iter__(self):
        return iter(self.templates.values())

    def __getitem__(self, name):
        return self.templates[name]

    @property
    def root(self):
        return self.templates[INIT]

    @property
    def edges(self):
        """``(parent, output index, child)`` for every internal input"""
        return [
            (i.source.template, i.source.index, template.name)
            for template in self
            for i in template.inputs
            if i.internal
        ]

    def children(self, name):
        return [child for parent, _, child in self.edges if parent == name]

    @property
    def total_fees(self):
        return sum(template.fee for template in self)
