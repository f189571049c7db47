# -*- coding: utf-8 -*-

"""Marshmallow schemas of the documents written by the command line: report.json and dag.json"""

from marshmallow import Schema, fields, validate

from bitml.compiler.templates import P2PKH
from bitml.utils import hash160

EXIT_CODES = (0, 1, 2, 3, 4, 5, 6, 70)


class ErrorSchema(Schema):
    """An exception rendered by ``BitmlException.to_dict``"""

    exit_code = fields.Integer()
    source = fields.Dict()
    title = fields.String()
    detail = fields.String(required=True)
    code = fields.String()
    meta = fields.Dict()


class StaticErrorSchema(Schema):
    title = fields.String(required=True)
    detail = fields.String(required=True)
    source = fields.Dict()


class WitnessSchema(Schema):
    type = fields.String(
        required=True, validate=validate.OneOf(("frozen-state", "lasso"))
    )
    assignment = fields.Dict(keys=fields.String(), values=fields.Integer())
    trace = fields.List(fields.String())
    configuration = fields.Dict()
    prefix = fields.List(fields.String())
    cycle = fields.List(fields.String())


class StatsSchema(Schema):
    states = fields.Integer(required=True)
    regions = fields.Integer(required=True)
    wall_time = fields.Float(required=True)
    automaton_states = fields.Integer()


class VerdictSchema(Schema):
    query = fields.String(required=True)
    verdict = fields.Boolean(required=True)
    witness = fields.Nested(WitnessSchema, allow_none=True)
    stats = fields.Nested(StatsSchema, required=True)


class HintSchema(Schema):
    path = fields.String(required=True)
    size = fields.Integer(required=True)
    groups = fields.List(fields.List(fields.Integer()))
    detail = fields.String(required=True)


class CompileSummarySchema(Schema):
    templates = fields.Integer(required=True)
    reference_templates = fields.Integer(allow_none=True)
    fee_per_tx = fields.Integer(required=True)
    total_fees = fields.Integer(required=True)
    standardness = fields.List(fields.Nested(ErrorSchema))
    hints = fields.List(fields.Nested(HintSchema))
    transactions = fields.Integer(allow_none=True)


class ReportSchema(Schema):
    """The document written to report.json and printed by every command"""

    command = fields.String(
        required=True, validate=validate.OneOf(("check", "verify", "compile"))
    )
    input = fields.String(required=True)
    ok = fields.Boolean(required=True)
    exit_code = fields.Integer(required=True, validate=validate.OneOf(EXIT_CODES))
    errors = fields.List(fields.Nested(ErrorSchema))
    static_errors = fields.List(fields.Nested(StaticErrorSchema))
    verdicts = fields.List(fields.Nested(VerdictSchema))
    compile = fields.Nested(CompileSummarySchema, allow_none=True)
    bitml = fields.Dict(required=True)


class TxInputSchema(Schema):
    source = fields.Method("get_source", required=True)
    value = fields.Integer(required=True)
    slots = fields.List(fields.String())
    branch = fields.Integer()
    redeem_script = fields.Method("get_redeem_script")

    def get_source(self, obj):
        return obj.source.to_dict()

    def get_redeem_script(self, obj):
        return obj.redeem_script.to_dict() if obj.redeem_script is not None else None


class TxOutputSchema(Schema):
    value = fields.Integer(required=True)
    kind = fields.Function(lambda obj: obj.payout.kind)
    script = fields.Method("get_script")
    pubkey_hash = fields.Method("get_pubkey_hash")

    def get_script(self, obj):
        if isinstance(obj.payout, P2PKH):
            return None
        return obj.payout.script.to_dict()

    def get_pubkey_hash(self, obj):
        if not isinstance(obj.payout, P2PKH):
            return None
        participant = self.context["spec"].participant(obj.payout.participant)
        return hash160(participant.pubkey_bytes).hex()


class TxTemplateSchema(Schema):
    name = fields.String(required=True)
    inputs = fields.List(fields.Nested(TxInputSchema))
    outputs = fields.List(fields.Nested(TxOutputSchema))
    locktime = fields.Integer(required=True)
    fee = fields.Integer()


class EdgeSchema(Schema):
    parent = fields.String(required=True)
    index = fields.Integer(required=True)
    child = fields.String(required=True)


class TxDagSchema(Schema):
    """The document written to dag.json"""

    fee_per_tx = fields.Integer(required=True)
    templates = fields.Method("get_templates")
    edges = fields.Method("get_edges")

    def get_templates(self, obj):
        schema = TxTemplateSchema(many=True, context={"spec": obj.spec})
        return schema.dump(list(obj))

    def get_edges(self, obj):
        edges = [
            {"parent": parent, "index": index, "child": child}
            for parent, index, child in obj.edges
        ]
        return EdgeSchema(many=True).dump(edges)
