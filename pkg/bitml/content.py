# -*- coding: utf-8 -*-

"""Renderers of reports: JSON for machines, plain text for terminals"""

import json

from bitml import __version__
from bitml.schema import ReportSchema
from bitml.utils import JSONEncoder


def to_json(document):
    """Indented JSON with keys in a stable order"""
    return json.dumps(document, cls=JSONEncoder, indent=2, sort_keys=True)


def render_json(report):
    """Default report renderer

    The report is dumped through ``ReportSchema``, so only documented keys
    reach the output.

    :param dict report: a report built by a command
    :return str: the JSON document
    """
    report.setdefault("bitml", {"version": __version__})
    return to_json(ReportSchema().dump(report))


def _witness_lines(witness):
    assignment = ", ".join(
        "|{}| = {}".format(name, length)
        for name, length in sorted(witness.get("assignment", {}).items())
    )
    if assignment:
        yield "    secret lengths: {}".format(assignment)
    if witness["type"] == "frozen-state":
        yield "    trace to a frozen state:"
        for move in witness["trace"] or ["(initial configuration)"]:
            yield "      {}".format(move)
        active = witness["configuration"]["active"]
        for contract in active:
            yield "    frozen: {} holding {} satoshi".format(
                contract["cid"], contract["balance"]
            )
    else:
        yield "    prefix:"
        for move in witness["prefix"] or ["(empty)"]:
            yield "      {}".format(move)
        yield "    cycle:"
        for move in witness["cycle"]:
            yield "      {}".format(move)


def render_text(report):
    """Report renderer for ``--format text``

    Verdicts are the same as in the JSON form; wall times are left out.
    """
    lines = ["{} {}".format(report["command"], report["input"])]
    for error in report.get("errors", []):
        source = error.get("source") or {}
        where = ""
        if "line" in source:
            where = "{}:{}: ".format(source["line"], source.get("column", 1))
        lines.append("error: {}{}".format(where, error["detail"]))
    for error in report.get("static_errors", []):
        lines.append("{}: {}".format(error["title"], error["detail"]))
    for verdict in report.get("verdicts", []):
        lines.append(
            "{}: {} ({} states, {} regions)".format(
                verdict["query"],
                "true" if verdict["verdict"] else "false",
                verdict["stats"]["states"],
                verdict["stats"]["regions"],
            )
        )
        if verdict.get("witness"):
            lines.extend(_witness_lines(verdict["witness"]))
    summary = report.get("compile")
    if summary:
        reference = summary.get("reference_templates")
        lines.append(
            "{} templates{}, {} satoshi of fees".format(
                summary["templates"],
                " (reference {})".format(reference) if reference else "",
                summary["total_fees"],
            )
        )
        for finding in summary.get("standardness", []):
            lines.append("nonstandard: {}".format(finding["detail"]))
        for hint in summary.get("hints", []):
            lines.append("hint: {}".format(hint["detail"]))
    lines.append("exit {}".format(report["exit_code"]))
    return "\n".join(lines)


RENDERERS = {"json": render_json, "text": render_text}
