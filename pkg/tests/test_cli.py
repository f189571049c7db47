# -*- coding: utf-8 -*-

import json
import os

import pytest
from click.testing import CliRunner

from bitml import __version__
from bitml.benchmarks import benchmark_path
from bitml.cli import RunConfig, cli
from bitml.content import render_json
from bitml.decorators import new_report
from bitml.schema import ReportSchema
from tests.conftest import contract_source


@pytest.fixture(scope="module")
def runner():
    return CliRunner()


def report_of(result):
    """The JSON report printed by a command; log lines may precede it"""
    text = result.output
    document, _ = json.JSONDecoder().raw_decode(text[text.index("{\n") :])
    assert ReportSchema().validate(document) == {}
    return document


def write(tmp_path, text, name="contract.bitml"):
    path = tmp_path / name
    path.write_text(text, encoding="utf-8")
    return str(path)


def test_check_ok(runner):
    result = runner.invoke(cli, ["check", benchmark_path("mutual-tc")])
    assert result.exit_code == 0
    report = report_of(result)
    assert report["command"] == "check"
    assert report["ok"] is True
    assert report["errors"] == []


def test_check_parse_error(runner, tmp_path):
    path = write(tmp_path, '(participant "A" 02zz)')
    result = runner.invoke(cli, ["check", path])
    assert result.exit_code == 1
    error = report_of(result)["errors"][0]
    assert error["title"] == "Parse error"
    assert error["source"] == {"line": 1, "column": 18}


def test_check_static_errors(runner, tmp_path):
    path = write(tmp_path, contract_source('(withdraw "C")'))
    result = runner.invoke(cli, ["check", path])
    assert result.exit_code == 2
    report = report_of(result)
    assert report["ok"] is False
    assert [error["title"] for error in report["static_errors"]] == [
        "UnknownParticipant"
    ]


def test_verify_file_queries(runner):
    result = runner.invoke(cli, ["verify", benchmark_path("mutual-tc")])
    assert result.exit_code == 0
    verdicts = report_of(result)["verdicts"]
    assert len(verdicts) == 3
    assert all(verdict["verdict"] for verdict in verdicts)


def test_verify_frozen_funds(runner):
    result = runner.invoke(cli, ["verify", benchmark_path("mutual-tc-noafter")])
    assert result.exit_code == 3
    verdict = report_of(result)["verdicts"][0]
    assert verdict["verdict"] is False
    assert verdict["witness"]["type"] == "frozen-state"


def test_verify_with_strategy(runner):
    args = [
        "verify",
        benchmark_path("mutual-tc-noafter"),
        "--liquidity",
        "--strategy",
        '(strategy "A" (do-reveal a))',
    ]
    result = runner.invoke(cli, args)
    assert result.exit_code == 0
    assert report_of(result)["verdicts"][0]["verdict"] is True


def test_verify_strategy_file(runner, tmp_path):
    path = write(tmp_path, '(strategy "A" (do-reveal a))', "a.strategy")
    args = ["verify", benchmark_path("mutual-tc-noafter"), "--liquidity"]
    result = runner.invoke(cli, args + ["--strategy-file", path])
    assert result.exit_code == 0


def test_verify_invalid_strategy(runner):
    args = [
        "verify",
        benchmark_path("mutual-tc"),
        "--liquidity",
        "--strategy",
        '(strategy "B" (do-reveal a))',
    ]
    result = runner.invoke(cli, args)
    assert result.exit_code == 1
    assert report_of(result)["errors"][0]["detail"] == "B cannot reveal secret a"


def test_verify_ltl_flag(runner):
    args = ["verify", benchmark_path("mutual-tc"), "--ltl", "<>contract-terminated"]
    result = runner.invoke(cli, args)
    assert result.exit_code == 0
    verdict = report_of(result)["verdicts"][0]
    assert verdict["query"] == "<>contract-terminated"


def test_verify_without_query(runner):
    result = runner.invoke(cli, ["verify", benchmark_path("flattened-choice")])
    assert result.exit_code == 1
    assert report_of(result)["errors"][0]["title"] == "No query"


def test_verify_state_limit(runner):
    args = ["verify", benchmark_path("mutual-tc"), "--liquidity", "--state-limit", "2"]
    result = runner.invoke(cli, args)
    assert result.exit_code == 4


def test_state_limit_from_environment(runner):
    args = ["verify", benchmark_path("mutual-tc"), "--liquidity"]
    result = runner.invoke(cli, args, env={"BITML_STATE_LIMIT": "2"})
    assert result.exit_code == 4


def test_bad_environment(runner):
    args = ["check", benchmark_path("mutual-tc")]
    result = runner.invoke(cli, args, env={"BITML_STATE_LIMIT": "abc"})
    assert result.exit_code == 2


def test_compile_artifacts(runner, tmp_path):
    out = str(tmp_path / "out")
    result = runner.invoke(cli, ["compile", benchmark_path("mutual-tc"), "-o", out])
    assert result.exit_code == 0
    assert sorted(os.listdir(out)) == ["dag.json", "report.json", "txs.hex"]
    with open(os.path.join(out, "txs.hex")) as handle:
        lines = handle.read().split()
    assert len(lines) == 8
    with open(os.path.join(out, "dag.json")) as handle:
        dag = json.load(handle)
    assert [t["name"] for t in dag["templates"]][0] == "T_init"
    with open(os.path.join(out, "report.json")) as handle:
        saved = json.load(handle)
    assert saved["compile"]["templates"] == 8
    assert saved["compile"]["reference_templates"] == 15
    assert saved["compile"]["total_fees"] == 8000
    assert saved["compile"]["transactions"] == 8


def test_compile_insufficient_fees(runner, tmp_path):
    args = ["compile", benchmark_path("mutual-tc"), "-o", str(tmp_path)]
    result = runner.invoke(cli, args + ["--fee-per-tx", "5000"])
    assert result.exit_code == 5
    assert "txs.hex" not in os.listdir(str(tmp_path))


def test_compile_nonstandard(runner, tmp_path):
    out = str(tmp_path / "strict")
    result = runner.invoke(
        cli, ["compile", benchmark_path("oversized-choice"), "-o", out]
    )
    assert result.exit_code == 6
    report = report_of(result)
    assert report["compile"]["standardness"]
    assert report["compile"]["hints"]


def test_compile_allow_nonstandard(runner, tmp_path):
    out = str(tmp_path / "lenient")
    args = ["compile", benchmark_path("oversized-choice"), "-o", out]
    result = runner.invoke(cli, args + ["--allow-nonstandard"])
    assert result.exit_code == 0
    report = report_of(result)
    assert report["compile"]["transactions"] is None
    assert report["compile"]["hints"][0]["path"] == ""
    assert "txs.hex" not in os.listdir(out)


def test_compile_bad_preimage(runner, tmp_path):
    args = ["compile", benchmark_path("mutual-tc"), "-o", str(tmp_path)]
    result = runner.invoke(cli, args + ["--preimage", "a=xyz"])
    assert result.exit_code == 2


def test_text_format(runner):
    args = ["verify", benchmark_path("mutual-tc-noafter"), "--format", "text"]
    result = runner.invoke(cli, args)
    assert result.exit_code == 3
    assert "liquidity: false" in result.output
    assert "exit 3" in result.output


def test_text_format_compile(runner, tmp_path):
    args = ["compile", benchmark_path("mutual-tc"), "-o", str(tmp_path)]
    result = runner.invoke(cli, args + ["--format", "text"])
    assert result.exit_code == 0
    assert "8 templates (reference 15), 8000 satoshi of fees" in result.output
    assert "exit 0" in result.output


def test_json_report_is_dumped_through_schema():
    report = new_report(RunConfig("check", "contract.bitml"))
    report["scratch"] = {"not": "documented"}
    document = json.loads(render_json(report))
    assert "scratch" not in document
    assert document["bitml"] == {"version": __version__}
    assert ReportSchema().validate(document) == {}
