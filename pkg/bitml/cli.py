# -*- coding: utf-8 -*-

"""Command line entry point: ``bitml check``, ``bitml verify`` and ``bitml compile``"""

import logging
import os
from dataclasses import dataclass, field
from typing import Dict, Optional, Tuple

import click

from bitml import __version__
from bitml.benchmarks import reference_templates
from bitml.compiler import check_standardness, compile, suggest_flattening
from bitml.config import Config
from bitml.content import RENDERERS, render_json, to_json
from bitml.core import check_static
from bitml.decorators import finish, report_exception_formatter
from bitml.exceptions import NoQuery, StaticCheckFailed
from bitml.parser import (
    FormulaQuery,
    LiquidityQuery,
    SourceFile,
    parse_file,
    parse_ltl,
    parse_strategies,
    parse_strategy,
)
from bitml.schema import TxDagSchema
from bitml.txwire import TestSigner, finalize
from bitml.verifier import check_liquidity, check_ltl, replay
from bitml.verifier.strategy import merge_strategies, validate_strategies

logger = logging.getLogger(__name__)

SUBCOMMANDS = ("check", "verify", "compile")
FORMATS = ("json", "text")


@dataclass
class RunConfig(object):
    """Everything one invocation needs; flags left to ``None`` fall back to ``config``"""

    subcommand: str
    input: str
    strategies: Tuple[str, ...] = ()
    strategy_file: Optional[str] = None
    ltl: Tuple[str, ...] = ()
    liquidity: bool = False
    epsilon: Optional[int] = None
    fee_per_tx: Optional[int] = None
    output_dir: Optional[str] = None
    output_format: Optional[str] = None
    state_limit: Optional[int] = None
    allow_nonstandard: bool = False
    preimages: Dict[str, bytes] = field(default_factory=dict)
    config: Config = field(default_factory=Config)

    def __post_init__(self):
        if self.subcommand not in SUBCOMMANDS:
            raise ValueError("unknown subcommand {}".format(self.subcommand))
        if self.subcommand == "compile" and not self.output_dir:
            raise ValueError("compile needs an output directory")
        if self.output_format is None:
            self.output_format = self.config["OUTPUT_FORMAT"]

    def setting(self, flag, key):
        value = getattr(self, flag)
        return self.config[key] if value is None else value


def _load(cfg):
    """Parse the input and run the static checks

    :raise ParseError: when the file does not parse
    :raise StaticCheckFailed: when the contract is not well-formed
    """
    bundle = parse_file(SourceFile.read(cfg.input))
    errors = check_static(bundle.spec)
    if errors:
        raise StaticCheckFailed(errors, source={"file": cfg.input})
    return bundle


def _strategies(cfg, bundle):
    from_flags = [parse_strategy(text) for text in cfg.strategies]
    if cfg.strategy_file:
        with open(cfg.strategy_file, encoding="utf-8") as handle:
            from_flags.extend(parse_strategies(handle.read()))
    strategies = merge_strategies(bundle.strategies)
    # a participant given on the command line drops its in-file rules
    strategies.update(merge_strategies(from_flags))
    validate_strategies(strategies, bundle.spec)
    return strategies


def _queries(cfg, bundle):
    if not (cfg.liquidity or cfg.ltl):
        return list(bundle.queries)
    queries = [LiquidityQuery()] if cfg.liquidity else []
    queries.extend(FormulaQuery(text, parse_ltl(text)) for text in cfg.ltl)
    return queries


def _replay(spec, witness):
    for step, cfg in enumerate(replay(spec, witness)):
        logger.debug("witness step %d: %s", step, cfg.describe())


@report_exception_formatter
def cmd_check(cfg, report):
    """Parse the input and run ``check_static``, value flow included"""
    _load(cfg)
    return finish(report)


@report_exception_formatter
def cmd_verify(cfg, report):
    """Run every query, from the flags or else from the file, under the strategies"""
    bundle = _load(cfg)
    spec = bundle.spec
    strategies = _strategies(cfg, bundle)
    queries = _queries(cfg, bundle)
    if not queries:
        raise NoQuery("give --liquidity, --ltl or a query form in the file")

    state_limit = cfg.setting("state_limit", "STATE_LIMIT")
    parallel = cfg.config["PARALLEL_REGIONS"]
    for query in queries:
        if isinstance(query, LiquidityQuery):
            result = check_liquidity(
                spec,
                strategies,
                epsilon=cfg.setting("epsilon", "LIQUIDITY_EPSILON"),
                state_limit=state_limit,
                parallel=parallel,
            )
        else:
            result = check_ltl(
                spec, strategies, query.formula, state_limit, parallel=parallel
            )
        if result.witness is not None:
            _replay(spec, result.witness)
        verdict = result.to_dict()
        if isinstance(query, FormulaQuery):
            verdict["query"] = query.text
        report["verdicts"].append(verdict)

    holds = all(verdict["verdict"] for verdict in report["verdicts"])
    return finish(report, 0 if holds else 3)


def _write(directory, name, text):
    path = os.path.join(directory, name)
    with open(path, "w", encoding="utf-8") as handle:
        handle.write(text)
        handle.write("\n")
    logger.info("wrote %s", path)


@report_exception_formatter
def cmd_compile(cfg, report):
    """Compile to ``dag.json`` and, when standard, finalize to ``txs.hex``"""
    spec = _load(cfg).spec
    fee_per_tx = cfg.setting("fee_per_tx", "FEE_PER_TX")
    pad = cfg.config["SECRET_PAD"]
    signer = TestSigner()

    dag = compile(spec, fee_per_tx, pad)
    violations = check_standardness(dag, signer)
    summary = {
        "templates": len(dag),
        "reference_templates": reference_templates(spec),
        "fee_per_tx": fee_per_tx,
        "total_fees": dag.total_fees,
        "standardness": [violation.to_dict() for violation in violations],
        "hints": [],
        "transactions": None,
    }
    report["compile"] = summary
    os.makedirs(cfg.output_dir, exist_ok=True)
    _write(cfg.output_dir, "dag.json", to_json(TxDagSchema().dump(dag)))

    if violations:
        hints = suggest_flattening(spec, signer, pad)
        summary["hints"] = [hint.to_dict() for hint in hints]
        if not cfg.allow_nonstandard:
            raise violations[0]
        logger.warning("%d standardness violations, txs.hex omitted", len(violations))
        return finish(report)

    transactions = finalize(dag, signer, cfg.preimages)
    _write(
        cfg.output_dir,
        "txs.hex",
        "\n".join(tx.serialize().hex() for tx in transactions),
    )
    summary["transactions"] = len(transactions)
    return finish(report)


COMMANDS = {"check": cmd_check, "verify": cmd_verify, "compile": cmd_compile}


def run(cfg):
    """Run a command; ``compile`` also leaves its report next to its artifacts

    :param RunConfig cfg: the invocation
    :return dict: the report
    """
    report = COMMANDS[cfg.subcommand](cfg)
    if cfg.subcommand == "compile" and os.path.isdir(cfg.output_dir):
        _write(cfg.output_dir, "report.json", render_json(report))
    return report


def _emit(ctx, cfg):
    report = run(cfg)
    click.echo(RENDERERS[cfg.output_format](report))
    ctx.exit(report["exit_code"])


def _parse_preimages(ctx, param, values):
    preimages = {}
    for value in values:
        name, sep, digits = value.partition("=")
        try:
            preimages[name] = bytes.fromhex(digits)
        except ValueError:
            sep = ""
        if not sep or not name:
            raise click.BadParameter("expected NAME=HEX, got {}".format(value))
    return preimages


input_argument = click.argument(
    "file", type=click.Path(exists=True, dir_okay=False, readable=True)
)
format_option = click.option(
    "--format",
    "output_format",
    type=click.Choice(FORMATS),
    default=None,
    help="Report format (default json).",
)


@click.group(context_settings={"help_option_names": ["-h", "--help"]})
@click.option("-v", "--verbose", is_flag=True, help="Log at DEBUG level.")
@click.version_option(__version__, prog_name="bitml")
@click.pass_context
def cli(ctx, verbose):
    """Check, verify and compile BitML contracts."""
    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
    )
    try:
        ctx.obj = Config.from_env()
    except ValueError as error:
        raise click.UsageError(str(error))


@cli.command()
@input_argument
@format_option
@click.pass_context
def check(ctx, file, output_format):
    """Parse FILE and run the static checks."""
    _emit(ctx, RunConfig("check", file, output_format=output_format, config=ctx.obj))


@cli.command()
@input_argument
@click.option("--liquidity", is_flag=True, help="Check liquidity.")
@click.option(
    "--epsilon", type=click.IntRange(min=0), help="Satoshi allowed to stay frozen."
)
@click.option("--ltl", multiple=True, help="LTL formula to check (repeatable).")
@click.option("--strategy", multiple=True, help="Strategy s-expression (repeatable).")
@click.option(
    "--strategy-file",
    type=click.Path(exists=True, dir_okay=False),
    help="File of strategy forms.",
)
@click.option(
    "--state-limit", type=click.IntRange(min=1), help="Per-region state bound."
)
@format_option
@click.pass_context
def verify(
    ctx,
    file,
    liquidity,
    epsilon,
    ltl,
    strategy,
    strategy_file,
    state_limit,
    output_format,
):
    """Verify liquidity and LTL properties of FILE.

    Without --liquidity or --ltl the queries written in FILE are run.
    """
    cfg = RunConfig(
        "verify",
        file,
        strategies=strategy,
        strategy_file=strategy_file,
        ltl=ltl,
        liquidity=liquidity,
        epsilon=epsilon,
        state_limit=state_limit,
        output_format=output_format,
        config=ctx.obj,
    )
    _emit(ctx, cfg)


@cli.command("compile")
@input_argument
@click.option(
    "-o",
    "--output",
    "output_dir",
    required=True,
    type=click.Path(file_okay=False),
    help="Directory receiving dag.json, txs.hex and report.json.",
)
@click.option(
    "--fee-per-tx", type=click.IntRange(min=0), help="Satoshi per transaction."
)
@click.option(
    "--allow-nonstandard",
    is_flag=True,
    help="Report standardness violations instead of failing.",
)
@click.option(
    "--preimage",
    multiple=True,
    callback=_parse_preimages,
    help="NAME=HEX preimage of a secret, pushed by its reveal transactions.",
)
@format_option
@click.pass_context
def compile_command(
    ctx, file, output_dir, fee_per_tx, allow_nonstandard, preimage, output_format
):
    """Compile FILE to Bitcoin transactions."""
    cfg = RunConfig(
        "compile",
        file,
        fee_per_tx=fee_per_tx,
        output_dir=output_dir,
        allow_nonstandard=allow_nonstandard,
        preimages=preimage,
        output_format=output_format,
        config=ctx.obj,
    )
    _emit(ctx, cfg)


def main():
    cli(prog_name="bitml")


if __name__ == "__main__":
    main()
