# -*- coding: utf-8 -*-

"""Decorators turning exceptions of a command into its report"""

import logging
from functools import wraps

from bitml.errors import bitml_errors
from bitml.exceptions import BitmlException, StaticCheckFailed

logger = logging.getLogger(__name__)


def new_report(cfg):
    """An empty report for a run

    :param RunConfig cfg: the run
    :return dict: a report with no errors and no verdicts
    """
    report = {
        "command": cfg.subcommand,
        "input": cfg.input,
        "ok": True,
        "exit_code": 0,
        "static_errors": [],
        "verdicts": [],
        "compile": None,
    }
    report.update(bitml_errors([]))
    return report


def finish(report, exit_code=0):
    report["exit_code"] = exit_code
    report["ok"] = exit_code == 0
    return report


def report_exception_formatter(func):
    """Catch errors raised by a command and record them in its report

    The decorated command takes a RunConfig and a report and returns the
    report. Unexpected exceptions are re-raised when ``DEBUG`` is set.

    :param callable func: the command to decorate
    :return callable: a function of the RunConfig alone
    """

    @wraps(func)
    def wrapper(cfg):
        report = new_report(cfg)
        try:
            return func(cfg, report)
        except BitmlException as e:
            if isinstance(e, StaticCheckFailed):
                report["static_errors"] = [error.to_dict() for error in e.errors]
            report.update(bitml_errors(report["errors"] + [e.to_dict()]))
            return finish(report, e.exit_code)
        except Exception as e:
            if cfg.config["DEBUG"] is True:
                raise e
            logger.exception("unexpected error")
            exc = BitmlException(
                getattr(e, "detail", str(e) or type(e).__name__),
                source=getattr(e, "source", None),
                title=getattr(e, "title", None),
                code=type(e).__name__,
            )
            report.update(bitml_errors(report["errors"] + [exc.to_dict()]))
            return finish(report, exc.exit_code)

    return wrapper
