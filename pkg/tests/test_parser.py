# -*- coding: utf-8 -*-

import pytest
from hypothesis import given, settings, strategies as st

from bitml.benchmarks import benchmark_names, load_benchmark
from bitml.benchmarks import mutual_tc as generate_mutual_tc
from bitml.core import Reveal, Step, Withdraw
from bitml.exceptions import ParseError
from bitml.parser import (
    LiquidityQuery,
    SourceFile,
    format_strategy,
    parse_file,
    parse_ltl,
    parse_strategies,
    parse_strategy,
    pretty_print,
)
from bitml.semantics import Authorized, HasDeposit, SecretRevealed, Terminated
from bitml.verifier import (
    AuthAction,
    CondAnd,
    RevealAction,
    Revealed,
    Rule,
    Strategy,
    TimeReached,
)
from bitml.verifier.formula import (
    Atomic,
    FAnd,
    FNot,
    FOr,
    Finally,
    Globally,
    Implies,
    Next,
    Until,
)
from tests.conftest import PK_A, contract_source, parse_text

a = Atomic(SecretRevealed("a"))
b = Atomic(SecretRevealed("b"))
c = Atomic(SecretRevealed("c"))


def test_mutual_tc_golden(mutual_tc_bundle):
    spec = mutual_tc_bundle.spec
    assert spec.name == "mutual-tc"
    assert spec.participant_names == ("A", "B")
    assert spec.participant("A").pubkey == PK_A
    assert spec.deadlines == (100000, 100050)
    assert spec.precondition.balance == 200000000
    assert spec.precondition.fees == 10000
    assert spec.precondition.secret("b").hash == "b2" * 32

    first, second = spec.contract.branches
    assert isinstance(first, Reveal)
    assert first.secrets == ("a",)
    assert second.height == 100000
    assert second.inner == Withdraw("B")

    assert mutual_tc_bundle.strategies == ()
    assert isinstance(mutual_tc_bundle.queries[0], LiquidityQuery)
    assert mutual_tc_bundle.queries[1].formula == Globally(
        Implies(a, Finally(Atomic(HasDeposit("A", 100000000))))
    )


@pytest.mark.parametrize("name", benchmark_names())
def test_pretty_print_round_trip(name):
    spec = load_benchmark(name)
    assert parse_text(pretty_print(spec)) == spec


@pytest.mark.parametrize("n", [2, 3])
def test_pretty_print_generated(n):
    spec = generate_mutual_tc(n)
    assert parse_text(pretty_print(spec)) == spec


def test_generated_two_party_matches_file(mutual_tc):
    # same tree and participants; deposits and hashes differ
    assert generate_mutual_tc(2).contract == mutual_tc.contract


def test_predicate_syntax(lottery):
    reveal = lottery.contract.branches[0].continuation.branches[0]
    assert reveal.secrets == ("b",)
    assert reveal.predicate.secrets() == frozenset(("a", "b"))


def test_strategy_reveal():
    strategy = parse_strategy('(strategy "A" (do-reveal a))')
    assert strategy == Strategy("A", (Rule(RevealAction("a")),))


def test_strategy_with_condition():
    strategy = parse_strategy(
        '(strategy "B" (do-auth (branch 0 0)) (if (and (revealed a) (time>= 100))))'
    )
    rule = strategy.rules[0]
    assert rule.action == AuthAction((Step(0, 0),))
    assert rule.condition == CondAnd(Revealed("a"), TimeReached(100))
    assert parse_strategy(format_strategy(strategy)) == strategy


def test_strategy_needs_one_form():
    with pytest.raises(ParseError):
        parse_strategy('(strategy "A" (do-reveal a)) (strategy "B" (do-reveal b))')
    assert len(parse_strategies("")) == 0


def test_strategy_file_keeps_order():
    strategies = parse_strategies(
        '(strategy "A" (do-reveal a))\n(strategy "B" (do-reveal b))'
    )
    assert [s.participant for s in strategies] == ["A", "B"]


@pytest.mark.parametrize(
    "text,expected",
    [
        ("a revealed /\\ b revealed \\/ c revealed", FOr(FAnd(a, b), c)),
        ("a revealed \\/ b revealed /\\ c revealed", FOr(a, FAnd(b, c))),
        ("a revealed => b revealed => c revealed", Implies(a, Implies(b, c))),
        ("!a revealed U b revealed", Until(FNot(a), b)),
        ("a revealed U b revealed U c revealed", Until(a, Until(b, c))),
        ("[]<>a revealed", Globally(Finally(a))),
        ("X (a revealed)", Next(a)),
        ("X revealed", Atomic(SecretRevealed("X"))),
        ('"A" has-deposit>= 5 satoshi', Atomic(HasDeposit("A", 5))),
        (
            "A authorized (branch 0 1 2)",
            Atomic(Authorized("A", (Step(0, 1), Step(2, 0)))),
        ),
        ("<>contract-terminated", Finally(Atomic(Terminated()))),
    ],
)
def test_ltl_precedence(text, expected):
    assert parse_ltl(text) == expected


@pytest.mark.parametrize(
    "text,column",
    [("a revealed /\\", 14), ("(a revealed", 12), ("a", 1), ("a revealed $", 12)],
)
def test_ltl_errors(text, column):
    with pytest.raises(ParseError) as error:
        parse_ltl(text)
    assert error.value.line == 1
    assert error.value.column == column


def test_error_position_in_hex():
    with pytest.raises(ParseError) as error:
        parse_text('(participant "A" 02zz)')
    assert (error.value.line, error.value.column) == (1, 18)
    assert error.value.expected == "HEX"


def test_error_position_of_unknown_form():
    with pytest.raises(ParseError) as error:
        parse_text('(participant "A" {})\n  (bogus)'.format(PK_A))
    assert (error.value.line, error.value.column) == (2, 3)


def test_unclosed_list():
    with pytest.raises(ParseError) as error:
        parse_text("(contract (pre)")
    assert (error.value.line, error.value.column) == (1, 16)
    assert error.value.to_dict()["meta"] == {"expected": ")"}


def test_missing_contract():
    with pytest.raises(ParseError) as error:
        parse_text('(participant "A" {})'.format(PK_A))
    assert error.value.expected == "(contract"


def test_forms_out_of_order():
    text = contract_source('(withdraw "A")') + '\n(participant "C" {})'.format(PK_A)
    with pytest.raises(ParseError):
        parse_text(text)


def test_invalid_utf8():
    with pytest.raises(ParseError) as error:
        parse_file(SourceFile(b'(participant "A"\n\xff'))
    assert (error.value.line, error.value.column) == (2, 1)


def test_query_error_is_relative_to_file():
    text = contract_source('(withdraw "A")') + '\n(check-query "[] (a revealed")'
    with pytest.raises(ParseError) as error:
        parse_text(text)
    assert error.value.line == 4


fragments = st.lists(
    st.sampled_from(
        [
            "(",
            ")",
            " ",
            "\n",
            '"A"',
            "participant",
            "contract",
            "pre",
            "choice",
            "withdraw",
            "split",
            "reveal",
            "after",
            "auth",
            "->",
            "100",
            "-3",
            "a",
            PK_A,
            ";x\n",
            '"',
            "$",
        ]
    ),
    max_size=40,
).map("".join)


@settings(max_examples=300)
@given(st.one_of(fragments, st.text(max_size=60)))
def test_parse_only_raises_parse_error(text):
    try:
        parse_text(text)
    except ParseError as error:
        assert error.line >= 1 and error.column >= 1
