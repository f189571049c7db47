# -*- coding: utf-8 -*-

import dataclasses
import itertools

import pytest
from hypothesis import given, strategies as st

from bitml.core import (
    BTC,
    Add,
    And,
    Contract,
    Eq,
    IntConst,
    Lt,
    Not,
    Or,
    PTrue,
    SecretLen,
    Split,
    SplitArm,
    Sub,
    Withdraw,
    check_static,
    check_value_flow,
    eval_predicate,
)
from bitml.exceptions import UnboundSecret
from tests.conftest import HASH_A, PK_A, TXID_A, TXID_B, contract_source, parse_text


def test_mutual_tc_is_well_formed(mutual_tc):
    assert check_static(mutual_tc) == []


def test_duplicate_secret_hash():
    pre = (
        '(deposit "A" 100000000 (outpoint {} 0)) '
        '(secret "A" a {h}) (secret "B" b {h})'
    ).format(TXID_A, h=HASH_A)
    spec = parse_text(contract_source('(reveal (a b) (withdraw "A"))', pre))
    errors = check_static(spec)
    assert [error.kind for error in errors] == ["DuplicateSecretHash"]
    assert errors[0].source["hash"] == HASH_A


def test_deposit_outpoint_reused_as_fee():
    pre = (
        '(deposit "A" 100000000 (outpoint {0} 0)) (fee "A" 1000 (outpoint {0} 0))'
    ).format(TXID_A)
    errors = check_static(parse_text(contract_source('(withdraw "A")', pre)))
    assert [error.kind for error in errors] == ["DuplicateOutpoint"]


def test_undeclared_recipient_parses_then_fails_check():
    spec = parse_text(contract_source('(withdraw "C")'))
    errors = check_static(spec)
    assert [error.kind for error in errors] == ["UnknownParticipant"]
    assert errors[0].source["participant"] == "C"


def test_reveal_of_uncommitted_secret():
    errors = check_static(parse_text(contract_source('(reveal (z) (withdraw "A"))')))
    assert "UnknownSecret" in [error.kind for error in errors]


def test_predicate_on_unrevealed_secret():
    pre = (
        '(deposit "A" 100000000 (outpoint {} 0)) '
        '(secret "A" a {}) (secret "B" b {})'
    ).format(TXID_A, HASH_A, "b2" * 32)
    body = '(reveal (a) (pred (= (len b) 1)) (withdraw "A"))'
    errors = check_static(parse_text(contract_source(body, pre)))
    assert [error.kind for error in errors] == ["UnknownSecret"]
    assert errors[0].source["secret"] == "b"


def test_duplicate_participant():
    text = '(participant "A" {0})\n(participant "A" {0})\n'.format(PK_A)
    text += '(contract (pre (deposit "A" 1 (outpoint {} 0))) (withdraw "A"))'.format(
        TXID_A
    )
    errors = check_static(parse_text(text))
    assert [error.kind for error in errors] == ["DuplicateParticipant"]


def test_static_errors_serialize():
    errors = check_static(parse_text(contract_source('(withdraw "C")')))
    assert errors[0].to_dict() == {
        "title": "UnknownParticipant",
        "detail": "withdraw to undeclared participant C",
        "source": {"path": "0.0", "participant": "C"},
    }


def _two_deposits(body):
    pre = (
        '(deposit "A" 100000000 (outpoint {} 0)) '
        '(deposit "B" 100000000 (outpoint {} 0))'
    ).format(TXID_A, TXID_B)
    return parse_text(contract_source(body, pre))


def test_value_flow_split_tiles_balance():
    spec = _two_deposits(
        '(split (100000000 -> (withdraw "A")) (100000000 -> (withdraw "B")))'
    )
    assert check_value_flow(spec) == []


def test_value_flow_mismatch():
    spec = _two_deposits(
        '(split (100000000 -> (withdraw "A")) (50000000 -> (withdraw "B")))'
    )
    errors = check_value_flow(spec)
    assert [error.kind for error in errors] == ["ValueFlowMismatch"]
    assert errors[0].source == {"path": "0.0"}
    assert errors == [e for e in check_static(spec) if e.kind == "ValueFlowMismatch"]


def test_value_flow_nested_split(mutual_tc):
    inner = Split(
        (
            SplitArm(BTC, Contract((Withdraw("A"),))),
            SplitArm(BTC, Contract((Withdraw("B"),))),
        )
    )
    outer = Split(
        (SplitArm(BTC, Contract((Withdraw("A"),))), SplitArm(2 * BTC, Contract((inner,))))
    )
    deposit = mutual_tc.precondition.persistent_deposits[0]
    precondition = dataclasses.replace(
        mutual_tc.precondition,
        persistent_deposits=(dataclasses.replace(deposit, value=3 * BTC),),
    )
    spec = dataclasses.replace(
        mutual_tc, precondition=precondition, contract=Contract((outer,))
    )
    assert check_value_flow(spec) == []


def test_check_static_is_order_insensitive():
    pre = (
        '(deposit "A" 100000000 (outpoint {0} 0)) (fee "A" 1 (outpoint {0} 0)) '
        '(secret "A" a {h}) (secret "B" b {h})'
    ).format(TXID_A, h=HASH_A)
    spec = parse_text(contract_source('(withdraw "C")', pre))
    expected = check_static(spec)
    assert len(expected) == 3
    secrets = spec.precondition.secrets
    for permutation in itertools.permutations(secrets):
        precondition = dataclasses.replace(spec.precondition, secrets=permutation)
        shuffled = dataclasses.replace(spec, precondition=precondition)
        assert check_static(shuffled) == expected
        assert check_static(shuffled) == check_static(shuffled)


@pytest.mark.parametrize(
    "predicate,lengths,expected",
    [
        (Eq(SecretLen("a"), IntConst(1)), {"a": 1}, True),
        (Lt(SecretLen("a"), Add(SecretLen("b"), IntConst(1))), {"a": 2, "b": 2}, True),
        (
            And(Eq(SecretLen("a"), IntConst(1)), Not(Eq(SecretLen("b"), IntConst(1)))),
            {"a": 1, "b": 0},
            True,
        ),
        (Lt(Sub(SecretLen("a"), IntConst(5)), IntConst(-4)), {"a": 0}, True),
        (Or(PTrue(), Eq(SecretLen("a"), IntConst(3))), {"a": 0}, True),
    ],
)
def test_eval_predicate(predicate, lengths, expected):
    assert eval_predicate(predicate, lengths) is expected


def test_eval_predicate_truth_table():
    predicate = And(Eq(SecretLen("a"), IntConst(1)), Not(Eq(SecretLen("b"), IntConst(1))))
    for a, b in itertools.product(range(3), repeat=2):
        lengths = {"a": a, "b": b}
        assert eval_predicate(predicate, lengths) == (a == 1 and b != 1)


def test_eval_predicate_unbound_secret():
    with pytest.raises(UnboundSecret):
        eval_predicate(Eq(SecretLen("a"), IntConst(1)), {})


expressions = st.recursive(
    st.one_of(
        st.integers(min_value=-3, max_value=3).map(IntConst),
        st.sampled_from(["a", "b"]).map(SecretLen),
    ),
    lambda children: st.one_of(
        st.builds(Add, children, children), st.builds(Sub, children, children)
    ),
    max_leaves=6,
)

predicates = st.recursive(
    st.one_of(
        st.just(PTrue()),
        st.builds(Eq, expressions, expressions),
        st.builds(Lt, expressions, expressions),
    ),
    lambda children: st.one_of(
        st.builds(Not, children),
        st.builds(And, children, children),
        st.builds(Or, children, children),
    ),
    max_leaves=6,
)


@given(
    predicates,
    st.integers(min_value=0, max_value=4),
    st.integers(min_value=0, max_value=4),
)
def test_negation_law(predicate, a, b):
    lengths = {"a": a, "b": b}
    assert eval_predicate(Not(predicate), lengths) is not eval_predicate(
        predicate, lengths
    )
