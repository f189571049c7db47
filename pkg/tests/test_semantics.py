# -*- coding: utf-8 -*-

import pytest

from bitml.benchmarks import load_benchmark
from bitml.core import Step
from bitml.exceptions import IllegalMove
from bitml.semantics import (
    Authorize,
    Authorized,
    Delay,
    Fire,
    HasDeposit,
    RevealSecret,
    SecretKnown,
    SecretRevealed,
    Terminated,
    TimePartition,
    apply_move,
    atom_holds,
    enumerate_moves,
    initial_configuration,
)
from bitml.verifier import reachable_states, sample_secret_regions

ONES = {"a": 1, "b": 1}
SMALL_BENCHMARKS = ["mutual-tc", "lottery", "escrow-3p", "flattened-choice"]


def run(cfg, spec, *moves):
    for move in moves:
        cfg = apply_move(cfg, move, spec)
    return cfg


def test_time_partition():
    partition = TimePartition((100000, 100050))
    assert partition.count == 3
    assert partition.interval_of(0) == 0
    assert partition.interval_of(100000) == 1
    assert partition.interval_of(100049) == 1
    assert partition.interval_of(500000) == 2
    assert partition.reached(1, 100000)
    assert not partition.reached(1, 100050)
    assert partition.describe(2) == "[100050, inf)"
    with pytest.raises(ValueError):
        TimePartition((5, 5))


def test_initial_configuration(mutual_tc):
    cfg = initial_configuration(mutual_tc, ONES)
    (root,) = cfg.active
    assert root.cid == "0"
    assert root.balance == 200000000
    assert cfg.secrets == (("a", None), ("b", None))
    assert cfg.deposits == ()
    assert cfg.interval == 0
    assert cfg.partition.count == 3
    assert cfg.total == 200000000


def test_initial_configuration_needs_every_length(mutual_tc):
    with pytest.raises(ValueError):
        initial_configuration(mutual_tc, {"a": 1})


def test_initial_moves(mutual_tc):
    cfg = initial_configuration(mutual_tc, ONES)
    assert enumerate_moves(cfg, mutual_tc) == [
        Delay(),
        RevealSecret("A", "a", 1),
        RevealSecret("B", "b", 1),
    ]


def test_deadline_enables_refund(mutual_tc):
    cfg = run(initial_configuration(mutual_tc, ONES), mutual_tc, Delay())
    assert Fire("0", (Step(1, 0),)) in enumerate_moves(cfg, mutual_tc)
    cfg = run(cfg, mutual_tc, Fire("0", (Step(1, 0),)))
    assert cfg.active == frozenset()
    assert cfg.deposits == (("B", 200000000),)
    assert atom_holds(cfg, Terminated())
    assert atom_holds(cfg, HasDeposit("B", 200000000))


def test_last_interval_has_no_delay(mutual_tc):
    cfg = run(initial_configuration(mutual_tc, ONES), mutual_tc, Delay(), Delay())
    assert Delay() not in enumerate_moves(cfg, mutual_tc)


def test_reveal_path_to_split(mutual_tc):
    spec = mutual_tc
    cfg = run(initial_configuration(spec, ONES), spec, RevealSecret("A", "a", 1))
    assert atom_holds(cfg, SecretKnown("a"))
    assert not atom_holds(cfg, SecretRevealed("a"))

    cfg = run(cfg, spec, Fire("0", (Step(0, 0),)))
    assert atom_holds(cfg, SecretRevealed("a"))
    (active,) = cfg.active
    assert active.path == (Step(0, 0),)

    reveal_b = (Step(0, 0), Step(0, 0))
    cfg = run(cfg, spec, RevealSecret("B", "b", 1), Fire("0", reveal_b))
    split = reveal_b + (Step(0, 0),)
    cfg = run(cfg, spec, Fire("0", split))
    arms = cfg.sorted_active()
    assert [arm.cid for arm in arms] == ["0.0", "0.1"]
    assert [arm.path for arm in arms] == [
        split + (Step(0, 0),),
        split + (Step(1, 0),),
    ]
    assert [arm.balance for arm in arms] == [100000000, 100000000]

    cfg = run(
        cfg,
        spec,
        Fire("0.0", split + (Step(0, 0), Step(0, 0))),
        Fire("0.1", split + (Step(1, 0), Step(0, 0))),
    )
    assert cfg.deposits == (("A", 100000000), ("B", 100000000))
    assert cfg.total == 200000000


def test_predicate_guards_reveal(lottery):
    cfg = initial_configuration(lottery, {"a": 1, "b": 2})
    cfg = run(
        cfg,
        lottery,
        RevealSecret("A", "a", 1),
        Fire("0", (Step(0, 0),)),
        RevealSecret("B", "b", 2),
    )
    fires = [move for move in enumerate_moves(cfg, lottery) if isinstance(move, Fire)]
    assert fires == [Fire("0", (Step(0, 0), Step(1, 0)))]


def test_authorization(escrow):
    cfg = initial_configuration(escrow, {})
    moves = enumerate_moves(cfg, escrow)
    assert moves == [
        Delay(),
        Authorize("A", (Step(0, 0),)),
        Authorize("B", (Step(1, 0),)),
        Authorize("M", (Step(2, 0),)),
    ]
    cfg = run(cfg, escrow, Authorize("M", (Step(2, 0),)))
    assert atom_holds(cfg, Authorized("M", (Step(2, 0),)))
    assert Authorize("M", (Step(2, 0),)) not in enumerate_moves(cfg, escrow)

    cfg = run(cfg, escrow, Fire("0", (Step(2, 0),)))
    assert sorted(arm.balance for arm in cfg.active) == [50000000, 50000000]


def test_illegal_move(mutual_tc):
    cfg = initial_configuration(mutual_tc, ONES)
    with pytest.raises(IllegalMove):
        apply_move(cfg, Fire("0", (Step(0, 0),)), mutual_tc)
    with pytest.raises(IllegalMove):
        apply_move(cfg, RevealSecret("A", "z", 1), mutual_tc)


def test_configuration_identity_ignores_partition(mutual_tc):
    first = initial_configuration(mutual_tc, ONES)
    second = initial_configuration(mutual_tc, {"a": 2, "b": 3})
    assert first == second
    assert hash(first) == hash(second)
    assert first.describe()["secrets"] == {"a": "committed", "b": "committed"}


def test_moves_are_values():
    assert RevealSecret("A", "a", 1) == RevealSecret("A", "a", 1)
    assert Authorize("M", (Step(2, 0),)).participant == "M"
    assert len({Delay(), Delay()}) == 1
    assert not hasattr(Fire("0", (Step(0, 0),)), "participant")


def explored_moves(spec):
    """``(cfg, move, successor)`` for every move reachable in some region"""
    for assignment in sample_secret_regions(spec):
        graph = reachable_states(spec, {}, assignment)
        for node in graph.graph.nodes:
            for target, move, _ in graph.edges(node):
                yield graph.cfg(node), move, graph.cfg(target)


@pytest.mark.parametrize("name", SMALL_BENCHMARKS)
def test_moves_only_accumulate(name):
    spec = load_benchmark(name)
    for cfg, _, successor in explored_moves(spec):
        assert successor.interval >= cfg.interval
        assert set(successor.revealed_lengths) >= set(cfg.revealed_lengths)
        assert successor.exhibited >= cfg.exhibited
        assert successor.auths >= cfg.auths


@pytest.mark.parametrize("name", SMALL_BENCHMARKS)
def test_fire_survives_other_moves(name):
    spec = load_benchmark(name)
    for cfg, move, successor in explored_moves(spec):
        if isinstance(move, Fire):
            continue
        fires = {m for m in enumerate_moves(cfg, spec) if isinstance(m, Fire)}
        assert fires <= set(enumerate_moves(successor, spec)), move


@pytest.mark.parametrize("name", SMALL_BENCHMARKS)
def test_apply_move_is_deterministic(name):
    spec = load_benchmark(name)
    for cfg, move, successor in explored_moves(spec):
        again = apply_move(cfg, move, spec)
        assert again == successor
        assert hash(again) == hash(successor)
        assert again.describe() == successor.describe()
