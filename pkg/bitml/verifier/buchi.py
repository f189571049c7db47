# -*- coding: utf-8 -*-

"""Translation of LTL formulas into generalized Büchi automata.

Tableau construction over formulas in negation normal form. Every automaton
state carries the literals that must hold in the configuration it reads; a
run reads configuration ``i`` in state ``i``.
"""

import itertools
import logging
from dataclasses import dataclass
from typing import FrozenSet, Tuple

from bitml.verifier.formula import (
    Const,
    FAnd,
    FOr,
    Literal,
    Next,
    Release,
    Until,
)

logger = logging.getLogger(__name__)

INIT = -1


@dataclass(frozen=True)
class AutomatonState(object):
    ident: int
    literals: FrozenSet[Literal]

    def accepts(self, cfg):
        return all(literal.holds(cfg) for literal in self.literals)


@dataclass
class BuchiAutomaton(object):
    states: Tuple[AutomatonState, ...]
    initial: FrozenSet[int]
    successors: dict
    acceptance: Tuple[FrozenSet[int], ...]

    def __len__(self):
        return len(self.states)


class _Node(object):
    def __init__(self, ident, incoming, new, old, nxt):
        self.ident = ident
        self.incoming = set(incoming)
        self.new = set(new)
        self.old = set(old)
        self.next = set(nxt)


def _contradicts(formula, old):
    if isinstance(formula, Const):
        return not formula.value
    return isinstance(formula, Literal) and formula.negation() in old


def ltl_to_buchi(formula):
    """Build a generalized Büchi automaton accepting the models of ``formula``

    :param Formula formula: any LTL formula; it is put in negation normal form first
    :return BuchiAutomaton: the automaton
    """
    formula = formula.nnf()
    counter = itertools.count()
    nodes = []

    def expand(node):
        if not node.new:
            for known in nodes:
                if known.old == node.old and known.next == node.next:
                    known.incoming |= node.incoming
                    return
            nodes.append(node)
            expand(_Node(next(counter), {node.ident}, node.next, (), ()))
            return

        current = node.new.pop()
        if isinstance(current, (Literal, Const)):
            if _contradicts(current, node.old):
                return
            node.old.add(current)
            expand(node)
        elif isinstance(current, FAnd):
            node.new |= {current.left, current.right} - node.old
            node.old.add(current)
            expand(node)
        elif isinstance(current, Next):
            node.old.add(current)
            node.next.add(current.operand)
            expand(node)
        elif isinstance(current, (Until, Release, FOr)):
            if isinstance(current, Until):
                first, first_next, second = {current.left}, {current}, {current.right}
            elif isinstance(current, Release):
                first, first_next = {current.right}, {current}
                second = {current.left, current.right}
            else:
                first, first_next, second = {current.left}, set(), {current.right}
            left = _Node(
                next(counter),
                node.incoming,
                node.new | (first - node.old),
                node.old | {current},
                node.next | first_next,
            )
            right = _Node(
                next(counter),
                node.incoming,
                node.new | (second - node.old),
                node.old | {current},
                node.next,
            )
            expand(left)
            expand(right)
        else:
            raise ValueError("formula {} is not in negation normal form".format(current))

    expand(_Node(next(counter), {INIT}, {formula}, (), ()))

    states = tuple(
        AutomatonState(
            node.ident, frozenset(f for f in node.old if isinstance(f, Literal))
        )
        for node in nodes
    )
    successors = {node.ident: set() for node in nodes}
    for node in nodes:
        for source in node.incoming:
            if source != INIT:
                successors[source].add(node.ident)
    initial = frozenset(node.ident for node in nodes if INIT in node.incoming)

    untils = set()
    for node in nodes:
        untils.update(f for f in node.old if isinstance(f, Until))
    acceptance = tuple(
        frozenset(
            node.ident
            for node in nodes
            if until.right in node.old or until not in node.old
        )
        for until in sorted(untils, key=str)
    )
    logger.debug(
        "automaton for %s: %d states, %d acceptance sets",
        formula,
        len(states),
        len(acceptance),
    )
    return BuchiAutomaton(
        states=states,
        initial=initial,
        successors={key: frozenset(value) for key, value in successors.items()},
        acceptance=acceptance,
    )
