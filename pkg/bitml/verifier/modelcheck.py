# -*- coding: utf-8 -*-

"""LTL model checking under weak fairness of Guaranteed moves.

The negated formula is turned into a generalized Büchi automaton and
composed with the state graph; deadlocks stutter forever. A counterexample
is a reachable strongly connected component of the product that meets every
acceptance set and takes every Guaranteed move that stays enabled throughout
it.
"""

import functools
import logging
import time

import networkx as nx

from bitml.verifier.buchi import ltl_to_buchi
from bitml.verifier.formula import (
    Const,
    FAnd,
    FNot,
    FOr,
    Literal,
    Next,
    Release,
    Until,
)
from bitml.verifier.graph import reachable_states
from bitml.verifier.regions import sample_secret_regions, verify_regions
from bitml.verifier.result import Lasso, VerificationResult
from bitml.verifier.strategy import MoveClass

logger = logging.getLogger(__name__)

STUTTER = None
_START = "start"


def _successors(graph, node):
    edges = graph.edges(node)
    if not edges:
        return [(node, STUTTER, None)]
    return edges


def build_product(graph, automaton):
    """Synchronous product of a state graph with a Büchi automaton

    Product nodes are ``(lts_node, automaton_state)`` pairs; the extra node
    ``"start"`` points at the initial ones. Edges carry the set of moves
    that realize them under ``moves``.
    """
    states = {state.ident: state for state in automaton.states}
    product = nx.DiGraph()
    product.add_node(_START)
    initial_cfg = graph.cfg(0)
    frontier = []
    for ident in sorted(automaton.initial):
        if states[ident].accepts(initial_cfg):
            product.add_edge(_START, (0, ident))
            frontier.append((0, ident))

    seen = set(frontier)
    while frontier:
        node, ident = frontier.pop()
        for target, move, _ in _successors(graph, node):
            cfg = graph.cfg(target)
            for successor in sorted(automaton.successors[ident]):
                if not states[successor].accepts(cfg):
                    continue
                pair = (target, successor)
                if product.has_edge((node, ident), pair):
                    product.edges[(node, ident), pair]["moves"].add(move)
                else:
                    product.add_edge((node, ident), pair, moves={move})
                if pair not in seen:
                    seen.add(pair)
                    frontier.append(pair)
    return product


def _guaranteed_enabled(graph, node):
    return {move for _, move, kind in graph.edges(node) if kind is MoveClass.GUARANTEED}


def _fair_requirements(graph, automaton, product, component):
    """What a fair accepting cycle through ``component`` must visit

    :return list: ``("node", candidates)`` per acceptance set and
        ``("edge", move, candidates)`` per Guaranteed move enabled in every
        state of the component; None when no such cycle exists
    """
    inner = product.subgraph(component)
    if inner.number_of_edges() == 0:
        return None

    requirements = []
    for accepting in automaton.acceptance:
        nodes = sorted(pair for pair in component if pair[1] in accepting)
        if not nodes:
            return None
        requirements.append(("node", nodes))

    always = None
    for lts_node, _ in component:
        enabled = _guaranteed_enabled(graph, lts_node)
        always = enabled if always is None else always & enabled
    for move in sorted(always or (), key=str):
        edges = sorted(
            (u, v) for u, v, moves in inner.edges(data="moves") if move in moves
        )
        if not edges:
            return None
        requirements.append(("edge", move, edges))
    return requirements


def _edge_move(product, u, v, wanted=None):
    moves = product.edges[u, v]["moves"]
    if wanted is not None and wanted in moves:
        return wanted
    return min(moves, key=lambda move: (move is not None, str(move)))


def _path_moves(product, path):
    return [_edge_move(product, u, v) for u, v in zip(path, path[1:])]


def _lasso(product, component, requirements):
    inner = product.subgraph(component)
    reachable = nx.shortest_path(product, _START)
    entry = min(component, key=lambda pair: (len(reachable[pair]), pair))
    prefix = _path_moves(product, reachable[entry][1:])

    cycle = []
    current = entry
    for requirement in requirements:
        if requirement[0] == "node":
            target = requirement[1][0]
            cycle.extend(_path_moves(inner, nx.shortest_path(inner, current, target)))
            current = target
        else:
            _, move, edges = requirement
            u, v = edges[0]
            cycle.extend(_path_moves(inner, nx.shortest_path(inner, current, u)))
            cycle.append(_edge_move(inner, u, v, wanted=move))
            current = v
    if not cycle:
        current = min(inner.successors(entry))
        cycle.append(_edge_move(inner, entry, current))
    cycle.extend(_path_moves(inner, nx.shortest_path(inner, current, entry)))
    return prefix, cycle


def _check_region(spec, assignment, strategies, automaton, state_limit):
    graph = reachable_states(spec, strategies, assignment, state_limit=state_limit)
    product = build_product(graph, automaton)
    product_nodes = product.number_of_nodes() - 1
    components = [
        component
        for component in nx.strongly_connected_components(product)
        if _START not in component
    ]
    for component in sorted(components, key=lambda c: min(c)):
        requirements = _fair_requirements(graph, automaton, product, component)
        if requirements is None:
            continue
        prefix, cycle = _lasso(product, component, requirements)
        witness = Lasso(
            assignment=tuple(sorted(assignment.items())),
            prefix=tuple(prefix),
            cycle=tuple(cycle),
        )
        logger.info("counterexample found for lengths %s", assignment)
        return False, witness, len(graph)
    logger.debug("product of %d nodes has no fair accepting cycle", product_nodes)
    return True, None, len(graph)


def check_ltl(spec, strategies, formula, state_limit=None, parallel=1):
    """Check that an LTL formula holds on every fair maximal trace

    :param ContractSpec spec: a well-formed contract
    :param dict strategies: participant name -> Strategy
    :param Formula formula: the property
    :param int state_limit: per-region state bound (default ``STATE_LIMIT``)
    :param int parallel: worker processes for the regions
    :return VerificationResult: the verdict with a lasso counterexample on failure
    """
    started = time.perf_counter()
    automaton = ltl_to_buchi(FNot(formula))
    assignments = sample_secret_regions(spec)
    check = functools.partial(
        _check_region,
        strategies=strategies or {},
        automaton=automaton,
        state_limit=state_limit,
    )
    verdict, witness, stats = verify_regions(check, spec, assignments, parallel)
    stats["wall_time"] = time.perf_counter() - started
    stats["automaton_states"] = len(automaton)
    logger.info("%s: %s over %d regions", formula, verdict, stats["regions"])
    return VerificationResult(
        verdict=verdict, witness=witness, stats=stats, query=str(formula)
    )


def evaluate_lasso(formula, prefix_cfgs, cycle_cfgs):
    """Truth of a formula on the infinite word ``prefix (cycle)^ω``

    :param Formula formula: the formula
    :param list prefix_cfgs: configurations read before the loop
    :param list cycle_cfgs: configurations repeated forever, nonempty
    :return bool: whether the word satisfies the formula
    """
    word = list(prefix_cfgs) + list(cycle_cfgs)
    loop = len(prefix_cfgs)

    def successor(position):
        return position + 1 if position + 1 < len(word) else loop

    def values(f):
        if isinstance(f, Const):
            return [f.value] * len(word)
        if isinstance(f, Literal):
            return [f.holds(cfg) for cfg in word]
        if isinstance(f, (FAnd, FOr)):
            left, right = values(f.left), values(f.right)
            combine = (lambda a, b: a and b) if isinstance(f, FAnd) else (
                lambda a, b: a or b
            )
            return [combine(a, b) for a, b in zip(left, right)]
        if isinstance(f, Next):
            inner = values(f.operand)
            return [inner[successor(i)] for i in range(len(word))]
        if isinstance(f, (Until, Release)):
            left, right = values(f.left), values(f.right)
            until = isinstance(f, Until)
            result = [not until] * len(word)
            changed = True
            while changed:
                changed = False
                for i in reversed(range(len(word))):
                    if until:
                        value = right[i] or (left[i] and result[successor(i)])
                    else:
                        value = right[i] and (left[i] or result[successor(i)])
                    if value != result[i]:
                        result[i] = value
                        changed = True
            return result
        raise ValueError("formula {} is not in negation normal form".format(f))

    return values(formula.nnf())[0]
