# -*- coding: utf-8 -*-

"""Liquidity: no funds stay frozen in the contract forever"""

import functools
import logging
import time

import networkx as nx

from bitml.config import DEFAULTS
from bitml.verifier.graph import reachable_states
from bitml.verifier.regions import sample_secret_regions, verify_regions
from bitml.verifier.result import FrozenState, VerificationResult
from bitml.verifier.strategy import MoveClass

logger = logging.getLogger(__name__)

_SINK = "liquidated"


def liquid_states(graph, epsilon=0):
    """Nodes from which Guaranteed moves alone reach a liquidated configuration

    :param StateGraph graph: an explored state graph
    :param int epsilon: balance allowed to remain locked in active contracts
    :return set: the good nodes
    """
    reverse = nx.DiGraph()
    reverse.add_nodes_from(graph.graph.nodes)
    reverse.add_node(_SINK)
    for source, target, kind in graph.graph.edges(data="kind"):
        if kind is MoveClass.GUARANTEED:
            reverse.add_edge(target, source)
    for node in graph.graph.nodes:
        if graph.cfg(node).locked <= epsilon:
            reverse.add_edge(_SINK, node)
    return nx.descendants(reverse, _SINK)


def _check_region(spec, assignment, strategies, epsilon, state_limit):
    graph = reachable_states(spec, strategies, assignment, state_limit=state_limit)
    good = liquid_states(graph, epsilon)
    for node in sorted(graph.graph.nodes):
        if node not in good:
            witness = FrozenState(
                assignment=tuple(sorted(assignment.items())),
                trace=tuple(graph.trace_to(node)),
                cfg=graph.cfg(node),
            )
            logger.info("frozen state found for lengths %s", assignment)
            return False, witness, len(graph)
    return True, None, len(graph)


def check_liquidity(spec, strategies=None, epsilon=None, state_limit=None, parallel=1):
    """Check that every reachable state can be liquidated by Guaranteed moves

    :param ContractSpec spec: a well-formed contract
    :param dict strategies: participant name -> Strategy
    :param int epsilon: balance that may stay frozen (default ``LIQUIDITY_EPSILON``)
    :param int state_limit: per-region state bound (default ``STATE_LIMIT``)
    :param int parallel: worker processes for the regions
    :return VerificationResult: the verdict, conjunction over every region
    """
    started = time.perf_counter()
    if epsilon is None:
        epsilon = DEFAULTS["LIQUIDITY_EPSILON"]
    assignments = sample_secret_regions(spec)
    check = functools.partial(
        _check_region,
        strategies=strategies or {},
        epsilon=epsilon,
        state_limit=state_limit,
    )
    verdict, witness, stats = verify_regions(check, spec, assignments, parallel)
    stats["wall_time"] = time.perf_counter() - started
    query = "liquidity" if not epsilon else "liquidity up to {}".format(epsilon)
    logger.info("%s: %s over %d regions", query, verdict, stats["regions"])
    return VerificationResult(verdict=verdict, witness=witness, stats=stats, query=query)
