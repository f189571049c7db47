# -*- coding: utf-8 -*-

"""Explicit exploration of the abstract transition system"""

import logging
from collections import deque

import networkx as nx

from bitml.config import DEFAULTS
from bitml.exceptions import StateLimitExceeded
from bitml.semantics.configuration import initial_configuration
from bitml.semantics.moves import enumerate_moves, step
from bitml.verifier.strategy import MoveClass, classify_move

logger = logging.getLogger(__name__)


class StateGraph(object):
    """Reachable configurations and their classified moves.

    Nodes are integers numbered in discovery order, ``0`` being the initial
    configuration; each node carries its configuration under ``cfg``. Edges
    carry ``move`` and ``kind`` (a ``MoveClass``). Prohibited moves are
    dropped during exploration.
    """

    def __init__(self, spec, assignment):
        self.spec = spec
        self.assignment = dict(assignment)
        self.graph = nx.MultiDiGraph()
        self.index = {}

    def __len__(self):
        return self.graph.number_of_nodes()

    def add_state(self, cfg):
        node = len(self.index)
        self.index[cfg] = node
        self.graph.add_node(node, cfg=cfg)
        return node

    def cfg(self, node):
        return self.graph.nodes[node]["cfg"]

    def configurations(self):
        return [self.cfg(node) for node in sorted(self.graph.nodes)]

    def edges(self, node):
        """Outgoing ``(target, move, kind)`` triples in move order"""
        return [
            (target, data["move"], data["kind"])
            for _, target, data in self.graph.out_edges(node, data=True)
        ]

    def deadlocks(self):
        return [node for node in self.graph.nodes if self.graph.out_degree(node) == 0]

    def trace_to(self, node):
        """Shortest sequence of moves from the initial configuration to ``node``"""
        nodes = nx.shortest_path(self.graph, 0, node)
        return [self.move_between(u, v) for u, v in zip(nodes, nodes[1:])]

    def move_between(self, source, target):
        edges = self.graph.get_edge_data(source, target)
        return edges[min(edges)]["move"]


def reachable_states(spec, strategies, lengths_assignment, state_limit=None):
    """Explore every configuration reachable without Prohibited moves

    :param ContractSpec spec: a well-formed contract
    :param dict strategies: participant name -> Strategy
    :param dict lengths_assignment: secret name -> length
    :param int state_limit: bound on the number of states (default ``STATE_LIMIT``)
    :return StateGraph: the explored graph
    :raise StateLimitExceeded: when the bound is hit
    """
    if state_limit is None:
        state_limit = DEFAULTS["STATE_LIMIT"]
    graph = StateGraph(spec, lengths_assignment)
    initial = initial_configuration(spec, lengths_assignment)
    expected_total = initial.total
    graph.add_state(initial)
    queue = deque([initial])

    while queue:
        cfg = queue.popleft()
        source = graph.index[cfg]
        for move in enumerate_moves(cfg, spec):
            kind = classify_move(move, strategies, cfg)
            if kind is MoveClass.PROHIBITED:
                continue
            successor = step(cfg, move)
            if successor.total != expected_total:
                raise AssertionError(
                    "value not conserved by {}: {} != {}".format(
                        move, successor.total, expected_total
                    )
                )
            target = graph.index.get(successor)
            if target is None:
                if len(graph) >= state_limit:
                    raise StateLimitExceeded(
                        "more than {} reachable states".format(state_limit),
                        meta={"state_limit": state_limit},
                    )
                target = graph.add_state(successor)
                queue.append(successor)
            graph.graph.add_edge(source, target, move=move, kind=kind)

    logger.debug(
        "explored %d states and %d moves for lengths %s",
        len(graph),
        graph.graph.number_of_edges(),
        lengths_assignment,
    )
    return graph
