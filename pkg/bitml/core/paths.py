# -*- coding: utf-8 -*-

"""Addressing branches inside a contract tree.

A path is a tuple of ``Step(choice, depth)``. Each step picks branch
``choice`` of the current choice and peels ``depth`` guards off it; the last
step addresses that node. A non-final step descends into the continuation of
the unguarded body: a Reveal continues with its contract, a Split consumes the
next step, whose ``choice`` names the arm.
"""

from collections import namedtuple

from bitml.core.nodes import Reveal, Split, children, strip_guards
from bitml.exceptions import PathNotFound

Step = namedtuple("Step", ["choice", "depth"])

ROOT = ()


def path_from_ints(coordinates):
    """Build a path from flattened ``choice depth`` coordinates

    An odd trailing coordinate gets depth 0.
    """
    coordinates = list(coordinates)
    if len(coordinates) % 2:
        coordinates.append(0)
    return tuple(
        Step(coordinates[i], coordinates[i + 1]) for i in range(0, len(coordinates), 2)
    )


def path_to_ints(path):
    return [coordinate for step in path for coordinate in step]


def format_path(path):
    return "_".join("{}.{}".format(step.choice, step.depth) for step in path)


def child_path(prefix, choice, depth=0):
    return tuple(prefix) + (Step(choice, depth),)


def _pick(contract, step, path):
    try:
        branch = contract.branches[step.choice]
    except IndexError:
        raise PathNotFound(
            "choice {} out of range in path {}".format(step.choice, format_path(path))
        )
    guards, body = strip_guards(branch)
    if step.depth > len(guards):
        raise PathNotFound(
            "guard depth {} out of range in path {}".format(
                step.depth, format_path(path)
            )
        )
    node = guards[step.depth] if step.depth < len(guards) else body
    return node, body


def resolve(contract, path):
    """Return the branch node addressed by a path

    :param Contract contract: the root contract
    :param tuple path: the path
    :return Branch: the addressed node
    """
    if not path:
        raise PathNotFound("the empty path addresses no branch")
    steps = list(path)
    current = contract
    while True:
        step = steps.pop(0)
        node, body = _pick(current, step, path)
        if not steps:
            return node
        current = _descend(body, steps, path)


def _descend(body, steps, path):
    if isinstance(body, Reveal):
        return body.continuation
    if isinstance(body, Split):
        if not steps:
            raise PathNotFound("path {} ends on a split".format(format_path(path)))
        arm_step = steps.pop(0)
        if arm_step.depth != 0 or not 0 <= arm_step.choice < len(body.arms):
            raise PathNotFound(
                "invalid split arm {} in path {}".format(
                    arm_step.choice, format_path(path)
                )
            )
        return body.arms[arm_step.choice].contract
    raise PathNotFound("path {} descends below a leaf".format(format_path(path)))


def continuation_paths(prefix, choice, body):
    """Paths of the contracts nested under the unguarded body of branch ``choice``"""
    if isinstance(body, Reveal):
        return [child_path(prefix, choice)]
    if isinstance(body, Split):
        return [
            child_path(child_path(prefix, choice), arm) for arm in range(len(body.arms))
        ]
    return []


def walk(contract, prefix=ROOT):
    """Yield ``(contract_path, contract)`` for every choice node, root first"""
    yield prefix, contract
    for index, branch in enumerate(contract.branches):
        _, body = strip_guards(branch)
        for path, nested in zip(continuation_paths(prefix, index, body), children(body)):
            for item in walk(nested, path):
                yield item


def walk_branches(contract, prefix=ROOT):
    """Yield ``(branch_path, branch)`` for every branch of every choice node"""
    for path, node in walk(contract, prefix):
        for index, branch in enumerate(node.branches):
            yield child_path(path, index), branch
