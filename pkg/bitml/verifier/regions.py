# -*- coding: utf-8 -*-

"""Finite sampling of secret lengths.

Predicates only compare linear sums of secret lengths against constants, so
lengths equal to a relevant constant, one above it, or zero cover every
distinguishable outcome.
"""

import concurrent.futures
import itertools

from bitml.core.nodes import reveal_of
from bitml.core.paths import walk_branches


def _comparisons(spec):
    for _, branch in walk_branches(spec.contract):
        body = reveal_of(branch)
        if body is not None:
            for comparison in body.predicate.comparisons():
                yield comparison


class _Groups(object):
    """Union-find over secret names"""

    def __init__(self, names):
        self.parent = {name: name for name in names}

    def find(self, name):
        while self.parent[name] != name:
            self.parent[name] = self.parent[self.parent[name]]
            name = self.parent[name]
        return name

    def union(self, names):
        names = sorted(names)
        for other in names[1:]:
            self.parent[self.find(other)] = self.find(names[0])


def region_constants(spec):
    """Map each secret to the constants its length is compared against

    Constants of a comparison are shared by every secret linked to it through
    some chain of comparisons.

    :param ContractSpec spec: the contract
    :return dict: secret name -> set of ints
    """
    names = sorted(secret.name for secret in spec.precondition.secrets)
    groups = _Groups(names)
    per_comparison = []
    for comparison in _comparisons(spec):
        secrets = [name for name in comparison.secrets() if name in groups.parent]
        if not secrets:
            continue
        groups.union(secrets)
        constants = {comparison.folded_constant()}
        constants.update(comparison.left.constants())
        constants.update(comparison.right.constants())
        per_comparison.append((secrets[0], constants))

    by_group = {}
    for representative, constants in per_comparison:
        by_group.setdefault(groups.find(representative), set()).update(constants)

    mentioned = set()
    for comparison in _comparisons(spec):
        mentioned.update(comparison.secrets())
    return {
        name: by_group.get(groups.find(name), set()) if name in mentioned else set()
        for name in names
    }


def sample_set(constants):
    """``{0} ∪ {k, k+1 : k in constants}`` clamped to non-negative, sorted"""
    samples = {0}
    for constant in constants:
        samples.update(max(0, value) for value in (constant, constant + 1))
    return sorted(samples)


def sample_secret_regions(spec):
    """Enumerate one length assignment per region

    :param ContractSpec spec: a well-formed contract
    :return list: dicts secret name -> length, in lexicographic order of the samples
    """
    constants = region_constants(spec)
    names = sorted(constants)
    samples = [sample_set(constants[name]) for name in names]
    return [dict(zip(names, values)) for values in itertools.product(*samples)]


def verify_regions(check, spec, assignments, parallel=1):
    """Run ``check(spec, assignment)`` on every region

    ``check`` returns ``(holds, witness, states)``. Results are combined in
    region order whatever the degree of parallelism, so the first failing
    region always provides the witness and the statistics cover the regions
    up to and including it.

    :param callable check: a picklable per-region check
    :param ContractSpec spec: the contract
    :param list assignments: length assignments, as from ``sample_secret_regions``
    :param int parallel: number of worker processes
    :return tuple: ``(holds, witness, stats)``
    """
    if parallel > 1 and len(assignments) > 1:
        with concurrent.futures.ProcessPoolExecutor(max_workers=parallel) as pool:
            outcomes = pool.map(check, [spec] * len(assignments), assignments)
            outcomes = list(outcomes)
    else:
        outcomes = (check(spec, assignment) for assignment in assignments)

    states = 0
    regions = 0
    for holds, witness, explored in outcomes:
        states += explored
        regions += 1
        if not holds:
            return False, witness, {"states": states, "regions": regions}
    return True, None, {"states": states, "regions": regions}
