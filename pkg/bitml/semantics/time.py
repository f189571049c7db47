# -*- coding: utf-8 -*-

"""Quotient of block heights into finitely many intervals"""

import bisect
from dataclasses import dataclass
from typing import Tuple


@dataclass(frozen=True)
class TimePartition(object):
    """Intervals ``[0,t1), [t1,t2), ..., [tk,∞)`` over the contract deadlines"""

    deadlines: Tuple[int, ...] = ()

    def __post_init__(self):
        if any(a >= b for a, b in zip(self.deadlines, self.deadlines[1:])):
            raise ValueError("deadlines must be strictly increasing")

    @classmethod
    def of(cls, spec):
        return cls(spec.deadlines)

    @property
    def count(self):
        return len(self.deadlines) + 1

    def lower_bound(self, interval):
        return 0 if interval == 0 else self.deadlines[interval - 1]

    def upper_bound(self, interval):
        """Exclusive upper bound, None for the last interval"""
        return self.deadlines[interval] if interval < len(self.deadlines) else None

    def interval_of(self, height):
        return bisect.bisect_right(self.deadlines, height)

    def reached(self, interval, height):
        """Whether every block height in the interval is at least ``height``"""
        return self.lower_bound(interval) >= height

    def describe(self, interval):
        upper = self.upper_bound(interval)
        return "[{}, {})".format(
            self.lower_bound(interval), "inf" if upper is None else upper
        )
