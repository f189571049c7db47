# -*- coding: utf-8 -*-

"""Predicates over secret lengths.

Grammar: ``true | not p | and p p | or p p | = e e | < e e`` over integer
expressions ``n | len s | + e e | - e e``. Integers are Python ints, so the
arithmetic never overflows.
"""

from collections import Counter
from dataclasses import dataclass

from bitml.exceptions import UnboundSecret


class Expression(object):
    __slots__ = ()

    def secrets(self):
        """Names of the secrets whose length the expression reads"""
        return frozenset()

    def constants(self):
        return ()


@dataclass(frozen=True)
class IntConst(Expression):
    n: int

    def evaluate(self, lengths):
        return self.n

    def constants(self):
        return (self.n,)

    def linear(self):
        return Counter(), self.n


@dataclass(frozen=True)
class SecretLen(Expression):
    secret: str

    def evaluate(self, lengths):
        try:
            return lengths[self.secret]
        except KeyError:
            raise UnboundSecret(
                "no length bound for secret {}".format(self.secret),
                source={"secret": self.secret},
            )

    def secrets(self):
        return frozenset((self.secret,))

    def linear(self):
        return Counter({self.secret: 1}), 0


@dataclass(frozen=True)
class Add(Expression):
    left: Expression
    right: Expression

    def evaluate(self, lengths):
        return self.left.evaluate(lengths) + self.right.evaluate(lengths)

    def secrets(self):
        return self.left.secrets() | self.right.secrets()

    def constants(self):
        return self.left.constants() + self.right.constants()

    def linear(self):
        lcoeff, lconst = self.left.linear()
        rcoeff, rconst = self.right.linear()
        lcoeff.update(rcoeff)
        return lcoeff, lconst + rconst


@dataclass(frozen=True)
class Sub(Expression):
    left: Expression
    right: Expression

    def evaluate(self, lengths):
        return self.left.evaluate(lengths) - self.right.evaluate(lengths)

    def secrets(self):
        return self.left.secrets() | self.right.secrets()

    def constants(self):
        return self.left.constants() + self.right.constants()

    def linear(self):
        lcoeff, lconst = self.left.linear()
        rcoeff, rconst = self.right.linear()
        lcoeff.subtract(rcoeff)
        return lcoeff, lconst - rconst


class Predicate(object):
    __slots__ = ()

    def secrets(self):
        return frozenset()

    def comparisons(self):
        """Every Eq/Lt node of the predicate"""
        return ()


@dataclass(frozen=True)
class PTrue(Predicate):
    def evaluate(self, lengths):
        return True


@dataclass(frozen=True)
class Not(Predicate):
    operand: Predicate

    def evaluate(self, lengths):
        return not self.operand.evaluate(lengths)

    def secrets(self):
        return self.operand.secrets()

    def comparisons(self):
        return self.operand.comparisons()


@dataclass(frozen=True)
class And(Predicate):
    left: Predicate
    right: Predicate

    def evaluate(self, lengths):
        # both sides are evaluated so an unbound secret is always reported
        left, right = self.left.evaluate(lengths), self.right.evaluate(lengths)
        return left and right

    def secrets(self):
        return self.left.secrets() | self.right.secrets()

    def comparisons(self):
        return self.left.comparisons() + self.right.comparisons()


@dataclass(frozen=True)
class Or(Predicate):
    """Sugar for ``not (and (not p) (not q))``"""

    left: Predicate
    right: Predicate

    def evaluate(self, lengths):
        left, right = self.left.evaluate(lengths), self.right.evaluate(lengths)
        return left or right

    def secrets(self):
        return self.left.secrets() | self.right.secrets()

    def comparisons(self):
        return self.left.comparisons() + self.right.comparisons()


class Comparison(Predicate):
    __slots__ = ()

    def secrets(self):
        return self.left.secrets() | self.right.secrets()

    def comparisons(self):
        return (self,)

    def folded_constant(self):
        """The constant ``c`` such that the comparison reads ``Σ±|s| ⋈ c``"""
        coeffs, const = Sub(self.left, self.right).linear()
        return -const


@dataclass(frozen=True)
class Eq(Comparison):
    left: Expression
    right: Expression

    def evaluate(self, lengths):
        return self.left.evaluate(lengths) == self.right.evaluate(lengths)


@dataclass(frozen=True)
class Lt(Comparison):
    left: Expression
    right: Expression

    def evaluate(self, lengths):
        return self.left.evaluate(lengths) < self.right.evaluate(lengths)


def eval_predicate(predicate, lengths):
    """Evaluate a predicate against secret lengths

    :param Predicate predicate: the predicate
    :param dict lengths: secret name -> non-negative length
    :return bool: the truth value
    """
    return predicate.evaluate(lengths)
