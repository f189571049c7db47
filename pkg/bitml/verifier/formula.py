# -*- coding: utf-8 -*-

"""LTL formulas over configuration atoms"""

from dataclasses import dataclass

from bitml.semantics.atoms import Atom


class Formula(object):
    __slots__ = ()

    def nnf(self, negate=False):
        """Negation normal form using literals, and/or, X, U and R"""
        raise NotImplementedError

    def atoms(self):
        return frozenset()


@dataclass(frozen=True)
class Const(Formula):
    value: bool

    def nnf(self, negate=False):
        return Const(self.value != negate)

    def __str__(self):
        return "true" if self.value else "false"


@dataclass(frozen=True)
class Atomic(Formula):
    atom: Atom

    def nnf(self, negate=False):
        return Literal(self.atom, not negate)

    def atoms(self):
        return frozenset((self.atom,))

    def __str__(self):
        return str(self.atom)


@dataclass(frozen=True)
class Literal(Formula):
    """An atom or its negation; only produced by ``nnf``"""

    atom: Atom
    positive: bool = True

    def nnf(self, negate=False):
        return Literal(self.atom, self.positive != negate)

    def holds(self, cfg):
        return self.atom.holds(cfg) == self.positive

    def negation(self):
        return Literal(self.atom, not self.positive)

    def __str__(self):
        return str(self.atom) if self.positive else "!({})".format(self.atom)


@dataclass(frozen=True)
class FNot(Formula):
    operand: Formula

    def nnf(self, negate=False):
        return self.operand.nnf(not negate)

    def atoms(self):
        return self.operand.atoms()

    def __str__(self):
        return "!({})".format(self.operand)


class Binary(Formula):
    __slots__ = ()
    symbol = None

    def atoms(self):
        return self.left.atoms() | self.right.atoms()

    def __str__(self):
        return "({} {} {})".format(self.left, self.symbol, self.right)


@dataclass(frozen=True)
class FAnd(Binary):
    left: Formula
    right: Formula
    symbol = "/\\"

    def nnf(self, negate=False):
        kind = FOr if negate else FAnd
        return kind(self.left.nnf(negate), self.right.nnf(negate))


@dataclass(frozen=True)
class FOr(Binary):
    left: Formula
    right: Formula
    symbol = "\\/"

    def nnf(self, negate=False):
        kind = FAnd if negate else FOr
        return kind(self.left.nnf(negate), self.right.nnf(negate))


@dataclass(frozen=True)
class Implies(Binary):
    left: Formula
    right: Formula
    symbol = "=>"

    def nnf(self, negate=False):
        return FOr(FNot(self.left), self.right).nnf(negate)


@dataclass(frozen=True)
class Until(Binary):
    left: Formula
    right: Formula
    symbol = "U"

    def nnf(self, negate=False):
        if negate:
            return Release(self.left.nnf(True), self.right.nnf(True))
        return Until(self.left.nnf(), self.right.nnf())


@dataclass(frozen=True)
class Release(Binary):
    left: Formula
    right: Formula
    symbol = "R"

    def nnf(self, negate=False):
        if negate:
            return Until(self.left.nnf(True), self.right.nnf(True))
        return Release(self.left.nnf(), self.right.nnf())


class Unary(Formula):
    __slots__ = ()
    symbol = None

    def atoms(self):
        return self.operand.atoms()

    def __str__(self):
        return "{}({})".format(self.symbol, self.operand)


@dataclass(frozen=True)
class Next(Unary):
    operand: Formula
    symbol = "X"

    def nnf(self, negate=False):
        return Next(self.operand.nnf(negate))


@dataclass(frozen=True)
class Globally(Unary):
    operand: Formula
    symbol = "[]"

    def nnf(self, negate=False):
        if negate:
            return Until(Const(True), self.operand.nnf(True))
        return Release(Const(False), self.operand.nnf())


@dataclass(frozen=True)
class Finally(Unary):
    operand: Formula
    symbol = "<>"

    def nnf(self, negate=False):
        if negate:
            return Release(Const(False), self.operand.nnf(True))
        return Until(Const(True), self.operand.nnf())


def is_state_formula(formula):
    """True for formulas built from atoms and boolean connectives only"""
    if isinstance(formula, (Const, Atomic, Literal)):
        return True
    if isinstance(formula, FNot):
        return is_state_formula(formula.operand)
    if isinstance(formula, (FAnd, FOr, Implies)):
        return is_state_formula(formula.left) and is_state_formula(formula.right)
    return False


def evaluate_state(formula, cfg):
    """Evaluate a state formula in a single configuration"""
    if isinstance(formula, Const):
        return formula.value
    if isinstance(formula, Atomic):
        return formula.atom.holds(cfg)
    if isinstance(formula, Literal):
        return formula.holds(cfg)
    if isinstance(formula, FNot):
        return not evaluate_state(formula.operand, cfg)
    if isinstance(formula, FAnd):
        return evaluate_state(formula.left, cfg) and evaluate_state(formula.right, cfg)
    if isinstance(formula, FOr):
        return evaluate_state(formula.left, cfg) or evaluate_state(formula.right, cfg)
    if isinstance(formula, Implies):
        return not evaluate_state(formula.left, cfg) or evaluate_state(
            formula.right, cfg
        )
    raise ValueError("{} is not a state formula".format(formula))
