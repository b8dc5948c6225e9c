from fractions import Fraction

import pytest

from skewchain.chain import TropPoly
from skewchain.errors import PreconditionError, QuantifiedMatrixError
from skewchain.logic.ast import Apply, Const, InfConst, InverseApply, Var
from skewchain.logic.intervals import Interval, IntervalSet
from skewchain.logic.parser import parseFormula
from skewchain.logic.semantics import (
    evaluateQuantifierFree,
    evaluateTerm,
    holds,
    solutionSet,
    termMap,
)
from skewchain.values import INFINITY

X = Var('x')
DOUBLE = TropPoly({1: 0}, q=2)


@pytest.mark.parametrize(
    'term, value, expected',
    [
        (X, Fraction(3), Fraction(3)),
        (Apply(X, DOUBLE), Fraction(3), Fraction(6)),
        (Apply(X, DOUBLE), INFINITY, INFINITY),
        (InverseApply(X, TropPoly({1: 1}, q=2)), Fraction(5), Fraction(2)),
        (Apply(X, TropPoly({2: 0, 1: 1, 0: 3}, q=2)), Fraction(2), Fraction(5)),
        (Const(Fraction(-1, 2)), Fraction(0), Fraction(-1, 2)),
        (InfConst(), Fraction(0), INFINITY),
    ],
)
def testEvaluateTerm(term, value, expected) -> None:
    assert evaluateTerm(term, {'x': value}) == expected


def testEvaluateTermNeedsValues() -> None:
    with pytest.raises(PreconditionError):
        evaluateTerm(Apply(Var('y'), DOUBLE), {'x': Fraction(0)})


def testTermMap() -> None:
    term = InverseApply(Apply(X, TropPoly({1: 0, 0: 1}, q=2)), TropPoly({0: 1}, q=2))
    mapping = termMap(term)
    # min(2x, x + 1) - 1
    assert mapping(Fraction(0)) == Fraction(-1)
    assert mapping(Fraction(3)) == Fraction(3)
    assert mapping.isStrictlyIncreasing()


def testHolds() -> None:
    assert holds('<', Fraction(1), INFINITY)
    assert holds('=', INFINITY, INFINITY)
    assert not holds('>', INFINITY, INFINITY)
    assert holds('!=', Fraction(1), Fraction(2))


@pytest.mark.parametrize(
    'text, expected',
    [
        (
            'x.{(1,0)} = x',
            IntervalSet.point(Fraction(0)).union(IntervalSet.point(INFINITY)),
        ),
        ('x.{(1,0)} > x', IntervalSet([Interval(Fraction(0), False, None, False)])),
        (
            'x < 1 | x = inf',
            IntervalSet.comparison('<', Fraction(1)).union(IntervalSet.point(INFINITY)),
        ),
        ('x.{(1,1)} <= 3', IntervalSet.comparison('<=', Fraction(1))),
        ('3 < x.{(1,1)}', IntervalSet.comparison('>', Fraction(1))),
        ('!(x < 0)', IntervalSet.comparison('>=', Fraction(0))),
        ('x.{(1,0),(0,1)} < 0', IntervalSet.comparison('<', Fraction(0))),
        ('x.{(1,0),(0,1)} = 3', IntervalSet.point(Fraction(2))),
        ('x.{(1,0)}^-1 >= 1', IntervalSet.comparison('>=', Fraction(2))),
        ('x = inf', IntervalSet.point(INFINITY)),
        ('x.{(0,1)} != x', IntervalSet.rationals()),
        ('x.{(0,1)} > x', IntervalSet.rationals()),
        ('x < 0 & x > 0', IntervalSet.empty()),
        ('x < inf | x >= 0', IntervalSet.full()),
        ('1 < 2', IntervalSet.full()),
        ('true & x <= -1/2', IntervalSet.comparison('<=', Fraction(-1, 2))),
    ],
)
def testSolutionSet(text: str, expected: IntervalSet) -> None:
    assert solutionSet(parseFormula(text), {}, 'x') == expected


def testSolutionSetWithTwoBranches() -> None:
    # min(2x, x + 1) > x + 1/2 for rational x > 1/2; both sides are inf at inf
    formula = parseFormula('x.{(1,0),(0,1)} > x.{(0,1/2)}')
    assert solutionSet(formula, {}, 'x') == IntervalSet(
        [Interval(Fraction(1, 2), False, None, False)]
    )


def testSolutionSetUsesTheEnvironment() -> None:
    formula = parseFormula('x < y')
    assert solutionSet(formula, {'y': Fraction(2)}, 'x') == IntervalSet.comparison(
        '<', Fraction(2)
    )
    assert solutionSet(formula, {'y': INFINITY}, 'x') == IntervalSet.rationals()


def testSolutionSetRejectsQuantifiers() -> None:
    with pytest.raises(QuantifiedMatrixError):
        solutionSet(parseFormula('E y. x < y'), {}, 'x')


def testEvaluateQuantifierFree() -> None:
    formula = parseFormula('x < 1 & y = inf | x.{(1,0)} = 4')
    assert evaluateQuantifierFree(formula, {'x': Fraction(0), 'y': INFINITY})
    assert evaluateQuantifierFree(formula, {'x': Fraction(2), 'y': Fraction(0)})
    assert not evaluateQuantifierFree(formula, {'x': Fraction(1), 'y': INFINITY})

    with pytest.raises(QuantifiedMatrixError):
        evaluateQuantifierFree(parseFormula('E y. y < 0'), {})
