from fractions import Fraction

import pytest

from skewchain.logic.ast import FALSE, TRUE
from skewchain.logic.intervals import IntervalSet
from skewchain.logic.parser import parseFormula
from skewchain.logic.printer import formatFormula
from skewchain.logic.semantics import solutionSet
from skewchain.logic.simplify import intervalFormula, negate, simplify, simplifyTerm
from skewchain.values import INFINITY


@pytest.mark.parametrize(
    'text, expected',
    [
        ('x < 1 & x < 2', 'x < 1'),
        ('x < 1 | x >= 1', 'true'),
        ('!(x < 1)', 'x >= 1'),
        ('x.{(0,0)} < 1', 'x < 1'),
        ('x = x', 'true'),
        ('x.{(1,0)} != x.{(1,0)}', 'false'),
        ('x > 0 & x < 0', 'false'),
        ('x >= 0 & x <= 0', 'x = 0'),
        ('x < 1 | x > 3', 'x < 1 | x > 3'),
        ('3 < x', 'x > 3'),
        ('0 < 1', 'true'),
        ('inf <= 2', 'false'),
        ('x.{(1,0)} < inf', 'x < inf'),
        ('inf <= x.{(1,0)}', 'x = inf'),
        ('x.{(1,0)} > inf', 'false'),
        ('x <= inf', 'true'),
        ('x != inf', 'x < inf'),
        ('x.{(1,0)}.{(1,0)}^-1 < 1', 'x < 1'),
        ('y < inf.{(1,0)}', 'y < inf'),
        ('y >= 3.{(1,1)}^-1', 'y >= 1'),
        ('E y. x < 1', 'x < 1'),
        ('!(x < 1 & y > 2)', 'x >= 1 | y <= 2'),
        ('!!(x = 2)', 'x = 2'),
        ('(x < 1 & y < 1) & (y < 1 | false)', 'x < 1 & y < 1'),
        ('x < y & true', 'x < y'),
        ('x < y | !true', 'x < y'),
        ('x.{(1,0)} < y & x.{(1,0)} < y', 'x.{(1,0)} < y'),
    ],
)
def testSimplify(text: str, expected: str) -> None:
    assert formatFormula(simplify(parseFormula(text))) == expected


def testSimplifyWithValues() -> None:
    formula = parseFormula('x < y')
    assert formatFormula(simplify(formula, {'y': Fraction(3)})) == 'x < 3'
    assert simplify(formula, {'x': Fraction(0), 'y': INFINITY}) == TRUE
    assert simplify(formula, {'x': INFINITY, 'y': INFINITY}) == FALSE


def testNegate() -> None:
    assert formatFormula(negate(parseFormula('E x. x < y'))) == 'A x. x >= y'
    assert formatFormula(negate(parseFormula('x = 1 | y != 2'))) == 'x != 1 & y = 2'


def testSimplifyTerm() -> None:
    formula = parseFormula('x.{(1,0)}^-1.{(1,0)} < y.{(0,0)}')
    assert simplifyTerm(formula.left) == simplifyTerm(parseFormula('x < 1').left)
    assert formatFormula(simplify(formula)) == 'x < y'


@pytest.mark.parametrize(
    'solutions, expected',
    [
        (IntervalSet.empty(), 'false'),
        (IntervalSet.full(), 'true'),
        (IntervalSet.point(INFINITY), 'x = inf'),
        (IntervalSet.rationals(), 'x < inf'),
        (IntervalSet.comparison('>', Fraction(1)), 'x > 1'),
        (IntervalSet.comparison('<=', Fraction(1, 2)), 'x <= 1/2'),
        (IntervalSet.comparison('!=', Fraction(0)), 'x < 0 | x > 0'),
        (
            IntervalSet.closedSpan(Fraction(0), Fraction(1)).union(
                IntervalSet.point(INFINITY)
            ),
            'x >= 0 & x <= 1 | x = inf',
        ),
    ],
)
def testIntervalFormula(solutions: IntervalSet, expected: str) -> None:
    formula = intervalFormula('x', solutions)
    assert formatFormula(formula) == expected
    assert solutionSet(formula, {}, 'x') == solutions
