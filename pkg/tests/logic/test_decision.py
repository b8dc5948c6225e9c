from fractions import Fraction
from typing import Dict, List, Sequence

import pytest

from skewchain.errors import PreconditionError
from skewchain.logic import decision
from skewchain.logic.ast import And, Exists, ForAll, Formula, Not, Or
from skewchain.logic.decision import decide, evaluate
from skewchain.logic.parser import parseFormula
from skewchain.logic.qe import qeExists
from skewchain.logic.semantics import evaluateQuantifierFree
from skewchain.values import INFINITY, ChainValue

OUTER: List[ChainValue] = [Fraction(k, 4) for k in range(-12, 13)] + [INFINITY]
INNER: List[ChainValue] = [Fraction(k, 16) for k in range(-400, 401)] + [INFINITY]


SENTENCES = [
    ('E x. x.{(1,0)} < 0 & x.{(0,1)} > 0', True),
    ('A x. x.{(1,0)} > x.{(0,0)}', False),
    ('E x. x.{(1,0)} = x', True),
    ('A x. x.{(1,0)} > x', False),
    ('A x. E y. y > x', False),
    ('E x. A y. y <= x', True),
    ('A x. E y. y.{(1,0)} = x', True),
    ('E x. x < 0 & x > 0', False),
    ('A x. x < inf | x = inf', True),
    ('A x. A y. x < y | x = y | x > y', True),
    ('A x. E y. x < y & y < x.{(0,1)}', False),
    ('A x. x = inf | (E y. x < y & y < x.{(0,1)})', True),
    ('E x. x.{(2,0),(1,1),(0,3)} = 5', True),
    ('A x. x.{(1,0),(0,1)} <= x.{(0,1)}', True),
    ('A x. A y. x < y | x.{(1,0)} >= y.{(1,0)}', True),
    ('E x. x != x', False),
    ('A x. E y. y.{(1,5)}^-1 = x', True),
    ('E x. x < inf & x.{(1,0)} = inf', False),
    ('A x. E y. E z. x < y & y < z | x = inf', True),
    ('E x. x.{(1,0)} < x', True),
    ('A x. x.{(1,0)} >= x | x < 0', True),
    ('E x. x.{(0,1)} = x', True),
    ('A x. x.{(0,1)} > x', False),
    ('E x. x > 5 & x.{(1,0)} < 11', True),
    ('E x. x > 5 & x.{(1,0)} < 10', False),
    ('A x. E y. y.{(1,0)} = x.{(0,1)}', True),
    ('E x. A y. x <= y', False),
    ('E x. x.{(2,0),(0,1)} = x.{(1,0)}', True),
    ('A x. x.{(1,0)}^-1 < x | x <= 0 | x = inf', True),
    ('E x. E y. x < y & y.{(1,0)} < x', True),
    ('E x. x.{(1,0),(0,1)} = 3/2', True),
    ('E x. x.{(1,0),(0,1)} = 3 & x < 2', False),
    ('A x. x.{(1,0),(0,1)} <= x.{(1,0)}', True),
    ('A x. E y. y.{(1,0),(0,1)} = x', True),
    ('E x. E y. x < y & x.{(1,0)} > y.{(1,0)}', False),
    ('A x. A y. x <= y | y.{(0,1)}^-1 < x', True),
    ('E x. x.{(3,0),(0,2)} < x.{(1,0)}', True),
    ('A x. x.{(1,-1)} < x | x >= 1', True),
    ('E x. x.{(1,-1)} = x & x < inf', True),
    ('A x. E y. x < y | x = inf', True),
    ('E x. A y. y.{(1,0)} >= x', False),
    ('A x. E y. y < x', True),
    ('E x. x.{(0,1)}^-1 = 1/2', True),
    ('A x. x.{(0,1)}^-1 < x | x = inf', True),
    ('!(E x. x < 0 & x.{(1,0)} > x)', True),
    ('E x. x = inf & (A y. y <= x)', True),
    ('A x. x < 1 | x.{(1,0)} >= 2', True),
    ('true', True),
    ('0 < 1', True),
    ('!(1 < 0) & inf = inf', True),
]


@pytest.mark.parametrize('sentence, expected', SENTENCES)
def testDecide(sentence: str, expected: bool) -> None:
    assert decide(parseFormula(sentence)) is expected


def _depth(formula: Formula) -> int:
    if isinstance(formula, Not):
        return _depth(formula.body)

    if isinstance(formula, (And, Or)):
        return max(_depth(_) for _ in formula.parts)

    if isinstance(formula, (Exists, ForAll)):
        return 1 + _depth(formula.body)

    return 0


def _gridEvaluate(
        formula: Formula,
        env: Dict[str, ChainValue],
        grids: Sequence[List[ChainValue]],
) -> bool:
    if isinstance(formula, Not):
        return not _gridEvaluate(formula.body, env, grids)

    if isinstance(formula, And):
        return all(_gridEvaluate(_, env, grids) for _ in formula.parts)

    if isinstance(formula, Or):
        return any(_gridEvaluate(_, env, grids) for _ in formula.parts)

    if isinstance(formula, (Exists, ForAll)):
        values = grids[0] if grids else INNER
        found = (
            _gridEvaluate(formula.body, {**env, formula.var: _}, grids[1:])
            for _ in values
        )
        return any(found) if isinstance(formula, Exists) else all(found)

    return evaluateQuantifierFree(formula, env)


@pytest.mark.parametrize(
    'sentence, expected',
    [_ for _ in SENTENCES if _depth(parseFormula(_[0])) <= 2],
)
def testDecideAgreesWithGridEvaluation(sentence: str, expected: bool) -> None:
    formula = parseFormula(sentence)
    grids = [INNER] if _depth(formula) == 1 else [OUTER, INNER]
    assert _gridEvaluate(formula, {}, grids) is expected
    assert decide(formula) is expected


def testClosedSubformulasAreEvaluatedDirectly(monkeypatch) -> None:
    def refuse(formula: Formula) -> Formula:
        raise AssertionError(f'unexpected elimination of {formula!r}')

    monkeypatch.setattr(decision, 'eliminate', refuse)
    assert decide(parseFormula('A x. x = inf | (x < inf & (E y. y.{(1,0)} = 3))'))
    assert not decide(parseFormula('E x. x < 0 & (A y. y.{(1,0)} > y)'))


def testDecideRejectsFreeVariables() -> None:
    with pytest.raises(PreconditionError):
        decide(parseFormula('x < 1'))

    with pytest.raises(PreconditionError):
        decide(parseFormula('E x. x < y'))


def testEvaluateWithFreeVariables() -> None:
    formula = parseFormula('E y. x < y & y < z')
    assert evaluate(formula, {'x': Fraction(0), 'z': Fraction(1, 1000)})
    assert not evaluate(formula, {'x': Fraction(0), 'z': Fraction(0)})
    assert evaluate(formula, {'x': Fraction(0), 'z': INFINITY})
    assert not evaluate(formula, {'x': INFINITY, 'z': INFINITY})


@pytest.mark.parametrize(
    'matrix',
    [
        # nonempty for x > -2
        'y.{(1,0)} > x & y < x.{(0,1)}',
        'y.{(1,0),(0,1)} = x',
        # nonempty for x > -1
        'y < x & y.{(1,1)} > x',
        'y.{(1,0)} = x.{(0,1)} & y > 0',
        'y.{(2,0)} >= x | y = inf',
        'y.{(1,0)} < x & y.{(0,1)} > x.{(1,0)}',
    ],
)
def testExistsAgreesWithGridSearch(matrix: str) -> None:
    formula = parseFormula(matrix)
    eliminated = qeExists(formula, 'y')
    for x in OUTER:
        found = any(evaluateQuantifierFree(formula, {'x': x, 'y': y}) for y in INNER)
        assert evaluate(Exists('y', formula), {'x': x}) is found, (matrix, x)
        assert evaluateQuantifierFree(eliminated, {'x': x}) is found, (matrix, x)
