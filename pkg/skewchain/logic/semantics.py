"""
Semantics over the standard model Q + {inf} with gamma.t = q gamma: term
values, comparisons, and exact solution sets of quantifier-free formulas
in one variable.
"""
import operator
from fractions import Fraction
from typing import Callable, Dict, Mapping, Optional

from skewchain.chain import (
    asPiecewiseLinear,
    chainEval,
    chainInverse,
    monomialInverseMap,
)
from skewchain.errors import PreconditionError, QuantifiedMatrixError
from skewchain.logic.ast import (
    FLIPPED,
    And,
    Apply,
    Atom,
    Const,
    Exists,
    ForAll,
    Formula,
    InfConst,
    InverseApply,
    Not,
    Or,
    Term,
    Truth,
    Var,
    termBase,
)
from skewchain.logic.intervals import IntervalSet
from skewchain.piecewise import PiecewiseLinear
from skewchain.utils.internal_error import InternalError
from skewchain.values import INFINITY, ChainValue

Env = Mapping[str, ChainValue]

COMPARE: Dict[str, Callable[[ChainValue, ChainValue], bool]] = {
    '<': operator.lt,
    '<=': operator.le,
    '=': operator.eq,
    '!=': operator.ne,
    '>=': operator.ge,
    '>': operator.gt,
}


def holds(op: str, left: ChainValue, right: ChainValue) -> bool:
    return COMPARE[op](left, right)


def evaluateTerm(term: Term, env: Env) -> ChainValue:
    """The value of a term under an assignment of its variable"""
    if isinstance(term, Var):
        if term.name not in env:
            raise PreconditionError(f'Variable {term.name} has no value')

        return env[term.name]

    if isinstance(term, Const):
        return term.value

    if isinstance(term, InfConst):
        return INFINITY

    if isinstance(term, Apply):
        return chainEval(evaluateTerm(term.term, env), term.trop)

    if isinstance(term, InverseApply):
        return chainInverse(evaluateTerm(term.term, env), term.monomial)

    raise InternalError(f'Not a term: {term!r}')


def termMap(term: Term) -> PiecewiseLinear:
    """The map Q -> Q, x -> term(x), of a term whose base is a variable"""
    if isinstance(term, Var):
        return PiecewiseLinear.identity()

    if isinstance(term, Apply):
        return asPiecewiseLinear(term.trop).after(termMap(term.term))

    if isinstance(term, InverseApply):
        ((degree, value),) = term.monomial.lines
        inverse = monomialInverseMap(degree, value, term.monomial.q)
        return inverse.after(termMap(term.term))

    raise InternalError(f'Term {term!r} does not depend on a variable')


def _dependsOn(term: Term, x: str) -> bool:
    base = termBase(term)
    return isinstance(base, Var) and base.name == x


def _sideValue(term: Term, env: Env, x: str) -> Optional[ChainValue]:
    """None when the term depends on x, its value otherwise"""
    return None if _dependsOn(term, x) else evaluateTerm(term, env)


def atomSolutionSet(atom: Atom, env: Env, x: str) -> IntervalSet:
    """
    {x : atom} given values for its other variables.

    Terms in x are strictly increasing bijections of Q fixing inf, so one
    side against a value is a single comparison on x, and two sides in x
    reduce to the sign of a piecewise-linear difference.
    """
    left = _sideValue(atom.left, env, x)
    right = _sideValue(atom.right, env, x)
    atInfinity = IntervalSet(infinity=True)

    if left is not None and right is not None:
        return IntervalSet.full() if holds(atom.op, left, right) else IntervalSet()

    if left is None and right is None:
        difference = termMap(atom.left) - termMap(atom.right)
        solutions = _signSet(difference, atom.op)
        if holds(atom.op, INFINITY, INFINITY):
            solutions = solutions.union(atInfinity)

        return solutions

    if left is None:
        term, op, value = atom.left, atom.op, right
    else:
        term, op, value = atom.right, FLIPPED[atom.op], left

    if value is INFINITY:
        # term(x) = inf exactly when x = inf
        return IntervalSet.comparison(op, INFINITY)

    threshold = termMap(term).inverse()(value)
    return IntervalSet.comparison(op, threshold)


def _signSet(difference: PiecewiseLinear, op: str) -> IntervalSet:
    """{x in Q : difference(x) op 0}"""
    solutions = IntervalSet()
    for lower, upper, piece in difference.intervals():
        span = IntervalSet.closedSpan(lower, upper)
        if piece.slope == 0:
            inside = holds(op, piece.intercept, 0)
            partial = IntervalSet.rationals() if inside else IntervalSet()
        else:
            root = -piece.intercept / piece.slope
            partial = IntervalSet.comparison(
                op if piece.slope > 0 else FLIPPED[op], root
            )

        solutions = solutions.union(partial.intersect(span))

    return solutions


def solutionSet(formula: Formula, env: Env, x: str) -> IntervalSet:
    """{x : formula} for a quantifier-free formula"""
    if isinstance(formula, Atom):
        return atomSolutionSet(formula, env, x)

    if isinstance(formula, Truth):
        return IntervalSet.full() if formula.value else IntervalSet()

    if isinstance(formula, Not):
        return solutionSet(formula.body, env, x).complement()

    if isinstance(formula, And):
        result = IntervalSet.full()
        for part in formula.parts:
            result = result.intersect(solutionSet(part, env, x))

        return result

    if isinstance(formula, Or):
        result = IntervalSet()
        for part in formula.parts:
            result = result.union(solutionSet(part, env, x))

        return result

    if isinstance(formula, (Exists, ForAll)):
        raise QuantifiedMatrixError(
            'Solution sets are computed for quantifier-free formulas'
        )

    raise InternalError(f'Not a formula: {formula!r}')


def evaluateQuantifierFree(formula: Formula, env: Env) -> bool:
    if isinstance(formula, Atom):
        return holds(
            formula.op,
            evaluateTerm(formula.left, env),
            evaluateTerm(formula.right, env),
        )

    if isinstance(formula, Truth):
        return formula.value

    if isinstance(formula, Not):
        return not evaluateQuantifierFree(formula.body, env)

    if isinstance(formula, And):
        return all(evaluateQuantifierFree(_, env) for _ in formula.parts)

    if isinstance(formula, Or):
        return any(evaluateQuantifierFree(_, env) for _ in formula.parts)

    raise QuantifiedMatrixError('The formula still has quantifiers')


def asConstant(value: ChainValue) -> Term:
    return InfConst() if value is INFINITY else Const(Fraction(value))
