"""
Truth of formulas over Q + {inf}. A quantifier is evaluated on the
solution set of its body in the bound variable, built innermost-out from
exact IntervalSets. Subformulas that do not mention the bound variable
are evaluated on the known values; only an inner quantifier that does
mention it is eliminated symbolically.
"""
import logging
from typing import Optional

from skewchain.errors import PreconditionError
from skewchain.logic.ast import (
    And,
    Atom,
    Exists,
    ForAll,
    Formula,
    Not,
    Or,
    Truth,
    freeVariables,
    substitute,
)
from skewchain.logic.intervals import IntervalSet
from skewchain.logic.qe import eliminate
from skewchain.logic.semantics import (
    Env,
    asConstant,
    evaluateQuantifierFree,
    solutionSet,
)
from skewchain.utils.internal_error import InternalError

logger = logging.getLogger(__name__)


def evaluate(formula: Formula, env: Optional[Env] = None) -> bool:
    """Truth of ``formula`` when its free variables take the values in env"""
    env = dict(env or {})
    if isinstance(formula, (Atom, Truth)):
        return evaluateQuantifierFree(formula, env)

    if isinstance(formula, Not):
        return not evaluate(formula.body, env)

    if isinstance(formula, And):
        return all(evaluate(_, env) for _ in formula.parts)

    if isinstance(formula, Or):
        return any(evaluate(_, env) for _ in formula.parts)

    if isinstance(formula, (Exists, ForAll)):
        outer = {k: v for k, v in env.items() if k != formula.var}
        solutions = _solutions(formula.body, outer, formula.var)
        logger.debug('evaluate: %s ranges over %r', formula.var, solutions)
        if isinstance(formula, Exists):
            return not solutions.isEmpty()

        return solutions.isFull()

    raise InternalError(f'Not a formula: {formula!r}')


def _solutions(formula: Formula, env: Env, x: str) -> IntervalSet:
    """{x : formula}, where env holds every other free variable"""
    if x not in freeVariables(formula):
        return IntervalSet.full() if evaluate(formula, env) else IntervalSet.empty()

    if isinstance(formula, (Atom, Truth)):
        return solutionSet(formula, env, x)

    if isinstance(formula, Not):
        return _solutions(formula.body, env, x).complement()

    if isinstance(formula, And):
        result = IntervalSet.full()
        for part in formula.parts:
            result = result.intersect(_solutions(part, env, x))

        return result

    if isinstance(formula, Or):
        result = IntervalSet.empty()
        for part in formula.parts:
            result = result.union(_solutions(part, env, x))

        return result

    if isinstance(formula, (Exists, ForAll)):
        bound = formula
        for name, value in env.items():
            bound = substitute(bound, name, asConstant(value))

        logger.debug('evaluate: eliminating %s with %s free', formula.var, x)
        return solutionSet(eliminate(bound), {}, x)

    raise InternalError(f'Not a formula: {formula!r}')


def decide(sentence: Formula) -> bool:
    """Truth of a sentence in the standard model"""
    free = freeVariables(sentence)
    if free:
        raise PreconditionError(
            'decide needs a sentence; free variables: ' + ', '.join(sorted(free))
        )

    return evaluate(sentence)
