"""
Elimination of one existential quantifier over the chain Q + {inf}.

A term in x is x followed by actions .r and .m^-1. Each .r agrees with
one monomial action on each envelope piece, so x.r op P splits into the
cases "P lies in the image of piece i" and "x op P.m_i^-1". After this
every atom in x reads x op T for a term T free of x, and the existence of
a rational x satisfying a conjunction of such bounds is decided by
comparing lower bounds with upper bounds (Q is dense and has no end
points). The value x = inf is handled by direct substitution.
"""
import logging
from dataclasses import dataclass
from typing import List, Tuple

from skewchain.chain import TropPoly, chainEval, envelope
from skewchain.errors import QuantifiedMatrixError
from skewchain.logic.ast import (
    FLIPPED,
    NEGATED,
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
    freeVariables,
    isQuantifierFree,
    makeAnd,
    makeOr,
    mentions,
    substitute,
)
from skewchain.logic.semantics import atomSolutionSet
from skewchain.logic.simplify import simplify
from skewchain.utils.internal_error import InternalError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Bound:
    """x op term"""

    op: str
    term: Term


@dataclass(frozen=True)
class Clause:
    """A conjunction of conditions free of x and bounds on x"""

    conditions: Tuple[Formula, ...] = ()
    bounds: Tuple[Bound, ...] = ()

    def merge(self, other: 'Clause') -> 'Clause':
        return Clause(
            self.conditions + other.conditions, self.bounds + other.bounds
        )


def _nnf(formula: Formula, negated: bool = False) -> Formula:
    if isinstance(formula, Atom):
        if negated:
            return Atom(formula.left, NEGATED[formula.op], formula.right)

        return formula

    if isinstance(formula, Truth):
        return Truth(formula.value != negated)

    if isinstance(formula, Not):
        return _nnf(formula.body, not negated)

    if isinstance(formula, (And, Or)):
        flip = {And: Or, Or: And}
        kind = flip[type(formula)] if negated else type(formula)
        return kind(tuple(_nnf(_, negated) for _ in formula.parts))

    raise InternalError(f'Not a quantifier-free formula: {formula!r}')


def _isolate(term: Term, op: str, other: Term) -> List[Clause]:
    """Clauses equivalent to term op other for rational x"""
    if op == '!=':
        return _isolate(term, '<', other) + _isolate(term, '>', other)

    if isinstance(term, Var):
        return [Clause(bounds=(Bound(op, other),))]

    if isinstance(term, InverseApply):
        return _isolate(term.term, op, Apply(other, term.monomial))

    if isinstance(term, Apply):
        trop = term.trop
        clauses = []
        for piece in envelope(trop):
            if piece.isPoint():
                continue

            conditions = []
            if piece.lower is not None:
                image = chainEval(piece.lower, trop)
                conditions.append(Atom(other, '>=', Const(image)))

            if piece.upper is not None:
                image = chainEval(piece.upper, trop)
                conditions.append(Atom(other, '<=', Const(image)))

            monomial = TropPoly(
                {piece.degree: trop.value(piece.degree)}, q=trop.q
            )
            inverse = InverseApply(other, monomial)
            for clause in _isolate(term.term, op, inverse):
                clauses.append(Clause(tuple(conditions)).merge(clause))

        return clauses

    raise InternalError(f'Term {term!r} does not depend on a variable')


def _constantClauses(atom: Atom, x: str) -> List[Clause]:
    """Clauses for an atom with x on both sides: constant bounds only"""
    clauses = []
    for interval in atomSolutionSet(atom, {}, x).intervals:
        if interval.isPoint():
            clauses.append(Clause(bounds=(Bound('=', Const(interval.lower)),)))
            continue

        bounds = []
        if interval.lower is not None:
            op = '>=' if interval.lowerClosed else '>'
            bounds.append(Bound(op, Const(interval.lower)))

        if interval.upper is not None:
            op = '<=' if interval.upperClosed else '<'
            bounds.append(Bound(op, Const(interval.upper)))

        clauses.append(Clause(bounds=tuple(bounds)))

    return clauses


def _dnf(formula: Formula, x: str) -> List[Clause]:
    if isinstance(formula, Truth):
        return [Clause()] if formula.value else []

    if isinstance(formula, Atom):
        leftX, rightX = mentions(formula.left, x), mentions(formula.right, x)
        if leftX and rightX:
            return _constantClauses(formula, x)

        if leftX:
            return _isolate(formula.left, formula.op, formula.right)

        if rightX:
            return _isolate(formula.right, FLIPPED[formula.op], formula.left)

        return [Clause(conditions=(formula,))]

    if isinstance(formula, And):
        clauses = [Clause()]
        for part in formula.parts:
            partClauses = _dnf(part, x)
            clauses = [a.merge(b) for a in clauses for b in partClauses]

        return clauses

    if isinstance(formula, Or):
        return [clause for part in formula.parts for clause in _dnf(part, x)]

    raise InternalError(f'Not in negation normal form: {formula!r}')


def _eliminateClause(clause: Clause) -> Formula:
    """Condition for some rational x to satisfy every bound of the clause"""
    parts = list(clause.conditions)
    equalities = [_ for _ in clause.bounds if _.op == '=']
    if equalities:
        witness = equalities[0].term
        parts.append(Atom(witness, '<', InfConst()))
        for bound in clause.bounds:
            if bound is not equalities[0]:
                parts.append(Atom(witness, bound.op, bound.term))

        return makeAnd(*parts)

    lowers = [_ for _ in clause.bounds if _.op in ('>', '>=')]
    uppers = [_ for _ in clause.bounds if _.op in ('<', '<=')]
    for lower in lowers:
        finite = False
        for upper in uppers:
            strict = lower.op == '>' or upper.op == '<'
            parts.append(Atom(lower.term, '<' if strict else '<=', upper.term))
            finite = finite or strict

        if not finite:
            parts.append(Atom(lower.term, '<', InfConst()))

    return makeAnd(*parts)


def qeExists(formula: Formula, x: str) -> Formula:
    """
    A quantifier-free formula equivalent to E x. formula.

    Parameters
    ----------
    formula : Formula
        A quantifier-free matrix
    x : str
        The variable to eliminate

    Returns
    -------
    Formula
        Quantifier-free, in the remaining free variables; its terms may
        apply inverses of monomial actions

    Raises
    ------
    QuantifiedMatrixError
        If ``formula`` contains a quantifier
    """
    if not isQuantifierFree(formula):
        raise QuantifiedMatrixError(
            'Quantifier elimination needs a quantifier-free matrix'
        )

    if x not in freeVariables(formula):
        return simplify(formula)

    atInfinity = substitute(formula, x, InfConst())
    clauses = _dnf(_nnf(formula), x)
    logger.debug('qeExists: %d clauses for %s', len(clauses), x)
    rational = makeOr(*(_eliminateClause(_) for _ in clauses))
    return simplify(makeOr(atInfinity, rational))


def qeForAll(formula: Formula, x: str) -> Formula:
    return simplify(Not(qeExists(Not(formula), x)))


def eliminate(formula: Formula) -> Formula:
    """Remove every quantifier, innermost first"""
    if isinstance(formula, (Atom, Truth)):
        return formula

    if isinstance(formula, Not):
        return simplify(Not(eliminate(formula.body)))

    if isinstance(formula, (And, Or)):
        return simplify(type(formula)(tuple(eliminate(_) for _ in formula.parts)))

    if isinstance(formula, Exists):
        return qeExists(eliminate(formula.body), formula.var)

    if isinstance(formula, ForAll):
        return qeForAll(eliminate(formula.body), formula.var)

    raise InternalError(f'Not a formula: {formula!r}')
