"""
Equivalence-preserving cleanup over the standard model: fold ground atoms,
push negations into atoms, flatten and deduplicate connectives, and merge
comparisons of one variable with constants through IntervalSet.
"""
from typing import Dict, List, Optional

from skewchain.logic.ast import (
    FALSE,
    FLIPPED,
    NEGATED,
    TRUE,
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
    makeAnd,
    makeOr,
    substitute,
    termVariables,
)
from skewchain.logic.intervals import IntervalSet
from skewchain.logic.semantics import Env, asConstant, evaluateTerm, holds
from skewchain.utils.internal_error import InternalError
from skewchain.utils.walk import walk


def simplify(formula: Formula, env: Optional[Env] = None) -> Formula:
    """Simplify, after substituting the values in ``env``"""
    for name, value in (env or {}).items():
        formula = substitute(formula, name, asConstant(value))

    return _simplify(formula)


def _simplify(formula: Formula) -> Formula:
    if isinstance(formula, Atom):
        return _simplifyAtom(formula)

    if isinstance(formula, Truth):
        return formula

    if isinstance(formula, Not):
        return negate(_simplify(formula.body))

    if isinstance(formula, (And, Or)):
        return _simplifyJunction(type(formula), [_simplify(_) for _ in formula.parts])

    if isinstance(formula, (Exists, ForAll)):
        body = _simplify(formula.body)
        if formula.var not in freeVariables(body):
            return body

        return type(formula)(formula.var, body)

    raise InternalError(f'Not a formula: {formula!r}')


def negate(formula: Formula) -> Formula:
    """The negation, pushed down to the atoms"""
    if isinstance(formula, Atom):
        return _simplifyAtom(Atom(formula.left, NEGATED[formula.op], formula.right))

    if isinstance(formula, Truth):
        return Truth(not formula.value)

    if isinstance(formula, Not):
        return _simplify(formula.body)

    if isinstance(formula, And):
        return _simplifyJunction(Or, [negate(_) for _ in formula.parts])

    if isinstance(formula, Or):
        return _simplifyJunction(And, [negate(_) for _ in formula.parts])

    if isinstance(formula, Exists):
        return ForAll(formula.var, negate(formula.body))

    if isinstance(formula, ForAll):
        return Exists(formula.var, negate(formula.body))

    raise InternalError(f'Not a formula: {formula!r}')


def _isIdentity(trop) -> bool:
    return trop.lines == ((0, 0),)


def simplifyTerm(term: Term) -> Term:
    """Drop identity actions and adjacent m, m^-1 pairs"""
    if isinstance(term, Apply):
        inner = simplifyTerm(term.term)
        if _isIdentity(term.trop):
            return inner

        if isinstance(inner, InverseApply) and inner.monomial == term.trop:
            return inner.term

        return Apply(inner, term.trop)

    if isinstance(term, InverseApply):
        inner = simplifyTerm(term.term)
        if _isIdentity(term.monomial):
            return inner

        if isinstance(inner, Apply) and inner.trop == term.monomial:
            return inner.term

        return InverseApply(inner, term.monomial)

    return term


def _stripActions(term: Term) -> Term:
    while isinstance(term, (Apply, InverseApply)):
        term = term.term

    return term


# T op inf, for T not known to be inf
_AGAINST_INFINITY = {
    '<': '<',
    '<=': None,
    '=': '=',
    '!=': '<',
    '>=': '=',
    '>': None,
}


def _foldTerm(term: Term) -> Term:
    term = simplifyTerm(term)
    if termVariables(term):
        return term

    return asConstant(evaluateTerm(term, {}))


def _simplifyAtom(atom: Atom) -> Formula:
    left, op, right = _foldTerm(atom.left), atom.op, _foldTerm(atom.right)
    if not termVariables(left) and not termVariables(right):
        return Truth(holds(op, evaluateTerm(left, {}), evaluateTerm(right, {})))

    if isinstance(left, (Const, InfConst)):
        left, op, right = right, FLIPPED[op], left

    if left == right:
        return Truth(op in ('=', '<=', '>='))

    if isinstance(right, InfConst):
        # actions fix inf and move every rational below inf
        left = _stripActions(left)
        if _AGAINST_INFINITY[op] is None:
            return Truth(op == '<=')

        op = _AGAINST_INFINITY[op]

    return Atom(left, op, right)


def _constantComparison(formula: Formula) -> Optional[str]:
    """The variable of ``v op c`` or ``c op v`` (c a constant or inf)"""
    if not isinstance(formula, Atom):
        return None

    constants = (Const, InfConst)
    if isinstance(formula.left, Var) and isinstance(formula.right, constants):
        return formula.left.name

    if isinstance(formula.right, Var) and isinstance(formula.left, constants):
        return formula.right.name

    return None


def _atomSet(atom: Atom) -> IntervalSet:
    if isinstance(atom.left, Var):
        return IntervalSet.comparison(atom.op, evaluateTerm(atom.right, {}))

    return IntervalSet.comparison(FLIPPED[atom.op], evaluateTerm(atom.left, {}))


def intervalFormula(name: str, solutions: IntervalSet) -> Formula:
    """A formula in ``name`` whose solution set is ``solutions``"""
    if solutions.isEmpty():
        return FALSE

    if solutions.isFull():
        return TRUE

    var = Var(name)
    disjuncts: List[Formula] = []
    infinityCovered = not solutions.infinity
    for interval in solutions.intervals:
        if interval.isPoint():
            disjuncts.append(Atom(var, '=', Const(interval.lower)))
            continue

        conjuncts = []
        if interval.lower is not None:
            op = '>=' if interval.lowerClosed else '>'
            conjuncts.append(Atom(var, op, Const(interval.lower)))

        if interval.upper is not None:
            op = '<=' if interval.upperClosed else '<'
            conjuncts.append(Atom(var, op, Const(interval.upper)))
        elif solutions.infinity:
            infinityCovered = True
        else:
            conjuncts.append(Atom(var, '<', InfConst()))

        disjuncts.append(makeAnd(*conjuncts))

    if not infinityCovered:
        disjuncts.append(Atom(var, '=', InfConst()))

    return makeOr(*disjuncts)


def _countAtoms(formula: Formula) -> int:
    return sum(1 for node, _ in walk(formula) if isinstance(node, Atom))


def _mergeIntervals(kind: type, parts: List[Formula]) -> List[Formula]:
    groups: Dict[str, List[int]] = {}
    for index, part in enumerate(parts):
        name = _constantComparison(part)
        if name is not None:
            groups.setdefault(name, []).append(index)

    replaced: Dict[int, Optional[Formula]] = {}
    for name, indices in groups.items():
        if len(indices) < 2:
            continue

        combined = _atomSet(parts[indices[0]])
        for index in indices[1:]:
            other = _atomSet(parts[index])
            combined = (
                combined.intersect(other) if kind is And else combined.union(other)
            )

        merged = intervalFormula(name, combined)
        if _countAtoms(merged) > len(indices):
            continue

        replaced[indices[0]] = merged
        for index in indices[1:]:
            replaced[index] = None

    result = []
    for index, part in enumerate(parts):
        if index not in replaced:
            result.append(part)
        elif replaced[index] is not None:
            result.append(replaced[index])

    return result


def _simplifyJunction(kind: type, parts: List[Formula]) -> Formula:
    identity, absorbing = (TRUE, FALSE) if kind is And else (FALSE, TRUE)
    flat: List[Formula] = []
    for part in parts:
        children = part.parts if isinstance(part, kind) else (part,)
        for child in children:
            if child == absorbing:
                return absorbing

            if child != identity and child not in flat:
                flat.append(child)

    merged: List[Formula] = []
    for part in _mergeIntervals(kind, flat):
        children = part.parts if isinstance(part, kind) else (part,)
        for child in children:
            if child == absorbing:
                return absorbing

            if child != identity and child not in merged:
                merged.append(child)

    if len(merged) == 0:
        return identity

    return merged[0] if len(merged) == 1 else kind(tuple(merged))
