"""
Terms and formulas of the language {<, .r (r in R), inf} over the chain
Q + {inf}. Terms may also apply the inverse of a monomial action; such
terms come out of quantifier elimination.
"""
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, FrozenSet, Set, Tuple, Union

from skewchain.chain import TropPoly
from skewchain.utils.generic import formatRational
from skewchain.utils.internal_error import InternalError
from skewchain.utils.walk import walk

COMPARISONS = ('<', '<=', '=', '!=', '>=', '>')

NEGATED = {
    '<': '>=',
    '<=': '>',
    '=': '!=',
    '!=': '=',
    '>=': '<',
    '>': '<=',
}

# a op b  <=>  b FLIPPED[op] a
FLIPPED = {
    '<': '>',
    '<=': '>=',
    '=': '=',
    '!=': '!=',
    '>=': '<=',
    '>': '<',
}


class Node:
    """Common base of terms and formulas"""


@dataclass(frozen=True)
class Var(Node):
    name: str


@dataclass(frozen=True)
class Const(Node):
    value: Fraction


@dataclass(frozen=True)
class InfConst(Node):
    pass


@dataclass(frozen=True)
class Apply(Node):
    """term.r"""

    term: 'Term'
    trop: TropPoly


@dataclass(frozen=True)
class InverseApply(Node):
    """term.m^-1 for a monomial m"""

    term: 'Term'
    monomial: TropPoly

    def __post_init__(self) -> None:
        if not self.monomial.isMonomial():
            raise InternalError('Only monomial actions have inverse terms')


Term = Union[Var, Const, InfConst, Apply, InverseApply]


@dataclass(frozen=True)
class Atom(Node):
    left: Term
    op: str
    right: Term

    def __post_init__(self) -> None:
        if self.op not in COMPARISONS:
            raise InternalError(f'Unknown comparison {self.op!r}')


@dataclass(frozen=True)
class Truth(Node):
    value: bool


@dataclass(frozen=True)
class Not(Node):
    body: 'Formula'


@dataclass(frozen=True)
class And(Node):
    parts: Tuple['Formula', ...]


@dataclass(frozen=True)
class Or(Node):
    parts: Tuple['Formula', ...]


@dataclass(frozen=True)
class Exists(Node):
    var: str
    body: 'Formula'


@dataclass(frozen=True)
class ForAll(Node):
    var: str
    body: 'Formula'


Formula = Union[Atom, Truth, Not, And, Or, Exists, ForAll]

TRUE = Truth(True)
FALSE = Truth(False)


def termBase(term: Term) -> Term:
    """The variable or constant at the bottom of an application chain"""
    while isinstance(term, (Apply, InverseApply)):
        term = term.term

    return term


def termVariables(term: Term) -> Set[str]:
    base = termBase(term)
    return {base.name} if isinstance(base, Var) else set()


def freeVariables(formula: Formula) -> FrozenSet[str]:
    """Variables with a free occurrence in ``formula``"""
    if isinstance(formula, Atom):
        return frozenset(termVariables(formula.left) | termVariables(formula.right))

    if isinstance(formula, Truth):
        return frozenset()

    if isinstance(formula, Not):
        return freeVariables(formula.body)

    if isinstance(formula, (And, Or)):
        return frozenset().union(*(freeVariables(_) for _ in formula.parts))

    if isinstance(formula, (Exists, ForAll)):
        return freeVariables(formula.body) - {formula.var}

    raise InternalError(f'Not a formula: {formula!r}')


def isQuantifierFree(formula: Formula) -> bool:
    return not any(isinstance(node, (Exists, ForAll)) for node, _ in walk(formula))


def mentions(term: Term, name: str) -> bool:
    return name in termVariables(term)


def makeAnd(*parts: Formula) -> Formula:
    if len(parts) == 0:
        return TRUE

    return parts[0] if len(parts) == 1 else And(tuple(parts))


def makeOr(*parts: Formula) -> Formula:
    if len(parts) == 0:
        return FALSE

    return parts[0] if len(parts) == 1 else Or(tuple(parts))


def substitute(formula: Formula, name: str, value: Term) -> Formula:
    """Replace the free occurrences of ``name`` by ``value``"""
    if isinstance(formula, Atom):
        return Atom(
            _substituteTerm(formula.left, name, value),
            formula.op,
            _substituteTerm(formula.right, name, value),
        )

    if isinstance(formula, Truth):
        return formula

    if isinstance(formula, Not):
        return Not(substitute(formula.body, name, value))

    if isinstance(formula, (And, Or)):
        return type(formula)(
            tuple(substitute(_, name, value) for _ in formula.parts)
        )

    if isinstance(formula, (Exists, ForAll)):
        if formula.var == name:
            return formula

        return type(formula)(formula.var, substitute(formula.body, name, value))

    raise InternalError(f'Not a formula: {formula!r}')


def _substituteTerm(term: Term, name: str, value: Term) -> Term:
    if isinstance(term, Var):
        return value if term.name == name else term

    if isinstance(term, Apply):
        return Apply(_substituteTerm(term.term, name, value), term.trop)

    if isinstance(term, InverseApply):
        return InverseApply(_substituteTerm(term.term, name, value), term.monomial)

    return term


def termToJson(term: Term) -> Dict[str, Any]:
    if isinstance(term, Var):
        return {'kind': 'var', 'name': term.name}

    if isinstance(term, Const):
        return {'kind': 'const', 'value': formatRational(term.value)}

    if isinstance(term, InfConst):
        return {'kind': 'inf'}

    if isinstance(term, Apply):
        return {
            'kind': 'apply',
            'term': termToJson(term.term),
            'trop': _tropToJson(term.trop),
        }

    if isinstance(term, InverseApply):
        return {
            'kind': 'inverse',
            'term': termToJson(term.term),
            'trop': _tropToJson(term.monomial),
        }

    raise InternalError(f'Not a term: {term!r}')


def _tropToJson(trop: TropPoly) -> list:
    return [[degree, formatRational(value)] for degree, value in trop.lines]


def toJson(formula: Formula) -> Dict[str, Any]:
    """A JSON-ready dict of the AST"""
    if isinstance(formula, Atom):
        return {
            'kind': 'atom',
            'left': termToJson(formula.left),
            'op': formula.op,
            'right': termToJson(formula.right),
        }

    if isinstance(formula, Truth):
        return {'kind': 'truth', 'value': formula.value}

    if isinstance(formula, Not):
        return {'kind': 'not', 'body': toJson(formula.body)}

    if isinstance(formula, (And, Or)):
        return {
            'kind': 'and' if isinstance(formula, And) else 'or',
            'parts': [toJson(_) for _ in formula.parts],
        }

    if isinstance(formula, (Exists, ForAll)):
        return {
            'kind': 'exists' if isinstance(formula, Exists) else 'forall',
            'var': formula.var,
            'body': toJson(formula.body),
        }

    raise InternalError(f'Not a formula: {formula!r}')
