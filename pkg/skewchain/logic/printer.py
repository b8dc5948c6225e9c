from skewchain.logic.ast import (
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
)
from skewchain.render import formatTropPoly
from skewchain.utils.generic import formatRational
from skewchain.utils.internal_error import InternalError


def formatTerm(term: Term) -> str:
    if isinstance(term, Var):
        return term.name

    if isinstance(term, Const):
        return formatRational(term.value)

    if isinstance(term, InfConst):
        return 'inf'

    if isinstance(term, Apply):
        return f'{formatTerm(term.term)}.{formatTropPoly(term.trop)}'

    if isinstance(term, InverseApply):
        return f'{formatTerm(term.term)}.{formatTropPoly(term.monomial)}^-1'

    raise InternalError(f'Not a term: {term!r}')


def formatFormula(formula: Formula) -> str:
    """
    Print a formula so that parsing the text gives back the same tree:
    nested connectives and quantifiers are parenthesized.
    """
    if isinstance(formula, Atom):
        return f'{formatTerm(formula.left)} {formula.op} {formatTerm(formula.right)}'

    if isinstance(formula, Truth):
        return 'true' if formula.value else 'false'

    if isinstance(formula, Not):
        if isinstance(formula.body, (Atom, Truth, Not)):
            return '!' + formatFormula(formula.body)

        return f'!({formatFormula(formula.body)})'

    if isinstance(formula, And):
        if len(formula.parts) < 2:
            return _degenerate(formula)

        return ' & '.join(
            _wrap(part, (And, Or, Exists, ForAll)) for part in formula.parts
        )

    if isinstance(formula, Or):
        if len(formula.parts) < 2:
            return _degenerate(formula)

        return ' | '.join(
            _wrap(part, (Or, Exists, ForAll)) for part in formula.parts
        )

    if isinstance(formula, (Exists, ForAll)):
        letter = 'E' if isinstance(formula, Exists) else 'A'
        return f'{letter} {formula.var}. {formatFormula(formula.body)}'

    raise InternalError(f'Not a formula: {formula!r}')


def _wrap(part: Formula, kinds: tuple) -> str:
    text = formatFormula(part)
    return f'({text})' if isinstance(part, kinds) else text


def _degenerate(formula: Formula) -> str:
    if len(formula.parts) == 1:
        return formatFormula(formula.parts[0])

    return 'true' if isinstance(formula, And) else 'false'
