from skewchain.logic.ast import freeVariables, toJson
from skewchain.logic.decision import decide, evaluate
from skewchain.logic.parser import parseFormula, parseTropPoly
from skewchain.logic.printer import formatFormula
from skewchain.logic.qe import eliminate, qeExists
from skewchain.logic.semantics import atomSolutionSet, solutionSet
from skewchain.logic.simplify import simplify

__all__ = [
    'atomSolutionSet',
    'decide',
    'eliminate',
    'evaluate',
    'formatFormula',
    'freeVariables',
    'parseFormula',
    'parseTropPoly',
    'qeExists',
    'simplify',
    'solutionSet',
    'toJson',
]
