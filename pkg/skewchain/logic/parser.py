"""
Parser for formulas such as ``E x. x.{(1,0)} < 0 & x.{(0,1)} > 0`` and for
tropical polynomials such as ``{(2,0),(1,1),(0,3)}``.
"""
from fractions import Fraction

from lark import Lark, Transformer, v_args
from lark.exceptions import UnexpectedInput, VisitError

from skewchain.chain import TropPoly
from skewchain.errors import InputError
from skewchain.logic.ast import (
    FALSE,
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
    Var,
)
from skewchain.utils.lark_errors import toParseError

GRAMMAR = r"""
?formula: quant
    | disj

quant: (EXISTS | FORALL) IDENT "." formula

?disj: conj ("|" conj)*

?conj: lit ("&" lit)*

?lit: "!" lit                  -> negation
    | atom
    | "(" formula ")"
    | "true"                   -> true
    | "false"                  -> false

atom: term CMP term

?term: base
    | term "." trop            -> apply
    | term "." trop INVERSE    -> inverse_apply

?base: IDENT                   -> var
    | rational                 -> const
    | "inf"                    -> inf

trop: "{" pair ("," pair)* "}"

pair: "(" INT "," rational ")"

rational: INT                  -> rat_int
    | "-" INT                  -> rat_neg
    | INT "/" INT              -> rat_frac
    | "-" INT "/" INT          -> rat_neg_frac

EXISTS: "E"
FORALL: "A"
IDENT: /[a-zA-Z_][a-zA-Z0-9_]*/
CMP: /<=|>=|!=|<|>|=/
INVERSE: "^-1"

%import common.INT
%import common.WS
%ignore WS
"""

_PARSER = Lark(GRAMMAR, parser='lalr', lexer='basic', start=['formula', 'trop'])


@v_args(inline=True)
class _FormulaBuilder(Transformer):
    def __init__(self, q: int) -> None:
        super().__init__()
        self.q = q

    def quant(self, kind: str, name: str, body: Formula) -> Formula:
        if str(kind) == 'E':
            return Exists(str(name), body)

        return ForAll(str(name), body)

    def disj(self, *parts: Formula) -> Formula:
        return Or(tuple(parts))

    def conj(self, *parts: Formula) -> Formula:
        return And(tuple(parts))

    def negation(self, body: Formula) -> Formula:
        return Not(body)

    def true(self) -> Formula:
        return TRUE

    def false(self) -> Formula:
        return FALSE

    def atom(self, left, op: str, right) -> Formula:
        return Atom(left, str(op), right)

    def apply(self, term, trop: TropPoly):
        return Apply(term, trop)

    def inverse_apply(self, term, trop: TropPoly, _):
        if not trop.isMonomial():
            raise InputError(
                f'Only monomials can be inverted, got {len(trop.lines)} terms'
            )

        return InverseApply(term, trop)

    def var(self, name: str):
        return Var(str(name))

    def const(self, value: Fraction):
        return Const(value)

    def inf(self):
        return InfConst()

    def trop(self, *pairs):
        return TropPoly(pairs, q=self.q)

    def pair(self, degree: str, value: Fraction):
        return int(degree), value

    def rat_int(self, value: str) -> Fraction:
        return Fraction(int(value))

    def rat_neg(self, value: str) -> Fraction:
        return -Fraction(int(value))

    def rat_frac(self, numerator: str, denominator: str) -> Fraction:
        if int(denominator) == 0:
            raise InputError('Zero denominator')

        return Fraction(int(numerator), int(denominator))

    def rat_neg_frac(self, numerator: str, denominator: str) -> Fraction:
        return -self.rat_frac(numerator, denominator)


def _parse(text: str, start: str, q: int, what: str):
    try:
        tree = _PARSER.parse(text, start=start)
    except UnexpectedInput as exc:
        raise toParseError(exc, _PARSER, text, what) from exc

    try:
        return _FormulaBuilder(q).transform(tree)
    except VisitError as exc:
        raise exc.orig_exc from exc


def parseFormula(text: str, q: int = 2) -> Formula:
    """Parse a formula; tropical literals act with q"""
    return _parse(text, 'formula', q, 'formula')


def parseTropPoly(text: str, q: int = 2) -> TropPoly:
    """Parse ``{(i,c),...}``"""
    return _parse(text, 'trop', q, 'tropical polynomial')
