"""
Text syntax for field constants, Hahn series and Ore polynomials, e.g.
``t^2 + t*(u + u^2) + u^2``, ``(w + 1)*u^(1/2) + O(u^3)``.

``w`` is the generator of F_{p^g} (g = the configured generator degree)
and ``w_d`` the generator of F_{p^d}. Integers are read modulo p.
"""
import logging
from fractions import Fraction

from lark import Lark, Transformer, v_args
from lark.exceptions import UnexpectedInput, VisitError

from skewchain.errors import InputError
from skewchain.field import FieldElem, GroundConfig
from skewchain.hahn import HahnSeries
from skewchain.ore import OrePoly
from skewchain.utils.lark_errors import toParseError

logger = logging.getLogger(__name__)

GRAMMAR = r"""
?start: sum

?sum: product
    | "-" product              -> neg
    | sum "+" product          -> add
    | sum "-" product          -> sub

?product: power
    | product "*" power        -> mul

?power: atom
    | atom "^" exponent        -> pow

?atom: "t"                     -> tee
    | "u"                      -> uniformizer
    | GENERATOR                -> generator
    | INT                      -> integer
    | "O" "(" sum ")"          -> big_o
    | "(" sum ")"

exponent: INT                  -> exp_int
    | "-" INT                  -> exp_neg
    | "(" INT ")"              -> exp_int
    | "(" "-" INT ")"          -> exp_neg
    | "(" INT "/" INT ")"      -> exp_frac
    | "(" "-" INT "/" INT ")"  -> exp_neg_frac

GENERATOR: /w(_[1-9][0-9]*)?/

%import common.INT
%import common.WS
%ignore WS
"""

_PARSER = Lark(GRAMMAR, parser='lalr', lexer='basic')


def _uniformizerExponent(value: OrePoly) -> Fraction:
    """γ when ``value`` is exactly u^γ; raise otherwise"""
    if value.degree == 0:
        series = value.coefficient(0)
        if series.isMonomial() and series.leadingCoefficient().isOne():
            return series.valuation()

    raise InputError('Expected a power of u')


@v_args(inline=True)
class _OreBuilder(Transformer):
    def __init__(self, ground: GroundConfig) -> None:
        super().__init__()
        self.ground = ground

    def _constant(self, series: HahnSeries) -> OrePoly:
        return OrePoly.constant(self.ground, series)

    def tee(self) -> OrePoly:
        return OrePoly.t(self.ground)

    def uniformizer(self) -> OrePoly:
        return self._constant(HahnSeries.monomial(self.ground, 1, 1))

    def generator(self, token: str) -> OrePoly:
        name = str(token)
        degree = self.ground.generatorDegree if name == 'w' else int(name[2:])
        if degree > self.ground.towerLimit:
            raise InputError(
                f'{name} lives in F_{self.ground.p}^{degree},'
                f' beyond the tower limit {self.ground.towerLimit}'
            )

        element = FieldElem.generator(self.ground.p, degree)
        return self._constant(HahnSeries.constant(self.ground, element))

    def integer(self, token: str) -> OrePoly:
        return OrePoly.constant(self.ground, int(token))

    def big_o(self, value: OrePoly) -> OrePoly:
        exponent = _uniformizerExponent(value)
        return self._constant(HahnSeries.bigO(self.ground, exponent))

    def neg(self, value: OrePoly) -> OrePoly:
        return -value

    def add(self, left: OrePoly, right: OrePoly) -> OrePoly:
        return left + right

    def sub(self, left: OrePoly, right: OrePoly) -> OrePoly:
        return left - right

    def mul(self, left: OrePoly, right: OrePoly) -> OrePoly:
        return left * right

    def pow(self, base: OrePoly, exponent: Fraction) -> OrePoly:
        if exponent.denominator == 1 and exponent >= 0:
            return base ** int(exponent)

        if base.degree != 0 or not base.coefficient(0).isMonomial():
            raise InputError(
                'Negative and fractional powers apply to monomials in u only'
            )

        if exponent.denominator == 1:
            return self._constant(base.coefficient(0) ** int(exponent))

        gamma = _uniformizerExponent(base)
        return self._constant(
            HahnSeries.monomial(self.ground, 1, gamma * exponent)
        )

    def exp_int(self, value: str) -> Fraction:
        return Fraction(int(value))

    def exp_neg(self, value: str) -> Fraction:
        return -Fraction(int(value))

    def exp_frac(self, numerator: str, denominator: str) -> Fraction:
        if int(denominator) == 0:
            raise InputError('Zero denominator in an exponent')

        return Fraction(int(numerator), int(denominator))

    def exp_neg_frac(self, numerator: str, denominator: str) -> Fraction:
        return -self.exp_frac(numerator, denominator)


def parseOrePoly(text: str, ground: GroundConfig) -> OrePoly:
    """Parse an Ore polynomial such as ``t^2 + t*u + u^3``"""
    try:
        tree = _PARSER.parse(text)
    except UnexpectedInput as exc:
        raise toParseError(exc, _PARSER, text, 'polynomial') from exc

    try:
        poly = _OreBuilder(ground).transform(tree)
    except VisitError as exc:
        raise exc.orig_exc from exc

    logger.debug('parseOrePoly: %r -> degree %d', text, poly.degree)
    return poly


def parseSeries(text: str, ground: GroundConfig) -> HahnSeries:
    """Parse a Hahn series such as ``u^(1/2) + w*u + O(u^2)``"""
    poly = parseOrePoly(text, ground)
    if poly.degree > 0:
        raise InputError(f'"{text}" mentions t; a series was expected')

    return poly.coefficient(0)


def parseFieldElem(text: str, ground: GroundConfig) -> FieldElem:
    """Parse a constant such as ``w^2 + 1``"""
    series = parseSeries(text, ground)
    if not series.isExact() or any(exp != 0 for exp in series.support()):
        raise InputError(f'"{text}" is not a field constant')

    return series.coefficient(0)
