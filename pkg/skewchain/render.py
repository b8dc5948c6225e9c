"""Canonical text and JSON forms of the value types."""
from fractions import Fraction
from typing import Any, Dict, List, Optional

from skewchain.chain import EnvelopeProfile, JumpSet, TropPoly
from skewchain.field import FieldElem, GroundConfig
from skewchain.hahn import HahnSeries
from skewchain.ore import OrePoly
from skewchain.utils.generic import formatRational, optionalRational


def formatFieldElem(
        element: FieldElem, ground: Optional[GroundConfig] = None
) -> str:
    """
    Print an element in its smallest subfield F_{p^d}: a residue for
    d = 1, otherwise a polynomial in ``w`` (d = generator degree) or
    ``w_d``.
    """
    element = element.descend()
    if element.degree == 1:
        return str(element.coords[0])

    generatorDegree = ground.generatorDegree if ground is not None else None
    name = 'w' if element.degree == generatorDegree else f'w_{element.degree}'
    terms = []
    for power in range(element.degree - 1, -1, -1):
        coeff = element.coords[power]
        if coeff == 0:
            continue

        if power == 0:
            terms.append(str(coeff))
            continue

        monomial = name if power == 1 else f'{name}^{power}'
        terms.append(monomial if coeff == 1 else f'{coeff}*{monomial}')

    return ' + '.join(terms)


def _uPower(exponent: Fraction) -> str:
    if exponent == 1:
        return 'u'

    if exponent.denominator == 1:
        return f'u^{exponent.numerator}'

    return f'u^({formatRational(exponent)})'


def formatSeries(x: HahnSeries) -> str:
    """E.g. ``u^(1/2) + (w + 1)*u + O(u^2)``; ``0`` for exact zero"""
    terms = []
    for exponent, coeff in x.terms:
        text = formatFieldElem(coeff, x.ground)
        if exponent == 0:
            terms.append(text)
        elif coeff.isOne():
            terms.append(_uPower(exponent))
        elif ' + ' in text:
            terms.append(f'({text})*{_uPower(exponent)}')
        else:
            terms.append(f'{text}*{_uPower(exponent)}')

    if x.prec is not None:
        terms.append(f'O(u^{_bracketed(x.prec)})')

    return ' + '.join(terms) if terms else '0'


def _bracketed(exponent: Fraction) -> str:
    if exponent.denominator == 1 and exponent >= 0:
        return str(exponent.numerator)

    return f'({formatRational(exponent)})'


def formatOrePoly(r: OrePoly) -> str:
    """Descending degrees, e.g. ``t^2 + t*(u + u^2) + u^2``"""
    terms = []
    for degree, coeff in r.monomials():
        text = formatSeries(coeff)
        if degree == 0:
            terms.append(text)
            continue

        tPower = 't' if degree == 1 else f't^{degree}'
        if coeff.isExact() and coeff == 1:
            terms.append(tPower)
        elif len(coeff.terms) == 1 and coeff.isExact() and ' + ' not in text:
            terms.append(f'{tPower}*{text}')
        else:
            terms.append(f'{tPower}*({text})')

    return ' + '.join(terms) if terms else '0'


def formatTropPoly(r: TropPoly) -> str:
    pairs = ','.join(
        f'({degree},{formatRational(value)})' for degree, value in r.lines
    )
    return '{' + pairs + '}'


def formatJumps(jumps: JumpSet) -> str:
    return ', '.join(formatRational(_) for _ in jumps.values)


def formatEnvelope(profile: EnvelopeProfile) -> List[str]:
    """One ``U_i = [a, b]`` line per nonempty piece"""
    lines = []
    for piece in profile:
        lower = '(-inf' if piece.lower is None else f'[{formatRational(piece.lower)}'
        upper = 'inf)' if piece.upper is None else f'{formatRational(piece.upper)}]'
        lines.append(f'U_{piece.degree} = {lower}, {upper}')

    return lines


def fieldElemToJson(element: FieldElem) -> Dict[str, Any]:
    element = element.descend()
    return {'degree': element.degree, 'coords': list(element.coords)}


def seriesToJson(x: HahnSeries) -> Dict[str, Any]:
    return {
        'terms': [
            {
                'exp': formatRational(exponent),
                'coeff': list(coeff.descend().coords),
                'degree': coeff.descend().degree,
            }
            for exponent, coeff in x.terms
        ],
        'prec': None if x.prec is None else formatRational(x.prec),
        'text': formatSeries(x),
    }


def tropPolyToJson(r: TropPoly) -> Dict[str, Any]:
    return {
        'q': r.q,
        'monomials': [
            {'degree': degree, 'value': formatRational(value)}
            for degree, value in r.lines
        ],
    }


def envelopeToJson(profile: EnvelopeProfile) -> List[Dict[str, Any]]:
    return [
        {
            'degree': piece.degree,
            'lower': optionalRational(piece.lower),
            'upper': optionalRational(piece.upper),
        }
        for piece in profile
    ]


def jumpsToJson(jumps: JumpSet) -> List[Dict[str, Any]]:
    return [
        {'value': formatRational(jump.value), 'degrees': list(jump.degrees)}
        for jump in jumps
    ]
