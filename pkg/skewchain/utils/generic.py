from fractions import Fraction
from typing import Iterable, Optional, Union

from skewchain.errors import InputError
from skewchain.values import INFINITY, ChainValue


def parseRational(text: str) -> Fraction:
    """Parse ``a/b`` or ``a`` (both optionally signed) into a Fraction"""
    stripped = text.strip()
    if stripped == '':
        raise InputError('Empty string is not a rational number')

    try:
        numerator, sep, denominator = stripped.partition('/')
        if sep == '':
            return Fraction(int(numerator))

        if int(denominator) == 0:
            raise InputError(f'Zero denominator in "{text}"')

        return Fraction(int(numerator), int(denominator))
    except ValueError as exc:
        raise InputError(f'"{text}" is not a rational number') from exc


def parseChainValue(text: str) -> ChainValue:
    """Parse a rational number or ``inf``"""
    if text.strip() == 'inf':
        return INFINITY

    return parseRational(text)


def formatRational(value: Union[int, Fraction]) -> str:
    """Format a rational as ``a/b``, or ``a`` when it is an integer"""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)

    return f'{value.numerator}/{value.denominator}'


def formatChainValue(value: ChainValue) -> str:
    """Format a chain value (``inf`` for the top element)"""
    if value is INFINITY:
        return 'inf'

    return formatRational(value)


def formatRationalList(values: Iterable[ChainValue]) -> str:
    """Comma-separated list of chain values"""
    return ', '.join(formatChainValue(_) for _ in values)


def optionalRational(value: Optional[Fraction]) -> Optional[str]:
    """Format for JSON: ``None`` stays ``None``"""
    if value is None:
        return None

    return formatChainValue(value)
