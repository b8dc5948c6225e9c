"""
Values of the chain sort: exact rationals plus a top element.

The top element ``INFINITY`` compares above every rational, absorbs
addition and multiplication by positive numbers, and prints as ``inf``.
"""
from fractions import Fraction
from numbers import Rational
from typing import Any, Union


class Infinity:
    """The top element of the chain; a singleton"""

    _instance: 'Infinity' = None

    def __new__(cls) -> 'Infinity':
        if cls._instance is None:
            cls._instance = super().__new__(cls)

        return cls._instance

    def __eq__(self, other: Any) -> bool:
        return other is self

    def __ne__(self, other: Any) -> bool:
        return other is not self

    def __lt__(self, other: Any) -> bool:
        _checkComparable(other)
        return False

    def __le__(self, other: Any) -> bool:
        _checkComparable(other)
        return other is self

    def __gt__(self, other: Any) -> bool:
        _checkComparable(other)
        return other is not self

    def __ge__(self, other: Any) -> bool:
        _checkComparable(other)
        return True

    def __hash__(self) -> int:
        return hash('skewchain.INFINITY')

    def __add__(self, other: Any) -> 'Infinity':
        _checkComparable(other)
        return self

    __radd__ = __add__

    def __sub__(self, other: Any) -> 'Infinity':
        if other is self:
            raise ArithmeticError('inf - inf is undefined')

        _checkComparable(other)
        return self

    def __mul__(self, other: Any) -> 'Infinity':
        _checkComparable(other)
        if other is not self and other <= 0:
            raise ArithmeticError('inf can only be scaled by positive numbers')

        return self

    __rmul__ = __mul__

    def __truediv__(self, other: Any) -> 'Infinity':
        _checkComparable(other)
        if other is self or other <= 0:
            raise ArithmeticError('inf can only be divided by positive numbers')

        return self

    def __repr__(self) -> str:
        return 'INFINITY'

    def __str__(self) -> str:
        return 'inf'

    def __reduce__(self) -> str:
        return 'INFINITY'


def _checkComparable(other: Any) -> None:
    if other is INFINITY or isinstance(other, Rational):
        return

    raise TypeError(f'Cannot compare the chain top element with {other!r}')


INFINITY = Infinity()

ChainValue = Union[Fraction, Infinity]


def isInfinity(value: Any) -> bool:
    """Check whether ``value`` is the top element"""
    return value is INFINITY


def asChainValue(value: Union[int, Fraction, Infinity]) -> ChainValue:
    """Normalize ints to ``Fraction`` and keep ``INFINITY`` as it is"""
    if value is INFINITY:
        return INFINITY

    return Fraction(value)
