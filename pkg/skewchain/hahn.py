"""
Generalized power series with finite support: sum_g c_g u^g for rational
exponents g and coefficients in the finite-field tower.

A series may carry a precision ``prec``: it is then only known modulo
O(u^prec), and every stored exponent is below ``prec``. ``prec is None``
means the series is exact.
"""
import logging
from fractions import Fraction
from typing import (
    Any,
    Dict,
    Iterable,
    List,
    Mapping,
    Optional,
    Tuple,
    Union,
)

from skewchain.errors import FieldMismatchError, PreconditionError
from skewchain.field import FieldElem, GroundConfig
from skewchain.values import INFINITY, ChainValue

logger = logging.getLogger(__name__)

Scalar = Union[FieldElem, int]
Term = Tuple[Fraction, FieldElem]


def _chainPrec(prec: Optional[Fraction]) -> ChainValue:
    return INFINITY if prec is None else prec


def _optionalPrec(value: ChainValue) -> Optional[Fraction]:
    return None if value is INFINITY else Fraction(value)


class HahnSeries:
    """A finite-support Hahn series over the tower of ``ground``"""

    __slots__ = ('ground', 'terms', 'prec')

    def __init__(
            self,
            ground: GroundConfig,
            terms: Union[Iterable[Term], Mapping[Fraction, FieldElem]] = (),
            prec: Optional[Union[Fraction, int]] = None,
    ) -> None:
        self.ground = ground
        self.prec: Optional[Fraction] = None if prec is None else Fraction(prec)

        items = terms.items() if isinstance(terms, Mapping) else terms
        collected: Dict[Fraction, FieldElem] = {}
        for exponent, coeff in items:
            exponent = Fraction(exponent)
            if isinstance(coeff, int):
                coeff = FieldElem.fromInt(ground.p, coeff)

            if coeff.p != ground.p:
                raise FieldMismatchError('Coefficient from a different field')

            if exponent in collected:
                collected[exponent] = collected[exponent] + coeff
            else:
                collected[exponent] = coeff

        self.terms: Tuple[Term, ...] = tuple(
            (exponent, coeff)
            for exponent, coeff in sorted(collected.items())
            if not coeff.isZero()
            and (self.prec is None or exponent < self.prec)
        )

    @classmethod
    def zero(cls, ground: GroundConfig) -> 'HahnSeries':
        return cls(ground)

    @classmethod
    def one(cls, ground: GroundConfig) -> 'HahnSeries':
        return cls.constant(ground, 1)

    @classmethod
    def constant(cls, ground: GroundConfig, coeff: Scalar) -> 'HahnSeries':
        return cls(ground, [(Fraction(0), coeff)])

    @classmethod
    def monomial(
            cls,
            ground: GroundConfig,
            coeff: Scalar,
            exponent: Union[Fraction, int],
    ) -> 'HahnSeries':
        """The series coeff * u^exponent"""
        return cls(ground, [(Fraction(exponent), coeff)])

    @classmethod
    def bigO(
            cls, ground: GroundConfig, exponent: Union[Fraction, int]
    ) -> 'HahnSeries':
        """The unknown series O(u^exponent)"""
        return cls(ground, (), prec=exponent)

    def isZero(self) -> bool:
        """True when no term is known (exactly zero, or O(u^prec) alone)"""
        return len(self.terms) == 0

    def isExact(self) -> bool:
        return self.prec is None

    def isMonomial(self) -> bool:
        return len(self.terms) == 1 and self.isExact()

    def valuation(self) -> ChainValue:
        """The least exponent in the support; ``INFINITY`` for zero"""
        if self.isZero():
            return INFINITY

        return self.terms[0][0]

    def valuationLowerBound(self) -> ChainValue:
        """v(x) if a term is known; otherwise the precision (or infinity)"""
        if self.isZero():
            return _chainPrec(self.prec)

        return self.terms[0][0]

    def leadingTerm(self) -> Term:
        if self.isZero():
            raise PreconditionError('The zero series has no leading term')

        return self.terms[0]

    def leadingCoefficient(self) -> FieldElem:
        return self.leadingTerm()[1]

    def coefficient(self, exponent: Union[Fraction, int]) -> FieldElem:
        exponent = Fraction(exponent)
        for exp, coeff in self.terms:
            if exp == exponent:
                return coeff

        return FieldElem.fromInt(self.ground.p, 0)

    def support(self) -> List[Fraction]:
        return [exponent for exponent, _ in self.terms]

    def _checkGround(self, other: 'HahnSeries') -> None:
        if other.ground != self.ground:
            raise FieldMismatchError('Series over different ground fields')

    def _lift(self, other: Union['HahnSeries', Scalar]) -> 'HahnSeries':
        if isinstance(other, HahnSeries):
            self._checkGround(other)
            return other

        return HahnSeries.constant(self.ground, other)

    def __add__(self, other: Union['HahnSeries', Scalar]) -> 'HahnSeries':
        other = self._lift(other)
        prec = min(_chainPrec(self.prec), _chainPrec(other.prec))
        return HahnSeries(
            self.ground, self.terms + other.terms, _optionalPrec(prec)
        )

    __radd__ = __add__

    def __neg__(self) -> 'HahnSeries':
        return HahnSeries(
            self.ground, [(exp, -coeff) for exp, coeff in self.terms], self.prec
        )

    def __sub__(self, other: Union['HahnSeries', Scalar]) -> 'HahnSeries':
        return self + (-self._lift(other))

    def __rsub__(self, other: Scalar) -> 'HahnSeries':
        return self._lift(other) - self

    def __mul__(self, other: Union['HahnSeries', Scalar]) -> 'HahnSeries':
        other = self._lift(other)
        prec = min(
            self.valuationLowerBound() + _chainPrec(other.prec),
            other.valuationLowerBound() + _chainPrec(self.prec),
        )
        products = [
            (e1 + e2, c1 * c2)
            for e1, c1 in self.terms
            for e2, c2 in other.terms
        ]
        return HahnSeries(self.ground, products, _optionalPrec(prec))

    __rmul__ = __mul__

    def scale(self, coeff: Scalar) -> 'HahnSeries':
        """Multiply every coefficient by a field element"""
        return HahnSeries(
            self.ground,
            [(exp, c * coeff) for exp, c in self.terms],
            self.prec,
        )

    def shift(self, exponent: Union[Fraction, int]) -> 'HahnSeries':
        """Multiply by u^exponent"""
        exponent = Fraction(exponent)
        prec = None if self.prec is None else self.prec + exponent
        return HahnSeries(
            self.ground, [(exp + exponent, c) for exp, c in self.terms], prec
        )

    def truncate(self, prec: Union[Fraction, int]) -> 'HahnSeries':
        """Forget everything from u^prec on"""
        newPrec = min(_chainPrec(self.prec), Fraction(prec))
        return HahnSeries(self.ground, self.terms, _optionalPrec(newPrec))

    def frobenius(self, k: int = 1) -> 'HahnSeries':
        """
        Apply phi^k, where phi(c u^g) = c^q u^(q g); k may be negative.
        """
        factor = Fraction(self.ground.q) ** k
        prec = None if self.prec is None else self.prec * factor
        return HahnSeries(
            self.ground,
            [
                (exp * factor, coeff.frobenius(self.ground.e, k))
                for exp, coeff in self.terms
            ],
            prec,
        )

    def inverse(self, prec: Optional[Fraction] = None) -> 'HahnSeries':
        """
        Multiplicative inverse: exact for monomials, and otherwise
        truncated at ``prec`` through the geometric series.
        """
        if self.isZero():
            raise ZeroDivisionError('The zero series is not invertible')

        exponent, coeff = self.leadingTerm()
        leadInverse = HahnSeries.monomial(self.ground, coeff.inverse(), -exponent)
        if self.isMonomial():
            return leadInverse

        if prec is None:
            raise PreconditionError(
                'Only monomials have an exact inverse; pass a precision'
            )

        # self = lead * (1 + h) with v(h) > 0
        h = self * leadInverse - 1
        target = Fraction(prec) + exponent
        if h.isZero():
            return leadInverse.truncate(prec)

        total = HahnSeries.one(self.ground)
        power = HahnSeries.one(self.ground)
        step = h.valuationLowerBound()
        count = 0
        while count * step < target:
            power = (power * (-h)).truncate(target)
            total = total + power
            count += 1

        return (total.truncate(target) * leadInverse).truncate(prec)

    def __pow__(self, exponent: int) -> 'HahnSeries':
        if exponent < 0:
            return self.inverse() ** (-exponent)

        result = HahnSeries.one(self.ground)
        for _ in range(exponent):
            result = result * self

        return result

    def agreesWith(self, other: 'HahnSeries') -> bool:
        """Equality of the known parts, up to the common precision"""
        self._checkGround(other)
        bound = min(_chainPrec(self.prec), _chainPrec(other.prec))
        mine = [_ for _ in self.terms if _[0] < bound]
        theirs = [_ for _ in other.terms if _[0] < bound]
        return mine == theirs

    def __eq__(self, other: Any) -> bool:
        if isinstance(other, int):
            other = HahnSeries.constant(self.ground, other)

        if not isinstance(other, HahnSeries) or other.ground != self.ground:
            return NotImplemented

        return self.agreesWith(other)

    __hash__ = None

    def key(self) -> Tuple[Any, ...]:
        """A hashable identity for exact series"""
        return tuple(
            (exp, coeff.descend().degree, coeff.descend().coords)
            for exp, coeff in self.terms
        ) + (self.prec,)

    def __repr__(self) -> str:
        from skewchain.render import formatSeries

        return f'HahnSeries({formatSeries(self)!r})'
