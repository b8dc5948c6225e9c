"""
The twisted polynomial ring R = K[t; phi] over Hahn series, acting on the
right of the module of Hahn series by x.t = phi(x).
"""
import logging
from fractions import Fraction
from typing import TYPE_CHECKING, Any, List, Sequence, Tuple, Union

from skewchain.errors import (
    FieldMismatchError,
    PreconditionError,
    ZeroPolynomialError,
)
from skewchain.field import GroundConfig
from skewchain.hahn import HahnSeries, Scalar

if TYPE_CHECKING:
    from skewchain.chain import TropPoly

logger = logging.getLogger(__name__)


class OrePoly:
    """
    sum_i t^i a_i with Hahn-series coefficients; multiplication follows
    a t = t phi(a). The zero polynomial has no coefficients.
    """

    __slots__ = ('ground', 'coeffs')

    def __init__(
            self, ground: GroundConfig, coeffs: Sequence[HahnSeries] = ()
    ) -> None:
        self.ground = ground
        trimmed = list(coeffs)
        for coeff in trimmed:
            if coeff.ground != ground:
                raise FieldMismatchError('Coefficient over another ground')

        # an unknown O(u^a) coefficient is kept: it is not known to be zero
        while trimmed and trimmed[-1].isZero() and trimmed[-1].isExact():
            trimmed.pop()

        self.coeffs: Tuple[HahnSeries, ...] = tuple(trimmed)

    @classmethod
    def zero(cls, ground: GroundConfig) -> 'OrePoly':
        return cls(ground)

    @classmethod
    def one(cls, ground: GroundConfig) -> 'OrePoly':
        return cls(ground, [HahnSeries.one(ground)])

    @classmethod
    def t(cls, ground: GroundConfig) -> 'OrePoly':
        return cls.monomial(ground, 1, HahnSeries.one(ground))

    @classmethod
    def constant(
            cls, ground: GroundConfig, coeff: Union[HahnSeries, Scalar]
    ) -> 'OrePoly':
        if not isinstance(coeff, HahnSeries):
            coeff = HahnSeries.constant(ground, coeff)

        return cls(ground, [coeff])

    @classmethod
    def monomial(
            cls, ground: GroundConfig, degree: int, coeff: HahnSeries
    ) -> 'OrePoly':
        """The monomial t^degree * coeff"""
        zero = HahnSeries.zero(ground)
        return cls(ground, [zero] * degree + [coeff])

    @property
    def degree(self) -> int:
        """Degree in t; -1 for the zero polynomial"""
        return len(self.coeffs) - 1

    def isZero(self) -> bool:
        return len(self.coeffs) == 0

    def isExact(self) -> bool:
        return all(_.isExact() for _ in self.coeffs)

    def coefficient(self, degree: int) -> HahnSeries:
        if 0 <= degree < len(self.coeffs):
            return self.coeffs[degree]

        return HahnSeries.zero(self.ground)

    def leading(self) -> HahnSeries:
        if self.isZero():
            raise ZeroPolynomialError('The zero polynomial has no leading term')

        return self.coeffs[-1]

    def monomials(self) -> List[Tuple[int, HahnSeries]]:
        """Nonzero monomials t^i a_i as (i, a_i), highest degree first"""
        return [
            (i, a) for i, a in reversed(list(enumerate(self.coeffs)))
            if not a.isZero()
        ]

    def _lift(self, other: Union['OrePoly', HahnSeries, Scalar]) -> 'OrePoly':
        if isinstance(other, OrePoly):
            if other.ground != self.ground:
                raise FieldMismatchError('Polynomials over different grounds')

            return other

        return OrePoly.constant(self.ground, other)

    def __add__(self, other: Union['OrePoly', HahnSeries, Scalar]) -> 'OrePoly':
        other = self._lift(other)
        size = max(len(self.coeffs), len(other.coeffs))
        return OrePoly(
            self.ground,
            [self.coefficient(i) + other.coefficient(i) for i in range(size)],
        )

    __radd__ = __add__

    def __neg__(self) -> 'OrePoly':
        return OrePoly(self.ground, [-_ for _ in self.coeffs])

    def __sub__(self, other: Union['OrePoly', HahnSeries, Scalar]) -> 'OrePoly':
        return self + (-self._lift(other))

    def __mul__(self, other: Union['OrePoly', HahnSeries, Scalar]) -> 'OrePoly':
        other = self._lift(other)
        if self.isZero() or other.isZero():
            return OrePoly.zero(self.ground)

        size = len(self.coeffs) + len(other.coeffs) - 1
        product = [HahnSeries.zero(self.ground) for _ in range(size)]
        for i, a in enumerate(self.coeffs):
            if a.isZero():
                continue

            for j, b in enumerate(other.coeffs):
                if b.isZero():
                    continue

                # t^i a * t^j b = t^(i+j) phi^j(a) b
                product[i + j] = product[i + j] + a.frobenius(j) * b

        return OrePoly(self.ground, product)

    def __rmul__(self, other: Union[HahnSeries, Scalar]) -> 'OrePoly':
        return self._lift(other) * self

    def scale(self, a: Union[HahnSeries, Scalar]) -> 'OrePoly':
        """Right multiplication by a scalar: r * a"""
        return self * self._lift(a)

    def __pow__(self, exponent: int) -> 'OrePoly':
        if exponent < 0:
            raise PreconditionError('Ore polynomials have no inverses')

        result = OrePoly.one(self.ground)
        for _ in range(exponent):
            result = result * self

        return result

    def __eq__(self, other: Any) -> bool:
        if not isinstance(other, OrePoly) or other.ground != self.ground:
            return NotImplemented

        return len(self.coeffs) == len(other.coeffs) and all(
            a == b for a, b in zip(self.coeffs, other.coeffs)
        )

    __hash__ = None

    def __repr__(self) -> str:
        from skewchain.render import formatOrePoly

        return f'OrePoly({formatOrePoly(self)!r})'


def oreEval(x: HahnSeries, r: OrePoly) -> HahnSeries:
    """The module action x.r = sum_i phi^i(x) a_i"""
    result = HahnSeries.zero(x.ground)
    for i, a in enumerate(r.coeffs):
        if a.isZero():
            continue

        result = result + x.frobenius(i) * a

    return result


def oreRightDivide(r: OrePoly, d: OrePoly) -> Tuple[OrePoly, OrePoly]:
    """
    Right Euclidean division: r = quot * d + rem with deg rem < deg d.

    Parameters
    ----------
    r : OrePoly
        The dividend
    d : OrePoly
        The divisor

    Returns
    -------
    Tuple[OrePoly, OrePoly]
        (quot, rem)

    Raises
    ------
    ZeroDivisionError
        If d is the zero polynomial
    PreconditionError
        If the leading coefficient of d is not a monomial (only monomials
        have exact inverses among finite-support series)
    """
    if d.isZero():
        raise ZeroDivisionError('Division by the zero Ore polynomial')

    lead = d.leading()
    if not lead.isMonomial():
        raise PreconditionError(
            'The divisor needs a monomial leading coefficient'
        )

    leadInverse = lead.inverse()
    m = d.degree
    quotient = OrePoly.zero(r.ground)
    remainder = r
    while not remainder.isZero() and remainder.degree >= m:
        n = remainder.degree - m
        # (t^n b)(t^m c) = t^(n+m) phi^m(b) c
        b = (remainder.leading() * leadInverse).frobenius(-m)
        term = OrePoly.monomial(r.ground, n, b)
        quotient = quotient + term
        remainder = remainder - term * d
        logger.debug('oreRightDivide: quotient term of degree %d', n)

    return quotient, remainder


def separableSplit(r: OrePoly) -> Tuple[int, OrePoly]:
    """Write r = t^k s with s(0) != 0 and k maximal"""
    if r.isZero():
        raise ZeroPolynomialError('The zero polynomial has no separable part')

    k = 0
    while r.coeffs[k].isZero():
        k += 1

    return k, OrePoly(r.ground, r.coeffs[k:])


def oreLift(trop: 'TropPoly', ground: GroundConfig) -> OrePoly:
    """An Ore polynomial whose tropicalization is ``trop``: sum t^i u^c_i"""
    if trop.q != ground.q:
        raise FieldMismatchError('The tropical polynomial uses another q')

    poly = OrePoly.zero(ground)
    for degree, value in trop.lines:
        poly = poly + OrePoly.monomial(
            ground, degree, HahnSeries.monomial(ground, 1, value)
        )

    return poly


def tropicalize(r: OrePoly) -> 'TropPoly':
    """The tropical shadow {(i, v(a_i))} of a nonzero polynomial"""
    from skewchain.chain import TropPoly

    if r.isZero():
        raise ZeroPolynomialError('The zero polynomial has no tropicalization')

    return TropPoly(
        {i: Fraction(a.valuation()) for i, a in r.monomials()},
        q=r.ground.q,
    )
