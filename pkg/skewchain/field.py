"""
Finite fields F_{p^n} as a compatible tower, and additive equations over it.

Every F_{p^n} is F_p[x]/(f_n) where f_n is a pseudo-Conway polynomial:
the lexicographically least monic primitive polynomial of degree n whose
root w_n satisfies f_d(w_n^((p^n - 1)/(p^d - 1))) = 0 for each proper
divisor d of n. The map w_d -> w_n^((p^n - 1)/(p^d - 1)) is then an
embedding F_{p^d} -> F_{p^n}, and these embeddings commute.
"""
import functools
import itertools
import logging
from dataclasses import dataclass
from typing import Any, List, Sequence, Tuple, Union

from sympy import divisors, factorint, ilcm, isprime
from sympy.polys.domains import ZZ
from sympy.polys.galoistools import (
    gf_add,
    gf_gcdex,
    gf_irreducible_p,
    gf_mul,
    gf_pow_mod,
    gf_rem,
    gf_strip,
)

from skewchain.errors import (
    ConfigError,
    FieldMismatchError,
    PreconditionError,
    TowerLimitError,
)
from skewchain.utils.internal_error import InternalError
from skewchain.utils.linalg import solveModP

logger = logging.getLogger(__name__)

DEFAULT_TOWER_LIMIT = 12


@dataclass(frozen=True)
class GroundConfig:
    """
    The characteristic p and the Frobenius exponent e (q = p^e).

    ``generatorDegree`` is the degree over F_p of the field whose generator
    is written ``w`` in text (0 means max(e, 2)). ``towerLimit`` bounds the
    F_p-degree of the extensions searched by ``additiveSolve``.
    """

    p: int = 2
    e: int = 1
    generatorDegree: int = 0
    towerLimit: int = DEFAULT_TOWER_LIMIT

    def __post_init__(self) -> None:
        if not isprime(self.p):
            raise ConfigError(f'p = {self.p} is not a prime number')

        if self.e < 1:
            raise ConfigError(f'e = {self.e} must be a positive integer')

        if self.generatorDegree < 0:
            raise ConfigError('The generator degree cannot be negative')

        if self.generatorDegree == 0:
            object.__setattr__(self, 'generatorDegree', max(self.e, 2))

        if self.towerLimit < self.e:
            raise ConfigError(
                f'The tower limit ({self.towerLimit}) must be at least e = {self.e}'
            )

    @property
    def q(self) -> int:
        """The order of the fixed field of the Frobenius twist"""
        return self.p**self.e

    @classmethod
    def fromPrimePower(cls, q: int, **kwargs: Any) -> 'GroundConfig':
        """Build a config from q = p^e"""
        if q < 2:
            raise ConfigError(f'q = {q} is not a prime power')

        factors = factorint(q)
        if len(factors) != 1:
            raise ConfigError(f'q = {q} is not a prime power')

        ((p, e),) = factors.items()
        return cls(p=int(p), e=int(e), **kwargs)

    def one(self) -> 'FieldElem':
        return FieldElem.fromInt(self.p, 1)

    def zero(self) -> 'FieldElem':
        return FieldElem.fromInt(self.p, 0)


def _toInts(poly: Sequence[Any]) -> List[int]:
    return [int(_) for _ in poly]


@functools.lru_cache(maxsize=None)
def towerModulus(p: int, n: int) -> Tuple[int, ...]:
    """
    The defining polynomial of F_{p^n} (monic, highest degree first).

    Parameters
    ----------
    p : int
        The characteristic
    n : int
        The degree over F_p

    Returns
    -------
    Tuple[int, ...]
        Coefficients of f_n, highest degree first

    Raises
    ------
    InternalError
        If no compatible primitive polynomial exists (cannot happen)
    """
    for tail in itertools.product(range(p), repeat=n):
        if tail[-1] == 0:
            continue

        candidate = [1] + list(tail)
        if not gf_irreducible_p(candidate, p, ZZ):
            continue

        if not _isPrimitive(candidate, p, n):
            continue

        if all(
            _isCompatible(candidate, p, n, d) for d in divisors(n) if d < n
        ):
            logger.debug('Modulus of F_%d^%d: %s', p, n, candidate)
            return tuple(candidate)

    raise InternalError(f'No pseudo-Conway polynomial for p={p}, n={n}')


def _isPrimitive(modulus: List[int], p: int, n: int) -> bool:
    order = p**n - 1
    for prime in factorint(order):
        power = gf_pow_mod([1, 0], order // prime, modulus, p, ZZ)
        if _toInts(power) == [1]:
            return False

    return True


def _isCompatible(modulus: List[int], p: int, n: int, d: int) -> bool:
    smaller = towerModulus(p, d)
    image = gf_pow_mod([1, 0], (p**n - 1) // (p**d - 1), modulus, p, ZZ)
    value: List[int] = []
    for coeff in smaller:
        value = gf_rem(gf_mul(value, image, p, ZZ), modulus, p, ZZ)
        value = gf_add(value, [coeff], p, ZZ)

    return gf_strip(value) == []


@functools.lru_cache(maxsize=None)
def _generatorImage(p: int, d: int, n: int) -> Tuple[int, ...]:
    """Coordinates (low first) of the image of w_d inside F_{p^n}"""
    modulus = list(towerModulus(p, n))
    image = gf_pow_mod([1, 0], (p**n - 1) // (p**d - 1), modulus, p, ZZ)
    return _coordsFromGf(image, n)


def _coordsFromGf(poly: Sequence[Any], n: int) -> Tuple[int, ...]:
    lowFirst = [int(_) for _ in reversed(gf_strip(list(poly)))]
    return tuple(lowFirst + [0] * (n - len(lowFirst)))


class FieldElem:
    """
    An element of F_{p^degree}, stored as F_p coordinates (low first) in
    the power basis of the tower generator w_degree.
    """

    __slots__ = ('p', 'degree', 'coords')

    def __init__(self, p: int, degree: int, coords: Sequence[int]) -> None:
        if len(coords) > degree:
            raise InternalError('More coordinates than the field degree')

        reduced = [int(c) % p for c in coords]
        self.p = p
        self.degree = degree
        self.coords: Tuple[int, ...] = tuple(
            reduced + [0] * (degree - len(reduced))
        )

    @classmethod
    def fromInt(cls, p: int, value: int) -> 'FieldElem':
        return cls(p, 1, [value])

    @classmethod
    def generator(cls, p: int, degree: int) -> 'FieldElem':
        """The tower generator w_degree (for degree 1, a primitive root)"""
        if degree == 1:
            return cls(p, 1, [-towerModulus(p, 1)[1]])

        return cls(p, degree, [0, 1])

    def _gf(self) -> List[int]:
        return gf_strip(list(reversed(self.coords)))

    def _modulus(self) -> List[int]:
        return list(towerModulus(self.p, self.degree))

    def isZero(self) -> bool:
        return not any(self.coords)

    def isOne(self) -> bool:
        return self.coords[0] == 1 and not any(self.coords[1:])

    def __bool__(self) -> bool:
        return not self.isZero()

    def embed(self, n: int) -> 'FieldElem':
        """The image of this element in F_{p^n}; ``degree`` must divide n"""
        if n == self.degree:
            return self

        if n % self.degree != 0:
            raise InternalError(
                f'Cannot embed F_{self.p}^{self.degree} into F_{self.p}^{n}'
            )

        if self.degree == 1 or self.isZero():
            return FieldElem(self.p, n, [self.coords[0]])

        image = gf_strip(list(reversed(_generatorImage(self.p, self.degree, n))))
        modulus = list(towerModulus(self.p, n))
        value: List[int] = []
        for coeff in reversed(self.coords):
            value = gf_rem(gf_mul(value, image, self.p, ZZ), modulus, self.p, ZZ)
            value = gf_add(value, [coeff], self.p, ZZ)

        return FieldElem(self.p, n, _coordsFromGf(value, n))

    def _coerce(
            self, other: Union['FieldElem', int]
    ) -> Tuple['FieldElem', 'FieldElem']:
        if isinstance(other, int):
            other = FieldElem.fromInt(self.p, other)

        if not isinstance(other, FieldElem):
            raise TypeError(f'Cannot combine a field element with {other!r}')

        if other.p != self.p:
            raise FieldMismatchError(
                f'Characteristics differ: {self.p} and {other.p}'
            )

        if other.degree == self.degree:
            return self, other

        common = int(ilcm(self.degree, other.degree))
        return self.embed(common), other.embed(common)

    def __add__(self, other: Union['FieldElem', int]) -> 'FieldElem':
        a, b = self._coerce(other)
        return FieldElem(
            a.p, a.degree, [x + y for x, y in zip(a.coords, b.coords)]
        )

    __radd__ = __add__

    def __sub__(self, other: Union['FieldElem', int]) -> 'FieldElem':
        a, b = self._coerce(other)
        return FieldElem(
            a.p, a.degree, [x - y for x, y in zip(a.coords, b.coords)]
        )

    def __rsub__(self, other: int) -> 'FieldElem':
        return FieldElem.fromInt(self.p, other) - self

    def __neg__(self) -> 'FieldElem':
        return FieldElem(self.p, self.degree, [-x for x in self.coords])

    def __mul__(self, other: Union['FieldElem', int]) -> 'FieldElem':
        a, b = self._coerce(other)
        if a.degree == 1:
            return FieldElem.fromInt(a.p, a.coords[0] * b.coords[0])

        product = gf_rem(
            gf_mul(a._gf(), b._gf(), a.p, ZZ), a._modulus(), a.p, ZZ
        )
        return FieldElem(a.p, a.degree, _coordsFromGf(product, a.degree))

    __rmul__ = __mul__

    def inverse(self) -> 'FieldElem':
        """Multiplicative inverse; raises ZeroDivisionError for 0"""
        if self.isZero():
            raise ZeroDivisionError('0 has no inverse in a field')

        if self.degree == 1:
            return FieldElem.fromInt(self.p, pow(self.coords[0], -1, self.p))

        s, _, h = gf_gcdex(self._gf(), self._modulus(), self.p, ZZ)
        if _toInts(h) != [1]:
            raise InternalError('Tower modulus is not irreducible')

        return FieldElem(self.p, self.degree, _coordsFromGf(s, self.degree))

    def __truediv__(self, other: Union['FieldElem', int]) -> 'FieldElem':
        a, b = self._coerce(other)
        return a * b.inverse()

    def __pow__(self, exponent: int) -> 'FieldElem':
        if exponent < 0:
            return self.inverse() ** (-exponent)

        if self.degree == 1:
            return FieldElem.fromInt(
                self.p, pow(self.coords[0], exponent, self.p)
            )

        power = gf_pow_mod(self._gf(), exponent, self._modulus(), self.p, ZZ)
        return FieldElem(self.p, self.degree, _coordsFromGf(power, self.degree))

    def frobenius(self, e: int, k: int = 1) -> 'FieldElem':
        """
        Apply x -> x^(p^e) k times; negative k applies the inverse map.
        """
        exponent = (e * k) % self.degree
        if exponent == 0 or self.degree == 1:
            return self

        return self ** (self.p**exponent)

    def minimalDegree(self) -> int:
        """Degree of the smallest subfield of the tower containing this"""
        return _minimalDegree(self.p, self.degree, self.coords)

    def descend(self) -> 'FieldElem':
        """The same element, written in its smallest subfield"""
        return FieldElem(
            self.p, *_descend(self.p, self.degree, self.coords)
        )

    def __eq__(self, other: Any) -> bool:
        if isinstance(other, int):
            other = FieldElem.fromInt(self.p, other)

        if not isinstance(other, FieldElem) or other.p != self.p:
            return NotImplemented

        a, b = self._coerce(other)
        return a.coords == b.coords

    def __hash__(self) -> int:
        degree, coords = _descend(self.p, self.degree, self.coords)
        return hash((self.p, degree, coords))

    def __repr__(self) -> str:
        return f'FieldElem(p={self.p}, degree={self.degree}, coords={self.coords})'


@functools.lru_cache(maxsize=4096)
def _minimalDegree(p: int, n: int, coords: Tuple[int, ...]) -> int:
    element = FieldElem(p, n, coords)
    if n == 1 or not any(coords[1:]):
        return 1

    for d in divisors(n):
        if element ** (p**d) == element:
            return d

    raise InternalError('x^(p^n) != x')


@functools.lru_cache(maxsize=4096)
def _descend(
        p: int, n: int, coords: Tuple[int, ...]
) -> Tuple[int, Tuple[int, ...]]:
    d = _minimalDegree(p, n, coords)
    if d == n:
        return n, coords

    if d == 1:
        return 1, (coords[0],)

    generatorImage = FieldElem(p, n, _generatorImage(p, d, n))
    columns = [(generatorImage**i).coords for i in range(d)]
    matrix = [[column[row] for column in columns] for row in range(n)]
    solution, _ = solveModP(matrix, list(coords), p)
    if solution is None:
        raise InternalError('Element is not in the subfield it generates')

    return d, tuple(solution)


@dataclass(frozen=True)
class AdditiveSolution:
    """All solutions of an additive equation in F_{p^degree}"""

    roots: Tuple[FieldElem, ...]
    degree: int
    e: int

    @property
    def towerDegree(self) -> int:
        """Degree over F_q of the field holding the roots"""
        return self.degree // self.e

    @property
    def nonzeroRoots(self) -> Tuple[FieldElem, ...]:
        return tuple(_ for _ in self.roots if not _.isZero())


def additiveSolve(
        coeffs: Sequence[Tuple[int, FieldElem]],
        target: FieldElem,
        ground: GroundConfig,
        fullKernel: bool = True,
) -> AdditiveSolution:
    """
    Solve sum_i a_i c^(q^i) = target for c over the finite-field tower.

    The map c -> sum_i a_i c^(q^i) is F_p-linear, so each candidate field
    F_{p^N} (N a multiple of e and of the degrees of the inputs) is
    handled by linear algebra over F_p.

    Parameters
    ----------
    coeffs : Sequence[Tuple[int, FieldElem]]
        Pairs (i, a_i)
    target : FieldElem
        The right-hand side
    ground : GroundConfig
        Supplies q and the tower limit
    fullKernel : bool
        For target 0: if True, extend the field until all q^(imax - imin)
        roots are present; if False, stop at the first field with a
        nonzero root.

    Returns
    -------
    AdditiveSolution
        All solutions in the smallest field searched that qualifies,
        sorted by their F_p coordinates

    Raises
    ------
    PreconditionError
        If every coefficient is zero
    TowerLimitError
        If no qualifying field of degree <= ground.towerLimit exists
    """
    terms = [(i, a) for i, a in coeffs if not a.isZero()]
    if len(terms) == 0:
        raise PreconditionError('The additive polynomial has no nonzero term')

    p, e, q = ground.p, ground.e, ground.q
    degrees = [e, target.minimalDegree()] + [a.minimalDegree() for _, a in terms]
    base = int(functools.reduce(ilcm, degrees))
    homogeneous = target.isZero()
    qDegrees = [i for i, _ in terms]
    kernelDim = e * (max(qDegrees) - min(qDegrees))

    if homogeneous and kernelDim == 0:
        return AdditiveSolution(roots=(target.embed(base),), degree=base, e=e)

    for multiple in itertools.count(1):
        n = base * multiple
        if multiple > 1 and n > ground.towerLimit:
            break

        embedded = [(i, a.embed(n)) for i, a in terms]
        columns = []
        for j in range(n):
            unit = FieldElem(p, n, [0] * j + [1])
            image = FieldElem(p, n, [])
            for i, a in embedded:
                image = image + a * unit ** (q**i)

            columns.append(image.coords)

        matrix = [[column[row] for column in columns] for row in range(n)]
        particular, nullBasis = solveModP(matrix, list(target.embed(n).coords), p)

        if homogeneous:
            qualifies = len(nullBasis) == kernelDim if fullKernel else len(nullBasis) > 0
        else:
            qualifies = particular is not None

        logger.debug(
            'additiveSolve: degree %d, kernel dimension %d, qualifies=%s',
            n,
            len(nullBasis),
            qualifies,
        )
        if not qualifies:
            continue

        start = particular if particular is not None else [0] * n
        roots = []
        for scalars in itertools.product(range(p), repeat=len(nullBasis)):
            vector = list(start)
            for scalar, basisVector in zip(scalars, nullBasis):
                vector = [x + scalar * y for x, y in zip(vector, basisVector)]

            roots.append(FieldElem(p, n, vector))

        roots.sort(key=lambda _: _.coords)
        return AdditiveSolution(roots=tuple(roots), degree=n, e=e)

    raise TowerLimitError(
        f'No solution in F_{p}^N for N <= {ground.towerLimit}'
        ' (raise the tower limit to search further)'
    )


def fqSpanContains(
        basis: Sequence[FieldElem], element: FieldElem, ground: GroundConfig
) -> bool:
    """Whether ``element`` is an F_q-combination of ``basis``"""
    return any(_ == element for _ in fqSpan(basis, ground))


def fqSpan(basis: Sequence[FieldElem], ground: GroundConfig) -> List[FieldElem]:
    """All F_q-combinations of ``basis``"""
    scalars = fieldElements(ground.p, ground.e)
    span = []
    for combination in itertools.product(scalars, repeat=len(basis)):
        total = FieldElem.fromInt(ground.p, 0)
        for scalar, vector in zip(combination, basis):
            total = total + scalar * vector

        span.append(total)

    return span


def fqBasis(
        elements: Sequence[FieldElem], ground: GroundConfig
) -> List[FieldElem]:
    """Greedy F_q-basis of the span of ``elements``, in input order"""
    basis: List[FieldElem] = []
    for element in elements:
        if element.isZero() or fqSpanContains(basis, element, ground):
            continue

        basis.append(element)

    return basis


def fieldElements(p: int, degree: int) -> List[FieldElem]:
    """All elements of F_{p^degree}, in coordinate order"""
    return [
        FieldElem(p, degree, list(coords))
        for coords in itertools.product(range(p), repeat=degree)
    ]
