"""
The chain Q + {inf} with gamma.(t^i a) = q^i gamma + v(a), and the action
of polynomials through their tropical shadow: gamma.r = min_i gamma.m_i.
"""
import logging
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import (
    Iterable,
    Iterator,
    List,
    Mapping,
    Optional,
    Sequence,
    Tuple,
    Union,
)

from skewchain.errors import InputError, PreconditionError, ZeroPolynomialError
from skewchain.field import GroundConfig
from skewchain.hahn import HahnSeries
from skewchain.ore import OrePoly, oreLift, tropicalize
from skewchain.piecewise import LinearPiece, PiecewiseLinear
from skewchain.utils.generic import formatChainValue, formatRational
from skewchain.utils.violation import AxiomViolation
from skewchain.values import INFINITY, ChainValue, asChainValue

logger = logging.getLogger(__name__)

# The fixed point of gamma -> gamma.t
THETA = Fraction(0)


class TropPoly:
    """
    The lines gamma -> q^i gamma + c_i of a nonzero linear difference
    polynomial, stored highest degree first.
    """

    __slots__ = ('lines', 'q')

    def __init__(
            self,
            lines: Union[Mapping[int, Fraction], Iterable[Tuple[int, Fraction]]],
            q: int,
    ) -> None:
        pairs = list(lines.items()) if isinstance(lines, Mapping) else list(lines)
        if len(pairs) == 0:
            raise InputError('A tropical polynomial needs at least one monomial')

        degrees = [int(degree) for degree, _ in pairs]
        if len(set(degrees)) != len(degrees):
            raise InputError('Monomial degrees must be distinct')

        if any(degree < 0 for degree in degrees):
            raise InputError('Monomial degrees must be non-negative')

        self.q = q
        self.lines: Tuple[Tuple[int, Fraction], ...] = tuple(
            sorted(
                ((int(degree), Fraction(value)) for degree, value in pairs),
                reverse=True,
            )
        )

    @property
    def degrees(self) -> List[int]:
        return [degree for degree, _ in self.lines]

    @property
    def degree(self) -> int:
        return self.lines[0][0]

    def isMonomial(self) -> bool:
        return len(self.lines) == 1

    def value(self, degree: int) -> Fraction:
        return dict(self.lines)[degree]

    def lineAt(self, degree: int, gamma: ChainValue) -> ChainValue:
        """gamma.(t^degree a) for the monomial of this degree"""
        if gamma is INFINITY:
            return INFINITY

        return self.q**degree * gamma + self.value(degree)

    def evaluate(self, gamma: ChainValue) -> ChainValue:
        return chainEval(gamma, self)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TropPoly):
            return NotImplemented

        return self.q == other.q and self.lines == other.lines

    def __hash__(self) -> int:
        return hash((self.q, self.lines))

    def __repr__(self) -> str:
        body = ','.join(
            f'({degree},{formatRational(value)})' for degree, value in self.lines
        )
        return f'TropPoly({{{body}}}, q={self.q})'


@dataclass(frozen=True)
class EnvelopePiece:
    """U_degree = [lower, upper]; None stands for an infinite end"""

    degree: int
    lower: Optional[Fraction]
    upper: Optional[Fraction]

    def contains(self, gamma: Fraction) -> bool:
        return (self.lower is None or self.lower <= gamma) and (
            self.upper is None or gamma <= self.upper
        )

    def isPoint(self) -> bool:
        return self.lower is not None and self.lower == self.upper


@dataclass(frozen=True)
class EnvelopeProfile:
    """The U_i partition of Q, highest degree (the initial segment) first"""

    poly: TropPoly
    pieces: Tuple[EnvelopePiece, ...]

    @property
    def activeDegrees(self) -> List[int]:
        """J(r): degrees whose U_i is nonempty"""
        return [piece.degree for piece in self.pieces]

    def pieceFor(self, gamma: Fraction) -> EnvelopePiece:
        for piece in self.pieces:
            if piece.contains(gamma):
                return piece

        raise PreconditionError(f'No envelope piece contains {gamma}')

    def __iter__(self) -> Iterator[EnvelopePiece]:
        return iter(self.pieces)

    def __len__(self) -> int:
        return len(self.pieces)


@dataclass(frozen=True)
class Jump:
    """A potential jump value and the degrees whose monomials meet there"""

    value: Fraction
    degrees: Tuple[int, ...]

    @property
    def pair(self) -> Tuple[int, int]:
        return self.degrees[0], self.degrees[-1]


@dataclass(frozen=True)
class JumpSet:
    jumps: Tuple[Jump, ...] = field(default_factory=tuple)

    @property
    def values(self) -> List[Fraction]:
        return [jump.value for jump in self.jumps]

    def __iter__(self) -> Iterator[Jump]:
        return iter(self.jumps)

    def __len__(self) -> int:
        return len(self.jumps)

    def __contains__(self, gamma: object) -> bool:
        return any(jump.value == gamma for jump in self.jumps)


def chainEval(gamma: ChainValue, r: TropPoly) -> ChainValue:
    """gamma.r = min_i (q^i gamma + c_i); inf.r = inf"""
    gamma = asChainValue(gamma)
    if gamma is INFINITY:
        return INFINITY

    return min(r.q**degree * gamma + value for degree, value in r.lines)


def achievingDegrees(gamma: Fraction, r: TropPoly) -> List[int]:
    """Degrees whose monomial attains gamma.r, highest first"""
    target = chainEval(gamma, r)
    return [degree for degree in r.degrees if r.lineAt(degree, gamma) == target]


def meetingPoint(r: TropPoly, high: int, low: int) -> Fraction:
    """The unique gamma where the monomials of degrees high > low agree"""
    return (r.value(low) - r.value(high)) / (r.q**high - r.q**low)


def envelope(r: TropPoly) -> EnvelopeProfile:
    """
    Lower envelope of the lines of ``r``.

    Slopes q^i decrease along ``r.lines``, so the envelope visits the
    lines in that order; a line is dropped once the next one undercuts
    its predecessor strictly before it does.
    """
    hull: List[int] = []
    for degree, _ in r.lines:
        while len(hull) >= 2 and meetingPoint(r, hull[-2], degree) < meetingPoint(
            r, hull[-2], hull[-1]
        ):
            hull.pop()

        hull.append(degree)

    breakpoints = [meetingPoint(r, a, b) for a, b in zip(hull, hull[1:])]
    bounds: List[Optional[Fraction]] = [None, *breakpoints, None]
    pieces = tuple(
        EnvelopePiece(degree=degree, lower=bounds[i], upper=bounds[i + 1])
        for i, degree in enumerate(hull)
    )
    return EnvelopeProfile(poly=r, pieces=pieces)


def potentialJumps(r: TropPoly) -> JumpSet:
    """The envelope breakpoints, each tagged with the degrees meeting there"""
    profile = envelope(r)
    values = sorted({piece.upper for piece in profile.pieces[:-1]})
    return JumpSet(
        jumps=tuple(
            Jump(value=value, degrees=tuple(achievingDegrees(value, r)))
            for value in values
        )
    )


def chainInverse(delta: ChainValue, r: TropPoly) -> ChainValue:
    """The unique gamma with gamma.r = delta"""
    delta = asChainValue(delta)
    if delta is INFINITY:
        return INFINITY

    for piece in envelope(r):
        gamma = (delta - r.value(piece.degree)) / r.q**piece.degree
        if piece.contains(gamma):
            return gamma

    raise PreconditionError(f'No preimage of {delta}')


def asPiecewiseLinear(r: TropPoly) -> PiecewiseLinear:
    """gamma -> gamma.r restricted to Q"""
    pieces = [piece for piece in envelope(r) if not piece.isPoint()]
    return PiecewiseLinear(
        [piece.upper for piece in pieces[:-1]],
        [
            LinearPiece(Fraction(r.q**piece.degree), r.value(piece.degree))
            for piece in pieces
        ],
    )


def monomialInverseMap(degree: int, value: Fraction, q: int) -> PiecewiseLinear:
    """gamma -> (gamma - value) / q^degree, the inverse of .(t^degree a)"""
    scale = Fraction(1, q**degree)
    return PiecewiseLinear.linear(scale, -Fraction(value) * scale)


def subpolyAt(r: OrePoly, gamma: ChainValue) -> OrePoly:
    """r_gamma: the sum of the monomials of r attaining gamma.r"""
    if r.isZero():
        raise ZeroPolynomialError('The zero polynomial has no sub-polynomials')

    if gamma is INFINITY:
        raise PreconditionError('r_gamma is defined for finite gamma only')

    degrees = set(achievingDegrees(Fraction(gamma), tropicalize(r)))
    zero = HahnSeries.zero(r.ground)
    return OrePoly(
        r.ground,
        [a if i in degrees else zero for i, a in enumerate(r.coeffs)],
    )


def hasUniquePotentialJump(r: TropPoly) -> bool:
    """Whether r has exactly one potential jump"""
    return len(potentialJumps(r)) == 1


def valuationRingMember(a: HahnSeries) -> bool:
    """a lies in the valuation ring iff gamma.a >= gamma for all gamma"""
    if a.isZero():
        raise PreconditionError('0 is excluded from the valuation-ring test')

    return a.valuation() >= 0


def normalizeMonomialComparison(
        high: Tuple[int, Fraction],
        low: Tuple[int, Fraction],
        q: int,
) -> Tuple[int, Fraction]:
    """
    Rewrite gamma.(t^j a) <= gamma.(t^i b), j > i, as gamma.(t^(j-i) c) <=
    gamma with v(c) = (v(a) - v(b)) / q^i; returns (j - i, v(c)).
    """
    (j, va), (i, vb) = high, low
    if j <= i:
        raise PreconditionError('The first monomial must have the larger degree')

    return j - i, (Fraction(va) - Fraction(vb)) / q**i


def comparisonCut(k: int, c: Fraction, q: int) -> Fraction:
    """{gamma : q^k gamma + c <= gamma} is (-inf, cut]; k >= 1"""
    return -Fraction(c) / (q**k - 1)


def jumpClosure(
        seeds: Iterable[Fraction],
        maps: Sequence[Tuple[int, Fraction, int]],
        depth: int,
        q: int,
) -> List[Fraction]:
    """
    Close ``seeds`` under gamma -> (gamma.(t^i b)).t^(-j) = (q^i gamma +
    v(b)) / q^j for each (i, v(b), j) in ``maps``, ``depth`` times.
    """
    current = {Fraction(_) for _ in seeds}
    for _ in range(depth):
        images = {
            (q**i * gamma + Fraction(value)) / q**j
            for gamma in current
            for i, value, j in maps
        }
        current |= images

    return sorted(current)


@dataclass
class AxiomReport:
    """Result of a chain-axiom or fullness check"""

    samples: int
    violations: List[AxiomViolation] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return len(self.violations) == 0

    @property
    def firstViolation(self) -> Optional[AxiomViolation]:
        return self.violations[0] if self.violations else None


def _randomRational(rng: random.Random) -> Fraction:
    return Fraction(rng.randint(-60, 60), rng.randint(1, 12))


def _sampleGammas(
        rng: random.Random, samples: int, extra: Iterable[Fraction]
) -> List[Fraction]:
    gammas = [_randomRational(rng) for _ in range(samples)]
    gammas.extend(extra)
    return gammas


def checkChainAxioms(
        r: TropPoly,
        s: TropPoly,
        samples: int,
        rng: Optional[random.Random] = None,
        ground: Optional[GroundConfig] = None,
) -> AxiomReport:
    """
    Check the chain axioms for ``r`` and ``s`` on sampled gamma.

    Composition and the min-inequality use Ore polynomials realizing
    ``r`` and ``s`` (monomial coefficients u^c_i), so the products and
    sums are those of the ring and not of the tropical semiring.

    Parameters
    ----------
    r : TropPoly
        First polynomial
    s : TropPoly
        Second polynomial
    samples : int
        Number of random rationals to test (breakpoints are always added)
    rng : Optional[random.Random]
        Source of randomness; seeded with 0 when omitted
    ground : Optional[GroundConfig]
        Ground used to realize r and s; derived from q when omitted

    Returns
    -------
    AxiomReport
        All violations found, each with a witness
    """
    rng = random.Random(0) if rng is None else rng
    ground = GroundConfig.fromPrimePower(r.q) if ground is None else ground
    report = AxiomReport(samples=samples)
    rOre, sOre = oreLift(r, ground), oreLift(s, ground)
    product = tropicalize(rOre * sOre)
    total = rOre + sOre
    difference = rOre - sOre

    breakpoints = potentialJumps(r).values + potentialJumps(s).values
    gammas = _sampleGammas(rng, samples, breakpoints)

    if chainEval(INFINITY, r) is not INFINITY:
        report.violations.append(AxiomViolation(107))

    for gamma in gammas:
        delta = gamma + Fraction(1, rng.randint(1, 12))
        if not chainEval(gamma, r) < chainEval(delta, r):
            report.violations.append(
                AxiomViolation(101, _witness(gamma=gamma, delta=delta))
            )

        composed = chainEval(chainEval(gamma, r), s)
        if composed != chainEval(gamma, product):
            report.violations.append(AxiomViolation(102, _witness(gamma=gamma)))

        lowest = min(chainEval(gamma, r), chainEval(gamma, s))
        for code, poly in ((103, total), (104, difference)):
            value = INFINITY if poly.isZero() else chainEval(gamma, tropicalize(poly))
            if value < lowest:
                report.violations.append(AxiomViolation(code, _witness(gamma=gamma)))

        report.violations.extend(_separationViolations(r, gamma, delta))

    logger.info(
        'checkChainAxioms: %d gammas, %d violations',
        len(gammas),
        len(report.violations),
    )
    return report


def _separationViolations(
        r: TropPoly, gamma: Fraction, delta: Fraction
) -> List[AxiomViolation]:
    """Axiom (4) below gamma and its dual above gamma, for delta > gamma"""
    below = 2 * gamma - delta
    violations = []
    for high, _ in r.lines:
        for low, _ in r.lines:
            if high <= low:
                continue

            atGamma = (r.lineAt(high, gamma), r.lineAt(low, gamma))
            if atGamma[0] <= atGamma[1] and not (
                r.lineAt(high, below) < r.lineAt(low, below)
            ):
                violations.append(
                    AxiomViolation(105, _witness(gamma=gamma, delta=below))
                )

            if atGamma[0] >= atGamma[1] and not (
                r.lineAt(high, delta) > r.lineAt(low, delta)
            ):
                violations.append(
                    AxiomViolation(106, _witness(gamma=gamma, delta=delta))
                )

    return violations


def fullnessReport(
        r: TropPoly,
        samples: int,
        rng: Optional[random.Random] = None,
) -> AxiomReport:
    """
    Check that the chain is full for the monomials of ``r``: .t is onto,
    every monomial comparison set is a nonempty proper initial segment,
    and gamma.t^n = gamma.a is solvable.
    """
    rng = random.Random(0) if rng is None else rng
    report = AxiomReport(samples=samples)
    t = TropPoly({1: Fraction(0)}, q=r.q)

    for _ in range(samples):
        delta = _randomRational(rng)
        if chainEval(delta / r.q, t) != delta:
            report.violations.append(AxiomViolation(201, _witness(delta=delta)))

    for high in r.lines:
        for low in r.lines:
            if high[0] <= low[0]:
                continue

            k, c = normalizeMonomialComparison(high, low, r.q)
            cut = comparisonCut(k, c, r.q)
            line = TropPoly({k: c}, q=r.q)
            inside = chainEval(cut - 1, line) <= cut - 1
            outside = chainEval(cut + 1, line) <= cut + 1
            if not inside or outside:
                report.violations.append(
                    AxiomViolation(202, _witness(gamma=cut))
                )

    for _ in range(samples):
        n, value = rng.randint(1, 4), _randomRational(rng)
        gamma = value / (r.q**n - 1)
        if r.q**n * gamma != gamma + value:
            report.violations.append(AxiomViolation(203, _witness(gamma=gamma)))

    return report


def _witness(**values: ChainValue) -> str:
    return '(' + ', '.join(
        f'{name}={formatChainValue(value)}' for name, value in values.items()
    ) + ')'
