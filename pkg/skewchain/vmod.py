"""
Valued-module computations on M = Hahn series over the finite-field tower,
with R acting through x.r = sum_i phi^i(x) a_i.

Hahn series with finite support do not form an affinely maximal module,
so roots are returned as certified approximations: every solver run
carries a trace of strictly increasing residual valuations and stops on
a precision target or a term budget.
"""
import enum
import functools
import logging
import operator
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from skewchain.chain import (
    chainEval,
    chainInverse,
    potentialJumps,
    subpolyAt,
)
from skewchain.errors import (
    NotPseudoCauchyError,
    PreconditionError,
    TowerLimitError,
    TruncatedInputError,
    ZeroPolynomialError,
    ZeroRightHandSideError,
)
from skewchain.field import AdditiveSolution, FieldElem, additiveSolve, fqBasis
from skewchain.hahn import HahnSeries
from skewchain.ore import OrePoly, oreEval, separableSplit, tropicalize
from skewchain.values import INFINITY, ChainValue

logger = logging.getLogger(__name__)

DEFAULT_PREC = Fraction(2)
DEFAULT_BUDGET = 16


def _requireNonzero(r: OrePoly) -> None:
    if r.isZero():
        raise ZeroPolynomialError('r must be a nonzero Ore polynomial')


def _requireExact(r: OrePoly, *series: HahnSeries) -> None:
    if not r.isExact() or not all(_.isExact() for _ in series):
        raise TruncatedInputError('Inputs must be exact (no O(u^a) terms)')


def _reducedCoefficients(rGamma: OrePoly) -> List[Tuple[int, FieldElem]]:
    """The additive polynomial sum_i lc(a_i) c^(q^i) read off r_gamma"""
    return [(i, a.leadingCoefficient()) for i, a in rGamma.monomials()]


@dataclass(frozen=True)
class RegularityVerdict:
    """
    Whether v(x.r) equals v(x).r.

    ``actual`` is a lower bound when the image of a truncated ``x`` has
    no known term; ``certain`` records that case.
    """

    x: HahnSeries
    r: OrePoly
    actual: ChainValue
    predicted: ChainValue
    certain: bool = True

    @property
    def regular(self) -> bool:
        return self.actual == self.predicted


def regularity(x: HahnSeries, r: OrePoly) -> RegularityVerdict:
    """Compare v(x.r) with v(x).r"""
    _requireNonzero(r)
    if x.isZero() and x.isExact():
        return RegularityVerdict(x=x, r=r, actual=INFINITY, predicted=INFINITY)

    predicted = chainEval(x.valuationLowerBound(), tropicalize(r))
    image = oreEval(x, r)
    if not image.isZero():
        return RegularityVerdict(
            x=x, r=r, actual=image.valuation(), predicted=predicted
        )

    if image.isExact():
        return RegularityVerdict(x=x, r=r, actual=INFINITY, predicted=predicted)

    if predicted < image.prec:
        return RegularityVerdict(
            x=x, r=r, actual=image.prec, predicted=predicted, certain=False
        )

    raise PreconditionError(
        'x is known too coarsely to decide regularity: x.r = '
        f'O(u^{image.prec}) while v(x).r = {predicted}'
    )


def jumpValuesInM(r: OrePoly) -> List[Fraction]:
    """
    Potential jumps gamma carrying nonzero kernel elements of valuation
    gamma, i.e. where the reduced equation of r_gamma has a nonzero root
    in the tower below the limit.
    """
    _requireNonzero(r)
    found = []
    for jump in potentialJumps(tropicalize(r)):
        coeffs = _reducedCoefficients(subpolyAt(r, jump.value))
        try:
            solution = additiveSolve(
                coeffs, r.ground.zero(), r.ground, fullKernel=False
            )
        except TowerLimitError:
            logger.warning(
                'jumpValuesInM: no root at gamma=%s below the tower limit',
                jump.value,
            )
            continue

        if solution.nonzeroRoots:
            found.append(jump.value)

    return found


@dataclass(frozen=True)
class ResidualStep:
    """A regular term c u^gamma with v(term.r - z) > v(z)"""

    term: HahnSeries
    gamma: Fraction
    towerDegree: int


def residualStep(r: OrePoly, z: HahnSeries) -> ResidualStep:
    """
    One step of residual divisibility.

    With delta = v(z) and gamma the chain preimage of delta under r, the
    leading coefficient c of the term solves sum_i lc(a_i) c^(q^i) = lc(z)
    over the monomials of r_gamma; the lexicographically least root is
    taken.
    """
    _requireNonzero(r)
    if z.isZero():
        raise ZeroRightHandSideError('The residual is already zero')

    gamma = chainInverse(z.valuation(), tropicalize(r))
    solution = additiveSolve(
        _reducedCoefficients(subpolyAt(r, gamma)),
        z.leadingCoefficient(),
        r.ground,
    )
    root = solution.roots[0].descend()
    logger.debug(
        'residualStep: v(z)=%s, gamma=%s, tower degree %d',
        z.valuation(),
        gamma,
        solution.towerDegree,
    )
    return ResidualStep(
        term=HahnSeries.monomial(r.ground, root, gamma),
        gamma=gamma,
        towerDegree=solution.towerDegree,
    )


class Termination(enum.Enum):
    PRECISION_REACHED = 'precision reached'
    EXACT = 'exact'
    BUDGET_EXHAUSTED = 'budget exhausted'


@dataclass(frozen=True)
class TraceStep:
    term: HahnSeries
    residualValuation: ChainValue
    towerDegree: int


@dataclass(frozen=True)
class ApproximationTrace:
    """
    Approximants y_0 = 0, y_1, ... and their residual valuations
    v(y_k.r - z), which increase strictly.
    """

    approximants: Tuple[HahnSeries, ...]
    residualValuations: Tuple[ChainValue, ...]
    steps: Tuple[TraceStep, ...]
    reason: Termination

    @property
    def towerDegree(self) -> int:
        return max((step.towerDegree for step in self.steps), default=1)

    @property
    def succeeded(self) -> bool:
        return self.reason is not Termination.BUDGET_EXHAUSTED

    @property
    def result(self) -> HahnSeries:
        return self.approximants[-1]


def solveRegular(
        r: OrePoly,
        z: HahnSeries,
        prec: Fraction = DEFAULT_PREC,
        budget: int = DEFAULT_BUDGET,
) -> Tuple[HahnSeries, ApproximationTrace]:
    """
    Approximate a regular y with y.r = z.

    Parameters
    ----------
    r : OrePoly
        A nonzero exact polynomial
    z : HahnSeries
        A nonzero exact right-hand side
    prec : Fraction
        Success once v(y.r - z) > prec
    budget : int
        Maximal number of terms to add

    Returns
    -------
    Tuple[HahnSeries, ApproximationTrace]
        The last approximant (an exact finite sum) and the trace. The
        trace's ``reason`` is BUDGET_EXHAUSTED when neither the precision
        target nor an exact solution was reached.

    Raises
    ------
    ZeroPolynomialError
        If r = 0
    ZeroRightHandSideError
        If z = 0 (the kernel computation handles this case)
    TruncatedInputError
        If r or z carries an O(u^a) term
    """
    _requireNonzero(r)
    _requireExact(r, z)
    if z.isZero():
        raise ZeroRightHandSideError(
            'z = 0: use the kernel computation for the solutions of y.r = 0'
        )

    y = HahnSeries.zero(r.ground)
    residual = -z
    approximants = [y]
    valuations: List[ChainValue] = [residual.valuation()]
    steps: List[TraceStep] = []

    while True:
        if residual.isZero():
            reason = Termination.EXACT
            break

        if residual.valuation() > prec:
            reason = Termination.PRECISION_REACHED
            break

        if len(steps) >= budget:
            reason = Termination.BUDGET_EXHAUSTED
            break

        step = residualStep(r, -residual)
        y = y + step.term
        residual = residual + oreEval(step.term, r)
        approximants.append(y)
        valuations.append(residual.valuation())
        steps.append(
            TraceStep(
                term=step.term,
                residualValuation=residual.valuation(),
                towerDegree=step.towerDegree,
            )
        )

    logger.info(
        'solveRegular: %d steps, termination: %s', len(steps), reason.value
    )
    trace = ApproximationTrace(
        approximants=tuple(approximants),
        residualValuations=tuple(valuations),
        steps=tuple(steps),
        reason=reason,
    )
    return y, trace


@dataclass(frozen=True)
class MaxValuationReport:
    """The best v(y.r - z) reached over regular approximants y"""

    best: ChainValue
    exact: bool
    trace: ApproximationTrace


def maxValuationSearch(
        r: OrePoly,
        z: HahnSeries,
        prec: Fraction = DEFAULT_PREC,
        budget: int = DEFAULT_BUDGET,
) -> MaxValuationReport:
    """Search for max v(y.r - z); ``exact`` means z itself was reached"""
    _, trace = solveRegular(r, z, prec, budget)
    return MaxValuationReport(
        best=trace.residualValuations[-1],
        exact=trace.reason is Termination.EXACT,
        trace=trace,
    )


@dataclass(frozen=True)
class ProductRegularity:
    """x regular for r and x.r regular for s, against x regular for rs"""

    forR: RegularityVerdict
    imageForS: RegularityVerdict
    forProduct: RegularityVerdict

    @property
    def holds(self) -> bool:
        return (
            self.forR.regular and self.imageForS.regular
        ) == self.forProduct.regular


def regularityForProduct(
        x: HahnSeries, r: OrePoly, s: OrePoly
) -> ProductRegularity:
    return ProductRegularity(
        forR=regularity(x, r),
        imageForS=regularity(oreEval(x, r), s),
        forProduct=regularity(x, r * s),
    )


@dataclass(frozen=True)
class XiPair:
    """
    A root of r_gamma and the root of r matched with it; ``distance`` is
    v(rootOfR - rootOfSubpoly) and exceeds gamma.
    """

    reducedRoot: FieldElem
    rootOfSubpoly: HahnSeries
    rootOfR: HahnSeries
    distance: ChainValue


@dataclass(frozen=True)
class Stratum:
    """Kernel elements of valuation gamma"""

    gamma: Fraction
    subpoly: OrePoly
    reducedRoots: Tuple[FieldElem, ...]
    basis: Tuple[HahnSeries, ...]
    pairs: Tuple[XiPair, ...]
    towerDegree: int

    @property
    def size(self) -> int:
        """Number of roots of the reduced equation, 0 included"""
        return len(self.reducedRoots)


@dataclass(frozen=True)
class KernelStratification:
    r: OrePoly
    strata: Tuple[Stratum, ...]
    separableShift: int

    @property
    def size(self) -> int:
        return functools.reduce(operator.mul, (_.size for _ in self.strata), 1)

    @property
    def expectedSize(self) -> int:
        """q^deg(s) for r = t^k s"""
        return self.r.ground.q ** (self.r.degree - self.separableShift)

    @property
    def productFormulaHolds(self) -> bool:
        return self.size == self.expectedSize


def liftReducedRoot(
        r: OrePoly,
        gamma: Fraction,
        root: FieldElem,
        prec: Fraction = DEFAULT_PREC,
        budget: int = DEFAULT_BUDGET,
) -> HahnSeries:
    """
    Approximate the kernel element of r with leading term root * u^gamma;
    ``root`` must solve the reduced equation of r_gamma. Unless the budget
    runs out, the result differs from an exact kernel element by a series
    of valuation above gamma + prec.
    """
    start = HahnSeries.monomial(r.ground, root, gamma)
    image = oreEval(start, r)
    if image.isZero():
        return start

    target = chainEval(gamma + prec, tropicalize(r))
    correction, trace = solveRegular(r, -image, target, budget)
    if not trace.succeeded:
        logger.warning(
            'liftReducedRoot: budget exhausted at gamma=%s (v(x.r) = %s)',
            gamma,
            trace.residualValuations[-1],
        )

    return start + correction


def _stratum(
        r: OrePoly, gamma: Fraction, prec: Fraction, budget: int
) -> Optional[Stratum]:
    rGamma = subpolyAt(r, gamma)
    solution: AdditiveSolution = additiveSolve(
        _reducedCoefficients(rGamma), r.ground.zero(), r.ground
    )
    roots = tuple(_.descend() for _ in solution.roots)
    nonzero = [_ for _ in roots if not _.isZero()]
    if not nonzero:
        return None

    pairs = []
    for root in nonzero:
        rootOfSubpoly = liftReducedRoot(rGamma, gamma, root, prec, budget)
        rootOfR = liftReducedRoot(r, gamma, root, prec, budget)
        pairs.append(
            XiPair(
                reducedRoot=root,
                rootOfSubpoly=rootOfSubpoly,
                rootOfR=rootOfR,
                distance=(rootOfR - rootOfSubpoly).valuation(),
            )
        )

    basis = tuple(
        pairs[nonzero.index(c)].rootOfR for c in fqBasis(nonzero, r.ground)
    )
    return Stratum(
        gamma=gamma,
        subpoly=rGamma,
        reducedRoots=roots,
        basis=basis,
        pairs=tuple(pairs),
        towerDegree=solution.towerDegree,
    )


def kernelBasis(
        r: OrePoly,
        prec: Fraction = DEFAULT_PREC,
        budget: int = DEFAULT_BUDGET,
) -> KernelStratification:
    """
    Stratify {x : x.r = 0} by valuation.

    For each potential jump gamma the leading coefficients of kernel
    elements of valuation gamma are the nonzero roots of the reduced
    equation of r_gamma; each is lifted to an approximate root of r and
    to a root of r_gamma, and the two are paired.
    The basis of a stratum holds the lifted roots of an F_q-basis of the
    reduced roots.
    """
    _requireNonzero(r)
    _requireExact(r)
    shift, _ = separableSplit(r)
    strata = []
    for jump in potentialJumps(tropicalize(r)):
        stratum = _stratum(r, jump.value, prec, budget)
        if stratum is not None:
            strata.append(stratum)

    logger.info('kernelBasis: %d strata', len(strata))
    return KernelStratification(r=r, strata=tuple(strata), separableShift=shift)


def kernelSize(r: OrePoly) -> int:
    """|{x : x.r = 0}|, from the reduced equations of the strata of s"""
    _requireNonzero(r)
    _, s = separableSplit(r)
    size = 1
    for jump in potentialJumps(tropicalize(s)):
        solution = additiveSolve(
            _reducedCoefficients(subpolyAt(s, jump.value)),
            s.ground.zero(),
            s.ground,
        )
        size *= len(solution.roots)

    return size


@dataclass(frozen=True)
class Decomposition:
    """x = a + epsilon with a near the kernel and epsilon regular"""

    a: HahnSeries
    epsilon: HahnSeries
    rounds: int


def regularDecomposition(
        x: HahnSeries,
        r: OrePoly,
        prec: Fraction = DEFAULT_PREC,
        budget: int = DEFAULT_BUDGET,
) -> Decomposition:
    """
    Split off kernel elements until the remainder is regular.

    While epsilon is irregular its valuation gamma is a jump and its
    leading coefficient solves the reduced equation of r_gamma, so the
    kernel element with that leading term is moved into ``a``. Each round
    pushes v(epsilon) past a jump, so there are at most |jumps| rounds.
    """
    _requireNonzero(r)
    _requireExact(r, x)
    if x.isZero():
        raise PreconditionError('x must be nonzero')

    limit = len(potentialJumps(tropicalize(r)))
    a = HahnSeries.zero(r.ground)
    epsilon = x
    rounds = 0
    while not regularity(epsilon, r).regular:
        if rounds == limit:
            raise PreconditionError(
                'Decomposition did not settle within the jump count;'
                ' raise the precision or the budget'
            )

        gamma, coeff = epsilon.leadingTerm()
        kernelElement = liftReducedRoot(r, gamma, coeff, prec, budget)
        a = a + kernelElement
        epsilon = epsilon - kernelElement
        rounds += 1
        logger.debug('regularDecomposition: round %d at gamma=%s', rounds, gamma)

    return Decomposition(a=a, epsilon=epsilon, rounds=rounds)


class PcKind(enum.Enum):
    AFFINE_EVIDENCE = 'affine-type evidence'
    STABILIZED = 'stabilized'
    INCONCLUSIVE = 'inconclusive'


@dataclass(frozen=True)
class PcVerdict:
    """
    Behaviour of v(a_k.r - b) over a finite window of a pc-sequence.
    This is finite-window evidence, not a proof about the limit.
    """

    kind: PcKind
    valuations: Tuple[ChainValue, ...]
    window: int = field(default=0)

    @property
    def label(self) -> str:
        return f'{self.kind.value} (finite window of {self.window})'


def pcClassify(
        trace: Sequence[HahnSeries], r: OrePoly, b: HahnSeries
) -> PcVerdict:
    """Classify a finite pc-sequence against (r, b)"""
    _requireNonzero(r)
    if len(trace) < 2:
        raise NotPseudoCauchyError('A pc-sequence needs at least two elements')

    gaps = [(y - x).valuation() for x, y in zip(trace, trace[1:])]
    if any(not lower < upper for lower, upper in zip(gaps, gaps[1:])):
        raise NotPseudoCauchyError(
            'v(a_(k+1) - a_k) is not strictly increasing'
        )

    values = tuple((oreEval(a, r) - b).valuation() for a in trace)
    if all(lower < upper for lower, upper in zip(values, values[1:])):
        kind = PcKind.AFFINE_EVIDENCE
    elif values[-1] == values[-2]:
        kind = PcKind.STABILIZED
    else:
        kind = PcKind.INCONCLUSIVE

    return PcVerdict(kind=kind, valuations=values, window=len(trace))


@dataclass(frozen=True)
class BallCheck:
    x: RegularityVerdict
    y: RegularityVerdict

    @property
    def holds(self) -> bool:
        return self.x.regular == self.y.regular


def ballRegularityInvariance(
        x: HahnSeries, y: HahnSeries, r: OrePoly
) -> BallCheck:
    """Regularity is constant on the open ball {y : v(x - y) > v(x)}"""
    if x.isExact() and y.isExact() and x == y:
        verdict = regularity(x, r)
        return BallCheck(x=verdict, y=verdict)

    if not (x - y).valuation() > x.valuation():
        raise PreconditionError('y must satisfy v(x - y) > v(x)')

    return BallCheck(x=regularity(x, r), y=regularity(y, r))
