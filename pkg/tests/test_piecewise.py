from fractions import Fraction
from typing import Optional

import pytest

from skewchain.errors import PreconditionError
from skewchain.piecewise import LinearPiece, PiecewiseLinear, samplePoint

# min(2x, x): 2x below 0, x above
KINK = PiecewiseLinear([Fraction(0)], [LinearPiece(2, 0), LinearPiece(1, 0)])


@pytest.mark.parametrize(
    'x, expected',
    [
        (Fraction(-1), Fraction(-2)),
        (Fraction(0), Fraction(0)),
        (Fraction(3), Fraction(3)),
        (Fraction(-1, 4), Fraction(-1, 2)),
    ],
)
def testCall(x: Fraction, expected: Fraction) -> None:
    assert KINK(x) == expected


def testAdjacentEqualPiecesAreMerged() -> None:
    merged = PiecewiseLinear([Fraction(1)], [LinearPiece(1, 0), LinearPiece(1, 0)])
    assert merged == PiecewiseLinear.identity()
    assert merged.breakpoints == ()


def testIntervals() -> None:
    assert list(KINK.intervals()) == [
        (None, Fraction(0), LinearPiece(2, 0)),
        (Fraction(0), None, LinearPiece(1, 0)),
    ]


def testComposition() -> None:
    assert KINK.after(KINK) == PiecewiseLinear(
        [Fraction(0)], [LinearPiece(4, 0), LinearPiece(1, 0)]
    )
    shift = PiecewiseLinear.linear(Fraction(1), Fraction(1))
    # KINK(x + 1) has its kink at -1
    composed = KINK.after(shift)
    assert composed.breakpoints == (Fraction(-1),)
    assert composed(Fraction(-3)) == Fraction(-4)
    assert composed(Fraction(2)) == Fraction(3)


def testCompositionWithConstantInner() -> None:
    composed = KINK.after(PiecewiseLinear.constant(Fraction(-5)))
    assert composed == PiecewiseLinear.constant(Fraction(-10))


def testDifference() -> None:
    difference = KINK - PiecewiseLinear.identity()
    assert difference == PiecewiseLinear(
        [Fraction(0)], [LinearPiece(1, 0), LinearPiece(0, 0)]
    )
    assert (KINK - KINK) == PiecewiseLinear.constant(Fraction(0))


def testInverse() -> None:
    inverse = KINK.inverse()
    assert inverse(Fraction(-2)) == Fraction(-1)
    assert inverse(Fraction(5)) == Fraction(5)
    for x in [Fraction(-7, 3), Fraction(0), Fraction(9, 2)]:
        assert inverse(KINK(x)) == x
        assert KINK.inverse().after(KINK)(x) == x


def testInverseNeedsIncreasingMap() -> None:
    assert not PiecewiseLinear.constant(Fraction(1)).isStrictlyIncreasing()
    with pytest.raises(PreconditionError):
        PiecewiseLinear.constant(Fraction(1)).inverse()


@pytest.mark.parametrize(
    'lower, upper, expected',
    [
        (None, None, Fraction(0)),
        (None, Fraction(2), Fraction(1)),
        (Fraction(2), None, Fraction(3)),
        (Fraction(1), Fraction(2), Fraction(3, 2)),
    ],
)
def testSamplePoint(
        lower: Optional[Fraction], upper: Optional[Fraction], expected: Fraction
) -> None:
    assert samplePoint(lower, upper) == expected
