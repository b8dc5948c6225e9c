from fractions import Fraction
from typing import Optional

import pytest

from skewchain.logic.intervals import Interval, IntervalSet
from skewchain.values import INFINITY, ChainValue

HALF = Fraction(1, 2)


def _open(lower, upper) -> Interval:
    return Interval(lower, False, upper, False)


def testComplementOfComparison() -> None:
    below = IntervalSet.comparison('<', Fraction(1))
    assert below.complement() == IntervalSet.comparison('>=', Fraction(1))
    assert below.complement().complement() == below


@pytest.mark.parametrize(
    'op',
    ['<', '<=', '=', '!=', '>=', '>'],
)
def testComplementIsAnInvolution(op: str) -> None:
    for value in [Fraction(-2), HALF, INFINITY]:
        subset = IntervalSet.comparison(op, value)
        assert subset.complement().complement() == subset
        assert subset.union(subset.complement()).isFull()
        assert subset.intersect(subset.complement()).isEmpty()


def testFullAndEmpty() -> None:
    assert IntervalSet.full().complement().isEmpty()
    assert IntervalSet.empty().complement().isFull()
    assert IntervalSet.rationals().complement() == IntervalSet.point(INFINITY)


def testUnionMergesTouchingIntervals() -> None:
    closed = IntervalSet.closedSpan(Fraction(0), Fraction(1))
    assert closed.union(IntervalSet([_open(1, 2)])) == IntervalSet(
        [Interval(Fraction(0), True, Fraction(2), False)]
    )

    gap = IntervalSet([_open(0, 1)]).union(IntervalSet([_open(1, 2)]))
    assert len(gap.intervals) == 2
    assert not gap.contains(Fraction(1))


def testIntersect() -> None:
    left = IntervalSet([Interval(Fraction(0), True, Fraction(2), False)])
    right = IntervalSet.closedSpan(Fraction(1), Fraction(3))
    assert left.intersect(right) == IntervalSet(
        [Interval(Fraction(1), True, Fraction(2), False)]
    )
    assert IntervalSet.closedSpan(Fraction(0), Fraction(1)).intersect(
        IntervalSet([_open(1, 2)])
    ).isEmpty()


@pytest.mark.parametrize(
    'op, value, member, expected',
    [
        ('>', Fraction(1), INFINITY, True),
        ('>', Fraction(1), Fraction(1), False),
        ('>', Fraction(1), Fraction(2), True),
        ('<', Fraction(1), INFINITY, False),
        ('!=', Fraction(1), INFINITY, True),
        ('=', INFINITY, INFINITY, True),
        ('=', INFINITY, Fraction(7), False),
        ('<', INFINITY, Fraction(7), True),
        ('>=', INFINITY, Fraction(7), False),
    ],
)
def testComparison(op: str, value: ChainValue, member: ChainValue, expected: bool) -> None:
    assert IntervalSet.comparison(op, value).contains(member) is expected


def testComparisonsWithInfinity() -> None:
    assert IntervalSet.comparison('!=', INFINITY) == IntervalSet.rationals()
    assert IntervalSet.comparison('<=', INFINITY).isFull()
    assert IntervalSet.comparison('>', INFINITY).isEmpty()
    assert IntervalSet.comparison('=', INFINITY) == IntervalSet.point(INFINITY)


@pytest.mark.parametrize(
    'subset, expected',
    [
        (IntervalSet([_open(0, 1)]), HALF),
        (IntervalSet([_open(None, 3)]), Fraction(2)),
        (IntervalSet([_open(2, None)]), Fraction(3)),
        (IntervalSet.rationals(), Fraction(0)),
        (IntervalSet.closedSpan(Fraction(5), Fraction(6)), Fraction(5)),
        (IntervalSet.point(INFINITY), INFINITY),
        (IntervalSet.empty(), None),
    ],
)
def testSample(subset: IntervalSet, expected: Optional[ChainValue]) -> None:
    assert subset.sample() == expected
    if expected is not None:
        assert subset.contains(expected)


def testEmptyIntervalsAreDropped() -> None:
    assert Interval(Fraction(1), False, Fraction(1), True).isEmpty()
    assert Interval(Fraction(2), True, Fraction(1), True).isEmpty()
    assert IntervalSet([_open(1, 1)]).isEmpty()


def testRepr() -> None:
    assert repr(IntervalSet.comparison('>=', Fraction(1))) == (
        'IntervalSet([1, inf) u {inf})'
    )
    assert repr(IntervalSet.empty()) == 'IntervalSet(empty)'
    assert repr(IntervalSet([_open(None, HALF)])) == 'IntervalSet((-inf, 1/2))'
