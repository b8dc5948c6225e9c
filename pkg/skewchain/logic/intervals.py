"""
Finite unions of intervals of Q, together with a flag for the top element
inf. The canonical form is sorted, disjoint and maximally merged, so two
sets are equal exactly when their canonical forms are.
"""
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, List, Optional, Tuple

from skewchain.utils.generic import formatRational
from skewchain.utils.internal_error import InternalError
from skewchain.values import INFINITY, ChainValue

Bound = Optional[Fraction]


@dataclass(frozen=True)
class Interval:
    """None as a bound means unbounded on that side"""

    lower: Bound
    lowerClosed: bool
    upper: Bound
    upperClosed: bool

    def isEmpty(self) -> bool:
        if self.lower is None or self.upper is None:
            return False

        if self.lower == self.upper:
            return not (self.lowerClosed and self.upperClosed)

        return self.lower > self.upper

    def contains(self, value: Fraction) -> bool:
        if self.lower is not None and (
            value < self.lower or (value == self.lower and not self.lowerClosed)
        ):
            return False

        return not (
            self.upper is not None
            and (value > self.upper or (value == self.upper and not self.upperClosed))
        )

    def isPoint(self) -> bool:
        return self.lower is not None and self.lower == self.upper


def _lowerKey(interval: Interval) -> Tuple[int, Fraction, int]:
    if interval.lower is None:
        return (0, Fraction(0), 0)

    return (1, interval.lower, 0 if interval.lowerClosed else 1)


def _touches(left: Interval, right: Interval) -> bool:
    """Whether ``right`` (starting no earlier) overlaps or abuts ``left``"""
    if left.upper is None or right.lower is None:
        return True

    if right.lower < left.upper:
        return True

    if right.lower == left.upper:
        return left.upperClosed or right.lowerClosed

    return False


def _laterUpper(a: Interval, b: Interval) -> Tuple[Bound, bool]:
    if a.upper is None or b.upper is None:
        return None, False

    if a.upper != b.upper:
        return (a.upper, a.upperClosed) if a.upper > b.upper else (b.upper, b.upperClosed)

    return a.upper, a.upperClosed or b.upperClosed


def _canonical(intervals: Iterable[Interval]) -> Tuple[Interval, ...]:
    ordered = sorted((_ for _ in intervals if not _.isEmpty()), key=_lowerKey)
    merged: List[Interval] = []
    for interval in ordered:
        if merged and _touches(merged[-1], interval):
            upper, upperClosed = _laterUpper(merged[-1], interval)
            merged[-1] = Interval(
                merged[-1].lower, merged[-1].lowerClosed, upper, upperClosed
            )
        else:
            merged.append(interval)

    return tuple(merged)


class IntervalSet:
    __slots__ = ('intervals', 'infinity')

    def __init__(
            self, intervals: Iterable[Interval] = (), infinity: bool = False
    ) -> None:
        self.intervals = _canonical(intervals)
        self.infinity = infinity

    @classmethod
    def empty(cls) -> 'IntervalSet':
        return cls()

    @classmethod
    def full(cls) -> 'IntervalSet':
        return cls([Interval(None, False, None, False)], infinity=True)

    @classmethod
    def rationals(cls) -> 'IntervalSet':
        return cls([Interval(None, False, None, False)])

    @classmethod
    def point(cls, value: ChainValue) -> 'IntervalSet':
        if value is INFINITY:
            return cls(infinity=True)

        return cls([Interval(value, True, value, True)])

    @classmethod
    def comparison(cls, op: str, value: ChainValue) -> 'IntervalSet':
        """{x in Q + {inf} : x op value}"""
        if value is INFINITY:
            belowInf = op in ('<', '<=', '!=')
            atInf = op in ('<=', '=', '>=')
            return cls(cls.rationals().intervals if belowInf else (), atInf)

        value = Fraction(value)
        if op == '<':
            return cls([Interval(None, False, value, False)])

        if op == '<=':
            return cls([Interval(None, False, value, True)])

        if op == '=':
            return cls.point(value)

        if op == '!=':
            return cls(
                [
                    Interval(None, False, value, False),
                    Interval(value, False, None, False),
                ],
                infinity=True,
            )

        if op == '>=':
            return cls([Interval(value, True, None, False)], infinity=True)

        if op == '>':
            return cls([Interval(value, False, None, False)], infinity=True)

        raise InternalError(f'Unknown comparison {op!r}')

    @classmethod
    def closedSpan(cls, lower: Bound, upper: Bound) -> 'IntervalSet':
        """[lower, upper] within Q; None bounds are unbounded"""
        return cls([Interval(lower, lower is not None, upper, upper is not None)])

    def isEmpty(self) -> bool:
        return not self.intervals and not self.infinity

    def isFull(self) -> bool:
        return self == IntervalSet.full()

    def contains(self, value: ChainValue) -> bool:
        if value is INFINITY:
            return self.infinity

        return any(_.contains(Fraction(value)) for _ in self.intervals)

    def union(self, other: 'IntervalSet') -> 'IntervalSet':
        return IntervalSet(
            self.intervals + other.intervals, self.infinity or other.infinity
        )

    def intersect(self, other: 'IntervalSet') -> 'IntervalSet':
        pieces = []
        for a in self.intervals:
            for b in other.intervals:
                lower, lowerClosed = _laterLower(a, b)
                upper, upperClosed = _earlierUpper(a, b)
                pieces.append(Interval(lower, lowerClosed, upper, upperClosed))

        return IntervalSet(pieces, self.infinity and other.infinity)

    def complement(self) -> 'IntervalSet':
        gaps = []
        lower: Bound = None
        lowerClosed = False
        started = False
        for interval in self.intervals:
            if interval.lower is not None:
                gaps.append(
                    Interval(
                        lower if started else None,
                        lowerClosed,
                        interval.lower,
                        not interval.lowerClosed,
                    )
                )

            started = True
            if interval.upper is None:
                break

            lower, lowerClosed = interval.upper, not interval.upperClosed
        else:
            gaps.append(Interval(lower if started else None, lowerClosed, None, False))

        return IntervalSet(gaps, not self.infinity)

    def sample(self) -> Optional[ChainValue]:
        """Some member, or None for the empty set"""
        for interval in self.intervals:
            if interval.lower is None:
                return interval.upper - 1 if interval.upper is not None else Fraction(0)

            if interval.lowerClosed:
                return interval.lower

            if interval.upper is None:
                return interval.lower + 1

            return (interval.lower + interval.upper) / 2

        return INFINITY if self.infinity else None

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, IntervalSet):
            return NotImplemented

        return self.intervals == other.intervals and self.infinity == other.infinity

    def __hash__(self) -> int:
        return hash((self.intervals, self.infinity))

    def __repr__(self) -> str:
        parts = [_formatInterval(_) for _ in self.intervals]
        if self.infinity:
            parts.append('{inf}')

        return 'IntervalSet(' + (' u '.join(parts) or 'empty') + ')'


def _laterLower(a: Interval, b: Interval) -> Tuple[Bound, bool]:
    if a.lower is None:
        return b.lower, b.lowerClosed

    if b.lower is None:
        return a.lower, a.lowerClosed

    if a.lower != b.lower:
        return (a.lower, a.lowerClosed) if a.lower > b.lower else (b.lower, b.lowerClosed)

    return a.lower, a.lowerClosed and b.lowerClosed


def _earlierUpper(a: Interval, b: Interval) -> Tuple[Bound, bool]:
    if a.upper is None:
        return b.upper, b.upperClosed

    if b.upper is None:
        return a.upper, a.upperClosed

    if a.upper != b.upper:
        return (a.upper, a.upperClosed) if a.upper < b.upper else (b.upper, b.upperClosed)

    return a.upper, a.upperClosed and b.upperClosed


def _formatInterval(interval: Interval) -> str:
    lower = '(-inf' if interval.lower is None else (
        ('[' if interval.lowerClosed else '(') + formatRational(interval.lower)
    )
    upper = 'inf)' if interval.upper is None else (
        formatRational(interval.upper) + (']' if interval.upperClosed else ')')
    )
    return f'{lower}, {upper}'
