"""Exact continuous piecewise-linear maps Q -> Q."""
import bisect
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, List, Optional, Sequence, Tuple

from skewchain.errors import PreconditionError
from skewchain.utils.internal_error import InternalError


@dataclass(frozen=True)
class LinearPiece:
    """x -> slope * x + intercept"""

    slope: Fraction
    intercept: Fraction

    def __call__(self, x: Fraction) -> Fraction:
        return self.slope * x + self.intercept

    def after(self, inner: 'LinearPiece') -> 'LinearPiece':
        """self o inner"""
        return LinearPiece(
            slope=self.slope * inner.slope,
            intercept=self.slope * inner.intercept + self.intercept,
        )

    def preimage(self, y: Fraction) -> Fraction:
        if self.slope == 0:
            raise InternalError('A constant piece has no preimage')

        return (y - self.intercept) / self.slope


Bound = Optional[Fraction]


def samplePoint(lower: Bound, upper: Bound) -> Fraction:
    """A rational strictly inside (lower, upper); None is unbounded"""
    if lower is None and upper is None:
        return Fraction(0)

    if lower is None:
        return upper - 1

    if upper is None:
        return lower + 1

    return (lower + upper) / 2


class PiecewiseLinear:
    """
    A continuous map given by ``breakpoints`` b_1 < ... < b_k and pieces
    f_0, ..., f_k, where f_j applies on [b_j, b_{j+1}] (b_0 = -inf,
    b_{k+1} = +inf). Adjacent equal pieces are merged.
    """

    __slots__ = ('breakpoints', 'pieces')

    def __init__(
            self,
            breakpoints: Sequence[Fraction],
            pieces: Sequence[LinearPiece],
    ) -> None:
        if len(pieces) != len(breakpoints) + 1:
            raise InternalError('Need exactly one more piece than breakpoints')

        mergedBreaks: List[Fraction] = []
        mergedPieces: List[LinearPiece] = [pieces[0]]
        for breakpoint, piece in zip(breakpoints, pieces[1:]):
            if piece == mergedPieces[-1]:
                continue

            mergedBreaks.append(Fraction(breakpoint))
            mergedPieces.append(piece)

        self.breakpoints: Tuple[Fraction, ...] = tuple(mergedBreaks)
        self.pieces: Tuple[LinearPiece, ...] = tuple(mergedPieces)

    @classmethod
    def linear(cls, slope: Fraction, intercept: Fraction) -> 'PiecewiseLinear':
        return cls([], [LinearPiece(Fraction(slope), Fraction(intercept))])

    @classmethod
    def identity(cls) -> 'PiecewiseLinear':
        return cls.linear(Fraction(1), Fraction(0))

    @classmethod
    def constant(cls, value: Fraction) -> 'PiecewiseLinear':
        return cls.linear(Fraction(0), Fraction(value))

    def intervals(self) -> Iterator[Tuple[Bound, Bound, LinearPiece]]:
        """Yield (lower, upper, piece); None marks an infinite end"""
        bounds: List[Bound] = [None, *self.breakpoints, None]
        for index, piece in enumerate(self.pieces):
            yield bounds[index], bounds[index + 1], piece

    def pieceAt(self, x: Fraction) -> LinearPiece:
        return self.pieces[bisect.bisect_left(self.breakpoints, x)]

    def __call__(self, x: Fraction) -> Fraction:
        return self.pieceAt(Fraction(x))(Fraction(x))

    def isStrictlyIncreasing(self) -> bool:
        return all(piece.slope > 0 for piece in self.pieces)

    def after(self, inner: 'PiecewiseLinear') -> 'PiecewiseLinear':
        """The composition self o inner (apply ``inner`` first)"""
        cuts = set(inner.breakpoints)
        for lower, upper, piece in inner.intervals():
            if piece.slope == 0:
                continue

            for target in self.breakpoints:
                x = piece.preimage(target)
                if (lower is None or x > lower) and (upper is None or x < upper):
                    cuts.add(x)

        breakpoints = sorted(cuts)
        bounds: List[Bound] = [None, *breakpoints, None]
        pieces = []
        for index in range(len(breakpoints) + 1):
            sample = samplePoint(bounds[index], bounds[index + 1])
            innerPiece = inner.pieceAt(sample)
            outerPiece = self.pieceAt(innerPiece(sample))
            pieces.append(outerPiece.after(innerPiece))

        return PiecewiseLinear(breakpoints, pieces)

    def __sub__(self, other: 'PiecewiseLinear') -> 'PiecewiseLinear':
        breakpoints = sorted(set(self.breakpoints) | set(other.breakpoints))
        bounds: List[Bound] = [None, *breakpoints, None]
        pieces = []
        for index in range(len(breakpoints) + 1):
            sample = samplePoint(bounds[index], bounds[index + 1])
            mine, theirs = self.pieceAt(sample), other.pieceAt(sample)
            pieces.append(
                LinearPiece(
                    mine.slope - theirs.slope,
                    mine.intercept - theirs.intercept,
                )
            )

        return PiecewiseLinear(breakpoints, pieces)

    def inverse(self) -> 'PiecewiseLinear':
        """Inverse of a strictly increasing map"""
        if not self.isStrictlyIncreasing():
            raise PreconditionError('Only strictly increasing maps are inverted')

        breakpoints = [self(b) for b in self.breakpoints]
        pieces = [
            LinearPiece(1 / piece.slope, -piece.intercept / piece.slope)
            for piece in self.pieces
        ]
        return PiecewiseLinear(breakpoints, pieces)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PiecewiseLinear):
            return NotImplemented

        return self.breakpoints == other.breakpoints and self.pieces == other.pieces

    def __hash__(self) -> int:
        return hash((self.breakpoints, self.pieces))

    def __repr__(self) -> str:
        return f'PiecewiseLinear({list(self.breakpoints)}, {list(self.pieces)})'
