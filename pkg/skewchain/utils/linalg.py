"""Linear algebra over the prime field F_p, via sympy's DomainMatrix."""
from typing import List, Optional, Sequence, Tuple

from sympy.polys.domains import GF
from sympy.polys.matrices import DomainMatrix


def solveModP(
        matrix: Sequence[Sequence[int]],
        rhs: Sequence[int],
        p: int,
) -> Tuple[Optional[List[int]], List[List[int]]]:
    """
    Solve ``matrix @ x = rhs`` over F_p.

    Parameters
    ----------
    matrix : Sequence[Sequence[int]]
        Coefficient matrix (rows of equal length)
    rhs : Sequence[int]
        The right-hand side, one entry per row
    p : int
        The characteristic

    Returns
    -------
    Tuple[Optional[List[int]], List[List[int]]]
        A particular solution (``None`` if the system is inconsistent)
        and a basis of the null space of ``matrix``. Free variables of
        the particular solution are set to 0.
    """
    numCols = len(matrix[0])
    rows = [[int(_) % p for _ in row] + [int(b) % p] for row, b in zip(matrix, rhs)]
    augmented = DomainMatrix.from_list(rows, GF(p))
    reduced, pivots = augmented.rref()
    entries = [[int(_) % p for _ in row] for row in reduced.to_list()]

    pivotCols = list(pivots)
    nullBasis = _nullspaceFromRref(entries, pivotCols, numCols, p)

    if numCols in pivotCols:
        return None, nullBasis

    particular = [0] * numCols
    for rowIdx, col in enumerate(pivotCols):
        particular[col] = entries[rowIdx][numCols]

    return particular, nullBasis


def _nullspaceFromRref(
        entries: List[List[int]],
        pivotCols: List[int],
        numCols: int,
        p: int,
) -> List[List[int]]:
    pivotSet = {col for col in pivotCols if col < numCols}
    basis: List[List[int]] = []
    for free in range(numCols):
        if free in pivotSet:
            continue

        vector = [0] * numCols
        vector[free] = 1
        for rowIdx, col in enumerate(pivotCols):
            if col >= numCols:
                continue

            vector[col] = (-entries[rowIdx][free]) % p

        basis.append(vector)

    return basis
