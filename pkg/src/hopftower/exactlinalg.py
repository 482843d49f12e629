"""Exact linear algebra over the rationals.

Just the two routines the rest of the package needs: the rank of a matrix
(for cohomology dimensions of the cobar complexes) and the inverse of a
square change-of-basis matrix.  Everything is plain Gaussian elimination on
lists of ``Fraction`` rows; sizes stay small enough that nothing smarter is
warranted.
"""

from fractions import Fraction

from .errors import DomainError


def matrix_rank(rows):
    """Rank of a matrix given as a list of equal-length Fraction rows."""
    if not rows:
        return 0
    m = [list(map(Fraction, r)) for r in rows]
    ncols = len(m[0])
    rank = 0
    row = 0
    for col in range(ncols):
        pivot = None
        for r in range(row, len(m)):
            if m[r][col]:
                pivot = r
                break
        if pivot is None:
            continue
        m[row], m[pivot] = m[pivot], m[row]
        inv = 1 / m[row][col]
        m[row] = [x * inv for x in m[row]]
        for r in range(len(m)):
            if r != row and m[r][col]:
                f = m[r][col]
                m[r] = [a - f * b for a, b in zip(m[r], m[row])]
        row += 1
        rank += 1
        if row == len(m):
            break
    return rank


def invert_matrix(rows):
    """Inverse of a square rational matrix via Gauss-Jordan on [A | I]."""
    n = len(rows)
    aug = []
    for i, r in enumerate(rows):
        if len(r) != n:
            raise DomainError("matrix is not square")
        aug.append(list(map(Fraction, r)) + [Fraction(int(i == j)) for j in range(n)])
    for col in range(n):
        pivot = None
        for r in range(col, n):
            if aug[r][col]:
                pivot = r
                break
        if pivot is None:
            raise DomainError("matrix is singular")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [x * inv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                f = aug[r][col]
                aug[r] = [a - f * b for a, b in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]
