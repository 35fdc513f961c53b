"""Small exact linear-algebra helpers over int and Fraction.

Matrices are tuples of row tuples; vectors are plain tuples.  Everything here
is exact -- no floats.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd


def as_int_matrix(rows):
    """Coerce nested sequences to a square tuple-of-tuples of int."""
    out = []
    for row in rows:
        r = []
        for x in row:
            if isinstance(x, bool) or not isinstance(x, int):
                raise ValueError("matrix entries must be integers, got %r" % (x,))
            r.append(x)
        out.append(tuple(r))
    m = tuple(out)
    n = len(m)
    if any(len(row) != n for row in m):
        raise ValueError("matrix must be square")
    return m


def identity(n):
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def transpose(m):
    return tuple(zip(*m)) if m else ()


def matmul(a, b):
    cols = transpose(b)
    return tuple(
        tuple(sum(x * y for x, y in zip(row, col)) for col in cols) for row in a
    )


def matvec(m, v):
    return tuple(sum(x * y for x, y in zip(row, v)) for row in m)


def det(m):
    """Determinant by fraction-free-ish Gaussian elimination (exact)."""
    n = len(m)
    a = [[Fraction(x) for x in row] for row in m]
    sign = 1
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col]), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
            sign = -sign
        for r in range(col + 1, n):
            if a[r][col]:
                f = a[r][col] / a[col][col]
                for c in range(col, n):
                    a[r][c] -= f * a[col][c]
    out = Fraction(sign)
    for i in range(n):
        out *= a[i][i]
    return out


def solve_columns(columns, target):
    """Solve ``sum_i x_i * columns[i] = target`` exactly.

    The columns must be linearly independent.  Returns the coefficient list
    (Fractions) or None when the system is inconsistent.
    """
    ncols = len(columns)
    nrows = len(target)
    aug = [
        [Fraction(columns[j][i]) for j in range(ncols)] + [Fraction(target[i])]
        for i in range(nrows)
    ]
    row = 0
    pivots = []
    for col in range(ncols):
        piv = next((r for r in range(row, nrows) if aug[r][col]), None)
        if piv is None:
            raise ValueError("columns are linearly dependent")
        aug[row], aug[piv] = aug[piv], aug[row]
        pv = aug[row][col]
        aug[row] = [x / pv for x in aug[row]]
        for r in range(nrows):
            if r != row and aug[r][col]:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[row])]
        pivots.append(col)
        row += 1
    for r in range(row, nrows):
        if aug[r][ncols]:
            return None
    return [aug[i][ncols] for i in range(ncols)]


def vec_add(a, b):
    return tuple(x + y for x, y in zip(a, b))


def vec_neg(a):
    return tuple(-x for x in a)


def vec_scale(k, a):
    return tuple(k * x for x in a)


def gcd_vec(v):
    g = 0
    for x in v:
        g = gcd(g, abs(x))
    return g


def primitive(v):
    """Divide an integer vector by the gcd of its entries (zero forbidden)."""
    g = gcd_vec(v)
    if g == 0:
        raise ValueError("zero vector has no primitive part")
    return tuple(x // g for x in v)


def is_nonneg(v):
    return all(x >= 0 for x in v)
