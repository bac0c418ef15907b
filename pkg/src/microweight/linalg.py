"""Exact rational linear algebra over ``fractions.Fraction``.

Vectors are tuples of Fractions, matrices are sequences of row vectors.
All dimensions in this package stay below ~10, so plain Gaussian
elimination is entirely adequate; there is deliberately no floating
point anywhere.
"""

from fractions import Fraction

ZERO = Fraction(0)
ONE = Fraction(1)


def vec(entries):
    """Coerce an iterable of numbers into a tuple of Fractions."""
    return tuple(Fraction(e) for e in entries)


def zero_vec(n):
    return (ZERO,) * n


def add(u, v):
    return tuple(a + b for a, b in zip(u, v, strict=True))


def sub(u, v):
    return tuple(a - b for a, b in zip(u, v, strict=True))


def neg(u):
    return tuple(-a for a in u)


def scale(c, u):
    c = Fraction(c)
    return tuple(c * a for a in u)


def dot(u, v):
    return sum((a * b for a, b in zip(u, v, strict=True)), ZERO)


def mat_vec(rows, v):
    return tuple(dot(r, v) for r in rows)


def _eliminate(rows):
    """Row-reduce a mutable matrix in place; returns the pivot columns."""
    pivots = []
    r = 0
    ncols = len(rows[0]) if rows else 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return pivots


def rank(vectors):
    """Rank over Q of the span of the given vectors."""
    rows = [list(map(Fraction, v)) for v in vectors if any(x != 0 for x in v)]
    if not rows:
        return 0
    return len(_eliminate(rows))


def solve_in_basis(basis, target):
    """Express ``target`` as a rational combination of independent ``basis``
    vectors.

    Returns the coefficient tuple, or None when target is outside the span.
    """
    basis = list(basis)
    k = len(basis)
    n = len(target)
    # augmented system: columns are the basis vectors, rhs is the target
    rows = [[Fraction(b[i]) for b in basis] + [Fraction(target[i])] for i in range(n)]
    pivots = _eliminate(rows)
    coeffs = [ZERO] * k
    for r, c in enumerate(pivots):
        if c == k:
            return None  # pivot in the rhs column: inconsistent
        coeffs[c] = rows[r][k]
    # consistency of the remaining rows
    for r in range(len(pivots), n):
        if rows[r][k] != 0:
            return None
    return tuple(coeffs)


def invert(rows):
    """Inverse of a square rational matrix given as rows."""
    n = len(rows)
    aug = [[Fraction(x) for x in row] + [ONE if i == j else ZERO for j in range(n)]
           for i, row in enumerate(rows)]
    pivots = _eliminate(aug)
    if pivots != list(range(n)):
        raise ValueError("matrix is singular")
    return tuple(tuple(aug[i][n:]) for i in range(n))


def solve_square(rows, rhs):
    """Solve A x = rhs for square invertible A (rows of A given)."""
    inv = invert(rows)
    return mat_vec(inv, rhs)


def is_integral(v):
    return all(Fraction(x).denominator == 1 for x in v)
