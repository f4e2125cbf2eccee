"""Dense Gaussian elimination over an arbitrary finite field.

A "field" here is any object exposing ``add``, ``sub``, ``mul``, ``inv``
and ``neg`` on plain ints, with 0 and 1 as the neutral elements. Both
:class:`PrimeField` and :class:`mrdcodes.field.FieldContext` qualify.
"""

from __future__ import annotations


class PrimeField:
    """Integers mod a prime ``p``."""

    def __init__(self, p: int):
        self.p = p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def neg(self, a):
        return -a % self.p

    def mul(self, a, b):
        return a * b % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, -1, self.p)


def rref(matrix, field, ncols=None):
    """Reduced row echelon form of ``matrix`` (list of rows).

    Only the first ``ncols`` columns are used for pivoting, which lets an
    augmented matrix be reduced without pivoting on its right-hand side.
    Returns ``(rows, pivots)``; the input is not modified.
    """
    rows = [list(r) for r in matrix]
    if not rows:
        return rows, []
    width = len(rows[0])
    if ncols is None:
        ncols = width
    pivots = []
    r = 0
    for c in range(ncols):
        if r == len(rows):
            break
        piv = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        lead = field.inv(rows[r][c])
        if lead != 1:
            rows[r] = [field.mul(lead, v) for v in rows[r]]
        pr = rows[r]
        for i in range(len(rows)):
            f = rows[i][c]
            if i != r and f:
                row = rows[i]
                rows[i] = [field.sub(row[j], field.mul(f, pr[j])) if pr[j] else row[j]
                           for j in range(width)]
        pivots.append(c)
        r += 1
    return rows, pivots


def rank(matrix, field) -> int:
    return len(rref(matrix, field)[1])


def nullspace(matrix, ncols, field):
    """Basis of the right kernel {x : A x = 0}, one vector per free column."""
    if not matrix:
        return [[1 if j == i else 0 for j in range(ncols)] for i in range(ncols)]
    rows, pivots = rref(matrix, field)
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    for fc in free:
        v = [0] * ncols
        v[fc] = 1
        for r, pc in enumerate(pivots):
            if rows[r][fc]:
                v[pc] = field.neg(rows[r][fc])
        basis.append(v)
    return basis


def solve(matrix, rhs, field):
    """Solve A x = b.

    Returns ``(x, kernel)`` where ``x`` is the solution with all free
    variables set to zero and ``kernel`` a nullspace basis, or ``(None,
    kernel)`` when the system is inconsistent.
    """
    ncols = len(matrix[0]) if matrix else 0
    aug = [list(row) + [b] for row, b in zip(matrix, rhs)]
    rows, pivots = rref(aug, field, ncols=ncols)
    kernel = nullspace(matrix, ncols, field)
    for row in rows[len(pivots):]:
        if row[ncols]:
            return None, kernel
    x = [0] * ncols
    for r, pc in enumerate(pivots):
        x[pc] = rows[r][ncols]
    return x, kernel


def inverse(matrix, field):
    n = len(matrix)
    aug = [list(row) + [1 if i == j else 0 for j in range(n)] for i, row in enumerate(matrix)]
    rows, pivots = rref(aug, field, ncols=n)
    if len(pivots) < n:
        raise ZeroDivisionError("matrix is singular")
    return [row[n:] for row in rows]


def matvec(matrix, vec, field):
    out = []
    for row in matrix:
        acc = 0
        for a, b in zip(row, vec):
            if a and b:
                acc = field.add(acc, field.mul(a, b))
        out.append(acc)
    return out


def xor_rank(vectors) -> int:
    """Rank over GF(2) of vectors packed as int bitmasks."""
    basis = {}
    for v in vectors:
        while v:
            top = v.bit_length() - 1
            if top not in basis:
                basis[top] = v
                break
            v ^= basis[top]
    return len(basis)
