"""Small dense exact linear algebra: rational matrices and kernels over
number fields."""

from __future__ import annotations

from fractions import Fraction

from .polys import RatPoly


def mat_mul(a, b):
    n, m, p = len(a), len(b), len(b[0])
    assert len(a[0]) == m
    return [
        [sum((a[i][k] * b[k][j] for k in range(m)), Fraction(0)) for j in range(p)]
        for i in range(n)
    ]


def mat_identity(n: int):
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


def mat_trace(a) -> Fraction:
    return sum((a[i][i] for i in range(len(a))), Fraction(0))


def charpoly_rational(a) -> RatPoly:
    """Characteristic polynomial det(xI - A) by Faddeev-LeVerrier, exact."""
    n = len(a)
    coeffs = [Fraction(0)] * (n + 1)
    coeffs[n] = Fraction(1)
    mk = [row[:] for row in a]
    for k in range(1, n + 1):
        if k > 1:
            shifted = [
                [mk[i][j] + (coeffs[n - k + 1] if i == j else 0) for j in range(n)]
                for i in range(n)
            ]
            mk = mat_mul(a, shifted)
        coeffs[n - k] = -mat_trace(mk) / k
    return RatPoly(coeffs)


def det_rational(a) -> Fraction:
    n = len(a)
    m = [row[:] for row in a]
    det = Fraction(1)
    for col in range(n):
        pivot = None
        for r in range(col, n):
            if m[r][col] != 0:
                pivot = r
                break
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            det = -det
        det *= m[col][col]
        inv = 1 / m[col][col]
        for r in range(col + 1, n):
            f = m[r][col] * inv
            if f == 0:
                continue
            for c in range(col, n):
                m[r][c] -= f * m[col][c]
    return det


def invert_rational(a):
    """Inverse of a square rational matrix; raises ValueError when singular."""
    n = len(a)
    m = [list(row) + ident for row, ident in zip(a, mat_identity(n))]
    for col in range(n):
        pivot = None
        for r in range(col, n):
            if m[r][col] != 0:
                pivot = r
                break
        if pivot is None:
            raise ValueError("singular matrix")
        m[col], m[pivot] = m[pivot], m[col]
        inv = 1 / m[col][col]
        m[col] = [x * inv for x in m[col]]
        for r in range(n):
            if r != col and m[r][col] != 0:
                f = m[r][col]
                m[r] = [x - f * y for x, y in zip(m[r], m[col])]
    return [row[n:] for row in m]


def kernel_vector(a, field):
    """One nonzero kernel vector of a square matrix over a field.

    Entries must support +, -, *, / and == 0; raises when the kernel is
    trivial.
    """
    n = len(a)
    m = [row[:] for row in a]
    zero, one = field.zero(), field.one()
    pivots: list[int] = []  # pivot column of each eliminated row
    row = 0
    for col in range(n):
        pivot = None
        for r in range(row, n):
            if not m[r][col] == zero:
                pivot = r
                break
        if pivot is None:
            continue
        m[row], m[pivot] = m[pivot], m[row]
        inv = one / m[row][col]
        m[row] = [inv * x for x in m[row]]
        for r in range(n):
            if r != row and not m[r][col] == zero:
                f = m[r][col]
                m[r] = [x - f * y for x, y in zip(m[r], m[row])]
        pivots.append(col)
        row += 1
    free = [c for c in range(n) if c not in pivots]
    if not free:
        raise ValueError("trivial kernel")
    fc = free[0]
    v = [zero] * n
    v[fc] = one
    for r, pc in enumerate(pivots):
        v[pc] = -m[r][fc]
    return v
