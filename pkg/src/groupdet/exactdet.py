"""Exact integer determinants: Bareiss elimination and the group determinant.

Everything here is plain Python-int arithmetic.  Values like 2^14 * 3^3
overflow fixed-width types and roots of unity would bring rounding error,
so no floating point appears anywhere.
"""
from __future__ import annotations

from .errors import LengthMismatch
from .groups import GroupTable


def bareiss_determinant(rows) -> int:
    """Fraction-free determinant of a square integer matrix.

    All intermediate divisions are exact; pivoting by row swap only.
    """
    a = [list(r) for r in rows]
    n = len(a)
    if any(len(r) != n for r in a):
        raise LengthMismatch("matrix is not square")
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[k][k]
        for i in range(k + 1, n):
            row_i = a[i]
            row_k = a[k]
            aik = row_i[k]
            for j in range(k + 1, n):
                row_i[j] = (pivot * row_i[j] - aik * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return sign * a[n - 1][n - 1]


def group_matrix(table: GroupTable, coeffs):
    """The n x n matrix whose (i,j) entry is coeffs[g_i * g_j^(-1)]."""
    n = table.order
    if len(coeffs) != n:
        raise LengthMismatch(f"need {n} coefficients, got {len(coeffs)}")
    mul, inv = table.mul, table.inv
    return [[coeffs[mul[i][inv[j]]] for j in range(n)] for i in range(n)]


def group_determinant(table: GroupTable, coeffs) -> int:
    """Exact integer group determinant of a coefficient vector."""
    if table.order == 1:
        if len(coeffs) != 1:
            raise LengthMismatch("trivial group takes a single coefficient")
        return coeffs[0]
    return bareiss_determinant(group_matrix(table, coeffs))


def resultant_with_xn_minus_1(n: int, poly_coeffs) -> int:
    """Res(x^n - 1, f) = product of f over all n-th roots of unity.

    Computed as a Sylvester-matrix determinant via Bareiss, entirely in
    integers.  Serves as the independent oracle for the circulant route.
    """
    c = list(poly_coeffs)
    while c and c[-1] == 0:
        c.pop()
    if not c:
        return 0
    m = len(c) - 1  # degree of f
    if m == 0:
        return c[0] ** n
    size = n + m
    rows = []
    # m rows of x^n - 1 coefficients (degree n, leading first)
    a = [1] + [0] * (n - 1) + [-1]
    for i in range(m):
        rows.append([0] * i + a + [0] * (size - n - 1 - i))
    # n rows of f coefficients, leading first
    b = c[::-1]
    for i in range(n):
        rows.append([0] * i + b + [0] * (size - m - 1 - i))
    return bareiss_determinant(rows)
