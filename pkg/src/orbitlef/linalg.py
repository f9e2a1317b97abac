"""Small exact matrix helpers over Fractions (lists of rows)."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

Matrix = list  # list of rows


def zeros(n: int, m: int | None = None) -> Matrix:
    return [[Fraction(0)] * (n if m is None else m) for _ in range(n)]


def identity(n: int) -> Matrix:
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


def elementary(n: int, i: int, j: int) -> Matrix:
    E = zeros(n)
    E[i][j] = Fraction(1)
    return E


def matmul(A: Sequence[Sequence], B: Sequence[Sequence]) -> Matrix:
    return [[sum((A[i][k] * B[k][j] for k in range(len(B))), Fraction(0)) for j in range(len(B[0]))] for i in range(len(A))]


def sub(A, B) -> Matrix:
    return [[a - b for a, b in zip(ra, rb)] for ra, rb in zip(A, B)]


def bracket(A, B) -> Matrix:
    return sub(matmul(A, B), matmul(B, A))


def trace(A) -> Fraction:
    return sum((A[i][i] for i in range(len(A))), Fraction(0))


def diag(values) -> Matrix:
    n = len(values)
    D = zeros(n)
    for i, v in enumerate(values):
        D[i][i] = Fraction(v)
    return D


def rank(A: Sequence[Sequence]) -> int:
    """Rank by fraction-exact Gaussian elimination."""
    M = [[Fraction(v) for v in row] for row in A]
    if not M:
        return 0
    rows, cols = len(M), len(M[0])
    r = 0
    for c in range(cols):
        pivot = next((i for i in range(r, rows) if M[i][c] != 0), None)
        if pivot is None:
            continue
        M[r], M[pivot] = M[pivot], M[r]
        for i in range(rows):
            if i != r and M[i][c] != 0:
                f = M[i][c] / M[r][c]
                M[i] = [a - f * b for a, b in zip(M[i], M[r])]
        r += 1
        if r == rows:
            break
    return r


def det(A: Sequence[Sequence]) -> Fraction:
    M = [[Fraction(v) for v in row] for row in A]
    n = len(M)
    out = Fraction(1)
    for c in range(n):
        pivot = next((i for i in range(c, n) if M[i][c] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != c:
            M[c], M[pivot] = M[pivot], M[c]
            out = -out
        out *= M[c][c]
        for i in range(c + 1, n):
            f = M[i][c] / M[c][c]
            if f:
                M[i] = [a - f * b for a, b in zip(M[i], M[c])]
    return out


def is_symmetric(A) -> bool:
    return all(A[i][j] == A[j][i] for i in range(len(A)) for j in range(i))
