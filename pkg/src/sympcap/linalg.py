"""Exact integer and rational linear algebra: rank, determinant, Smith and
Hermite forms for the lattice computations, all fraction-free where possible."""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Sequence

__all__ = [
    "matrix_rank",
    "det",
    "smith_normal_form",
    "hermite_row_basis",
    "lattice_index",
    "solve_rational",
]


def _to_int_rows(rows: Sequence[Sequence]) -> list[list[int]]:
    out = []
    for row in rows:
        fr = [Fraction(x) for x in row]
        scale = 1
        for x in fr:
            scale = scale * x.denominator // gcd(scale, x.denominator)
        out.append([int(x * scale) for x in fr])
    return out


def matrix_rank(rows: Sequence[Sequence]) -> int:
    """Rank over Q, via fraction-free (Bareiss) elimination."""
    a = _to_int_rows(rows)
    if not a:
        return 0
    m, n = len(a), len(a[0])
    rank = 0
    prev = 1
    row = 0
    for col in range(n):
        piv = next((r for r in range(row, m) if a[r][col] != 0), None)
        if piv is None:
            continue
        a[row], a[piv] = a[piv], a[row]
        for r in range(row + 1, m):
            for c in range(col + 1, n):
                a[r][c] = (a[row][col] * a[r][c] - a[r][col] * a[row][c]) // prev
            a[r][col] = 0
        prev = a[row][col]
        row += 1
        rank += 1
        if row == m:
            break
    return rank


def det(rows: Sequence[Sequence[int]]) -> int:
    """Determinant of a square integer matrix (Bareiss)."""
    a = [list(map(int, r)) for r in rows]
    n = len(a)
    if any(len(r) != n for r in a):
        raise ValueError("matrix not square")
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            piv = next((r for r in range(k + 1, n) if a[r][k] != 0), None)
            if piv is None:
                return 0
            a[k], a[piv] = a[piv], a[k]
            sign = -sign
        for r in range(k + 1, n):
            for c in range(k + 1, n):
                a[r][c] = (a[k][k] * a[r][c] - a[r][k] * a[k][c]) // prev
            a[r][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def smith_normal_form(mat: Sequence[Sequence[int]]):
    """Return (D, P, Q) with P @ mat @ Q = D diagonal, divisibility chain
    d_1 | d_2 | ..., and P, Q unimodular."""
    a = [list(map(int, row)) for row in mat]
    m = len(a)
    n = len(a[0]) if m else 0
    p = [[int(i == j) for j in range(m)] for i in range(m)]
    q = [[int(i == j) for j in range(n)] for i in range(n)]

    def swap_rows(i, j):
        if i != j:
            a[i], a[j] = a[j], a[i]
            p[i], p[j] = p[j], p[i]

    def swap_cols(i, j):
        if i != j:
            for row in a:
                row[i], row[j] = row[j], row[i]
            for row in q:
                row[i], row[j] = row[j], row[i]

    def add_row(src, dst, k):
        # row_dst += k * row_src, mirrored in P
        for c in range(n):
            a[dst][c] += k * a[src][c]
        for c in range(m):
            p[dst][c] += k * p[src][c]

    def add_col(src, dst, k):
        for row in a:
            row[dst] += k * row[src]
        for row in q:
            row[dst] += k * row[src]

    def negate_row(i):
        for c in range(n):
            a[i][c] = -a[i][c]
        for c in range(m):
            p[i][c] = -p[i][c]

    for t in range(min(m, n)):
        while True:
            piv = None
            best = None
            for i in range(t, m):
                for j in range(t, n):
                    if a[i][j] != 0 and (best is None or abs(a[i][j]) < best):
                        best = abs(a[i][j])
                        piv = (i, j)
            if piv is None:
                break
            swap_rows(t, piv[0])
            swap_cols(t, piv[1])
            dirty = False
            for i in range(t + 1, m):
                if a[i][t] != 0:
                    add_row(t, i, -(a[i][t] // a[t][t]))
                    if a[i][t] != 0:
                        dirty = True
            for j in range(t + 1, n):
                if a[t][j] != 0:
                    add_col(t, j, -(a[t][j] // a[t][t]))
                    if a[t][j] != 0:
                        dirty = True
            if dirty:
                continue
            # pivot divides its row and column; enforce divisibility of the rest
            offender = None
            for i in range(t + 1, m):
                for j in range(t + 1, n):
                    if a[i][j] % a[t][t] != 0:
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            add_row(offender, t, 1)
        if t < min(m, n) and a[t][t] < 0:
            negate_row(t)
    return a, p, q


def hermite_row_basis(rows: Sequence[Sequence[int]]) -> list[list[int]]:
    """Basis (as echelon rows) of the integer span of the given rows."""
    a = [list(map(int, r)) for r in rows if any(r)]
    if not a:
        return []
    n = len(a[0])
    basis: list[list[int]] = []
    col = 0
    while a and col < n:
        rows_with = [r for r in a if r[col] != 0]
        rest = [r for r in a if r[col] == 0]
        if not rows_with:
            a = rest
            col += 1
            continue
        while len(rows_with) > 1:
            rows_with.sort(key=lambda r: abs(r[col]))
            base = rows_with[0]
            new = [base]
            for r in rows_with[1:]:
                k = r[col] // base[col]
                red = [x - k * y for x, y in zip(r, base)]
                if red[col] != 0:
                    new.append(red)
                elif any(red):
                    rest.append(red)
            rows_with = new
        pivot = rows_with[0]
        if pivot[col] < 0:
            pivot = [-x for x in pivot]
        basis.append(pivot)
        a = rest
        col += 1
    for i in reversed(range(len(basis))):
        pc = next(c for c, x in enumerate(basis[i]) if x != 0)
        for j in range(i):
            k = basis[j][pc] // basis[i][pc]
            if k:
                basis[j] = [x - k * y for x, y in zip(basis[j], basis[i])]
    return basis


def lattice_index(big: Sequence[Sequence[int]], small: Sequence[Sequence[int]]) -> int:
    """Index [L_big : L_small] for full-rank row bases, L_small inside L_big."""
    db = det(big)
    ds = det(small)
    if db == 0:
        raise ValueError("big lattice basis is singular")
    idx = Fraction(ds, db)
    if idx.denominator != 1:
        raise ValueError("small lattice is not contained in the big lattice")
    return abs(int(idx))


def solve_rational(mat: Sequence[Sequence], rhs: Sequence) -> list[Fraction]:
    """Solve mat @ x = rhs exactly (square, nonsingular)."""
    n = len(mat)
    a = [[Fraction(x) for x in row] + [Fraction(rhs[i])] for i, row in enumerate(mat)]
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col] != 0), None)
        if piv is None:
            raise ValueError("singular system")
        a[col], a[piv] = a[piv], a[col]
        inv = 1 / a[col][col]
        a[col] = [x * inv for x in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return [a[i][n] for i in range(n)]
