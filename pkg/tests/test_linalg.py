import random
from fractions import Fraction

from sympcap.linalg import (
    det,
    hermite_row_basis,
    lattice_index,
    matrix_rank,
    smith_normal_form,
    solve_rational,
)


def _mat_mul(a, b):
    return [[sum(a[i][k] * b[k][j] for k in range(len(b))) for j in range(len(b[0]))] for i in range(len(a))]


def _rank_gauss(rows):
    a = [[Fraction(x) for x in row] for row in rows]
    rank = 0
    cols = len(a[0]) if a else 0
    row = 0
    for col in range(cols):
        piv = next((r for r in range(row, len(a)) if a[r][col] != 0), None)
        if piv is None:
            continue
        a[row], a[piv] = a[piv], a[row]
        for r in range(len(a)):
            if r != row and a[r][col] != 0:
                f = a[r][col] / a[row][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[row])]
        row += 1
        rank += 1
    return rank


def test_rank_matches_gauss_oracle():
    rng = random.Random(7)
    for _ in range(60):
        m = rng.randint(1, 5)
        n = rng.randint(1, 5)
        rows = [[rng.randint(-4, 4) for _ in range(n)] for _ in range(m)]
        assert matrix_rank(rows) == _rank_gauss(rows)


def test_rank_with_fractions():
    rows = [[Fraction(1, 2), Fraction(1, 3)], [Fraction(3, 2), Fraction(1, 1)]]
    assert matrix_rank(rows) == _rank_gauss(rows)


def test_det_small():
    assert det([[2, 0], [0, 3]]) == 6
    assert det([[1, 2], [2, 4]]) == 0
    assert det([[0, 1], [1, 0]]) == -1


def test_smith_normal_form_properties():
    rng = random.Random(11)
    for _ in range(40):
        m = rng.randint(1, 4)
        n = rng.randint(1, 4)
        a = [[rng.randint(-6, 6) for _ in range(n)] for _ in range(m)]
        d, p, q = smith_normal_form(a)
        assert _mat_mul(_mat_mul(p, a), q) == d
        assert abs(det(p)) == 1
        assert abs(det(q)) == 1
        diag = [d[i][i] for i in range(min(m, n))]
        for i in range(m):
            for j in range(n):
                if i != j:
                    assert d[i][j] == 0
        for i in range(len(diag) - 1):
            if diag[i]:
                assert diag[i + 1] % diag[i] == 0
            else:
                assert diag[i + 1] == 0
        assert all(x >= 0 for x in diag)


def test_hermite_row_basis_spans():
    basis = hermite_row_basis([[2, 0], [0, 2], [1, 1]])
    # span contains (1,1) and (2,0) but not (1,0)
    assert len(basis) == 2
    assert det(basis) != 0
    assert lattice_index(basis, [[2, 0], [0, 2]]) == 2


def test_lattice_index():
    whole = [[1, 0], [0, 1]]
    doubled = [[2, 0], [0, 2]]
    assert lattice_index(whole, doubled) == 4
    assert lattice_index(doubled, [[2, 0], [0, 4]]) == 2


def test_solve_rational():
    x = solve_rational([[2, 1], [1, 1]], [3, 2])
    assert x == [Fraction(1), Fraction(1)]
