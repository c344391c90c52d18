"""Matrix realization of sp_2r for the antidiagonal symplectic form.

The form is  [[0, -J], [J, 0]]  with J the antidiagonal identity, matching
the torus parametrization M(t_1..t_r) = diag(t_1..t_r, t_r^-1..t_1^-1).
Root vectors are explicit integer matrices, so brackets, structure
constants and Chevalley signs come out of honest matrix arithmetic instead
of sign tables.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .roots import Root, WeylElement

Matrix = tuple[tuple[int, ...], ...]

__all__ = [
    "root_vector",
    "cartan_vector",
    "coroot_vector",
    "bracket",
    "structure_constant",
    "in_sp",
    "weyl_lift",
    "weyl_conjugation_sign",
    "omega",
]


def _zeros(n: int) -> list[list[int]]:
    return [[0] * n for _ in range(n)]


def _freeze(m: Sequence[Sequence[int]]) -> Matrix:
    return tuple(tuple(row) for row in m)


def omega(rank: int) -> Matrix:
    """Gram matrix of the symplectic form."""
    n = 2 * rank
    m = _zeros(n)
    for i in range(rank):
        m[i][n - 1 - i] = -1
        m[n - 1 - i][i] = 1
    return _freeze(m)


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    n = len(a)
    return _freeze(
        [[sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n)] for i in range(n)]
    )


def mat_add(a: Matrix, b: Matrix, sb: int = 1) -> Matrix:
    n = len(a)
    return _freeze([[a[i][j] + sb * b[i][j] for j in range(n)] for i in range(n)])


def bracket(a: Matrix, b: Matrix) -> Matrix:
    return mat_add(mat_mul(a, b), mat_mul(b, a), -1)


def identity(n: int) -> Matrix:
    return _freeze([[int(i == j) for j in range(n)] for i in range(n)])


@lru_cache(maxsize=None)
def root_vector(alpha: Root) -> Matrix:
    """Chevalley basis vector e_alpha as a 2r x 2r integer matrix."""
    r = alpha.rank
    n = 2 * r
    m = _zeros(n)
    nz = [(i, c) for i, c in enumerate(alpha.coords) if c != 0]
    mirror = lambda i: n - 1 - i  # 0-based column of -e_i weight
    if alpha.is_long:
        i, c = nz[0]
        if c > 0:
            m[i][mirror(i)] = 1
        else:
            m[mirror(i)][i] = 1
        return _freeze(m)
    (i, ci), (j, cj) = nz
    if ci == 1 and cj == -1:  # e_i - e_j
        m[i][j] = 1
        m[mirror(j)][mirror(i)] = -1
    elif ci == -1 and cj == 1:  # e_j - e_i
        m[j][i] = 1
        m[mirror(i)][mirror(j)] = -1
    elif ci == 1 and cj == 1:  # e_i + e_j
        m[i][mirror(j)] = 1
        m[j][mirror(i)] = 1
    else:  # -(e_i + e_j)
        m[mirror(j)][i] = 1
        m[mirror(i)][j] = 1
    return _freeze(m)


def cartan_vector(i: int, rank: int) -> Matrix:
    """h_i = E_ii - E_(2r+1-i)(2r+1-i), the i-th coordinate torus direction."""
    n = 2 * rank
    m = _zeros(n)
    m[i - 1][i - 1] = 1
    m[n - i][n - i] = -1
    return _freeze(m)


def coroot_vector(alpha: Root) -> Matrix:
    """[e_alpha, e_-alpha], the coroot in the Cartan."""
    return bracket(root_vector(alpha), root_vector(-alpha))


def in_sp(m: Matrix) -> bool:
    """Membership test X^T Omega + Omega X = 0."""
    rank = len(m) // 2
    om = omega(rank)
    n = len(m)
    mt = _freeze([[m[j][i] for j in range(n)] for i in range(n)])
    s = mat_add(mat_mul(mt, om), mat_mul(om, m))
    return all(all(x == 0 for x in row) for row in s)


def structure_constant(alpha: Root, gamma: Root) -> int:
    """N with [e_alpha, e_gamma] = N * e_(alpha+gamma); requires alpha+gamma a root."""
    s = alpha.plus(gamma)
    if s is None:
        raise ValueError("alpha + gamma is not a root")
    b = bracket(root_vector(alpha), root_vector(gamma))
    e = root_vector(s)
    n = None
    for i in range(len(b)):
        for j in range(len(b)):
            if e[i][j] != 0:
                q = Fraction(b[i][j], e[i][j])
                if n is None:
                    n = q
                elif n != q:
                    raise ArithmeticError("bracket is not a multiple of the root vector")
            elif b[i][j] != 0:
                raise ArithmeticError("bracket has support off the root vector")
    assert n is not None and n.denominator == 1 and n != 0
    return int(n)


def _one_param(alpha: Root, t: int) -> Matrix:
    # x_alpha(t) = I + t e_alpha; e_alpha^2 = 0 in this representation
    e = root_vector(alpha)
    n = len(e)
    sq = mat_mul(e, e)
    assert all(all(x == 0 for x in row) for row in sq)
    m = [list(row) for row in identity(n)]
    for i in range(n):
        for j in range(n):
            m[i][j] += t * e[i][j]
    return _freeze(m)


def _simple_lift(i: int, rank: int) -> Matrix:
    from .roots import simple_root

    a = simple_root(i, rank)
    return mat_mul(mat_mul(_one_param(a, 1), _one_param(-a, -1)), _one_param(a, 1))


def weyl_lift(w: WeylElement) -> Matrix:
    """The standard representative of w: product of simple-reflection lifts."""
    m = identity(2 * w.rank)
    for i in w.reduced_word():
        m = mat_mul(m, _simple_lift(i, w.rank))
    return m


def weyl_conjugation_sign(w: WeylElement, alpha: Root) -> int:
    """Sign c with  W e_alpha W^-1 = c e_(w alpha)  for the standard lift W."""
    lift = weyl_lift(w)
    # inverse of the lift: lift of w^-1 need not be the matrix inverse, so invert directly
    inv = _invert_unimodular(lift)
    conj = mat_mul(mat_mul(lift, root_vector(alpha)), inv)
    target = root_vector(w.apply(alpha))
    c = None
    for i in range(len(conj)):
        for j in range(len(conj)):
            if target[i][j] != 0:
                q = Fraction(conj[i][j], target[i][j])
                if c is None:
                    c = q
                elif c != q:
                    raise ArithmeticError("conjugate is not a multiple of the target root vector")
            elif conj[i][j] != 0:
                raise ArithmeticError("conjugate has support off the target root vector")
    assert c is not None and c.denominator == 1
    return int(c)


def _invert_unimodular(m: Matrix) -> Matrix:
    n = len(m)
    a = [[Fraction(m[i][j]) for j in range(n)] + [Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    for col in range(n):
        piv = next(r for r in range(col, n) if a[r][col] != 0)
        a[col], a[piv] = a[piv], a[col]
        inv = 1 / a[col][col]
        a[col] = [x * inv for x in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    out = [[a[i][n + j] for j in range(n)] for i in range(n)]
    assert all(x.denominator == 1 for row in out for x in row)
    return _freeze([[int(x) for x in row] for row in out])
