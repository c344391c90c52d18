"""Quartic-cover combinatorics: the W-invariant quadratic form on the
cocharacter lattice, the sublattices it cuts out, the dual root datum, tame
Hilbert symbols, the explicit torus cocycle, and the two unramified
distinguished characters."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Optional, Sequence

from . import linalg

__all__ = [
    "CoverDatum",
    "GLCoverDatum",
    "DualRootDatum",
    "TameElement",
    "lattice_Y_Qn",
    "dual_root_datum",
    "tame_hilbert",
    "sigma_D",
    "cocycle_identity_check",
    "distinguished_char_eval",
]


@dataclass(frozen=True)
class CoverDatum:
    """Rank, cover degree and integer quadratic form Q on Y = Z^r.

    Q is stored by upper-triangular coefficients: Q(y) = sum q[i][j] y_i y_j
    over i <= j.  The default normalization has Q(e_r) = -1, making the
    quartic sublattice come out as the doubled lattice.
    """

    rank: int
    n: int
    q_coeffs: tuple[tuple[int, ...], ...]

    @staticmethod
    def standard(rank: int, n: int = 4, scale: int = -1) -> "CoverDatum":
        q = [[0] * rank for _ in range(rank)]
        for i in range(rank):
            q[i][i] = scale
        return CoverDatum(rank, n, tuple(tuple(row) for row in q))

    def __post_init__(self) -> None:
        if self.rank < 1 or self.n < 1:
            raise ValueError("rank and degree must be positive")
        if len(self.q_coeffs) != self.rank or any(len(r) != self.rank for r in self.q_coeffs):
            raise ValueError("coefficient matrix has wrong shape")
        if not self._is_weyl_invariant():
            raise ValueError("quadratic form is not Weyl-invariant")

    def value(self, y: Sequence[int]) -> int:
        return sum(
            self.q_coeffs[i][j] * y[i] * y[j]
            for i in range(self.rank)
            for j in range(i, self.rank)
        )

    def bilinear(self, y: Sequence[int], z: Sequence[int]) -> int:
        yz = [a + b for a, b in zip(y, z)]
        return self.value(yz) - self.value(y) - self.value(z)

    def _is_weyl_invariant(self) -> bool:
        r = self.rank

        def images(vec):
            out = []
            for i in range(r - 1):  # swap i, i+1
                w = list(vec)
                w[i], w[i + 1] = w[i + 1], w[i]
                out.append(w)
            w = list(vec)
            w[r - 1] = -w[r - 1]  # flip the last coordinate
            out.append(w)
            return out

        tests = []
        for i in range(r):
            e = [0] * r
            e[i] = 1
            tests.append(e)
            for j in range(i + 1, r):
                f = list(e)
                f[j] = 1
                tests.append(f)
        for vec in tests:
            qv = self.value(vec)
            if any(self.value(w) != qv for w in images(vec)):
                return False
        return True

    def simple_coroot(self, i: int) -> tuple[int, ...]:
        v = [0] * self.rank
        if i < self.rank:
            v[i - 1], v[i] = 1, -1
        else:
            v[self.rank - 1] = 1
        return tuple(v)

    def n_alpha(self, i: int) -> int:
        qv = self.value(self.simple_coroot(i))
        return self.n // gcd(self.n, abs(qv)) if qv else self.n

    def exceptional_pairings(self):
        """(label, n_alpha, coroot) per simple root, for the q^-1 test."""
        return [
            (f"a{i}", self.n_alpha(i), self.simple_coroot(i))
            for i in range(1, self.rank + 1)
        ]


@dataclass(frozen=True)
class GLCoverDatum:
    """The double cover of GL_k restricted to its type-A simple coroots."""

    k: int

    def exceptional_pairings(self):
        out = []
        for i in range(1, self.k):
            v = [0] * self.k
            v[i - 1], v[i] = 1, -1
            out.append((f"a{i}", 2, tuple(v)))
        return out


def lattice_Y_Qn(d: CoverDatum) -> tuple[list[list[int]], list[list[int]]]:
    """Row bases of Y_{Q,n} = {y : B_Q(y, -) in nZ} and of the span of the
    modified coroots n_alpha alpha^vee over all roots."""
    r = d.rank
    basis = [[int(i == j) for j in range(r)] for i in range(r)]
    b_mat = [[d.bilinear(basis[i], basis[j]) for j in range(r)] for i in range(r)]
    dmat, _, qmat = linalg.smith_normal_form(b_mat)
    mults = []
    for i in range(r):
        di = dmat[i][i] if i < len(dmat) and i < len(dmat[i]) else 0
        mults.append(d.n // gcd(d.n, abs(di)) if di else 1)
    # columns of qmat scaled by mults are a basis; return as rows
    big = [[qmat[i][j] * mults[j] for i in range(r)] for j in range(r)]
    big = linalg.hermite_row_basis(big)

    gens = []
    for i in range(r):
        for j in range(i + 1, r):
            for s in (1, -1):
                v = [0] * r
                v[i], v[j] = 1, s
                na = d.n // gcd(d.n, abs(d.value(v))) if d.value(v) else d.n
                gens.append([na * x for x in v])
        v = [0] * r
        v[i] = 1
        na = d.n // gcd(d.n, abs(d.value(v))) if d.value(v) else d.n
        gens.append([na * x for x in v])
    small = linalg.hermite_row_basis(gens)
    return big, small


@dataclass(frozen=True)
class DualRootDatum:
    n_alpha: tuple[int, ...]
    modified_simple_coroots: tuple[tuple[int, ...], ...]
    modified_simple_roots: tuple[tuple[Fraction, ...], ...]
    cartan_type: str


def dual_root_datum(d: CoverDatum) -> DualRootDatum:
    """Modified coroots/roots and the Cartan type they span."""
    r = d.rank
    n_alphas = tuple(d.n_alpha(i) for i in range(1, r + 1))
    coroots = []
    roots = []
    for i in range(1, r + 1):
        na = n_alphas[i - 1]
        cr = tuple(na * x for x in d.simple_coroot(i))
        coroots.append(cr)
        alpha = [0] * r
        if i < r:
            alpha[i - 1], alpha[i] = 1, -1
        else:
            alpha[r - 1] = 2
        roots.append(tuple(Fraction(x, na) for x in alpha))
    if r == 1:
        ctype = "A1"
    else:
        len_short = sum(x * x for x in coroots[0])
        len_last = sum(x * x for x in coroots[r - 1])
        ratio = Fraction(len_last, len_short)
        if ratio == 2:
            ctype = f"C{r}"
        elif ratio == Fraction(1, 2):
            ctype = f"B{r}"
        else:
            ctype = f"unrecognized(ratio={ratio})"
    return DualRootDatum(n_alphas, tuple(coroots), tuple(roots), ctype)


@dataclass(frozen=True)
class TameElement:
    """pi^valuation * unit in a local field with residue field F_q."""

    valuation: int
    unit: int
    q: int

    def __post_init__(self) -> None:
        if self.q < 3:
            raise ValueError("residue field must be odd")
        object.__setattr__(self, "unit", self.unit % self.q)
        if self.unit == 0:
            raise ValueError("unit part must be invertible")

    def mul(self, other: "TameElement") -> "TameElement":
        if self.q != other.q:
            raise ValueError("mixed residue fields")
        return TameElement(self.valuation + other.valuation, self.unit * other.unit, self.q)

    def __str__(self) -> str:
        return f"p^{self.valuation}*{self.unit}"


def _primitive_root(q: int) -> int:
    phi = q - 1
    factors = set()
    m = phi
    d = 2
    while d * d <= m:
        while m % d == 0:
            factors.add(d)
            m //= d
        d += 1
    if m > 1:
        factors.add(m)
    for g in range(2, q):
        if all(pow(g, phi // p, q) != 1 for p in factors):
            return g
    raise ValueError(f"{q} has no primitive root; not a prime?")


def _mu_n_exponent(value: int, n: int, q: int) -> int:
    zeta = pow(_primitive_root(q), (q - 1) // n, q)
    cur = 1
    for k in range(n):
        if cur == value % q:
            return k
        cur = (cur * zeta) % q
    raise ValueError(f"{value} is not an n-th root of unity mod {q}")


def tame_hilbert(x: TameElement, y: TameElement, n: int) -> int:
    """The degree-n tame symbol, as the exponent of the fixed primitive
    n-th root of unity g^((q-1)/n) with g the least primitive root mod q."""
    if x.q != y.q:
        raise ValueError("mixed residue fields")
    q = x.q
    if (q - 1) % n:
        raise ValueError(f"q = {q} is not 1 mod n = {n}")
    a, b = x.valuation, y.valuation
    t = pow(-1, (a * b) % 2, q)
    t = (t * pow(x.unit, b, q)) % q
    t = (t * pow(y.unit, -a, q)) % q
    s = pow(t, (q - 1) // n, q)
    return _mu_n_exponent(s, n, q)


def sigma_D(t: Sequence[TameElement], s: Sequence[TameElement]) -> int:
    """Torus cocycle: the product of inverse quartic symbols, entrywise."""
    if len(t) != len(s):
        raise ValueError("torus vectors of different lengths")
    total = 0
    for tk, sk in zip(t, s):
        total -= tame_hilbert(tk, sk, 4)
    return total % 4


def cocycle_identity_check(
    a: Sequence[TameElement], b: Sequence[TameElement], c: Sequence[TameElement]
) -> bool:
    """sigma(a,b) sigma(ab,c) = sigma(a,bc) sigma(b,c), exactly."""
    ab = [x.mul(y) for x, y in zip(a, b)]
    bc = [x.mul(y) for x, y in zip(b, c)]
    lhs = (sigma_D(a, b) + sigma_D(ab, c)) % 4
    rhs = (sigma_D(a, bc) + sigma_D(b, c)) % 4
    return lhs == rhs


def distinguished_char_eval(sign: str, i: int, a: TameElement, rank: int) -> int:
    """Multiplier of the genuine part on y_i(a), as a mu_4 exponent.

    Short coordinates give 1; the last coordinate gives +-(a,a)_2, with the
    sign chosen by the distinguished character.
    """
    if sign not in ("+", "-"):
        raise ValueError("sign must be '+' or '-'")
    if not 1 <= i <= rank:
        raise ValueError("coordinate out of range")
    if (a.q - 1) % 4:
        raise ValueError(f"q = {a.q} is not 1 mod 4")
    if i < rank:
        return 0
    quad = tame_hilbert(a, a, 2)  # 0 or 1 as a mu_2 exponent
    total = 2 * quad + (2 if sign == "-" else 0)
    return total % 4
