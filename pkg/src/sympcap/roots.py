"""Exact model of the root system C_r in epsilon-coordinates.

Roots are integer vectors: the short roots are e_i - e_j and e_i + e_j
(i < j) and the long roots are 2 e_i.  The Weyl group is realized as the
group of signed permutations of the coordinates.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Sequence

__all__ = [
    "Root",
    "WeylElement",
    "is_root",
    "classify",
    "named_root",
    "simple_root",
    "weyl_apply",
    "commutator_support",
    "positive_roots",
    "all_roots",
]


def classify(coords: Sequence[int]) -> str:
    """Classify an integer vector as 'short', 'long' or 'not-a-root'."""
    nonzero = [(i, c) for i, c in enumerate(coords) if c != 0]
    if len(nonzero) == 1:
        return "long" if abs(nonzero[0][1]) == 2 else "not-a-root"
    if len(nonzero) == 2:
        if all(abs(c) == 1 for _, c in nonzero):
            return "short"
    return "not-a-root"


def is_root(coords: Sequence[int], rank: int) -> tuple[bool, str]:
    """Root predicate for C_rank; returns (is_root, classification)."""
    if len(coords) != rank:
        raise ValueError(f"vector of length {len(coords)} in rank {rank}")
    kind = classify(coords)
    return kind != "not-a-root", kind


@dataclass(frozen=True)
class Root:
    """A root of C_r stored by its epsilon-coordinates."""

    coords: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "coords", tuple(int(c) for c in self.coords))
        if classify(self.coords) == "not-a-root":
            raise ValueError(f"{list(self.coords)} is not a root of C_{len(self.coords)}")

    @property
    def rank(self) -> int:
        return len(self.coords)

    @property
    def kind(self) -> str:
        return classify(self.coords)

    @property
    def is_long(self) -> bool:
        return self.kind == "long"

    @property
    def is_positive(self) -> bool:
        for c in self.coords:
            if c != 0:
                return c > 0
        return False

    def __neg__(self) -> "Root":
        return Root(tuple(-c for c in self.coords))

    def plus(self, other: "Root") -> Optional["Root"]:
        """Return self + other when the sum is again a root, else None."""
        v = tuple(a + b for a, b in zip(self.coords, other.coords))
        return Root(v) if classify(v) != "not-a-root" else None

    def simple_coords(self) -> tuple:
        """Coefficients in the simple-root basis a_1..a_r (a_r may be half-integral only for non-roots; for roots it is integral)."""
        from fractions import Fraction

        r = self.rank
        acc = 0
        out = []
        for j in range(r - 1):
            acc += self.coords[j]
            out.append(acc)
        total = acc + self.coords[r - 1]
        last = Fraction(total, 2)
        out.append(int(last) if last.denominator == 1 else last)
        return tuple(out)

    @property
    def height(self):
        return sum(self.simple_coords())

    @staticmethod
    def from_simple_coords(coeffs: Sequence[int]) -> "Root":
        r = len(coeffs)
        v = [0] * r
        for i, c in enumerate(coeffs, start=1):
            if c == 0:
                continue
            if i < r:
                v[i - 1] += c
                v[i] -= c
            else:
                v[r - 1] += 2 * c
        return Root(tuple(v))

    def __str__(self) -> str:
        return "[" + ",".join(str(c) for c in self.coords) + "]"


def simple_root(i: int, rank: int) -> Root:
    """The simple root a_i of C_rank (a_rank is the unique long one)."""
    if not 1 <= i <= rank:
        raise ValueError(f"simple root index {i} out of range for rank {rank}")
    v = [0] * rank
    if i < rank:
        v[i - 1], v[i] = 1, -1
    else:
        v[rank - 1] = 2
    return Root(tuple(v))


def named_root(kind: str, i: int, k: int, rank: int) -> Root:
    """Named roots: gamma(i,k) = e_i - e_{k+1}, mu(k) = 2 e_k, eta(i,k) = e_i + e_{k+1}.

    Index ranges: gamma and eta need 1 <= i <= k <= rank-1; mu needs
    1 <= k <= rank.  For mu the index i is ignored.
    """
    v = [0] * rank
    if kind == "mu":
        if not 1 <= k <= rank:
            raise ValueError(f"mu({k}) out of range for rank {rank}")
        v[k - 1] = 2
        return Root(tuple(v))
    if kind not in ("gamma", "eta"):
        raise ValueError(f"unknown named root kind {kind!r}")
    if not 1 <= i <= k <= rank - 1:
        raise ValueError(f"{kind}({i},{k}) out of range for rank {rank}")
    v[i - 1] = 1
    v[k] = -1 if kind == "gamma" else 1
    return Root(tuple(v))


def positive_roots(rank: int) -> list[Root]:
    out = []
    for i in range(rank):
        for j in range(i + 1, rank):
            for s in (-1, 1):
                v = [0] * rank
                v[i], v[j] = 1, s
                out.append(Root(tuple(v)))
        v = [0] * rank
        v[i] = 2
        out.append(Root(tuple(v)))
    return out


def all_roots(rank: int) -> list[Root]:
    pos = positive_roots(rank)
    return pos + [-a for a in pos]


@dataclass(frozen=True)
class WeylElement:
    """A signed permutation: e_j -> signs[j] * e_{perm[j]} (0-based)."""

    perm: tuple[int, ...]
    signs: tuple[int, ...]

    def __post_init__(self) -> None:
        r = len(self.perm)
        if sorted(self.perm) != list(range(r)) or len(self.signs) != r:
            raise ValueError("invalid signed permutation")
        if any(s not in (-1, 1) for s in self.signs):
            raise ValueError("signs must be +-1")

    @property
    def rank(self) -> int:
        return len(self.perm)

    @staticmethod
    def identity(rank: int) -> "WeylElement":
        return WeylElement(tuple(range(rank)), (1,) * rank)

    @staticmethod
    def simple(i: int, rank: int) -> "WeylElement":
        """w_i: the reflection in the simple root a_i."""
        if not 1 <= i <= rank:
            raise ValueError(f"simple reflection index {i} out of range")
        perm = list(range(rank))
        signs = [1] * rank
        if i < rank:
            perm[i - 1], perm[i] = perm[i], perm[i - 1]
        else:
            signs[rank - 1] = -1
        return WeylElement(tuple(perm), tuple(signs))

    @staticmethod
    def coordinate_flip(i: int, rank: int) -> "WeylElement":
        """r_i: the reflection in the long root mu_i = 2 e_i (flips e_i)."""
        if not 1 <= i <= rank:
            raise ValueError(f"coordinate {i} out of range")
        signs = [1] * rank
        signs[i - 1] = -1
        return WeylElement(tuple(range(rank)), tuple(signs))

    @staticmethod
    def from_word(word: Iterable[int], rank: int) -> "WeylElement":
        """Product of simple reflections, leftmost letter acting last."""
        w = WeylElement.identity(rank)
        for i in word:
            w = w.compose(WeylElement.simple(i, rank))
        return w

    def compose(self, other: "WeylElement") -> "WeylElement":
        """self o other: apply `other` first."""
        if self.rank != other.rank:
            raise ValueError("rank mismatch")
        perm = tuple(self.perm[other.perm[j]] for j in range(self.rank))
        signs = tuple(other.signs[j] * self.signs[other.perm[j]] for j in range(self.rank))
        return WeylElement(perm, signs)

    def inverse(self) -> "WeylElement":
        r = self.rank
        perm = [0] * r
        signs = [1] * r
        for j in range(r):
            perm[self.perm[j]] = j
            signs[self.perm[j]] = self.signs[j]
        return WeylElement(tuple(perm), tuple(signs))

    def apply(self, alpha: Root) -> Root:
        if self.rank != alpha.rank:
            raise ValueError("rank mismatch")
        v = [0] * self.rank
        for j, c in enumerate(alpha.coords):
            v[self.perm[j]] += self.signs[j] * c
        return Root(tuple(v))

    def descent(self) -> Optional[int]:
        """Some simple index i with w(a_i) negative, or None if identity."""
        for i in range(1, self.rank + 1):
            if not self.apply(simple_root(i, self.rank)).is_positive:
                return i
        return None

    def reduced_word(self) -> list[int]:
        """A reduced word in the simple reflections w_i."""
        word: list[int] = []
        cur = self
        while True:
            i = cur.descent()
            if i is None:
                break
            word.append(i)
            cur = cur.compose(WeylElement.simple(i, cur.rank))
        word.reverse()
        return word


def weyl_apply(w: WeylElement, alpha: Root) -> Root:
    return w.apply(alpha)


def commutator_support(alpha: Root, gamma: Root, bound: int = 4) -> frozenset[Root]:
    """The set {i*alpha + j*gamma : i, j > 0} intersected with the root system.

    In type C the result has at most two elements; the scan bound of 4 is a
    safety margin.  alpha = -gamma is rejected: that commutator meets the
    torus direction and is not a root-group statement.
    """
    if alpha.rank != gamma.rank:
        raise ValueError("rank mismatch")
    if all(a + c == 0 for a, c in zip(alpha.coords, gamma.coords)):
        raise ValueError("commutator of opposite root groups meets the torus")
    out = set()
    for i, j in itertools.product(range(1, bound + 1), repeat=2):
        v = tuple(i * a + j * c for a, c in zip(alpha.coords, gamma.coords))
        if classify(v) != "not-a-root":
            out.add(Root(v))
    return frozenset(out)
