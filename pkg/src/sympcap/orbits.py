"""Symplectic partitions, the nilpotent-orbit poset of sp_2r, orbit and
Gelfand-Kirillov dimensions, and the dimension-equation solver."""

from __future__ import annotations

import json
import math
import os
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Optional, Sequence

from .roots import positive_roots

__all__ = [
    "SymplecticPartition",
    "OrbitPoset",
    "enumerate_symplectic_partitions",
    "dominance_compare",
    "orbits_not_below",
    "h_of_orbit",
    "orbit_dimension",
    "orbit_dimension_closed_formula",
    "gk_dimension",
    "dimension_equation_solve",
    "transpose_partition",
    "CACHE_ENV",
]

CACHE_ENV = "SYMPCAP_CACHE_DIR"


def _is_symplectic(parts: Sequence[int]) -> bool:
    if any(p <= 0 for p in parts):
        return False
    if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
        return False
    if sum(parts) % 2:
        return False
    for p in set(parts):
        if p % 2 and parts.count(p) % 2:
            return False
    return True


@dataclass(frozen=True, order=True)
class SymplecticPartition:
    """Weakly decreasing parts summing to 2r, odd parts with even multiplicity."""

    parts: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "parts", tuple(int(p) for p in self.parts))
        if not _is_symplectic(self.parts):
            raise ValueError(f"{list(self.parts)} is not a symplectic partition")

    @property
    def total(self) -> int:
        return sum(self.parts)

    @property
    def rank(self) -> int:
        return self.total // 2

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.parts)) + ")"

    def to_json(self) -> list[int]:
        return list(self.parts)

    @staticmethod
    def from_json(data: Sequence[int]) -> "SymplecticPartition":
        return SymplecticPartition(tuple(data))


def _partitions_desc(total: int, maxpart: int) -> Iterator[tuple[int, ...]]:
    if total == 0:
        yield ()
        return
    for first in range(min(total, maxpart), 0, -1):
        for rest in _partitions_desc(total - first, first):
            yield (first,) + rest


def enumerate_symplectic_partitions(two_r: int) -> list[SymplecticPartition]:
    """All symplectic partitions of two_r, in descending lexicographic order
    (compatible with reverse dominance: dominating partitions come first)."""
    if two_r < 0 or two_r % 2:
        raise ValueError("total must be a nonnegative even integer")
    return [
        SymplecticPartition(p) for p in _partitions_desc(two_r, two_r) if _is_symplectic(p)
    ]


def dominance_compare(lam: SymplecticPartition, mu: SymplecticPartition) -> str:
    """'greater', 'less', 'equal' or 'incomparable' in the dominance order."""
    if lam.total != mu.total:
        raise ValueError("partitions of different totals are not comparable")
    n = max(len(lam.parts), len(mu.parts))
    a = list(lam.parts) + [0] * (n - len(lam.parts))
    b = list(mu.parts) + [0] * (n - len(mu.parts))
    ge = le = True
    sa = sb = 0
    for x, y in zip(a, b):
        sa += x
        sb += y
        if sa < sb:
            ge = False
        if sa > sb:
            le = False
    if ge and le:
        return "equal"
    if ge:
        return "greater"
    if le:
        return "less"
    return "incomparable"


def orbits_not_below(lam: SymplecticPartition) -> list[SymplecticPartition]:
    """All symplectic mu with mu > lam or mu incomparable to lam."""
    out = []
    for mu in enumerate_symplectic_partitions(lam.total):
        if dominance_compare(mu, lam) in ("greater", "incomparable"):
            out.append(mu)
    return out


def h_of_orbit(parts: Sequence[int]) -> tuple[int, ...]:
    """First r entries of the sorted weight vector of the attached torus
    cocharacter: each part p contributes p-1, p-3, ..., 1-p."""
    if not _is_symplectic(tuple(parts)):
        raise ValueError(f"{list(parts)} is not a symplectic partition")
    exps: list[int] = []
    for p in parts:
        exps.extend(range(p - 1, -p, -2))
    exps.sort(reverse=True)
    r = len(exps) // 2
    assert all(exps[i] + exps[len(exps) - 1 - i] == 0 for i in range(len(exps)))
    return tuple(exps[:r])


def _weight(h: Sequence[int], coords: Sequence[int]) -> int:
    return sum(hi * c for hi, c in zip(h, coords))


def orbit_dimension(lam: SymplecticPartition) -> int:
    """dim_C of the orbit, from the grading: dim g - dim g_0 - dim g_1."""
    h = h_of_orbit(lam.parts)
    r = lam.rank
    dim_g = 2 * r * r + r
    n0 = n1 = 0
    for a in positive_roots(r):
        w = _weight(h, a.coords)
        if w == 0:
            n0 += 1
        elif w == 1:
            n1 += 1
    return dim_g - (r + 2 * n0) - n1


def transpose_partition(parts: Sequence[int]) -> tuple[int, ...]:
    if not parts:
        return ()
    return tuple(sum(1 for p in parts if p > i) for i in range(parts[0]))


def orbit_dimension_closed_formula(lam: SymplecticPartition) -> int:
    """Independent cross-check via the transpose partition."""
    two_n = lam.total
    n = two_n // 2
    tr = transpose_partition(lam.parts)
    odd = sum(1 for p in lam.parts if p % 2)
    return 2 * n * n + n - (sum(t * t for t in tr) + odd) // 2


def gk_dimension(lam: SymplecticPartition) -> Fraction:
    """Half the complex orbit dimension, exactly."""
    return Fraction(orbit_dimension(lam), 2)


def required_lift_dimension(m: int, dim_pi, n: int) -> Fraction:
    """Dimension the lift to rank n must have for the dimension equation to
    balance: dim_pi + (n+m)(n+m+1)/2 - m(2m+1)."""
    return Fraction(dim_pi) + Fraction((n + m) * (n + m + 1), 2) - m * (2 * m + 1)


def dimension_equation_solve(m: int, dim_pi, n_range: Optional[Sequence[int]] = None):
    """Solve for the ranks n at which the required lift dimension equals the
    generic value n^2.

    Returns (solutions, required) where solutions is the sorted list of all
    integer n >= 0 satisfying the equation and required maps each n in
    n_range (default 0..2m+2) to its required dimension.
    """
    if m < 1:
        raise ValueError("m must be >= 1")
    dim_pi = Fraction(dim_pi)
    if dim_pi < 0:
        raise ValueError("dim_pi must be >= 0")
    if n_range is None:
        n_range = range(0, 2 * m + 3)
    required = {n: required_lift_dimension(m, dim_pi, n) for n in n_range}
    # n^2 - (2m+1) n + (3m^2 + m - 2 dim_pi) = 0
    disc = Fraction(1) - 8 * m * m + 8 * dim_pi
    solutions: list[int] = []
    if disc >= 0:
        num, den = disc.numerator, disc.denominator
        rn, rd = math.isqrt(num), math.isqrt(den)
        if rn * rn == num and rd * rd == den:
            root = Fraction(rn, rd)
            for sgn in (1, -1) if root else (1,):
                n = (Fraction(2 * m + 1) + sgn * root) / 2
                if n.denominator == 1 and n >= 0:
                    solutions.append(int(n))
    return sorted(set(solutions)), required


@dataclass(frozen=True)
class OrbitPoset:
    """All symplectic partitions of 2r with their dominance covering relations."""

    two_r: int
    nodes: tuple[SymplecticPartition, ...]
    covers: tuple[tuple[int, int], ...]  # (i, j): nodes[i] covers nodes[j]

    @staticmethod
    def compute(two_r: int) -> "OrbitPoset":
        nodes = tuple(enumerate_symplectic_partitions(two_r))
        n = len(nodes)
        greater = [[False] * n for _ in range(n)]
        for i in range(n):
            for j in range(n):
                if i != j and dominance_compare(nodes[i], nodes[j]) == "greater":
                    greater[i][j] = True
        covers = []
        for i in range(n):
            for j in range(n):
                if greater[i][j] and not any(
                    greater[i][k] and greater[k][j] for k in range(n)
                ):
                    covers.append((i, j))
        return OrbitPoset(two_r, nodes, tuple(covers))

    def leq(self, a: SymplecticPartition, b: SymplecticPartition) -> bool:
        return dominance_compare(a, b) in ("less", "equal")

    def to_json(self) -> dict:
        return {
            "schema": "sympcap/1",
            "two_r": self.two_r,
            "nodes": [n.to_json() for n in self.nodes],
            "covers": [list(c) for c in self.covers],
        }

    @staticmethod
    def from_json(data: dict) -> "OrbitPoset":
        nodes = tuple(SymplecticPartition.from_json(n) for n in data["nodes"])
        covers = tuple((int(i), int(j)) for i, j in data["covers"])
        return OrbitPoset(int(data["two_r"]), nodes, covers)


def orbit_poset(two_r: int, cache_dir: Optional[str] = None) -> OrbitPoset:
    """Compute the poset, using the JSON disk cache when a directory is
    configured (argument or the SYMPCAP_CACHE_DIR environment variable)."""
    cache_dir = cache_dir or os.environ.get(CACHE_ENV)
    path = None
    if cache_dir:
        path = os.path.join(cache_dir, f"poset_{two_r}.json")
        if os.path.exists(path):
            try:
                with open(path) as fh:
                    data = json.load(fh)
                poset = OrbitPoset.from_json(data)
                if poset.two_r == two_r:
                    return poset
            except (ValueError, KeyError):
                pass  # stale or corrupt cache: recompute
    poset = OrbitPoset.compute(two_r)
    if path:
        os.makedirs(cache_dir, exist_ok=True)
        with open(path, "w") as fh:
            json.dump(poset.to_json(), fh)
    return poset
