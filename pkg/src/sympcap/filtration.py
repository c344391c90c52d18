"""Graded unipotent filtrations attached to an orbit, their Levi data,
generic characters for the supported orbit families, and exact stabilizer
dimensions inside the Levi."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Optional, Sequence

from . import liealg, linalg
from .fields import QQ, RationalField
from .orbits import SymplecticPartition, h_of_orbit
from .roots import Root, positive_roots, simple_root, named_root

__all__ = [
    "GradedUnipotentData",
    "RootCharacter",
    "grade_orbit",
    "heisenberg_quotient",
    "generic_character",
    "character_from_data",
    "stabilizer_dimension",
    "expected_stabilizer_dimension",
    "is_generic_character",
    "split_form_check",
]


@dataclass(frozen=True)
class GradedUnipotentData:
    """Weights, filtration levels and Levi root set attached to an orbit."""

    orbit: SymplecticPartition
    h: tuple[int, ...]
    weights: tuple[tuple[Root, int], ...]  # positive roots with their weights
    levels: tuple[tuple[int, tuple[Root, ...]], ...]  # l -> root set of V_l
    levi_roots: tuple[Root, ...]  # all weight-0 roots, positive and negative

    def weight_of(self, alpha: Root) -> int:
        return sum(hi * c for hi, c in zip(self.h, alpha.coords))

    def level(self, l: int) -> frozenset[Root]:
        for k, roots in self.levels:
            if k == l:
                return frozenset(roots)
        if l > self.levels[-1][0]:
            return frozenset()
        raise KeyError(l)

    def to_json(self) -> dict:
        return {
            "schema": "sympcap/1",
            "orbit": self.orbit.to_json(),
            "h": list(self.h),
            "levels": {
                str(l): sorted([list(a.coords) for a in roots])
                for l, roots in self.levels
                if l >= 1
            },
            "levi": sorted([list(a.coords) for a in self.levi_roots]),
        }

    @staticmethod
    def from_json(data: dict) -> "GradedUnipotentData":
        return grade_orbit(SymplecticPartition.from_json(data["orbit"]))


def grade_orbit(lam: SymplecticPartition) -> GradedUnipotentData:
    h = h_of_orbit(lam.parts)
    r = lam.rank
    pos = positive_roots(r)
    weights = tuple((a, sum(hi * c for hi, c in zip(h, a.coords))) for a in pos)
    max_w = max((w for _, w in weights), default=0)
    levels = tuple(
        (l, tuple(a for a, w in weights if w >= l)) for l in range(0, max_w + 1)
    )
    levi_pos = tuple(a for a, w in weights if w == 0)
    levi = levi_pos + tuple(-a for a in levi_pos)
    # dim g = dim g_0 + 2 * #{positive roots of weight >= 1}
    n_pos_positive_weight = sum(1 for _, w in weights if w >= 1)
    assert 2 * r * r + r == (r + len(levi)) + 2 * n_pos_positive_weight
    return GradedUnipotentData(lam, h, weights, levels, levi)


def heisenberg_quotient(m: int, r: int) -> tuple[int, Root]:
    """Symplectic dimension and center root of the Heisenberg quotient for
    the orbit with one part 2m and 2(r-m) parts 1."""
    if not 1 <= m <= r:
        raise ValueError(f"index m={m} out of range for rank {r}")
    parts = (2 * m,) + (1,) * (2 * (r - m))
    data = grade_orbit(SymplecticPartition(parts))
    center = named_root("mu", 0, m, r)
    weight_one = [a for a, w in data.weights if w == 1]
    return len(weight_one), center


@dataclass(frozen=True)
class RootCharacter:
    """Finitely supported character data on a unipotent root set.

    Coefficients live in the field handle; support roots must lie in the
    abelianization of the carrier (not sums of two carrier roots).
    """

    support: tuple[tuple[Root, Any], ...]
    carrier: frozenset[Root]
    field: Any = QQ

    @staticmethod
    def make(support: dict, carrier, field=QQ) -> "RootCharacter":
        carrier = frozenset(carrier)
        items = tuple(sorted(support.items(), key=lambda kv: kv[0].coords))
        return RootCharacter(items, carrier, field)

    def __post_init__(self) -> None:
        carrier = self.carrier
        for beta, coeff in self.support:
            if beta not in carrier:
                raise ValueError(f"support root {beta} is not in the carrier")
            if isinstance(coeff, (int, Fraction)) and coeff == 0:
                raise ValueError(f"zero coefficient on {beta}")
        by_coords = {a.coords for a in carrier}
        for beta, _ in self.support:
            for a in carrier:
                diff = tuple(b - c for b, c in zip(beta.coords, a.coords))
                if diff in by_coords and diff != beta.coords:
                    raise ValueError(
                        f"support root {beta} is a sum of two carrier roots; "
                        "the character is not defined on the abelianization"
                    )

    @property
    def roots(self) -> frozenset[Root]:
        return frozenset(a for a, _ in self.support)

    def coeff(self, alpha: Root):
        for a, c in self.support:
            if a == alpha:
                return c
        return None

    def as_dict(self) -> dict:
        return dict(self.support)

    def to_json(self) -> dict:
        return {
            "schema": "sympcap/1",
            "support": {str(a): str(c) for a, c in self.support},
            "carrier": sorted([list(a.coords) for a in self.carrier]),
        }


def _family(lam: SymplecticPartition) -> Optional[tuple[str, int]]:
    parts = lam.parts
    counts = {p: parts.count(p) for p in set(parts)}
    ones = counts.get(1, 0)
    if set(counts) <= {2, 1}:
        return ("2^a", counts.get(2, 0))
    if set(counts) <= {3, 1} and counts.get(3, 0) == 2:
        return ("3^2", 2)
    if ones == len(parts) - 1 and parts[0] % 2 == 0 and parts[0] >= 4:
        return ("2m", parts[0] // 2)
    return None


def character_from_data(
    lam: SymplecticPartition, data: Sequence, field=QQ, allow_degenerate: bool = False
) -> RootCharacter:
    """Build the standard character of V_2 for the supported orbit families.

    Families: (2^a 1^b) with one coefficient per part 2 on the long roots
    2e_i; ((2m) 1^b) with coefficient 1 on a_1..a_(m-1) and the datum on
    2e_m; (3^2 1^b) with two coefficients on e_1-e_3 and e_2+e_3.
    """
    fam = _family(lam)
    if fam is None:
        raise ValueError(f"unsupported orbit family {lam}")
    kind, size = fam
    r = lam.rank
    carrier = grade_orbit(lam).level(2)
    elems = [None if x == 0 else (x if not isinstance(x, (int, Fraction)) else field.element(x)) for x in data]
    if not allow_degenerate and any(e is None for e in elems):
        raise ValueError("generic character needs nonzero coefficients")
    support: dict[Root, Any] = {}

    def put(root: Root, coeff) -> None:
        if coeff is not None:
            support[root] = coeff

    if kind == "2^a":
        if len(elems) != size:
            raise ValueError(f"family (2^{size} 1^b) takes {size} coefficients")
        for i, c in enumerate(elems, start=1):
            put(named_root("mu", 0, i, r), c)
    elif kind == "2m":
        if len(elems) != 1:
            raise ValueError("family ((2m) 1^b) takes one coefficient")
        m = size
        for i in range(1, m):
            put(simple_root(i, r), field.one())
        put(named_root("mu", 0, m, r), elems[0])
    else:  # 3^2
        if len(elems) != 2:
            raise ValueError("family (3^2 1^b) takes two coefficients")
        put(named_root("gamma", 1, 2, r), elems[0])
        put(named_root("eta", 2, 2, r), elems[1])
    return RootCharacter.make(support, carrier, field)


def generic_character(lam: SymplecticPartition, data: Sequence, field=QQ) -> RootCharacter:
    return character_from_data(lam, data, field=field, allow_degenerate=False)


def stabilizer_dimension(lam: SymplecticPartition, character: RootCharacter) -> int:
    """Dimension of the annihilator of the character functional inside
    Lie(M(O)), by exact linear algebra over Q."""
    if not isinstance(character.field, RationalField):
        raise ValueError("stabilizer dimensions are computed over Q")
    data = grade_orbit(lam)
    carrier = data.level(2)
    if not character.roots <= carrier:
        raise ValueError("character is not supported on V_2 of this orbit")
    r = lam.rank
    levi = list(data.levi_roots)
    cols = r + len(levi)
    coeffs = {a: Fraction(c) for a, c in character.support}
    rows = []
    for beta in sorted(carrier, key=lambda a: a.coords):
        row = [Fraction(0)] * cols
        cb = coeffs.get(beta)
        if cb is not None:
            for i in range(r):
                row[i] = beta.coords[i] * cb
        for k, tau in enumerate(levi):
            s = tau.plus(beta)
            if s is not None and s in coeffs:
                row[r + k] = liealg.structure_constant(tau, beta) * coeffs[s]
        rows.append(row)
    return cols - linalg.matrix_rank(rows)


def expected_stabilizer_dimension(lam: SymplecticPartition) -> int:
    """Stabilizer dimension of a generic character for the supported families."""
    fam = _family(lam)
    if fam is None:
        raise ValueError(f"unsupported orbit family {lam}")
    kind, size = fam
    ones = lam.parts.count(1)
    s = ones // 2
    sp_part = s * (2 * s + 1)
    if kind == "2^a":
        return size * (size - 1) // 2 + sp_part
    if kind == "2m":
        return sp_part
    return 3 + sp_part  # 3^2: an sl_2 on top of the small symplectic factor


def is_generic_character(lam: SymplecticPartition, character: RootCharacter) -> bool:
    return stabilizer_dimension(lam, character) == expected_stabilizer_dimension(lam)


def split_form_check(eps: Sequence, field=QQ) -> str:
    """Whether the diagonal form with the given coefficients admits a full
    pairing into hyperbolic pairs: each pair's product must be -1 times a
    square.  Odd length drops one coordinate (absorbed up to squares).

    Returns 'split', 'nonsplit' or 'undecided' (oracle gaps only).
    """
    elems = []
    for x in eps:
        if isinstance(x, (int, Fraction)):
            elems.append(field.element(x))
        else:
            elems.append(x)
    neg = field.neg_one()

    unknown_seen = False

    def pair_ok(a, b) -> Optional[bool]:
        return field.is_square(field.mul(field.mul(a, b), neg))

    def match(indices: tuple[int, ...]) -> bool:
        # True iff the coordinates pair off with every product in -1 * squares
        nonlocal unknown_seen
        if not indices:
            return True
        first, rest = indices[0], indices[1:]
        for k, j in enumerate(rest):
            ok = pair_ok(elems[first], elems[j])
            if ok is None:
                unknown_seen = True
                continue
            if ok and match(rest[:k] + rest[k + 1 :]):
                return True
        return False

    n = len(elems)
    if n % 2 == 0:
        if match(tuple(range(n))):
            return "split"
    else:
        for drop in range(n):
            if match(tuple(i for i in range(n) if i != drop)):
                return "split"
    return "undecided" if unknown_seen else "nonsplit"
