"""Unipotent subgroups as root sets, characters on them, Weyl/torus
conjugation, and the combinatorial validation of exchange triples and
exchange quadruples."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Optional, Sequence

from . import liealg, linalg
from .fields import QQ, RationalField
from .filtration import RootCharacter
from .roots import Root, WeylElement, commutator_support

__all__ = [
    "RootGroupSet",
    "ExchangeTriple",
    "TripleReport",
    "QuadrupleReport",
    "validate_root_group_set",
    "conjugate",
    "torus_scale",
    "check_exchange_triple",
    "check_exchange_quadruple",
]


def _closure_defect(roots: frozenset[Root]) -> Optional[tuple[Root, Root, Root]]:
    for a, b in itertools.combinations(roots, 2):
        s = a.plus(b)
        if s is not None and s not in roots:
            return a, b, s
    return None


def validate_root_group_set(roots) -> bool:
    """True iff the set is closed under root addition and nilpotent."""
    rs = frozenset(roots)
    if not rs:
        return True
    rank = next(iter(rs)).rank
    if any(a.rank != rank for a in rs):
        return False
    if any(-a in rs for a in rs):
        return False
    return _closure_defect(rs) is None


@dataclass(frozen=True)
class RootGroupSet:
    """A closed, nilpotent set of roots (a coordinate unipotent subgroup)."""

    roots: frozenset[Root]
    rank: int

    @staticmethod
    def make(roots, rank: Optional[int] = None) -> "RootGroupSet":
        rs = frozenset(roots)
        if rank is None:
            if not rs:
                raise ValueError("empty set needs an explicit rank")
            rank = next(iter(rs)).rank
        return RootGroupSet(rs, rank)

    def __post_init__(self) -> None:
        if any(a.rank != self.rank for a in self.roots):
            raise ValueError("rank mismatch inside root set")
        if any(-a in self.roots for a in self.roots):
            raise ValueError("set is not nilpotent: contains opposite roots")
        defect = _closure_defect(self.roots)
        if defect is not None:
            a, b, s = defect
            raise ValueError(f"set is not closed: {a} + {b} = {s} is missing")

    def __contains__(self, alpha: Root) -> bool:
        return alpha in self.roots

    def __len__(self) -> int:
        return len(self.roots)

    def without(self, alpha: Root) -> "RootGroupSet":
        return RootGroupSet(self.roots - {alpha}, self.rank)

    def with_root(self, alpha: Root) -> "RootGroupSet":
        return RootGroupSet(self.roots | {alpha}, self.rank)

    def sorted_roots(self) -> list[Root]:
        return sorted(self.roots, key=lambda a: a.coords)

    def to_json(self) -> list:
        return [list(a.coords) for a in self.sorted_roots()]


@dataclass(frozen=True)
class ExchangeTriple:
    """An ordered root triple (alpha, gamma, beta); beta = alpha + gamma is
    checked by the validator, not enforced here, so that mutated triples can
    be fed to the checker and fail."""

    alpha: Root
    gamma: Root
    beta: Root

    @property
    def sum_consistent(self) -> bool:
        return tuple(a + g for a, g in zip(self.alpha.coords, self.gamma.coords)) == self.beta.coords


@dataclass(frozen=True)
class TripleReport:
    passed: bool
    conditions: tuple[tuple[str, bool], ...]
    support_domain_ambiguous: bool = False
    reason: str = ""

    def condition(self, name: str) -> bool:
        return dict(self.conditions)[name]

    def to_json(self) -> dict:
        return {
            "schema": "sympcap/1",
            "passed": self.passed,
            "conditions": {k: v for k, v in self.conditions},
            "support_domain_ambiguous": self.support_domain_ambiguous,
            "reason": self.reason,
        }


@dataclass(frozen=True)
class QuadrupleReport:
    passed: bool
    properties: tuple[tuple[str, bool], ...]
    pairing: tuple[tuple[Any, ...], ...] = ()
    reason: str = ""

    def prop(self, name: str) -> bool:
        return dict(self.properties)[name]

    def to_json(self) -> dict:
        return {
            "schema": "sympcap/1",
            "passed": self.passed,
            "properties": {k: v for k, v in self.properties},
            "pairing": [[str(x) for x in row] for row in self.pairing],
            "reason": self.reason,
        }


def conjugate(w: WeylElement, c: RootGroupSet, psi: RootCharacter) -> tuple[RootGroupSet, RootCharacter]:
    """Transport the root set and character along w.

    Coefficients are carried unchanged; the Chevalley sign of the standard
    representative is available from liealg.weyl_conjugation_sign, and no
    verdict in this module depends on it.
    """
    if w.rank != c.rank:
        raise ValueError("rank mismatch")
    new_roots = frozenset(w.apply(a) for a in c.roots)
    support = {w.apply(a): coeff for a, coeff in psi.support}
    new_psi = RootCharacter.make(support, frozenset(w.apply(a) for a in psi.carrier), psi.field)
    return RootGroupSet(new_roots, c.rank), new_psi


def torus_scale(t: Sequence, psi: RootCharacter, field=None) -> RootCharacter:
    """Scale the coefficient on each support root alpha by alpha(t)."""
    field = field or psi.field
    entries = []
    for x in t:
        if isinstance(x, (int, Fraction)):
            entries.append(field.element(x))
        else:
            entries.append(x)
    support = {}
    for alpha, coeff in psi.support:
        scale = field.one()
        for ti, ci in zip(entries, alpha.coords):
            if ci:
                scale = field.mul(scale, field.pow(ti, ci))
        support[alpha] = field.mul(coeff, scale)
    return RootCharacter.make(support, psi.carrier, field)


def _supports_within(alpha: Root, others, target: frozenset[Root]) -> bool:
    for mu in others:
        if all(a + b == 0 for a, b in zip(alpha.coords, mu.coords)):
            return False  # opposite root group: torus direction, not allowed
        if not commutator_support(alpha, mu) <= target:
            return False
    return True


def check_exchange_triple(c: RootGroupSet, psi: RootCharacter, triple: ExchangeTriple) -> TripleReport:
    """Evaluate the four exchange-triple conditions for the core set c.

    c is the common subgroup: it contains beta (with a nontrivial character)
    and contains neither alpha nor gamma.  The caller may hold the state
    c + alpha, c, or c + gamma; the verdict licenses moving between them.
    """
    alpha, gamma, beta = triple.alpha, triple.gamma, triple.beta
    supp = psi.roots
    if beta not in supp:
        raise ValueError(f"beta {beta} does not carry the character")
    ambiguous = any(not a.is_positive for a in supp)

    state_ok = (
        supp <= c.roots
        and alpha not in c
        and gamma not in c
        and -alpha not in c
        and -gamma not in c
        and beta in c
    )
    conditions: list[tuple[str, bool]] = [("state", state_ok)]
    if not state_ok:
        conditions += [("c1", False), ("c2", False), ("c3", False), ("c4", False)]
        return TripleReport(False, tuple(conditions), ambiguous, "malformed proof state")

    combos = set()
    if not all(a + g == 0 for a, g in zip(alpha.coords, gamma.coords)):
        combos = commutator_support(alpha, gamma)
    c1 = combos <= c.roots

    c2 = _supports_within(alpha, c.roots, c.roots) and _supports_within(gamma, c.roots, c.roots)

    c3 = triple.sum_consistent

    c4 = True
    for beta_prime in supp - {beta}:
        for i, j in itertools.product(range(1, 5), repeat=2):
            v = tuple(i * a + j * g for a, g in zip(alpha.coords, gamma.coords))
            if v == beta_prime.coords:
                c4 = False
    conditions += [("c1", c1), ("c2", c2), ("c3", c3), ("c4", c4)]
    passed = c1 and c2 and c3 and c4
    return TripleReport(passed, tuple(conditions), ambiguous)


def _pairing_matrix(c: RootGroupSet, psi: RootCharacter, x_free: list[Root], y_free: list[Root]):
    coeffs = dict(psi.support)
    rows = []
    rational = all(isinstance(v, (int, Fraction)) for v in coeffs.values())
    for x in x_free:
        row = []
        for y in y_free:
            s = x.plus(y)
            if s is not None and s in coeffs:
                n = liealg.structure_constant(x, y)
                row.append(coeffs[s] * n if rational else (coeffs[s], n))
            else:
                row.append(Fraction(0) if rational else 0)
        rows.append(row)
    return rows, rational


def check_exchange_quadruple(
    c: RootGroupSet, psi: RootCharacter, x: RootGroupSet, y: RootGroupSet
) -> QuadrupleReport:
    """Evaluate the six exchange-quadruple properties at the root level."""
    if not psi.roots <= c.roots:
        return QuadrupleReport(
            False,
            tuple((f"p{i}", False) for i in range(1, 7)),
            reason="character support is not carried by the core set",
        )
    supp = psi.roots

    def normalizes(sub: RootGroupSet) -> bool:
        try:
            return all(_supports_within(xi, c.roots, c.roots) for xi in sub.roots)
        except ValueError:
            return False

    p1 = normalizes(x) and normalizes(y)

    def normal_abelian(sub: RootGroupSet) -> bool:
        inter = sub.roots & c.roots
        free = sub.roots - inter
        for xi in sub.roots:
            for mu in inter:
                if xi == mu:
                    continue
                if all(a + b == 0 for a, b in zip(xi.coords, mu.coords)):
                    return False
                if not commutator_support(xi, mu) <= inter:
                    return False
        for a, b in itertools.combinations(free, 2):
            s = a.plus(b)
            if s is not None and s in free:
                return False
        return True

    p2 = normal_abelian(x) and normal_abelian(y)

    def preserves_character(sub: RootGroupSet) -> bool:
        for xi in sub.roots:
            for mu in c.roots:
                if all(a + b == 0 for a, b in zip(xi.coords, mu.coords)):
                    return False
                if commutator_support(xi, mu) & supp:
                    return False
        return True

    p3 = preserves_character(x) and preserves_character(y)

    p4 = not (supp & x.roots & c.roots) and not (supp & y.roots & c.roots)

    p5 = True
    for xi in x.roots:
        for eta in y.roots:
            if all(a + b == 0 for a, b in zip(xi.coords, eta.coords)):
                p5 = False
                continue
            if not commutator_support(xi, eta) <= c.roots:
                p5 = False

    x_free = sorted(x.roots - c.roots, key=lambda a: a.coords)
    y_free = sorted(y.roots - c.roots, key=lambda a: a.coords)
    pairing, rational = _pairing_matrix(c, psi, x_free, y_free)
    if len(x_free) != len(y_free):
        p6 = False
    elif not x_free:
        p6 = True
    elif rational:
        p6 = linalg.matrix_rank(pairing) == len(x_free)
    else:
        # abstract coefficients: accept only a permutation nonzero-pattern
        pattern = [[1 if v else 0 for v in row] for row in pairing]
        p6 = all(sum(row) == 1 for row in pattern) and all(
            sum(col) == 1 for col in zip(*pattern)
        )

    props = tuple(("p" + str(i + 1), v) for i, v in enumerate((p1, p2, p3, p4, p5, p6)))
    return QuadrupleReport(all(v for _, v in props), props, tuple(tuple(r) for r in pairing))
