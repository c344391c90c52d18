"""Exceptional-character verification and the parameter-transfer pipeline:
formal Satake entries with exact rational q-exponents and finite-order
unitary labels, the lift insertion rule, parameter squaring, and the
unipotent composition that makes the output non-tempered."""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence

__all__ = [
    "UnitaryLabel",
    "SatakeEntry",
    "ParamSet",
    "ExceptionalCharacter",
    "CapDatum",
    "chi_theta",
    "chi_GL",
    "is_exceptional",
    "theta_lift_params",
    "shimura_square",
    "arthur_compose",
    "is_tempered",
    "cap_triple",
    "nearly_equivalent",
]


@dataclass(frozen=True)
class UnitaryLabel:
    """Element of a free product of finite cyclic label groups: each factor
    is a named generator with a declared order."""

    factors: tuple[tuple[str, int, int], ...] = ()  # (name, exponent, order)

    @staticmethod
    def make(factors: Iterable[tuple[str, int, int]]) -> "UnitaryLabel":
        acc: dict[str, tuple[int, int]] = {}
        for name, exp, order in factors:
            if order < 1:
                raise ValueError("label order must be positive")
            old_exp, old_order = acc.get(name, (0, order))
            if old_order != order:
                raise ValueError(f"generator {name} used with two orders")
            acc[name] = ((old_exp + exp) % order, order)
        items = tuple(
            (name, exp, order) for name, (exp, order) in sorted(acc.items()) if exp
        )
        return UnitaryLabel(items)

    @staticmethod
    def trivial() -> "UnitaryLabel":
        return UnitaryLabel(())

    @staticmethod
    def generator(name: str, order: int) -> "UnitaryLabel":
        return UnitaryLabel.make([(name, 1, order)])

    def __mul__(self, other: "UnitaryLabel") -> "UnitaryLabel":
        return UnitaryLabel.make(self.factors + other.factors)

    def inverse(self) -> "UnitaryLabel":
        return UnitaryLabel.make([(n, -e, o) for n, e, o in self.factors])

    def square(self) -> "UnitaryLabel":
        return self * self

    @property
    def is_trivial(self) -> bool:
        return not self.factors

    def __str__(self) -> str:
        if not self.factors:
            return "1"
        parts = []
        for name, exp, order in self.factors:
            parts.append(f"{name}({order})" + (f"^{exp}" if exp != 1 else ""))
        return "*".join(parts)

    _TOKEN = re.compile(r"^([A-Za-z_][A-Za-z_0-9]*)\((\d+)\)(?:\^(-?\d+))?$")

    @staticmethod
    def parse(text: str) -> "UnitaryLabel":
        text = text.strip()
        if text == "1":
            return UnitaryLabel.trivial()
        factors = []
        for token in text.split("*"):
            m = UnitaryLabel._TOKEN.match(token.strip())
            if not m:
                raise ValueError(f"bad label token {token!r}")
            name, order, exp = m.group(1), int(m.group(2)), int(m.group(3) or 1)
            factors.append((name, exp, order))
        return UnitaryLabel.make(factors)


@dataclass(frozen=True, order=True)
class SatakeEntry:
    """One formal Satake entry: exact rational q-exponent plus unitary label."""

    s: Fraction
    u: UnitaryLabel = UnitaryLabel.trivial()

    def inverse(self) -> "SatakeEntry":
        return SatakeEntry(-self.s, self.u.inverse())

    def inversion_class_key(self):
        a = (self.s, str(self.u))
        inv = self.inverse()
        b = (inv.s, str(inv.u))
        return min(a, b)

    def to_json(self) -> dict:
        return {"s": str(self.s), "u": str(self.u)}

    @staticmethod
    def from_json(data: dict) -> "SatakeEntry":
        return SatakeEntry(Fraction(data["s"]), UnitaryLabel.parse(data["u"]))


@dataclass(frozen=True)
class ParamSet:
    """Multiset of Satake entries with the distinguished-sign tag."""

    entries: tuple[SatakeEntry, ...]
    sign: str = "+"

    @staticmethod
    def make(entries: Iterable, sign: str = "+") -> "ParamSet":
        norm = []
        for e in entries:
            if isinstance(e, SatakeEntry):
                norm.append(e)
            else:
                s, u = e
                norm.append(SatakeEntry(Fraction(s), u if isinstance(u, UnitaryLabel) else UnitaryLabel.parse(str(u))))
        if sign not in ("+", "-"):
            raise ValueError("distinguished sign must be '+' or '-'")
        return ParamSet(tuple(sorted(norm, key=lambda e: (e.s, str(e.u)))), sign)

    @property
    def size(self) -> int:
        return len(self.entries)

    def to_json(self) -> dict:
        return {
            "schema": "sympcap/1",
            "sign": self.sign,
            "entries": [e.to_json() for e in self.entries],
        }

    @staticmethod
    def from_json(data: dict) -> "ParamSet":
        return ParamSet.make(
            [SatakeEntry.from_json(e) for e in data["entries"]], data.get("sign", "+")
        )


@dataclass(frozen=True)
class ExceptionalCharacter:
    """Unramified character data: exact exponents of |t_i| plus the sign of
    the distinguished character it rides on."""

    exponents: tuple[Fraction, ...]
    sign: str = "+"

    @property
    def rank(self) -> int:
        return len(self.exponents)


def chi_theta(r: int) -> ExceptionalCharacter:
    """Exponent vector ((2(r-i)+1)/4)_i: the residue point of the Borel
    Eisenstein series defining the theta representation."""
    if r < 1:
        raise ValueError("rank must be positive")
    return ExceptionalCharacter(tuple(Fraction(2 * (r - i) + 1, 4) for i in range(1, r + 1)))


def chi_GL(k: int, r: int) -> ExceptionalCharacter:
    """Exponent vector ((2(r-i)+3)/4)_{i<=k} for the double-cover GL block
    inside the rank-r group."""
    if not 1 <= k <= r:
        raise ValueError("need 1 <= k <= r")
    return ExceptionalCharacter(tuple(Fraction(2 * (r - i) + 3, 4) for i in range(1, k + 1)))


def is_exceptional(chi: ExceptionalCharacter, datum) -> tuple[bool, list]:
    """Whether the character value on h_alpha(pi^n_alpha) is q^-1 on every
    simple root.  Returns (verdict, per-root report of q-exponents)."""
    report = []
    ok = True
    s = chi.exponents
    for label, n_alpha, coroot in datum.exceptional_pairings():
        if len(coroot) != len(s):
            raise ValueError("rank mismatch between character and datum")
        pairing = sum(Fraction(c) * si for c, si in zip(coroot, s))
        exponent = -n_alpha * pairing
        report.append((label, n_alpha, exponent))
        if exponent != -1:
            ok = False
    return ok, report


def theta_lift_params(m: int, n: int, chi: ParamSet) -> ParamSet:
    """Transfer of unramified data from rank m to rank n >= m: the input
    entries survive and k = n - m entries with exponents (2(k-i)+1)/4 are
    inserted."""
    if m > n:
        raise ValueError("need m <= n")
    if chi.size != m:
        raise ValueError(f"input has {chi.size} entries, expected {m}")
    k = n - m
    extra = [SatakeEntry(Fraction(2 * (k - i) + 1, 4)) for i in range(1, k + 1)]
    return ParamSet.make(list(chi.entries) + extra, chi.sign)


def shimura_square(chi: ParamSet) -> ParamSet:
    """Square each entry: (s, u) -> (2s, u^2)."""
    return ParamSet.make(
        [SatakeEntry(2 * e.s, e.u.square()) for e in chi.entries], chi.sign
    )


def arthur_compose(psi: ParamSet, k: int) -> ParamSet:
    """Compose with the 2k-dimensional unipotent block: prepend exponents
    (2j-1)/2 for j = k..1 with trivial labels."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    extra = [SatakeEntry(Fraction(2 * j - 1, 2)) for j in range(k, 0, -1)]
    return ParamSet.make(extra + list(psi.entries), psi.sign)


def is_tempered(psi: ParamSet) -> bool:
    return all(e.s == 0 for e in psi.entries)


@dataclass(frozen=True)
class CapDatum:
    parabolic_label: str
    exponents: tuple[Fraction, ...]
    swapped: bool  # True: the roles of the two representations are exchanged

    def to_json(self) -> dict:
        return {
            "schema": "sympcap/1",
            "parabolic": self.parabolic_label,
            "exponents": [str(x) for x in self.exponents],
            "swapped": self.swapped,
        }


def cap_triple(m: int, n_pi: int, n: int) -> CapDatum:
    """Parabolic label and exceptional exponents of the near-equivalence
    datum at first occurrence index n_pi against embedded rank n."""
    t = n_pi - n
    if t >= 0:
        exps = tuple(Fraction(2 * (t - i) + 1, 4) for i in range(1, t + 1))
        return CapDatum(f"Q_{{{t},{n}}}", exps, False)
    tt = -t
    exps = tuple(Fraction(2 * (tt - i) + 1, 4) for i in range(1, tt + 1))
    return CapDatum(f"Q_{{{tt},{n_pi}}}", exps, True)


def nearly_equivalent(a: ParamSet, b: ParamSet) -> bool:
    """Multiset equality of inversion classes (s,u) ~ (-s, u^-1)."""
    if a.sign != b.sign:
        raise ValueError("parameter sets carry different distinguished signs")
    if a.size != b.size:
        raise ValueError("parameter sets of different sizes")
    ka = sorted(e.inversion_class_key() for e in a.entries)
    kb = sorted(e.inversion_class_key() for e in b.entries)
    return ka == kb
