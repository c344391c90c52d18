"""Field handles: exact arithmetic plus a square-class oracle.

Two instances are provided.  RationalField works with honest Fractions and
decides squareness by factoring.  SquareClassField models an abstract field
of characteristic 0 through declared square classes of named elements (a
what-if oracle); classes multiply as an elementary abelian 2-group and an
element with an undeclared class answers None to square queries.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import FrozenSet, Iterable, Optional, Union

__all__ = ["RationalField", "SquareClassField", "SquareClassElement", "QQ"]


def _squarefree_class(x: Fraction) -> FrozenSet[str]:
    n = abs(x.numerator) * x.denominator
    cls = set()
    if x < 0:
        cls.add("-1")
    d = 2
    while d * d <= n:
        e = 0
        while n % d == 0:
            n //= d
            e += 1
        if e % 2:
            cls.add(str(d))
        d += 1
    if n > 1:
        cls.add(str(n))
    return frozenset(cls)


class RationalField:
    """The rationals with the exact square-class oracle."""

    name = "Q"

    def element(self, value) -> Fraction:
        x = Fraction(value)
        if x == 0:
            raise ValueError("field elements must be nonzero")
        return x

    def one(self) -> Fraction:
        return Fraction(1)

    def neg_one(self) -> Fraction:
        return Fraction(-1)

    def mul(self, a: Fraction, b: Fraction) -> Fraction:
        return a * b

    def inv(self, a: Fraction) -> Fraction:
        return 1 / a

    def pow(self, a: Fraction, k: int) -> Fraction:
        return a ** k

    def square_class(self, a: Fraction) -> FrozenSet[str]:
        return _squarefree_class(Fraction(a))

    def is_square(self, a: Fraction) -> Optional[bool]:
        return not self.square_class(a)


@dataclass(frozen=True)
class SquareClassElement:
    label: str
    cls: Optional[FrozenSet[str]]  # None: class not declared

    def __str__(self) -> str:
        return self.label


class SquareClassField:
    """Abstract field known only through square classes of named elements."""

    def __init__(
        self,
        classes: Optional[dict] = None,
        neg_one_is_square: bool = False,
        name: str = "K",
    ):
        self.name = name
        self._classes = dict(classes or {})
        self._neg_one = frozenset() if neg_one_is_square else frozenset({"-1"})

    def element(self, label: str) -> SquareClassElement:
        if label in self._classes:
            raw = self._classes[label]
            cls = None if raw is None else frozenset(raw)
        else:
            cls = frozenset({label})  # fresh generator: its own class
        return SquareClassElement(label, cls)

    def one(self) -> SquareClassElement:
        return SquareClassElement("1", frozenset())

    def neg_one(self) -> SquareClassElement:
        return SquareClassElement("-1", self._neg_one)

    def mul(self, a: SquareClassElement, b: SquareClassElement) -> SquareClassElement:
        cls = None if a.cls is None or b.cls is None else a.cls ^ b.cls
        return SquareClassElement(f"{a.label}*{b.label}", cls)

    def inv(self, a: SquareClassElement) -> SquareClassElement:
        return SquareClassElement(f"({a.label})^-1", a.cls)

    def pow(self, a: SquareClassElement, k: int) -> SquareClassElement:
        if k % 2 == 0:
            return SquareClassElement(f"({a.label})^{k}", frozenset())
        return SquareClassElement(f"({a.label})^{k}", a.cls)

    def square_class(self, a: SquareClassElement) -> Optional[FrozenSet[str]]:
        return a.cls

    def is_square(self, a: SquareClassElement) -> Optional[bool]:
        if a.cls is None:
            return None
        return not a.cls


QQ = RationalField()
