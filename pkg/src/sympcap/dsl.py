"""Text forms for roots, root sets and characters.

Roots: bracketed coordinates "[1,0,-1]", simple-root words "a1+2*a2+a3",
or named forms "gamma(1,2)", "mu(3)", "eta(1,2)".  Sets are comma lists in
braces.  Characters are "root: coeff" lines.  Errors carry the offset of
the offending token.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Optional

from .exchange import RootGroupSet
from .fields import QQ
from .filtration import RootCharacter
from .roots import Root, named_root

__all__ = ["DslError", "parse_root", "parse_root_set", "parse_character"]


class DslError(ValueError):
    """Parse or invariant failure, annotated with a source position."""

    def __init__(self, message: str, text: str, pos: int):
        self.message = message
        self.text = text
        self.pos = pos
        super().__init__(self.render())

    def render(self) -> str:
        line = self.text.count("\n", 0, self.pos) + 1
        col = self.pos - (self.text.rfind("\n", 0, self.pos) + 1) + 1
        snippet = self.text.splitlines()[line - 1] if self.text else ""
        caret = " " * (col - 1) + "^"
        return f"{line}:{col}: {self.message}\n  {snippet}\n  {caret}"


_NAMED = re.compile(r"(gamma|eta)\s*\(\s*(\d+)\s*,\s*(\d+)\s*\)\s*$|mu\s*\(\s*(\d+)\s*\)\s*$")
_TERM = re.compile(r"\s*([+-]?)\s*(?:(\d+)\s*\*\s*)?a(\d+)\s*")


def parse_root(text: str, rank: Optional[int] = None, _base: int = 0, _full: Optional[str] = None) -> Root:
    full = _full if _full is not None else text
    s = text.strip()
    base = _base + text.index(s) if s else _base
    if not s:
        raise DslError("empty root", full, base)
    if s.startswith("["):
        if not s.endswith("]"):
            raise DslError("missing closing bracket", full, base + len(s) - 1)
        body = s[1:-1]
        parts = body.split(",") if body.strip() else []
        coords = []
        off = base + 1
        for part in parts:
            try:
                coords.append(int(part.strip()))
            except ValueError:
                raise DslError(f"bad coordinate {part.strip()!r}", full, off) from None
            off += len(part) + 1
        if rank is not None and len(coords) != rank:
            raise DslError(f"expected {rank} coordinates, got {len(coords)}", full, base)
        try:
            return Root(tuple(coords))
        except ValueError as exc:
            raise DslError(str(exc), full, base) from None
    m = _NAMED.match(s)
    if m:
        if rank is None:
            raise DslError("named roots need a rank context", full, base)
        try:
            if m.group(4) is not None:
                return named_root("mu", 0, int(m.group(4)), rank)
            return named_root(m.group(1), int(m.group(2)), int(m.group(3)), rank)
        except ValueError as exc:
            raise DslError(str(exc), full, base) from None
    if s.startswith(("gamma", "mu", "eta")):
        raise DslError("malformed named root; expected gamma(i,k), mu(k) or eta(i,k)", full, base)
    if "a" in s:
        if rank is None:
            raise DslError("simple-root words need a rank context", full, base)
        coeffs = [0] * rank
        pos = 0
        first = True
        while pos < len(s):
            m = _TERM.match(s, pos)
            if not m or (not first and not m.group(1)):
                raise DslError("expected term like '+2*a3'", full, base + pos)
            sign = -1 if m.group(1) == "-" else 1
            mult = int(m.group(2)) if m.group(2) else 1
            idx = int(m.group(3))
            if not 1 <= idx <= rank:
                raise DslError(f"simple root index {idx} out of range", full, base + pos)
            coeffs[idx - 1] += sign * mult
            pos = m.end()
            first = False
        try:
            return Root.from_simple_coords(coeffs)
        except ValueError as exc:
            raise DslError(f"not a root: {exc}", full, base) from None
    raise DslError(f"unrecognized root syntax {s!r}", full, base)


def _split_top_level(body: str) -> list[tuple[int, str]]:
    """Split on commas that are not inside brackets or parentheses."""
    items = []
    depth = 0
    start = 0
    for i, ch in enumerate(body):
        if ch in "[(":
            depth += 1
        elif ch in "])":
            depth -= 1
        elif ch == "," and depth == 0:
            items.append((start, body[start:i]))
            start = i + 1
    items.append((start, body[start:]))
    return [(off, part) for off, part in items if part.strip()]


def parse_root_set(text: str, rank: Optional[int] = None) -> RootGroupSet:
    s = text.strip()
    base = text.index(s) if s else 0
    if not (s.startswith("{") and s.endswith("}")):
        raise DslError("root set must be enclosed in braces", text, base)
    body = s[1:-1]
    roots = []
    for off, part in _split_top_level(body):
        roots.append(parse_root(part, rank, _base=base + 1 + off, _full=text))
    if not roots:
        if rank is None:
            raise DslError("empty set needs a rank context", text, base)
        return RootGroupSet(frozenset(), rank)
    try:
        return RootGroupSet.make(roots, rank or roots[0].rank)
    except ValueError as exc:
        raise DslError(str(exc), text, base) from None


def parse_character(
    text: str, rank: Optional[int] = None, carrier=None, field=QQ
) -> RootCharacter:
    support = {}
    offset = 0
    for line in text.split("\n"):
        stripped = line.strip()
        if stripped:
            if ":" not in stripped:
                raise DslError("character line must be 'root: coeff'", text, offset)
            root_part, _, coeff_part = line.partition(":")
            root = parse_root(root_part, rank, _base=offset, _full=text)
            try:
                coeff = Fraction(coeff_part.strip())
            except (ValueError, ZeroDivisionError):
                raise DslError(
                    f"bad coefficient {coeff_part.strip()!r}", text, offset + len(root_part) + 1
                ) from None
            support[root] = coeff
        offset += len(line) + 1
    if not support:
        raise DslError("character needs at least one 'root: coeff' line", text, 0)
    if carrier is None:
        # smallest closed carrier containing the support
        roots = set(support)
        changed = True
        while changed:
            changed = False
            for a in list(roots):
                for b in list(roots):
                    s = a.plus(b)
                    if s is not None and s not in roots:
                        roots.add(s)
                        changed = True
        carrier = frozenset(roots)
    else:
        carrier = frozenset(getattr(carrier, "roots", carrier))
    try:
        return RootCharacter.make(support, carrier, field)
    except ValueError as exc:
        raise DslError(str(exc), text, 0) from None
