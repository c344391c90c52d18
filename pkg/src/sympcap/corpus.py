"""The replayable corpus of exchange checks.

Each entry freezes one exchange step: the core root set C, the character on
it, the root triple (or the X/Y pair), and the expected verdict.  Builders
below reconstruct every entry by replaying the argument it was taken from,
asserting each intermediate state, so the shipped JSON file can always be
regenerated and diffed.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources
from typing import Iterable, Optional

from .exchange import (
    ExchangeTriple,
    RootGroupSet,
    check_exchange_quadruple,
    check_exchange_triple,
    conjugate,
)
from .filtration import RootCharacter, grade_orbit
from .orbits import SymplecticPartition
from .roots import Root, WeylElement, positive_roots, simple_root

__all__ = ["CorpusEntry", "CorpusError", "load_corpus", "build_corpus", "run_entry"]

DATA_FILE = "corpus.json"


class CorpusError(ValueError):
    pass


@dataclass(frozen=True)
class CorpusEntry:
    name: str
    paper_ref: str
    rank: int
    kind: str  # "triple" | "quadruple"
    c_roots: tuple[Root, ...]
    psi: tuple[tuple[Root, Fraction], ...]
    alpha: Optional[Root] = None
    gamma: Optional[Root] = None
    beta: Optional[Root] = None
    x_roots: Optional[tuple[Root, ...]] = None
    y_roots: Optional[tuple[Root, ...]] = None
    expect: str = "pass"

    def core(self) -> RootGroupSet:
        return RootGroupSet.make(self.c_roots, self.rank)

    def character(self) -> RootCharacter:
        return RootCharacter.make(dict(self.psi), frozenset(self.c_roots))

    def to_json(self) -> dict:
        out = {
            "name": self.name,
            "paper_ref": self.paper_ref,
            "rank": self.rank,
            "kind": self.kind,
            "C": sorted([list(a.coords) for a in self.c_roots]),
            "psi": {str(a): str(c) for a, c in sorted(self.psi, key=lambda t: t[0].coords)},
            "expect": self.expect,
        }
        if self.kind == "triple":
            out["alpha"] = list(self.alpha.coords)
            out["gamma"] = list(self.gamma.coords)
            out["beta"] = list(self.beta.coords)
        else:
            out["X"] = sorted([list(a.coords) for a in self.x_roots])
            out["Y"] = sorted([list(a.coords) for a in self.y_roots])
        return out

    @staticmethod
    def from_json(data: dict) -> "CorpusEntry":
        try:
            rank = int(data["rank"])
            kind = data["kind"]
            c_roots = tuple(Root(tuple(v)) for v in data["C"])
            psi = tuple(
                (Root(tuple(int(x) for x in key.strip("[]").split(","))), Fraction(val))
                for key, val in data["psi"].items()
            )
            common = dict(
                name=data["name"],
                paper_ref=data["paper_ref"],
                rank=rank,
                kind=kind,
                c_roots=c_roots,
                psi=psi,
                expect=data.get("expect", "pass"),
            )
            if kind == "triple":
                return CorpusEntry(
                    alpha=Root(tuple(data["alpha"])),
                    gamma=Root(tuple(data["gamma"])),
                    beta=Root(tuple(data["beta"])),
                    **common,
                )
            if kind == "quadruple":
                return CorpusEntry(
                    x_roots=tuple(Root(tuple(v)) for v in data["X"]),
                    y_roots=tuple(Root(tuple(v)) for v in data["Y"]),
                    **common,
                )
            raise KeyError(f"unknown kind {kind!r}")
        except (KeyError, TypeError, ValueError) as exc:
            raise CorpusError(f"malformed corpus entry: {exc}") from exc


def run_entry(entry: CorpusEntry):
    """Run the checker an entry names and return its report."""
    core = entry.core()
    psi = entry.character()
    if entry.kind == "triple":
        return check_exchange_triple(core, psi, ExchangeTriple(entry.alpha, entry.gamma, entry.beta))
    return check_exchange_quadruple(
        core, psi, RootGroupSet.make(entry.x_roots, entry.rank), RootGroupSet.make(entry.y_roots, entry.rank)
    )


def load_corpus() -> list[CorpusEntry]:
    """Load the corpus entries shipped with the package."""
    try:
        text = resources.files("sympcap").joinpath("data").joinpath(DATA_FILE).read_text()
        data = json.loads(text)
        if data.get("schema") != "sympcap/1":
            raise CorpusError("corpus file has wrong or missing schema tag")
        return [CorpusEntry.from_json(e) for e in data["entries"]]
    except (OSError, json.JSONDecodeError) as exc:
        raise CorpusError(f"cannot read corpus file: {exc}") from exc


def corpus_to_json(entries: Iterable[CorpusEntry]) -> dict:
    return {"schema": "sympcap/1", "entries": [e.to_json() for e in entries]}


# ---------------------------------------------------------------------------
# builders: replay each argument and freeze the states


def _e(rank: int, *terms) -> Root:
    v = [0] * rank
    for coef, idx in terms:
        v[idx - 1] += coef
    return Root(tuple(v))


def _siegel(rank: int) -> frozenset[Root]:
    out = set()
    for i in range(1, rank + 1):
        out.add(_e(rank, (2, i)))
        for j in range(i + 1, rank + 1):
            out.add(_e(rank, (1, i), (1, j)))
    return frozenset(out)


class _Replay:
    """Mutable (state, character) pair that records passing exchange steps."""

    def __init__(self, roots: Iterable[Root], supp: dict, rank: int):
        self.state = RootGroupSet.make(roots, rank)
        self.supp = dict(supp)
        self.rank = rank
        self.entries: list[CorpusEntry] = []

    def character(self, carrier) -> RootCharacter:
        return RootCharacter.make(self.supp, carrier)

    def conjugate(self, w: WeylElement) -> None:
        c, psi = conjugate(w, self.state, self.character(self.state.roots))
        self.state = c
        self.supp = {a: coeff for a, coeff in psi.support}

    def exchange(
        self, name: str, ref: str, alpha: Root, gamma: Root, beta: Root, mode: str = "swap"
    ) -> None:
        """Validate the triple on the core state, then move the state.

        The verdict licenses moving between the three states core+alpha,
        core, core+gamma; mode picks the move: 'swap' (alpha out, gamma in),
        'remove' (alpha out), 'add' (gamma in).
        """
        core = self.state.without(alpha) if alpha in self.state else self.state
        psi = self.character(core.roots)
        report = check_exchange_triple(core, psi, ExchangeTriple(alpha, gamma, beta))
        assert report.passed, f"{name}: replay step failed {report.conditions}"
        self.entries.append(
            CorpusEntry(
                name=name,
                paper_ref=ref,
                rank=self.rank,
                kind="triple",
                c_roots=tuple(core.sorted_roots()),
                psi=tuple(sorted(self.supp.items(), key=lambda t: t[0].coords)),
                alpha=alpha,
                gamma=gamma,
                beta=beta,
            )
        )
        self.state = core if mode == "remove" else core.with_root(gamma)


def _even_case(r: int) -> tuple[list[CorpusEntry], dict]:
    """Split-coefficient reduction for the doubled even rank (rank 2r)."""
    rank = 2 * r
    supp = {_e(rank, (1, rank - 2 * k + 1), (1, rank - 2 * k + 2)): Fraction(1) for k in range(1, r + 1)}
    rp = _Replay(_siegel(rank), supp, rank)
    snapshots = {}
    for k in range(r):
        c = rank - 2 * k
        if k == 0:
            rp.conjugate(WeylElement.coordinate_flip(rank, rank))
            alpha = _e(rank, (-2, rank))
            beta = _e(rank, (1, rank - 1), (-1, rank))
            gamma = _e(rank, (1, rank - 1), (1, rank))
            rp.exchange(
                f"even-sp{2 * rank}-step0",
                "split-coefficient computation, doubled even rank, opening step",
                alpha,
                gamma,
                beta,
            )
        else:
            beta_next = _e(rank, (1, c - 1), (1, c))
            flip = WeylElement.coordinate_flip(c, rank)
            would_negate = [
                a for a in rp.state.sorted_roots() if not flip.apply(a).is_positive
            ]
            mu_c = _e(rank, (2, c))
            gamma_led = sorted(
                (a for a in would_negate if min(a.coords) < 0),
                key=lambda a: a.coords.index(-1),
                reverse=True,
            )
            eta_led = sorted(
                (a for a in would_negate if a != mu_c and min(a.coords) >= 0),
                key=lambda a: max(i for i, x in enumerate(a.coords) if x),
                reverse=True,
            )
            for tag, batch in (("gamma", gamma_led), ("eta", eta_led), ("mu", [mu_c])):
                for pos, alpha in enumerate(batch):
                    gamma = Root(tuple(b - a for a, b in zip(alpha.coords, beta_next.coords)))
                    suffix = "" if len(batch) == 1 else f"-{pos}"
                    rp.exchange(
                        f"even-sp{2 * rank}-step{k}-{tag}{suffix}",
                        "split-coefficient computation, doubled even rank, inductive step",
                        alpha,
                        gamma,
                        beta_next,
                    )
            rp.conjugate(flip)
        if k == 0:
            snapshots["after_step0"] = (rp.state, dict(rp.supp))
    # the terminal state: rows with odd index, semi-Whittaker support
    expect_roots = set()
    for i in range(1, rank + 1, 2):
        expect_roots.add(_e(rank, (2, i)))
        for j in range(i + 1, rank + 1):
            expect_roots.add(_e(rank, (1, i), (1, j)))
            expect_roots.add(_e(rank, (1, i), (-1, j)))
    assert rp.state.roots == frozenset(expect_roots), "even-case replay end state is wrong"
    expect_supp = {_e(rank, (1, i), (-1, i + 1)) for i in range(1, rank, 2)}
    assert set(rp.supp) == expect_supp, "even-case replay end character is wrong"
    return rp.entries, snapshots


def _even_quadruple(r2_snapshot) -> CorpusEntry:
    """Quadruple form of the first inductive-step pairing at doubled rank 4:
    the single-row exchange with X the outgoing leg and Y its pair."""
    state, supp = r2_snapshot
    rank = 4
    x_root = _e(rank, (1, 2), (-1, 4))
    y_root = _e(rank, (1, 1), (1, 4))
    core = state.without(x_root)
    entry = CorpusEntry(
        name="even-sp8-step1-pairing-quadruple",
        paper_ref="split-coefficient computation, single-pair exchange as a quadruple",
        rank=rank,
        kind="quadruple",
        c_roots=tuple(core.sorted_roots()),
        psi=tuple(sorted(supp.items(), key=lambda t: t[0].coords)),
        x_roots=(x_root,),
        y_roots=(y_root,),
    )
    report = run_entry(entry)
    assert report.passed, f"quadruple replay failed: {report.properties}"
    assert len(report.pairing) == 1 and abs(report.pairing[0][0]) == 1
    return entry


def _odd_case(r: int) -> list[CorpusEntry]:
    """Doubled odd rank (rank 2r+1): pivot the paired character around the
    first coordinate."""
    rank = 2 * r + 1
    corner = _e(rank, (1, 1), (1, rank))
    roots = set(_siegel(rank)) - {corner}
    supp = {_e(rank, (1, 2 * k), (1, 2 * k + 1)): Fraction(1) for k in range(1, r + 1)}
    rp = _Replay(roots, supp, rank)
    for k in range(1, r + 1):
        alpha = _e(rank, (1, 1), (1, 2 * k + 1))
        gamma = _e(rank, (1, 2 * k), (-1, 1))
        beta = _e(rank, (1, 2 * k), (1, 2 * k + 1))
        rp.exchange(
            f"odd-sp{2 * rank}-k{k}",
            "split-coefficient computation, doubled odd rank",
            alpha,
            gamma,
            beta,
        )
    expect = (set(_siegel(rank)) - {_e(rank, (1, 1), (1, 2 * k + 1)) for k in range(1, r + 1)}) | {
        _e(rank, (1, 2 * k), (-1, 1)) for k in range(1, r + 1)
    }
    assert rp.state.roots == frozenset(expect), "odd-case replay end state is wrong"
    return rp.entries


def _fj_base_sp6() -> list[CorpusEntry]:
    """Rank-3 base case of the Fourier-Jacobi vanishing argument."""
    rank = 3
    # Y V_2 U_(mu_3) for the one-big-part orbit (4,1,1): everything except e2-e3
    roots = {
        _e(rank, (1, 1), (-1, 2)),
        _e(rank, (1, 1), (-1, 3)),
        _e(rank, (1, 1), (1, 2)),
        _e(rank, (1, 1), (1, 3)),
        _e(rank, (1, 2), (1, 3)),
        _e(rank, (2, 1)),
        _e(rank, (2, 2)),
        _e(rank, (2, 3)),
    }
    supp = {_e(rank, (1, 1), (-1, 2)): Fraction(1), _e(rank, (2, 2)): Fraction(1)}
    rp = _Replay(roots, supp, rank)
    rp.conjugate(WeylElement.from_word([1, 2], rank))
    alpha = _e(rank, (-1, 1), (1, 2))
    gamma = _e(rank, (1, 1), (-1, 3))
    beta = _e(rank, (1, 2), (-1, 3))
    rp.exchange(
        "fj-base-sp6",
        "base case of the rank-3 Fourier-Jacobi vanishing argument",
        alpha,
        gamma,
        beta,
    )
    entries = rp.entries
    # the same step in quadruple form
    base = entries[0]
    quad = CorpusEntry(
        name="fj-base-sp6-quadruple",
        paper_ref="base case of the rank-3 Fourier-Jacobi vanishing argument",
        rank=rank,
        kind="quadruple",
        c_roots=base.c_roots,
        psi=base.psi,
        x_roots=(alpha,),
        y_roots=(gamma,),
    )
    assert run_entry(quad).passed
    entries.append(quad)
    # end state is the radical of the parabolic that drops the first simple root
    expect = {a for a in _positive(rank) if a != simple_root(1, rank)}
    assert rp.state.roots == frozenset(expect)
    return entries


def _positive(rank: int) -> set[Root]:
    return set(positive_roots(rank))


def _fj_sp8() -> list[CorpusEntry]:
    """Rank-4 step of the same argument: remove the stray Heisenberg root,
    then replay the base exchange after the two-cycle conjugation."""
    rank = 4
    lam = SymplecticPartition((4, 1, 1, 1, 1))
    v2 = grade_orbit(lam).level(2)
    y_half = {_e(rank, (1, 2), (1, 3)), _e(rank, (1, 2), (1, 4))}
    roots = set(v2) | y_half | {_e(rank, (2, 3))}
    supp = {_e(rank, (1, 1), (-1, 2)): Fraction(1), _e(rank, (2, 2)): Fraction(1)}
    rp = _Replay(roots, supp, rank)
    rp.exchange(
        "fj-sp8-heisenberg-removal",
        "rank-4 Fourier-Jacobi reduction: clearing the paired Heisenberg root",
        _e(rank, (1, 2), (1, 4)),
        _e(rank, (1, 2), (-1, 4)),
        _e(rank, (2, 2)),
        mode="remove",
    )
    rp.conjugate(WeylElement.from_word([1, 2], rank))
    rp.exchange(
        "fj-sp8-base-exchange",
        "rank-4 Fourier-Jacobi reduction after the two-cycle conjugation",
        _e(rank, (-1, 1), (1, 2)),
        _e(rank, (1, 1), (-1, 3)),
        _e(rank, (1, 2), (-1, 3)),
    )
    # end state: block upper-triangular set with row-2 legs and symmetric part
    expect = {
        _e(rank, (1, 1), (-1, 3)),
        _e(rank, (1, 2), (-1, 3)),
        _e(rank, (1, 2), (1, 4)),
        _e(rank, (1, 2), (-1, 4)),
        _e(rank, (1, 1), (1, 2)),
        _e(rank, (1, 1), (1, 3)),
        _e(rank, (1, 2), (1, 3)),
        _e(rank, (2, 1)),
        _e(rank, (2, 2)),
        _e(rank, (2, 3)),
    }
    assert rp.state.roots == frozenset(expect), "rank-4 Fourier-Jacobi end state is wrong"
    return rp.entries


def _threesq(rank: int) -> list[CorpusEntry]:
    """The two-triple families and the closing long-root exchange for the
    pair-of-threes orbit at the given ambient rank (>= 4)."""
    ones = 2 * rank - 6
    lam = SymplecticPartition((3, 3) + (1,) * ones)
    v2 = grade_orbit(lam).level(2)
    # drop the mirror short root paired against the character, keep the
    # stabilizer line spanned over the first simple root and 2 e_3
    roots = (set(v2) - {_e(rank, (1, 2), (-1, 3))}) | {simple_root(1, rank), _e(rank, (2, 3))}
    supp = {
        _e(rank, (1, 1), (-1, 3)): Fraction(1),
        _e(rank, (1, 2), (1, 3)): Fraction(1),
    }
    rp = _Replay(roots, supp, rank)
    rp.conjugate(WeylElement.simple(2, rank))
    sp = 2 * rank
    for i in range(3, rank):  # ascending
        rp.exchange(
            f"threesq-sp{sp}-in-i{i}",
            "pair-of-threes orbit: clearing the third-row legs, first family",
            _e(rank, (1, 3), (-1, i + 1)),
            _e(rank, (1, 2), (1, i + 1)),
            _e(rank, (1, 2), (1, 3)),
        )
    for j in range(rank - 1, 2, -1):  # descending
        rp.exchange(
            f"threesq-sp{sp}-out-j{j}",
            "pair-of-threes orbit: clearing the third-row legs, second family",
            _e(rank, (1, 3), (1, j + 1)),
            _e(rank, (1, 2), (-1, j + 1)),
            _e(rank, (1, 2), (1, 3)),
        )
    rp.conjugate(WeylElement.coordinate_flip(3, rank))
    rp.exchange(
        f"threesq-sp{sp}-mu",
        "pair-of-threes orbit: closing long-root exchange",
        _e(rank, (-2, 3)),
        _e(rank, (1, 2), (1, 3)),
        _e(rank, (1, 2), (-1, 3)),
    )
    # end state: radical of the two-line parabolic with the standard 2-step character
    expect = {a for a in _positive(rank) if a.coords[0] != 0 or a.coords[1] != 0}
    assert rp.state.roots == frozenset(expect), "pair-of-threes end state is wrong"
    assert set(rp.supp) == {simple_root(1, rank), simple_root(2, rank)}
    return rp.entries


def build_corpus() -> list[CorpusEntry]:
    entries: list[CorpusEntry] = []
    even4, _ = _even_case(1)
    even8, snaps = _even_case(2)
    entries += even4
    entries += even8
    entries.append(_even_quadruple(snaps["after_step0"]))
    entries += _odd_case(1)
    entries += _odd_case(2)
    entries += _fj_base_sp6()
    entries += _fj_sp8()
    entries += _threesq(4)
    entries += _threesq(5)
    for e in entries:
        report = run_entry(e)
        assert report.passed, f"corpus entry {e.name} does not pass: {report}"
    return entries


def write_corpus_file(path: str) -> None:
    with open(path, "w") as fh:
        json.dump(corpus_to_json(build_corpus()), fh, indent=1, sort_keys=True)
        fh.write("\n")
