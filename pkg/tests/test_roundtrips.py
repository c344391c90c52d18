"""JSON round-trips: every serialized value re-parses to an equal value,
100 randomized instances per type."""

import random
from fractions import Fraction

from sympcap.corpus import CorpusEntry, load_corpus
from sympcap.filtration import GradedUnipotentData, RootCharacter, grade_orbit
from sympcap.orbits import (
    OrbitPoset,
    SymplecticPartition,
    enumerate_symplectic_partitions,
)
from sympcap.params import ParamSet, SatakeEntry, UnitaryLabel
from sympcap.dsl import parse_character, parse_root
from sympcap.roots import positive_roots


def _random_partition(rng, max_total=16):
    total = 2 * rng.randint(1, max_total // 2)
    return rng.choice(enumerate_symplectic_partitions(total))


def test_partition_roundtrip():
    rng = random.Random(101)
    for _ in range(100):
        lam = _random_partition(rng)
        assert SymplecticPartition.from_json(lam.to_json()) == lam


def test_graded_data_roundtrip():
    rng = random.Random(103)
    for _ in range(100):
        data = grade_orbit(_random_partition(rng, max_total=12))
        assert GradedUnipotentData.from_json(data.to_json()) == data


def test_poset_roundtrip():
    for two_r in range(2, 13, 2):
        poset = OrbitPoset.compute(two_r)
        assert OrbitPoset.from_json(poset.to_json()) == poset


def test_paramset_roundtrip():
    rng = random.Random(107)
    for _ in range(100):
        entries = [
            SatakeEntry(
                Fraction(rng.randint(-20, 20), rng.randint(1, 8)),
                UnitaryLabel.generator(rng.choice("abc"), rng.choice([2, 3, 4])),
            )
            for _ in range(rng.randint(1, 6))
        ]
        ps = ParamSet.make(entries, rng.choice(["+", "-"]))
        assert ParamSet.from_json(ps.to_json()) == ps


def test_character_text_roundtrip():
    rng = random.Random(109)
    count = 0
    while count < 100:
        rank = rng.randint(2, 5)
        pos = positive_roots(rank)
        roots = set(rng.sample(pos, rng.randint(1, 4)))
        changed = True
        while changed:
            changed = False
            for a in list(roots):
                for b in list(roots):
                    s = a.plus(b)
                    if s is not None and s not in roots:
                        roots.add(s)
                        changed = True
        sums = {a.plus(b) for a in roots for b in roots} - {None}
        eligible = sorted(roots - sums, key=lambda a: a.coords)
        if not eligible:
            continue
        support = {a: Fraction(rng.randint(1, 9), rng.randint(1, 4)) for a in eligible[:3]}
        psi = RootCharacter.make(support, frozenset(roots))
        text = "\n".join(f"{a}: {c}" for a, c in psi.support)
        reparsed = parse_character(text, rank, carrier=frozenset(roots))
        assert reparsed == psi
        count += 1


def test_corpus_entries_roundtrip():
    for entry in load_corpus():
        again = CorpusEntry.from_json(entry.to_json())
        assert again.to_json() == entry.to_json()
        assert parse_root(str(entry.c_roots[0])) == entry.c_roots[0]
