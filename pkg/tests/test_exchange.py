import random
from fractions import Fraction

import pytest

from sympcap.exchange import (
    ExchangeTriple,
    RootGroupSet,
    check_exchange_quadruple,
    check_exchange_triple,
    conjugate,
    torus_scale,
    validate_root_group_set,
)
from sympcap.fields import SquareClassField
from sympcap.filtration import RootCharacter
from sympcap.roots import Root, WeylElement, named_root, positive_roots, simple_root


def _rc(support, carrier):
    return RootCharacter.make({a: Fraction(c) for a, c in support.items()}, frozenset(carrier))


def test_validate_examples():
    a1, a2 = Root((1, -1)), Root((0, 2))
    assert not validate_root_group_set({a1, a2})
    assert validate_root_group_set({a1, a2, Root((1, 1)), Root((2, 0))})
    assert not validate_root_group_set({a1, -a1})
    assert validate_root_group_set(set())


def test_root_group_set_constructor():
    with pytest.raises(ValueError):
        RootGroupSet.make({Root((1, -1)), Root((0, 2))})
    s = RootGroupSet.make({Root((2, 0))})
    assert Root((2, 0)) in s and len(s) == 1
    with pytest.raises(ValueError):
        RootGroupSet.make(set())
    assert len(RootGroupSet(frozenset(), 3)) == 0


def _sp6_base_state():
    # conjugated core from the rank-3 base-case exchange
    rank = 3
    roots = {
        Root((0, 1, -1)),
        Root((0, 1, 1)),
        Root((1, 1, 0)),
        Root((1, 0, 1)),
        Root((2, 0, 0)),
        Root((0, 2, 0)),
        Root((0, 0, 2)),
    }
    c = RootGroupSet.make(roots, rank)
    psi = _rc({Root((0, 1, -1)): 1, Root((0, 0, 2)): 1}, roots)
    return c, psi


def test_triple_base_case_passes():
    c, psi = _sp6_base_state()
    triple = ExchangeTriple(Root((-1, 1, 0)), Root((1, 0, -1)), Root((0, 1, -1)))
    report = check_exchange_triple(c, psi, triple)
    assert report.passed
    assert all(v for _, v in report.conditions)
    assert not report.support_domain_ambiguous


def test_triple_threesq_closing_exchange():
    # (-mu_3, eta_22, gamma_22): the vector identity and the full check
    rank = 4
    alpha = -named_root("mu", 0, 3, rank)
    gamma = named_root("eta", 2, 2, rank)
    beta = named_root("gamma", 2, 2, rank)
    assert tuple(a + g for a, g in zip(alpha.coords, gamma.coords)) == beta.coords
    from sympcap.corpus import load_corpus, run_entry

    entry = next(e for e in load_corpus() if e.name == "threesq-sp8-mu")
    assert (entry.alpha, entry.gamma, entry.beta) == (alpha, gamma, beta)
    assert run_entry(entry).passed


def test_triple_sum_mismatch_fails_c3():
    c, psi = _sp6_base_state()
    triple = ExchangeTriple(Root((-1, 1, 0)), Root((1, 0, -1)), Root((0, 0, 2)))
    report = check_exchange_triple(c, psi, triple)
    assert not report.passed
    assert not report.condition("c3")


def test_triple_beta_not_supported_raises():
    c, psi = _sp6_base_state()
    with pytest.raises(ValueError):
        check_exchange_triple(
            c, psi, ExchangeTriple(Root((-1, 1, 0)), Root((1, 0, -1)), Root((1, 1, 0)))
        )


def test_triple_negative_support_flagged():
    # after a sign flip the support contains a negative root: the domain of
    # condition (4) is then ambiguous and the report says so
    c, psi = _sp6_base_state()
    c2, psi2 = conjugate(WeylElement.coordinate_flip(3, 3), c, psi)
    beta = Root((0, 0, -2))
    assert beta in psi2.roots
    report = check_exchange_triple(
        c2, psi2, ExchangeTriple(Root((-1, 0, 1)), Root((1, 0, -1)), beta)
    )
    assert report.support_domain_ambiguous


def test_conjugate_flip_moves_support():
    # V_2 of the kernel orbit at rank 4, flipped at the last coordinate
    rank = 4
    roots = {a for a in positive_roots(rank) if all(x >= 0 for x in a.coords)}
    c = RootGroupSet.make(roots, rank)
    psi = _rc({Root((0, 0, 1, 1)): 1, Root((1, 1, 0, 0)): 1}, roots)
    w = WeylElement.coordinate_flip(rank, rank)
    c2, psi2 = conjugate(w, c, psi)
    assert Root((0, 0, 1, -1)) in psi2.roots  # moved onto the short simple root
    assert Root((0, 0, 1, 1)) not in psi2.roots
    assert Root((0, 0, 0, -2)) in c2.roots  # the long simple root went negative


def test_conjugate_identity():
    c, psi = _sp6_base_state()
    c2, psi2 = conjugate(WeylElement.identity(3), c, psi)
    assert c2 == c and psi2 == psi


def test_conjugate_is_action():
    rng = random.Random(17)
    for _ in range(100):
        rank = rng.randint(2, 5)
        pos = positive_roots(rank)
        seed = rng.sample(pos, rng.randint(1, min(4, len(pos))))
        roots = set(seed)
        changed = True
        while changed:
            changed = False
            for a in list(roots):
                for b in list(roots):
                    s = a.plus(b)
                    if s is not None and s not in roots:
                        roots.add(s)
                        changed = True
        c = RootGroupSet.make(roots, rank)
        sums = {a.plus(b) for a in roots for b in roots} - {None}
        eligible = sorted(roots - sums, key=lambda a: a.coords)
        support = {a: Fraction(i + 1) for i, a in enumerate(eligible[:2])}
        psi = RootCharacter.make(support, frozenset(roots))
        w1 = WeylElement.from_word([rng.randint(1, rank) for _ in range(3)], rank)
        w2 = WeylElement.from_word([rng.randint(1, rank) for _ in range(3)], rank)
        once = conjugate(w1.compose(w2), c, psi)
        twice = conjugate(w1, *conjugate(w2, c, psi))
        assert once == twice


def test_torus_scale():
    c, psi = _sp6_base_state()
    scaled = torus_scale([1, 1, 1], psi)
    assert scaled == psi
    scaled = torus_scale([3, 1, 1], psi)
    # the support root (0,1,-1) has no first coordinate: unchanged; (0,0,2) too
    assert dict(scaled.support) == dict(psi.support)
    scaled = torus_scale([1, 2, 5], psi)
    assert scaled.roots == psi.roots
    assert dict(scaled.support)[Root((0, 1, -1))] == Fraction(2, 5)
    assert dict(scaled.support)[Root((0, 0, 2))] == Fraction(25)
    with pytest.raises(ValueError):
        torus_scale([0, 1, 1], psi)


def test_torus_scale_square_class_dependence():
    # the long-root coefficients move by squares only
    rank = 2
    roots = {a for a in positive_roots(rank) if all(x >= 0 for x in a.coords)}
    psi = _rc({Root((2, 0)): 1, Root((0, 2)): 1}, roots)
    scaled = torus_scale([2, 3], psi)
    assert dict(scaled.support)[Root((2, 0))] == 4
    assert dict(scaled.support)[Root((0, 2))] == 9


def test_torus_scale_abstract_field():
    field = SquareClassField()
    rank = 2
    roots = {a for a in positive_roots(rank) if all(x >= 0 for x in a.coords)}
    psi = RootCharacter.make({Root((2, 0)): field.one()}, frozenset(roots), field)
    scaled = torus_scale([field.element("t"), field.one()], psi)
    coeff = dict(scaled.support)[Root((2, 0))]
    assert field.is_square(coeff)  # t^2 times a square


def test_triple_verdict_invariant_under_torus_scale():
    from sympcap.corpus import load_corpus, run_entry

    rng = random.Random(23)
    for entry in load_corpus():
        if entry.kind != "triple":
            continue
        core = entry.core()
        psi = entry.character()
        t = [Fraction(rng.choice([1, 2, 3, 5, -1])) for _ in range(entry.rank)]
        scaled = torus_scale(t, psi)
        report = check_exchange_triple(core, scaled, ExchangeTriple(entry.alpha, entry.gamma, entry.beta))
        assert report.passed


def test_quadruple_vacuous_empty():
    c, psi = _sp6_base_state()
    empty = RootGroupSet(frozenset(), 3)
    report = check_exchange_quadruple(c, psi, empty, empty)
    assert report.passed
    assert report.pairing == ()


def test_quadruple_pass_and_pairing():
    c, psi = _sp6_base_state()
    x = RootGroupSet.make({Root((-1, 1, 0))}, 3)
    y = RootGroupSet.make({Root((1, 0, -1))}, 3)
    report = check_exchange_quadruple(c, psi, x, y)
    assert report.passed
    assert len(report.pairing) == 1 and abs(report.pairing[0][0]) == 1


def test_quadruple_fails_p5_when_commutator_escapes():
    c, psi = _sp6_base_state()
    # drop the root [X,Y] lands on
    smaller = c.without(Root((0, 1, -1)))
    psi_small = _rc({Root((0, 0, 2)): 1}, smaller.roots)
    x = RootGroupSet.make({Root((-1, 1, 0))}, 3)
    y = RootGroupSet.make({Root((1, 0, -1))}, 3)
    report = check_exchange_quadruple(smaller, psi_small, x, y)
    assert not report.passed
    assert not report.prop("p5")


def test_quadruple_unbalanced_pairing_fails_p6():
    c, psi = _sp6_base_state()
    x = RootGroupSet.make({Root((-1, 1, 0))}, 3)
    report = check_exchange_quadruple(c, psi, x, RootGroupSet(frozenset(), 3))
    assert not report.prop("p6")
