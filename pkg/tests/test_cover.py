import random

import pytest

from sympcap.cover import (
    CoverDatum,
    GLCoverDatum,
    TameElement,
    cocycle_identity_check,
    distinguished_char_eval,
    dual_root_datum,
    lattice_Y_Qn,
    sigma_D,
    tame_hilbert,
)
from sympcap.linalg import hermite_row_basis, lattice_index


def test_standard_datum_normalization():
    d = CoverDatum.standard(4, 4)
    assert d.value(d.simple_coroot(4)) == -1  # long simple root's coroot
    assert d.value(d.simple_coroot(1)) == -2
    assert d.bilinear([1, 0, 0, 0], [0, 1, 0, 0]) == 0
    assert d.bilinear([1, 0, 0, 0], [1, 0, 0, 0]) == -2


def test_weyl_invariance_enforced():
    with pytest.raises(ValueError):
        CoverDatum(2, 4, ((1, 0), (0, 2)))  # not invariant under the swap


def test_lattice_quartic():
    for r in (1, 2, 3, 5):
        d = CoverDatum.standard(r, 4)
        big, small = lattice_Y_Qn(d)
        whole = [[int(i == j) for j in range(r)] for i in range(r)]
        # Y_4 = doubled lattice
        assert hermite_row_basis(big) == hermite_row_basis([[2 * x for x in row] for row in whole])
        assert lattice_index(whole, big) == 2 ** r
        if r >= 2:
            assert lattice_index(big, small) == 2
        # membership: 4 | sum of entries for the span of modified coroots
        for row in small:
            assert all(x % 2 == 0 for x in row)
            assert sum(row) % 4 == 0


def test_lattice_degree_one_and_two():
    d1 = CoverDatum.standard(3, 1)
    big, small = lattice_Y_Qn(d1)
    assert lattice_index([[1, 0, 0], [0, 1, 0], [0, 0, 1]], big) == 1
    d2 = CoverDatum.standard(3, 2)
    big2, _ = lattice_Y_Qn(d2)
    assert lattice_index([[1, 0, 0], [0, 1, 0], [0, 0, 1]], big2) == 1  # B_Q is even


def test_dual_types():
    for r in range(2, 7):
        assert dual_root_datum(CoverDatum.standard(r, 4)).cartan_type == f"C{r}"
        assert dual_root_datum(CoverDatum.standard(r, 2)).cartan_type == f"C{r}"
        assert dual_root_datum(CoverDatum.standard(r, 1)).cartan_type == f"B{r}"
    assert dual_root_datum(CoverDatum.standard(1, 4)).cartan_type == "A1"


def test_dual_n_alpha():
    d = dual_root_datum(CoverDatum.standard(3, 4))
    assert d.n_alpha == (2, 2, 4)
    d = dual_root_datum(CoverDatum.standard(3, 2))
    assert d.n_alpha == (1, 1, 2)
    d = dual_root_datum(CoverDatum.standard(3, 1))
    assert d.n_alpha == (1, 1, 1)


def test_tame_element_validation():
    with pytest.raises(ValueError):
        TameElement(0, 5, 5)  # unit reduces to zero
    x = TameElement(2, 7, 5)
    assert x.unit == 2


def test_tame_hilbert_examples():
    assert tame_hilbert(TameElement(0, 2, 5), TameElement(0, 3, 5), 4) == 0
    assert tame_hilbert(TameElement(1, 1, 5), TameElement(1, 1, 5), 4) == 2
    assert tame_hilbert(TameElement(0, 2, 5), TameElement(1, 1, 5), 4) == 1
    with pytest.raises(ValueError):
        tame_hilbert(TameElement(0, 2, 7), TameElement(0, 3, 7), 4)  # q != 1 mod 4


def test_tame_hilbert_bimultiplicative_and_antisymmetric():
    rng = random.Random(9)
    for q in (5, 13, 17):
        n = 4
        for _ in range(70):
            x = TameElement(rng.randint(-2, 2), rng.randint(1, q - 1), q)
            y = TameElement(rng.randint(-2, 2), rng.randint(1, q - 1), q)
            z = TameElement(rng.randint(-2, 2), rng.randint(1, q - 1), q)
            assert tame_hilbert(x.mul(y), z, n) == (
                tame_hilbert(x, z, n) + tame_hilbert(y, z, n)
            ) % n
            assert (tame_hilbert(x, y, n) + tame_hilbert(y, x, n)) % n == 0
            minus_x = TameElement(x.valuation, -x.unit, q)
            assert tame_hilbert(x, minus_x, n) == 0


def test_cocycle_identity_random():
    rng = random.Random(31)
    for q in (5, 13, 17):
        for _ in range(100):
            vecs = [
                [TameElement(rng.randint(-2, 2), rng.randint(1, q - 1), q) for _ in range(3)]
                for _ in range(3)
            ]
            assert cocycle_identity_check(*vecs)


def test_sigma_trivial_on_squares():
    rng = random.Random(41)
    for q in (5, 13, 17):
        for _ in range(100):
            t = [
                TameElement(2 * rng.randint(-1, 1), pow(rng.randint(1, q - 1), 2, q), q)
                for _ in range(3)
            ]
            s = [
                TameElement(2 * rng.randint(-1, 1), pow(rng.randint(1, q - 1), 2, q), q)
                for _ in range(3)
            ]
            assert sigma_D(t, s) == 0


def test_sigma_example():
    t = [TameElement(1, 1, 5), TameElement(0, 1, 5)]
    assert sigma_D(t, t) == 2
    units = [TameElement(0, 2, 5), TameElement(0, 3, 5)]
    assert sigma_D(units, units) == 0


def test_distinguished_char():
    a_unit = TameElement(0, 3, 13)
    assert distinguished_char_eval("+", 1, a_unit, 3) == 0
    assert distinguished_char_eval("+", 3, a_unit, 3) == 0
    assert distinguished_char_eval("-", 3, a_unit, 3) == 2
    pi = TameElement(1, 1, 5)
    assert distinguished_char_eval("+", 2, pi, 2) == 0  # (pi,pi)_2 = 1 once q = 1 mod 4
    assert distinguished_char_eval("-", 2, TameElement(1, 1, 13), 2) == 2
    with pytest.raises(ValueError):
        distinguished_char_eval("+", 2, TameElement(1, 1, 7), 2)


def test_gl_cover_datum_pairings():
    pairs = GLCoverDatum(3).exceptional_pairings()
    assert len(pairs) == 2
    assert all(n == 2 for _, n, _ in pairs)
