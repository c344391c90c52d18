import random
from fractions import Fraction

import pytest

from sympcap.fields import QQ, SquareClassField
from sympcap.filtration import (
    RootCharacter,
    character_from_data,
    expected_stabilizer_dimension,
    generic_character,
    grade_orbit,
    heisenberg_quotient,
    is_generic_character,
    split_form_check,
    stabilizer_dimension,
)
from sympcap.orbits import SymplecticPartition, enumerate_symplectic_partitions
from sympcap.roots import Root, named_root, positive_roots, simple_root


def _siegel_radical(r):
    return {a for a in positive_roots(r) if all(c >= 0 for c in a.coords)}


def test_grade_kernel_orbit():
    for r in range(2, 13):
        data = grade_orbit(SymplecticPartition((2,) * r))
        assert data.level(2) == frozenset(_siegel_radical(r))
        assert data.level(1) == data.level(2)  # no weight-1 roots
        # the Levi root system is the type-A system of e_i - e_j
        assert set(data.levi_roots) == {Root(tuple(v)) for v in _type_a_vectors(r)}


def _type_a_vectors(r):
    out = []
    for i in range(r):
        for j in range(r):
            if i != j:
                v = [0] * r
                v[i], v[j] = 1, -1
                out.append(tuple(v))
    return out


def test_grade_one_big_part():
    # (4, 1^(2r-4)): V_1 is the radical of the two-line parabolic
    for r in range(2, 11):
        lam = SymplecticPartition((4,) + (1,) * (2 * r - 4))
        data = grade_orbit(lam)
        radical = {
            a for a in positive_roots(r) if a.coords[0] != 0 or a.coords[1] != 0
        }
        assert data.level(1) == frozenset(radical)


def test_grade_zero_orbit():
    data = grade_orbit(SymplecticPartition((1,) * 6))
    assert data.h == (0, 0, 0)
    assert data.level(1) == frozenset()
    assert len(data.levi_roots) == 2 * 3 * 3


def test_levels_nested_and_closed():
    for total in range(2, 13, 2):
        for lam in enumerate_symplectic_partitions(total):
            data = grade_orbit(lam)
            prev = None
            for l, roots in data.levels:
                rs = frozenset(roots)
                if prev is not None:
                    assert rs <= prev
                for a in rs:
                    for b in rs:
                        s = a.plus(b)
                        if s is not None:
                            assert s in rs
                prev = rs


def test_weight_additivity():
    for total in range(2, 13, 2):
        for lam in enumerate_symplectic_partitions(total):
            data = grade_orbit(lam)
            wt = dict(data.weights)
            v1 = data.level(1)
            for a in v1:
                for b in v1:
                    s = a.plus(b)
                    if s is not None:
                        assert wt[s] == wt[a] + wt[b] >= 2
                        assert s in data.level(2)


def test_heisenberg_quotient():
    assert heisenberg_quotient(3, 3) == (0, Root((0, 0, 2)))
    assert heisenberg_quotient(2, 3) == (2, Root((0, 2, 0)))
    assert heisenberg_quotient(1, 3) == (4, Root((2, 0, 0)))
    for r in range(1, 13):
        for m in range(1, r + 1):
            dim, center = heisenberg_quotient(m, r)
            assert dim == 2 * (r - m)
            assert center == named_root("mu", 0, m, r)
    with pytest.raises(ValueError):
        heisenberg_quotient(4, 3)


def test_generic_character_families():
    psi = generic_character(SymplecticPartition((2, 2, 2)), [1, -1, 2])
    assert dict(psi.support) == {
        Root((2, 0, 0)): 1,
        Root((0, 2, 0)): -1,
        Root((0, 0, 2)): 2,
    }
    psi = generic_character(SymplecticPartition((4, 1, 1)), [5])
    assert dict(psi.support) == {simple_root(1, 3): 1, Root((0, 2, 0)): 5}
    psi = generic_character(SymplecticPartition((3, 3, 1, 1)), [1, 1])
    assert dict(psi.support) == {Root((1, 0, -1, 0)): 1, Root((0, 1, 1, 0)): 1}


def test_generic_character_errors():
    with pytest.raises(ValueError):
        generic_character(SymplecticPartition((2, 2)), [1, 0])
    with pytest.raises(ValueError):
        generic_character(SymplecticPartition((4, 4)), [1])
    with pytest.raises(ValueError):
        generic_character(SymplecticPartition((2, 2)), [1])


def test_character_invariants():
    carrier = frozenset(_siegel_radical(2))
    with pytest.raises(ValueError):
        RootCharacter.make({Root((1, -1)): Fraction(1)}, carrier)  # not in carrier
    with pytest.raises(ValueError):
        RootCharacter.make({Root((2, 0)): Fraction(0)}, carrier)  # zero coefficient
    # support root expressible as a sum of two carrier roots
    full = frozenset(positive_roots(2))
    with pytest.raises(ValueError):
        RootCharacter.make({Root((2, 0)): Fraction(1)}, full)


def test_stabilizer_dimensions():
    lam = SymplecticPartition((2,) * 4)
    psi = generic_character(lam, [1, 1, 1, 1])
    assert stabilizer_dimension(lam, psi) == 6
    lam = SymplecticPartition((2, 1, 1, 1, 1))
    assert stabilizer_dimension(lam, generic_character(lam, [1])) == 10
    lam = SymplecticPartition((2, 2))
    degenerate = character_from_data(lam, [1, 0], allow_degenerate=True)
    assert stabilizer_dimension(lam, degenerate) > 1


def test_stabilizer_random_coefficients():
    rng = random.Random(5)
    for r in range(2, 7):
        lam = SymplecticPartition((2,) * r)
        for _ in range(5):
            eps = [rng.choice([1, -1, 2, 3, 5, -2]) for _ in range(r)]
            psi = generic_character(lam, eps)
            assert stabilizer_dimension(lam, psi) == r * (r - 1) // 2


def test_is_generic_character():
    lam = SymplecticPartition((2, 2, 2))
    assert is_generic_character(lam, generic_character(lam, [1, 1, 1]))
    bad = character_from_data(lam, [1, 1, 0], allow_degenerate=True)
    assert not is_generic_character(lam, bad)
    lam = SymplecticPartition((4, 1, 1))
    assert is_generic_character(lam, generic_character(lam, [1]))
    assert expected_stabilizer_dimension(lam) == 3


def test_expected_dimensions():
    assert expected_stabilizer_dimension(SymplecticPartition((2,) * 5)) == 10
    assert expected_stabilizer_dimension(SymplecticPartition((2, 2, 1, 1))) == 1 + 3
    assert expected_stabilizer_dimension(SymplecticPartition((3, 3, 1, 1))) == 3 + 3
    assert expected_stabilizer_dimension(SymplecticPartition((6, 1, 1))) == 3


def test_stabilizer_3sq_family():
    for rank in (4, 5):
        ones = 2 * rank - 6
        lam = SymplecticPartition((3, 3) + (1,) * ones)
        psi = generic_character(lam, [1, 1])
        assert stabilizer_dimension(lam, psi) == expected_stabilizer_dimension(lam)


def test_split_form_check_rationals():
    assert split_form_check([1, -1]) == "split"
    assert split_form_check([1, 1]) == "nonsplit"
    assert split_form_check([1, -4]) == "split"  # -4 = -1 * 2^2
    assert split_form_check([2, -2, 3, -3]) == "split"
    assert split_form_check([1, 2, -1, -3]) == "nonsplit"
    # odd length: one coordinate is absorbed
    assert split_form_check([7, 1, -1]) == "split"
    assert split_form_check([1, 1, 1]) == "nonsplit"
    with pytest.raises(ValueError):
        split_form_check([1, 0])


def test_split_form_check_abstract_field():
    k_plain = SquareClassField()
    a = k_plain.element("a")
    assert split_form_check([a, a], k_plain) == "nonsplit"  # a*a*-1 = -1 not square
    k_nice = SquareClassField(neg_one_is_square=True)
    b = k_nice.element("b")
    assert split_form_check([b, b], k_nice) == "split"
    k_unknown = SquareClassField(classes={"u": None})
    u = k_unknown.element("u")
    v = k_unknown.element("v")
    assert split_form_check([u, v], k_unknown) == "undecided"


def test_square_class_oracle():
    assert QQ.is_square(Fraction(4, 9))
    assert not QQ.is_square(Fraction(-4, 9))
    assert not QQ.is_square(Fraction(8))
    assert QQ.square_class(Fraction(18)) == QQ.square_class(Fraction(2))
