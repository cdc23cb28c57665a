"""Permutation group layer tests."""

import random

import pytest

from kzq.errors import DegreeMismatch, OrderBoundExceeded
from kzq.perm import (ALL_PAIRS_CHECK_BOUND, ClassData, GroupHom, Perm,
                      conjugacy_classes, direct_product,
                      group_from_generators)


def sym(n):
    """Symmetric group on n points from a transposition and an n-cycle."""
    cyc = Perm.from_cycles(n, [tuple(range(n))])
    swap = Perm.from_cycles(n, [(0, 1)])
    return group_from_generators([swap, cyc])


def test_perm_basics():
    a = Perm.from_cycles(5, [(0, 1, 2, 3, 4)])
    assert a.order() == 5
    assert (a * a.inverse()).is_identity()
    b = Perm.from_cycles(5, [(0, 1), (2, 3)])
    assert b.order() == 2
    assert (a * b).degree == 5
    with pytest.raises(DegreeMismatch):
        a * Perm.identity(3)
    with pytest.raises(AssertionError):
        Perm((0, 0, 1))


def test_group_orders():
    assert sym(3).order == 6
    assert sym(4).order == 24
    assert sym(5).order == 120
    c12 = group_from_generators([Perm.from_cycles(12, [tuple(range(12))])])
    assert c12.order == 12
    assert c12.exponent() == 12


def test_enumeration_is_canonical():
    # same generators, same canonical element list, independent of run
    gens = [Perm.from_cycles(4, [(0, 1, 2, 3)]), Perm.from_cycles(4, [(1, 3)])]
    G1 = group_from_generators(gens)
    G2 = group_from_generators(gens)
    assert [p.img for p in G1.elements] == [p.img for p in G2.elements]
    assert G1.words == G2.words
    assert G1.elements[0].is_identity()
    # every stored word evaluates to its element
    for i, w in enumerate(G1.words):
        assert G1.evaluate_word(w) == i


def test_order_bound():
    with pytest.raises(OrderBoundExceeded):
        group_from_generators(sym(5).gens, order_bound=100)


def test_conjugacy_classes_s3():
    cd = conjugacy_classes(sym(3))
    assert cd.n_classes == 3
    assert [(cd.orders[c], cd.sizes[c]) for c in range(3)] == [
        (1, 1), (2, 3), (3, 2)]
    assert sum(cd.sizes) == 6


def test_conjugacy_classes_s4():
    cd = conjugacy_classes(sym(4))
    assert cd.n_classes == 5
    assert [(cd.orders[c], cd.sizes[c]) for c in range(5)] == [
        (1, 1), (2, 3), (2, 6), (3, 8), (4, 6)]


def test_class_functions_power_and_inverse():
    G = sym(4)
    cd = conjugacy_classes(G)
    for c in range(cd.n_classes):
        # squaring a 4-cycle lands in the double-transposition class
        assert cd.inverse_class(c) == c  # S4 is ambivalent
    four_cycle = next(c for c in range(cd.n_classes) if cd.orders[c] == 4)
    sq = cd.power_class(four_cycle, 2)
    assert cd.orders[sq] == 2 and cd.sizes[sq] == 3
    # power maps agree on every member of a class, not just the rep
    rng = random.Random(0)
    for _ in range(50):
        x = rng.randrange(G.order)
        k = rng.randrange(1, 13)
        y = x
        acc = 0
        for _ in range(k):
            acc = G.mult(acc, x)
        assert cd.class_of[acc] == cd.power_class(cd.class_of[x], k)


def test_singular_and_regular_classes():
    cd = conjugacy_classes(sym(4))
    assert cd.singular_classes(2) == [1, 2, 4]
    assert cd.regular_classes(2) == [0, 3]
    assert cd.singular_classes(3) == [3]


def test_quaternion_group():
    # Q8 as permutations: i = (0 1 2 3)(4 6 5 7), j = (0 4 2 5)(1 7 3 6)
    i = Perm.from_cycles(8, [(0, 1, 2, 3), (4, 6, 5, 7)])
    j = Perm.from_cycles(8, [(0, 4, 2, 5), (1, 7, 3, 6)])
    Q8 = group_from_generators([i, j])
    assert Q8.order == 8
    cd = conjugacy_classes(Q8)
    assert cd.n_classes == 5
    assert [(cd.orders[c], cd.sizes[c]) for c in range(5)] == [
        (1, 1), (2, 1), (4, 2), (4, 2), (4, 2)]
    assert Q8.exponent() == 4
    # exactly one involution
    assert sum(1 for x in range(Q8.order) if Q8.order_of(x) == 2) == 1


def test_group_hom_verification():
    G = sym(3)
    sgn = group_from_generators([Perm((1, 0))])
    h = GroupHom(G, sgn, [sgn.gens[0], sgn.elements[0]])
    assert not h.is_injective()
    assert h.image_indices() == [0, 1]
    # sending both generators of S3 to the flip is not a homomorphism
    with pytest.raises(AssertionError):
        GroupHom(G, sgn, [sgn.gens[0], sgn.gens[0]])


def test_group_hom_injective_embedding():
    C2 = group_from_generators([Perm((1, 0))])
    G = sym(3)
    transposition = next(p for p in G.elements if p.order() == 2)
    h = GroupHom(C2, G, [transposition])
    assert h.is_injective()
    assert len(h.image_indices()) == 2


def test_direct_product():
    C2 = group_from_generators([Perm((1, 0))])
    C3 = group_from_generators([Perm((1, 2, 0))])
    G = direct_product(C2, C3)
    assert G.order == 6
    assert G.exponent() == 6
    cd = conjugacy_classes(G)
    assert cd.n_classes == 6  # abelian
    H = direct_product(sym(3), C2)
    assert H.order == 12
    assert conjugacy_classes(H).n_classes == 6
