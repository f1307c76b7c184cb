from itertools import product

import pytest

from fusionaudit import groups
from fusionaudit.groups import (
    FiniteGroup,
    Q8_MINUS_ONE,
    Q8_TABLE,
    centralizer_of_set,
    commutator_span,
    is_subgroup,
    quotient_group,
    squares_in,
    subgroup_as_group,
    subgroup_generated,
)


def test_q8_cayley_is_a_group():
    q8 = groups.q8_group()
    q8.check_axioms()
    assert q8.order == 8
    # unique inverses and the identity row/column come with the constructor
    assert sorted(q8.inverse) == list(range(8))


def test_q8_center():
    q8 = groups.q8_group()
    assert q8.center() == (0, Q8_MINUS_ONE)
    assert q8.mul(Q8_MINUS_ONE, Q8_MINUS_ONE) == 0


def test_q8_relations():
    # i^2 = j^2 = k^2 = -1 and ijk = -1
    i, j, k = 2, 4, 6
    q8 = groups.q8_group()
    assert q8.mul(i, i) == Q8_MINUS_ONE
    assert q8.mul(j, j) == Q8_MINUS_ONE
    assert q8.mul(k, k) == Q8_MINUS_ONE
    assert q8.mul(q8.mul(i, j), k) == Q8_MINUS_ONE
    assert q8.mul(i, j) == k
    assert q8.mul(j, i) == 7  # -k


def test_trivial_group_classes():
    t = FiniteGroup([[0]])
    assert t.conjugacy_classes() == ((0,),)


def test_q8_classes():
    q8 = groups.q8_group()
    sizes = sorted(len(c) for c in q8.conjugacy_classes())
    assert sizes == [1, 1, 2, 2, 2]
    assert q8.conjugacy_classes()[0] == (0,)


def test_class_equation(cg, q8, h16):
    for G in (cg.group, q8, h16):
        classes = G.conjugacy_classes()
        assert sum(len(c) for c in classes) == G.order
        for c in classes:
            assert G.order % len(c) == 0


def test_group_axioms_exhaustive(cg, q8, h16):
    for G in (cg.group, q8, h16):
        G.check_axioms()


def test_centralizer_of_identity(q8):
    assert q8.centralizer(0) == tuple(range(8))


def test_center_as_intersection_of_centralizers(q8):
    inter = set(range(q8.order))
    for g in range(q8.order):
        inter &= set(q8.centralizer(g))
    assert tuple(sorted(inter)) == q8.center()
    assert len(q8.center()) == 2


def test_exponents(cg, q8, h16):
    assert h16.exponent() == 2
    assert q8.exponent() == 4
    assert cg.group.exponent() in (4, 8)


def test_squares_in(cg, q8):
    G = cg.group
    assert squares_in(G, range(G.order)) == tuple(range(G.order))
    hz = set(cg.h_subgroup) | {G.mul(h, cg.z_lift) for h in cg.h_subgroup}
    assert set(squares_in(G, cg.h_subgroup)) == hz
    assert len(hz) == 32
    assert squares_in(q8, (0,)) == (0, Q8_MINUS_ONE)


def test_subgroup_generated_empty_and_full(cg):
    G = cg.group
    assert subgroup_generated(G, []) == (0,)
    basis = [cg.index(1 << b, 0) for b in range(4)]
    H = subgroup_generated(G, basis)
    assert H == cg.h_subgroup
    assert len(H) == 16


def test_subgroup_generated_maps_onto_q8(cg):
    G = cg.group
    gens = [cg.index(0, 2), cg.index(0, 4)]  # lifts of i and j
    S = subgroup_generated(G, gens)
    assert {g & 7 for g in S} == set(range(8))
    assert is_subgroup(G, S)
    assert G.order % len(S) == 0  # Lagrange


def test_commutator_span_identity(cg):
    assert commutator_span(cg.group, cg.h_subgroup, 0) == (0,)


def test_commutator_span_z_and_order4(cg):
    G = cg.group
    h0 = commutator_span(G, cg.h_subgroup, cg.z_lift)
    assert len(h0) == 2
    for q in (2, 3, 4, 5, 6, 7):
        span = commutator_span(G, cg.h_subgroup, cg.index(0, q))
        assert set(h0) <= set(span)


def test_commutator_span_depends_only_on_coset(cg):
    G = cg.group
    for q in range(1, 8):
        rep = cg.index(0, q)
        expected = commutator_span(G, cg.h_subgroup, rep)
        for h in range(16):
            x = G.mul(cg.index(h, 0), rep)
            assert commutator_span(G, cg.h_subgroup, x) == expected


def test_commutator_map_is_homomorphism_on_abelian_h(cg):
    # h -> [h, x] is a homomorphism H -> H whose image is the span,
    # no closure iteration needed.
    G = cg.group
    for q in range(1, 8):
        x = cg.index(0, q)
        image = sorted({groups.commutator(G, h, x) for h in cg.h_subgroup})
        for h1, h2 in product(cg.h_subgroup, repeat=2):
            lhs = groups.commutator(G, G.mul(h1, h2), x)
            rhs = G.mul(groups.commutator(G, h1, x), groups.commutator(G, h2, x))
            assert lhs == rhs
        assert tuple(image) == commutator_span(G, cg.h_subgroup, x)


def test_centralizer_of_h_subgroup(cg):
    assert centralizer_of_set(cg.group, cg.h_subgroup) == cg.h_subgroup


def test_quotient_by_h_is_q8(cg):
    quot, proj = quotient_group(cg.group, cg.h_subgroup)
    assert quot.order == 8
    quot.check_axioms()
    sizes = sorted(len(c) for c in quot.conjugacy_classes())
    assert sizes == [1, 1, 2, 2, 2]
    assert proj[0] == 0


def test_quotient_rejects_non_normal(q8):
    # <i> is normal in Q8; use a non-subgroup set to hit validation instead
    with pytest.raises(ValueError):
        quotient_group(q8, (0, 2, 3))


def test_subgroup_as_group(cg):
    H, embed = subgroup_as_group(cg.group, cg.h_subgroup)
    assert H.order == 16
    H.check_axioms()
    assert H.exponent() == 2
    assert embed[0] == 0
    with pytest.raises(ValueError):
        subgroup_as_group(cg.group, (0, 1, 2))


def test_identity_must_be_index_zero():
    # swap rows so that index 0 is not the identity
    bad = [[1, 0], [0, 1]]
    with pytest.raises(ValueError):
        FiniteGroup(bad)


def test_q8_table_symmetry_of_inverses():
    q8 = groups.q8_group()
    for g in range(8):
        assert q8.mul(g, q8.inv(g)) == 0
        assert q8.mul(q8.inv(g), g) == 0


def test_q8_associativity_exhaustive():
    for a, b, c in product(range(8), repeat=3):
        assert Q8_TABLE[Q8_TABLE[a][b]][c] == Q8_TABLE[a][Q8_TABLE[b][c]]
