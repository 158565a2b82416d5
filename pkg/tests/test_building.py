import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gl3slopes import building as bld
from gl3slopes.algebra import field
from gl3slopes.building import (ONE, S0, STAR, ZERO, DegLE, EntrySymbol, TDivDegLE)

SIGMA_S0 = ((0, -1), (0, 0), (1, 0))


def test_s0_is_a_chamber():
    assert bld.is_chamber(S0)
    assert bld.is_chamber(bld.STANDARD_CHAMBER)
    with pytest.raises(bld.NotAChamber):
        bld.make_chamber([(0, 0), (1, 1), (2, 2)])
    with pytest.raises(bld.NotAnEdge):
        bld.make_edge([(0, 0), (2, 0)])


def test_symbol_examples():
    assert bld.simplex_stabilizer(S0) == ((ONE, ZERO, ZERO), (ZERO, ONE, ZERO), (ZERO, ZERO, ONE))
    assert bld.simplex_stabilizer([(0, 0)]) == ((ONE, STAR, STAR), (ZERO, ONE, STAR),
                                                (ZERO, ZERO, ONE))
    assert bld.gamma1_vertex_stabilizer((2, 1)) == (
        (ONE, DegLE(2), DegLE(1)),
        (ZERO, ONE, ZERO),
        (ZERO, TDivDegLE(0), ONE))
    assert DegLE(-1) == ZERO
    assert DegLE(1).meet(TDivDegLE(3)) == TDivDegLE(0)
    assert repr(TDivDegLE(2)) == "t{2}" and repr(STAR) == "Star"
    with pytest.raises(ValueError):
        ONE.meet(TDivDegLE(0))
    with pytest.raises(bld.NotASimplex):
        bld.simplex_stabilizer([(0, 0), (3, 3)])


def test_symbol_membership_matches_elements():
    F = field(2)
    for sym in (ZERO, ONE, STAR, DegLE(2), TDivDegLE(1)):
        els = sym.elements(F)
        assert len(els) == sym.size(2)
        assert all(sym.contains(a) for a in els)
    assert not TDivDegLE(1).contains((1, 1))
    assert not DegLE(1).contains((0, 0, 1))


def test_distance_examples():
    assert bld.chamber_distance(S0, S0) == 0
    assert bld.chamber_distance(((1, 1), (1, 0), (0, 0)), S0) == 2
    assert bld.chamber_distance(SIGMA_S0, S0) == 1
    assert bld.sgn(S0) == 1 and bld.sgn(SIGMA_S0) == -1


def test_sign_flips_across_every_wall():
    for c in bld.ball(4):
        for d in bld.adjacent_chambers(c):
            assert bld.sgn(c) == -bld.sgn(d)


def test_bfs_distance_matches_wall_count():
    cs = list(bld.ball(4))
    for c1, c2 in itertools.product(cs[:20], cs):
        assert bld.chamber_distance(c1, c2) == bld.wall_distance(c1, c2)


def test_ball_sizes_and_edges():
    b = bld.ball(3)
    assert b[S0] == 0
    assert sum(1 for d in b.values() if d == 1) == 3
    for e in bld.edges_within(3):
        assert len(bld.chambers_on_edge(e)) == 2


# ---------------------------------------------------------------- Weyl group

def test_weyl_examples():
    assert bld.weyl_act(bld.perm_from_cycle("123"), (2, 2)) == (-2, 0)
    assert bld.weyl_act(bld.SIGMA, (-1, -1)) == (1, 0)
    assert bld.weyl_act(bld.WEYL[0], (3, -1)) == (3, -1)
    assert len(set(bld.WEYL)) == 6


vertices = st.tuples(st.integers(-5, 5), st.integers(-5, 5))


@settings(max_examples=60, deadline=None)
@given(vertices, st.sampled_from(bld.WEYL), st.sampled_from(bld.WEYL))
def test_weyl_group_action(v, s1, s2):
    assert bld.weyl_act(bld.compose(s1, s2), v) == bld.weyl_act(s1, bld.weyl_act(s2, v))


def test_weyl_preserves_adjacency_and_distance():
    cs = list(bld.ball(3))
    for s in bld.WEYL:
        for c in cs[:15]:
            image = bld.weyl_act_chamber(s, c)
            assert bld.is_chamber(image)
            for d in cs[:15]:
                assert (bld.chamber_distance(image, bld.weyl_act_chamber(s, d))
                        == bld.chamber_distance(c, d))


def test_perm_matrix_convention():
    P = bld.perm_matrix(bld.SIGMA)
    assert P == [[0, 1, 0], [1, 0, 0], [0, 0, 1]]


# ---------------------------------------------------------------- stabilizers

@pytest.mark.parametrize("q", [2, 3])
def test_stabilizer_sizes_are_powers_of_q(q):
    F = field(q)
    for c in bld.ball(6 if q == 2 else 4):
        n = len(bld.chamber_stabilizer(F, c))
        while n % q == 0:
            n //= q
        assert n == 1


def test_stabilizer_examples():
    F2, F3 = field(2), field(3)
    assert len(bld.chamber_stabilizer(F2, S0)) == 1
    assert len(bld.chamber_stabilizer(F2, SIGMA_S0)) == 2
    assert len(bld.chamber_stabilizer(F3, SIGMA_S0)) == 3


@pytest.mark.parametrize("q", [2, 3])
def test_stabilizer_elements_fix_their_chamber(q):
    F = field(q)
    for c in list(bld.ball(3))[:25]:
        here = bld.chamber_from_matrix(F, bld.chamber_matrix(F, c))
        for g in bld.chamber_stabilizer(F, c):
            assert bld.in_gamma1(F, g)
            assert bld.chamber_class_equal(F, bld.act_on_chamber(F, g, c), here)


def test_non_stabilizer_moves_chamber():
    F = field(2)
    g = (((1,), (1,), ()), ((), (1,), ()), ((), (), (1,)))
    assert bld.in_gamma1(F, g)
    here = bld.chamber_from_matrix(F, bld.chamber_matrix(F, S0))
    assert not bld.chamber_class_equal(F, bld.act_on_chamber(F, g, S0), here)


# ---------------------------------------------------------------- matrices and classes

def test_identity_chamber():
    F = field(2)
    tri = bld.chamber_from_matrix(F, bld.group_identity())
    std = bld.chamber_from_matrix(F, bld.chamber_matrix(F, bld.STANDARD_CHAMBER))
    assert bld.chamber_class_equal(F, tri, std)


def test_g_s0_gives_s0():
    F = field(3)
    g = ((0, 1, 0), (1, 0, 0), (0, 0, (0, 1)))
    tri = bld.chamber_from_matrix(F, g)
    assert bld.chamber_class_equal(F, tri, bld.chamber_from_matrix(F, bld.chamber_matrix(F, S0)))


def test_chamber_matrix_roundtrip():
    F = field(2)
    for c in bld.ball(3):
        tri = bld.chamber_from_matrix(F, bld.chamber_matrix(F, c))
        verts = [bld.vertex_matrix(F, v) for v in c]
        assert bld.chamber_class_equal(F, tri, verts)


def test_vertex_class_equal_examples():
    F = field(2)
    assert bld.vertex_class_equal(F, bld.vertex_matrix(F, (0, 0)), bld.group_identity())
    t = (0, 1)
    scaled = ((t, (), ()), ((), t, ()), ((), (), t))
    assert bld.vertex_class_equal(F, scaled, bld.group_identity())
    assert not bld.vertex_class_equal(F, bld.vertex_matrix(F, (1, 0)), bld.group_identity())
    unip = (((1,), (0, 1), ()), ((), (1,), ()), ((), (), (1,)))
    assert not bld.vertex_class_equal(F, unip, bld.group_identity())
    with pytest.raises(bld.Singular):
        bld.chamber_from_matrix(F, ((0, 0, 0), (0, 1, 0), (0, 0, 1)))


def test_stabilizer_coset_reps_shape():
    F = field(2)
    e = ((0, -1), (0, 0))
    r, s, reps = bld.stabilizer_coset_reps(F, e)
    assert bld.chamber_distance(r, S0) < bld.chamber_distance(s, S0)
    assert len(reps) == 2


def test_verify_reduction_rejects_non_gamma1():
    F = field(2)
    bad = (((1,), (), ()), ((1,), (1,), ()), ((), (), (1,)))
    assert not bld.in_gamma1(F, bad)
    assert not bld.verify_reduction(F, bld.group_identity(), bad, S0)
    assert bld.verify_reduction(F, bld.group_identity(), bld.group_identity(), S0)
    assert isinstance(ZERO, EntrySymbol)
