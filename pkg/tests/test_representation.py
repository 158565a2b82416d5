import math
import os
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gl3slopes import building as bld
from gl3slopes import representation as rep
from gl3slopes.algebra import PolyRing, RatField, RatFunc, field
from gl3slopes.linalg import mat_mul


def test_basis_indices():
    assert rep.basis_indices(0) == ((0, 0),)
    assert rep.basis_indices(1) == ((0, 0), (0, 1), (1, 0))
    assert [rep.dimension(k) for k in range(5)] == [1, 3, 6, 10, 15]
    assert all(len(rep.basis_indices(k)) == rep.dimension(k) for k in range(10))


@settings(max_examples=80, deadline=None)
@given(st.sampled_from([2, 3, 5, 7]), st.lists(st.integers(0, 20), min_size=3, max_size=3))
def test_multinomial_matches_factorials(p, parts):
    exact = math.factorial(sum(parts))
    for x in parts:
        exact //= math.factorial(x)
    assert rep.multinomial_mod_p(tuple(parts), p) == exact % p


def test_diagonal_action_example():
    # diag(a, b, c) sends v_{l,m} to abc * a^l b^m c^(k-l-m) v_{l,m}
    F = field(5)
    a, b, c = 2, 3, 4
    M = rep.action_matrix(F, ((a, 0, 0), (0, b, 0), (0, 0, c)), 1)
    want = [F.mul(F.mul(a, b), F.mul(c, x)) for x in (c, b, a)]  # abc^2, ab^2c, a^2bc
    assert [M[r][r] for r in range(3)] == want
    assert all(M[r][s] == 0 for r in range(3) for s in range(3) if r != s)


def test_action_over_polynomials_matches_ratfunc():
    F = field(3)
    P, K = PolyRing(F), RatField(F)
    g = (((1,), (0, 1), ()), ((), (1,), ()), ((2, 1), (), (1,)))
    Mp = rep.action_matrix(P, g, 2)
    gK = tuple(tuple(RatFunc.poly(F, x) for x in row) for row in g)
    Mk = rep.action_matrix(K, gK, 2)
    assert [[RatFunc.poly(F, x) for x in row] for row in Mp] == Mk


@pytest.mark.parametrize("q", [2, 3, 4])
def test_action_is_a_homomorphism_with_twist(q):
    rng = random.Random(q)
    F = field(q)
    for _ in range(10):
        g = _gl3(F, rng)
        h = _gl3(F, rng)
        gh = tuple(tuple(_dot(F, g[r], [h[s][c] for s in range(3)]) for c in range(3))
                   for r in range(3))
        for n in (0, 1, 2):
            assert (mat_mul(F, rep.action_matrix(F, g, 2, n), rep.action_matrix(F, h, 2, n))
                    == rep.action_matrix(F, gh, 2, n))
            assert rep.action_matrix(F, g, 2, n) == rep.action_matrix_naive(F, g, 2, n)


def _dot(F, u, v):
    acc = 0
    for x, y in zip(u, v):
        acc = F.add(acc, F.mul(x, y))
    return acc


def _gl3(F, rng):
    while True:
        g = tuple(tuple(rng.randrange(F.q) for _ in range(3)) for _ in range(3))
        if rep._det3(F, g):
            return g


def test_singular_action_rejected():
    with pytest.raises(bld.Singular):
        rep.action_matrix(field(2), ((1, 1, 0), (1, 1, 0), (0, 0, 1)), 1)


def test_delta():
    assert rep.delta_exponents(1, 1) == [0, 1, 1]
    assert rep.delta_exponents(2, 1) == [0, 0, 1]
    assert rep.delta_exponents(1, 2) == [0, 1, 2, 1, 2, 2]
    F = field(2)
    D = rep.delta_matrix(F, 2, 1)
    t = RatFunc.t(F)
    assert [D[r][r] for r in range(3)] == [RatFunc.const(F, 1), RatFunc.const(F, 1), t]
    with pytest.raises(ValueError):
        rep.delta_exponents(3, 1)


def test_vd_basis():
    assert rep.vd_basis(1, 3) == []
    assert rep.vd_basis(3, 3) == [(1, 1)]
    assert len(rep.vd_basis(4, 2)) == rep.dimension(4)
    assert rep.vd_basis(3, 4) == []
    assert rep.vd_basis(6, 4) == [(2, 2)]


@pytest.mark.parametrize("q", [2, 3])
def test_level_chain(q):
    for k in range(7):
        S = {lv: rep.level_subspace(lv, k, q).subspace for lv in rep.LEVELS}
        assert S["gamma1"].dim == rep.dimension(k)
        for small, big in (("gamma0", "gamma1"), ("p0", "gamma0"), ("p2", "gamma0"),
                           ("gl3", "p0"), ("gl3", "p2")):
            assert S[big].contains_space(S[small]), (k, small, big)


def test_level_dims_at_q2():
    dims = [rep.level_subspace("gl3", k, 2).dim for k in range(9)]
    assert dims == [0, 0, 0, 0, 1, 1, 1, 2, 2]


def test_level_entries_are_constants():
    S = rep.level_subspace("p0", 5, 3).subspace
    assert all(isinstance(x, int) for v in S.basis for x in v)


def test_invalid_level():
    with pytest.raises(rep.InvalidLevel):
        rep.level_subspace("gamma2", 1, 2)


def test_action_cache_disk_roundtrip(tmp_path):
    d = str(tmp_path / "cache")
    c1 = rep.ActionCache(d)
    g = ((1, 1, 0), (0, 1, 0), (0, 0, 1))
    M = c1.get(3, g, 3)
    assert c1.misses == 1 and os.listdir(d)
    assert c1.get(3, g, 3) is M and c1.hits == 1
    c2 = rep.ActionCache(d)
    assert c2.get(3, g, 3) == M
    assert c2.disk_hits == 1 and c2.misses == 0
    assert M == rep.action_matrix(field(3), g, 3)
