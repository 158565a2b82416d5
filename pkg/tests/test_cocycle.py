import random

import pytest

from gl3slopes import building as bld
from gl3slopes import cocycle
from gl3slopes.algebra import field
from gl3slopes.representation import dimension


def _rand(rng, q, k):
    return [rng.randrange(q) for _ in range(dimension(k))]


def test_value_at_s0_is_w():
    act = cocycle.Action(3, 2)
    w = [1, 2, 0, 0, 1, 2]
    assert cocycle.cocycle_value(w, bld.S0, act) == [(1,), (2,), (), (), (1,), (2,)]


@pytest.mark.parametrize("q", [2, 3])
def test_linearity(q):
    rng = random.Random(q)
    F = field(q)
    act = cocycle.Action(q, 2)
    for c in list(bld.ball(2))[:8]:
        u, v = _rand(rng, q, 2), _rand(rng, q, 2)
        s = [F.add(a, b) for a, b in zip(u, v)]
        lhs = cocycle.cocycle_value(s, c, act)
        ru, rv = cocycle.cocycle_value(u, c, act), cocycle.cocycle_value(v, c, act)
        assert lhs == [act.K.add(a, b) for a, b in zip(ru, rv)]


def test_harmonic_near_s0():
    rng = random.Random(0)
    act = cocycle.Action(3, 3)
    for e in bld.edges_within(2):
        d = cocycle.harmonic_defect(e, _rand(rng, 3, 3), act)
        assert cocycle.is_zero_vector(d)


def test_dropping_the_sign_breaks_harmonicity(monkeypatch):
    rng = random.Random(1)
    act = cocycle.Action(3, 3)
    monkeypatch.setattr(bld, "sgn", lambda c: 1)
    defects = [cocycle.harmonic_defect(e, _rand(rng, 3, 3), act) for e in bld.edges_within(2)]
    assert not all(cocycle.is_zero_vector(d) for d in defects)


def test_zero_vector_and_action_memo():
    act = cocycle.Action(2, 1)
    assert cocycle.is_zero_vector(act.zero())
    g = bld.group_identity()
    assert act(g) is act(g)
