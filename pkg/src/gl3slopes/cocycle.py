"""Gamma_1(t)-invariant harmonic cocycles, evaluated on the standard apartment.

A cocycle is determined by its value w at s_0.  On a chamber c of the
apartment its value is sgn(c) times the sum of gamma w over the
Gamma_1(t)-stabilizer of c.  Values are vectors over F_q[t]; constant
vectors are the usual case.
"""

from . import building as bld
from .algebra import PolyRing, field
from .linalg import mat_vec
from .representation import action_matrix


class Action:
    """Action provider: gamma (entries in F_q[t]) -> its matrix on V_{k,n}."""

    def __init__(self, q, k, n=0):
        self.q, self.k, self.n = q, k, n
        self.F = field(q)
        self.K = PolyRing(self.F)
        self._memo = {}

    def __call__(self, gamma):
        M = self._memo.get(gamma)
        if M is None:
            M = self._memo[gamma] = action_matrix(self.K, gamma, self.k, self.n)
        return M

    def zero(self):
        return [()] * ((self.k + 2) * (self.k + 1) // 2)


def _as_vector(K, w):
    out = []
    for x in w:
        if isinstance(x, int):
            out.append((x,) if x else ())
        else:
            out.append(tuple(x))
    return out


def _vadd(K, u, v):
    return [K.add(a, b) for a, b in zip(u, v)]


def cocycle_value(w, c, act):
    K = act.K
    w = _as_vector(K, w)
    c = bld.make_chamber(c)
    if not bld.is_chamber(c):
        raise bld.NotAChamber(f"{c} is not a chamber")
    total = [K.zero] * len(w)
    for g in bld.chamber_stabilizer(act.F, c):
        total = _vadd(K, total, mat_vec(K, act(g), w))
    if bld.sgn(c) < 0:
        total = [K.neg(x) for x in total]
    return total


def harmonic_defect(e, w, act):
    """Sum of the cocycle over the q+1 chambers through the edge e."""
    K = act.K
    r, s, reps = bld.stabilizer_coset_reps(act.F, e)
    near = cocycle_value(w, r, act)
    total = cocycle_value(w, s, act)
    for g in reps:
        total = _vadd(K, total, mat_vec(K, act(g), near))
    return total


def is_zero_vector(v):
    return all(not x for x in v)
