"""The coefficient space V_{k,n} and its level subspaces.

V_{k,n} is the dual of the degree-k homogeneous polynomials in X, Y, Z,
with basis v_{l,m} dual to X^l Y^m Z^(k-l-m), indexed in lexicographic
order.  A matrix gamma acts by

    (gamma v)(P(X, Y, Z)) = det(gamma)^(1-n) v(P(L1, L2, L3))

where L_r is the r-th row of gamma applied to (X, Y, Z).  Column (l, m) of
``action_matrix`` holds the coordinates of gamma v_{l,m}, so products of
matrices map to products of action matrices.
"""

import hashlib
import json
import math
import os
import threading
from functools import lru_cache

from . import building as bld
from .algebra import RatFunc, field
from .linalg import (eigenspace, extend_basis, full_space, intersect, kernel,
                     mat_add, mat_sub, span, zero_space)

LEVELS = ("gamma1", "gamma0", "p0", "p2", "gl3")


class InvalidLevel(ValueError):
    pass


@lru_cache(maxsize=None)
def basis_indices(k):
    return tuple((l, m) for l in range(k + 1) for m in range(k + 1 - l))


def dimension(k):
    return (k + 2) * (k + 1) // 2


# ---------------------------------------------------------------- multinomials

def _digits(n, p):
    out = []
    while n:
        out.append(n % p)
        n //= p
    return out


def multinomial_mod_p(parts, p):
    """(sum parts)! / prod(parts!) modulo p, digit by digit (Lucas)."""
    total = sum(parts)
    nd = _digits(total, p)
    pd = [_digits(x, p) for x in parts]
    r = 1
    for i, d in enumerate(nd):
        ds = [x[i] if i < len(x) else 0 for x in pd]
        if sum(ds) != d:
            return 0
        c = math.factorial(d)
        for x in ds:
            c //= math.factorial(x)
        r = r * c % p
        if not r:
            return 0
    return r


@lru_cache(maxsize=None)
def _trinomials(e, p):
    """[(a, b, c, coeff)] with a+b+c = e and nonzero multinomial mod p."""
    out = []
    for a in range(e + 1):
        for b in range(e + 1 - a):
            c = e - a - b
            m = multinomial_mod_p((a, b, c), p)
            if m:
                out.append((a, b, c, m))
    return out


# ---------------------------------------------------------------- action

def _det3(K, g):
    (a, b, c), (d, e, f), (h, i, j) = g
    s, m = K.sub, K.mul
    return K.add(s(m(a, s(m(e, j), m(f, i))), m(b, s(m(d, j), m(f, h)))),
                 m(c, s(m(d, i), m(e, h))))


def _pow_table(K, x, e):
    out = [K.one]
    for _ in range(e):
        out.append(K.mul(out[-1], x))
    return out


def _linear_power(K, row, e, p):
    """(x X + y Y + z Z)^e as {(a, b): coeff}, using multinomials mod p."""
    x, y, z = row
    px, py, pz = _pow_table(K, x, e), _pow_table(K, y, e), _pow_table(K, z, e)
    out = {}
    for a, b, c, m in _trinomials(e, p):
        v = K.mul(K.mul(px[a], py[b]), pz[c])
        if not K.is_zero(v):
            if m != 1:
                v = K.mul(K.from_int(m), v)
            out[(a, b)] = v
    return out


def _poly_mul(K, f, g):
    add, mul = K.add, K.mul
    out = {}
    for (a1, b1), x in f.items():
        for (a2, b2), y in g.items():
            key = (a1 + a2, b1 + b2)
            v = mul(x, y)
            if key in out:
                out[key] = add(out[key], v)
            else:
                out[key] = v
    return out


def action_matrix(K, gamma, k, n=0):
    """Matrix of v -> gamma v on V_{k,n}; gamma has entries in the domain K."""
    det = _det3(K, gamma)
    if K.is_zero(det):
        raise bld.Singular("singular matrix")
    p = _char(K)
    scale = K.pow(det, 1 - n)
    idx = basis_indices(k)
    pos = {ix: i for i, ix in enumerate(idx)}
    N = len(idx)
    pw = [[_linear_power(K, gamma[r], e, p) for e in range(k + 1)] for r in range(3)]
    M = [[K.zero] * N for _ in range(N)]
    for row, (l, m) in enumerate(idx):
        poly = _poly_mul(K, _poly_mul(K, pw[0][l], pw[1][m]), pw[2][k - l - m])
        for key, v in poly.items():
            if not K.is_zero(v):
                M[row][pos[key]] = K.mul(scale, v)
    return M


def action_matrix_naive(K, gamma, k, n=0):
    """Independent oracle: expand by repeated multiplication by linear forms."""
    idx = basis_indices(k)
    pos = {ix: i for i, ix in enumerate(idx)}
    N = len(idx)
    det = _det3(K, gamma)
    scale = K.pow(det, 1 - n)
    M = [[K.zero] * N for _ in range(N)]
    for row, (l, m) in enumerate(idx):
        poly = {(0, 0, 0): K.one}
        for r, times in ((0, l), (1, m), (2, k - l - m)):
            for _ in range(times):
                nxt = {}
                for (a, b, c), v in poly.items():
                    for d, w in enumerate(gamma[r]):
                        key = (a + (d == 0), b + (d == 1), c + (d == 2))
                        nxt[key] = K.add(nxt.get(key, K.zero), K.mul(v, w))
                poly = nxt
        for (a, b, c), v in poly.items():
            M[row][pos[(a, b)]] = K.mul(scale, v)
    return M


def _char(K):
    F = getattr(K, "F", K)
    return F.p


# ---------------------------------------------------------------- memo

class ActionCache:
    """Insert-once memo of constant action matrices, optionally on disk."""

    def __init__(self, directory=None):
        self.directory = directory
        self.memory = {}
        self.hits = 0
        self.misses = 0
        self.disk_hits = 0
        self._lock = threading.Lock()
        if directory:
            os.makedirs(directory, exist_ok=True)

    def _path(self, key):
        h = hashlib.sha256(repr(key).encode()).hexdigest()[:24]
        q, k, n = key[0], key[1], key[2]
        return os.path.join(self.directory, f"act-q{q}-k{k}-n{n}-{h}.json")

    def get(self, q, gamma, k, n=0):
        key = (q, k, n, gamma)
        with self._lock:
            if key in self.memory:
                self.hits += 1
                return self.memory[key]
        M = None
        if self.directory:
            path = self._path(key)
            if os.path.exists(path):
                with open(path, encoding="utf-8") as fh:
                    data = json.load(fh)
                if data.get("gamma") == [list(r) for r in gamma]:
                    M = data["matrix"]
                    with self._lock:
                        self.disk_hits += 1
        if M is None:
            F = field(q)
            M = action_matrix(F, gamma, k, n)
            with self._lock:
                self.misses += 1
            if self.directory:
                tmp = path + f".{os.getpid()}.{threading.get_ident()}.tmp"
                with open(tmp, "w", encoding="utf-8") as fh:
                    json.dump({"q": q, "k": k, "n": n, "gamma": [list(r) for r in gamma],
                               "matrix": M}, fh)
                os.replace(tmp, path)
        with self._lock:
            return self.memory.setdefault(key, M)


_default_cache = ActionCache()


def set_cache(cache):
    global _default_cache
    _default_cache = cache


def get_cache():
    return _default_cache


def const_action(q, gamma, k, n=0):
    """Action matrix of a matrix over F_q given as nested ints (codes)."""
    g = tuple(tuple(int(x) for x in row) for row in gamma)
    return _default_cache.get(q, g, k, n)


# ---------------------------------------------------------------- delta

def delta_exponents(i, k):
    """t-exponents of the renormalized diagonal action of delta_i^{-1}."""
    if i == 1:
        return [l + m for l, m in basis_indices(k)]
    if i == 2:
        return [l for l, m in basis_indices(k)]
    raise ValueError(f"operator index must be 1 or 2, got {i}")


def delta_matrix(F, i, k):
    t = RatFunc.t(F)
    zero = RatFunc.const(F, 0)
    ex = delta_exponents(i, k)
    return [[t ** ex[r] if r == c else zero for c in range(len(ex))] for r in range(len(ex))]


# ---------------------------------------------------------------- levels

def vd_basis(k, q):
    if (k + 3) % (q - 1):
        return []
    return [(l, m) for l, m in basis_indices(k) if (l + 1) % (q - 1) == 0 and (m + 1) % (q - 1) == 0]


ETA0 = ((1, 0, 0), (1, 1, 0), (0, 0, 1))
ETA2 = ((1, 0, 0), (0, 1, 0), (0, 1, 1))


class LevelSubspace:
    __slots__ = ("level", "k", "q", "subspace", "base_change")

    def __init__(self, level, k, q, subspace, base_change):
        self.level, self.k, self.q = level, k, q
        self.subspace, self.base_change = subspace, base_change

    @property
    def dim(self):
        return self.subspace.dim

    def __repr__(self):
        return f"LevelSubspace({self.level}, k={self.k}, q={self.q}, dim={self.dim})"


def _poly_matrix_codes(g):
    # group elements near s_0 are constant; return their F_q codes
    out = []
    for row in g:
        r = []
        for x in row:
            if len(x) > 1:
                raise ValueError("expected a constant matrix")
            r.append(x[0] if x else 0)
        out.append(tuple(r))
    return tuple(out)


def weyl_condition(q, k, rho):
    """M(rho) - sgn(rho s_0) * sum over Stab(rho s_0) of M(gamma)."""
    F = field(q)
    c = bld.weyl_act_chamber(rho, bld.S0)
    sign = bld.sgn(c)
    stab = bld.chamber_stabilizer(F, c)
    P = tuple(tuple(r) for r in bld.perm_matrix(rho))
    total = None
    for g in stab:
        M = const_action(q, _poly_matrix_codes(g), k)
        total = M if total is None else mat_add(F, total, M)
    if sign < 0:
        return mat_add(F, const_action(q, P, k), total)
    return mat_sub(F, const_action(q, P, k), total)


def _vd_space(F, k, q):
    idx = basis_indices(k)
    keep = set(vd_basis(k, q))
    vecs = []
    for i, ix in enumerate(idx):
        if ix in keep:
            v = [0] * len(idx)
            v[i] = 1
            vecs.append(v)
    return span(F, vecs, len(idx))


def _fixed(F, q, k, g):
    return eigenspace(F, const_action(q, g, k), 1)


@lru_cache(maxsize=None)
def level_subspace(level, k, q):
    if level not in LEVELS:
        raise InvalidLevel(f"unknown level {level!r}; expected one of {', '.join(LEVELS)}")
    F = field(q)
    N = dimension(k)
    if level == "gamma1":
        S = full_space(F, N)
    else:
        S = _vd_space(F, k, q)
        if level != "gamma0" and S.dim:
            if level in ("p0", "gl3"):
                S = intersect(S, _fixed(F, q, k, ETA0))
            if level in ("p2", "gl3"):
                S = intersect(S, _fixed(F, q, k, ETA2))
            if level == "p0":
                rhos = [bld.SIGMA]
            elif level == "p2":
                rhos = [bld.TAU]
            else:
                rhos = [r for r in bld.WEYL if r != (0, 1, 2)]
            for rho in rhos:
                if not S.dim:
                    break
                S = intersect(S, kernel(F, weyl_condition(q, k, rho), N))
    if not S.dim:
        S = zero_space(F, N)
    return LevelSubspace(level, k, q, S, extend_basis(S))
