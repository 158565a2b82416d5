"""Orbits on P^2(F_q), Hecke representative sets and the Bruhat check."""

import itertools

from . import building as bld
from .algebra import field

LEVEL_TAGS = ("gamma1", "gamma0", "p0", "p2", "gl3")


class Singular(ValueError):
    pass


# ---------------------------------------------------------------- 3x3 over F_q

def mmul(F, g, h):
    add, mul = F.add_t, F.mul_t
    out = []
    for r in range(3):
        row = []
        for c in range(3):
            acc = 0
            for k in range(3):
                acc = add[acc][mul[g[r][k]][h[k][c]]]
            row.append(acc)
        out.append(tuple(row))
    return tuple(out)


def mdet(F, g):
    add, mul, neg = F.add_t, F.mul_t, F.neg_t
    (a, b, c), (d, e, f), (h, i, j) = g

    def sub(x, y):
        return add[x][neg[y]]

    t1 = mul[a][sub(mul[e][j], mul[f][i])]
    t2 = mul[b][sub(mul[d][j], mul[f][h])]
    t3 = mul[c][sub(mul[d][i], mul[e][h])]
    return add[sub(t1, t2)][t3]


def minv(F, g):
    d = mdet(F, g)
    if d == 0:
        raise Singular("singular matrix over F_q")
    di = F.inv(d)
    add, mul, neg = F.add_t, F.mul_t, F.neg_t

    def cof(r, c):
        rs = [x for x in range(3) if x != r]
        cs = [x for x in range(3) if x != c]
        v = add[mul[g[rs[0]][cs[0]]][g[rs[1]][cs[1]]]][neg[mul[g[rs[0]][cs[1]]][g[rs[1]][cs[0]]]]]
        return v if (r + c) % 2 == 0 else neg[v]

    return tuple(tuple(mul[cof(c, r)][di] for c in range(3)) for r in range(3))


def mtranspose(g):
    return tuple(zip(*g))


def matrices_with_pattern(F, pattern):
    """All invertible matrices whose entries are 0 where pattern has 0.

    pattern is a 3x3 grid of "*" (any), "1" (one), "0" (zero).
    """
    choices = []
    for row in pattern:
        for s in row:
            choices.append({"*": list(F.elements()), "1": [1], "0": [0]}[s])
    out = []
    for e in itertools.product(*choices):
        g = (e[0:3], e[3:6], e[6:9])
        if mdet(F, g):
            out.append(g)
    return out


PATTERNS = {
    "gl3": ("***", "***", "***"),
    "B": ("***", "0**", "00*"),
    "U": ("1**", "01*", "001"),
    "BT": ("*00", "**0", "***"),
    "P0": ("***", "***", "00*"),
    "P2": ("***", "0**", "0**"),
}

# reduction mod t of each level group
LEVEL_PATTERN = {"gamma1": "U", "gamma0": "B", "p0": "P0", "p2": "P2", "gl3": "gl3"}


# ---------------------------------------------------------------- P^2

def normalize_point(F, x):
    x = tuple(x)
    for c in x:
        if c:
            inv = F.inv(c)
            return tuple(F.mul_t[inv][y] for y in x)
    raise ValueError("the zero vector is not a projective point")


def p2_points(q):
    F = field(q)
    pts = set()
    for x in itertools.product(range(q), repeat=3):
        if any(x):
            pts.add(normalize_point(F, x))
    return sorted(pts)


def act_dot(F, x, g):
    if mdet(F, g) == 0:
        raise Singular("singular matrix over F_q")
    add, mul = F.add_t, F.mul_t
    y = []
    for c in range(3):
        acc = 0
        for r in range(3):
            acc = add[acc][mul[x[r]][g[r][c]]]
        y.append(acc)
    return normalize_point(F, y)


def act_star(F, x, g):
    return act_dot(F, x, mtranspose(minv(F, g)))


# ---------------------------------------------------------------- Hecke representatives

class RepSet:
    __slots__ = ("i", "level", "q", "matrices")

    def __init__(self, i, level, q, matrices):
        self.i, self.level, self.q, self.matrices = i, level, q, matrices

    def __len__(self):
        return len(self.matrices)

    def __repr__(self):
        return f"RepSet(i={self.i}, level={self.level}, q={self.q}, size={len(self)})"


T = (0, 1)


def _c(x):
    return (x,) if x else ()


def _family(i, name, q):
    """The displayed representative families, entries in F_q[t]."""
    F = field(q)
    els = list(F.elements())
    one, zero = (1,), ()
    out = []
    if (i, name) == (1, "Q"):
        for a in els:
            for b in els:
                out.append(((one, zero, _c(a)), (zero, one, _c(b)), (zero, zero, T)))
    elif (i, name) == (1, "R"):
        for a in els:
            out.append(((one, _c(a), zero), (zero, zero, one), (zero, T, zero)))
    elif (i, name) == (1, "S"):
        out.append(((zero, one, zero), (zero, zero, one), (T, zero, zero)))
    elif (i, name) == (2, "Q"):
        for a in els:
            for b in els:
                out.append(((one, _c(a), _c(b)), (zero, T, zero), (zero, zero, T)))
    elif (i, name) == (2, "R"):
        for a in els:
            out.append(((zero, one, _c(a)), (T, zero, zero), (zero, zero, T)))
    elif (i, name) == (2, "S"):
        out.append(((zero, zero, one), (T, zero, zero), (zero, T, zero)))
    else:
        raise ValueError((i, name))
    return out


def families_for(i, level):
    if level not in LEVEL_TAGS:
        raise ValueError(f"unknown level {level!r}")
    if i not in (1, 2):
        raise ValueError(f"operator index must be 1 or 2, got {i}")
    if level == "gl3":
        return ("Q", "R", "S")
    if (i, level) in ((1, "p2"), (2, "p0")):
        return ("Q", "R")
    return ("Q",)


def hecke_reps(i, level, q):
    mats = []
    for name in families_for(i, level):
        mats.extend(_family(i, name, q))
    return RepSet(i, level, q, mats)


def _strip_delta(F, i, eps):
    """delta_i^{-1} eps reduced mod t, or None if not integral."""
    rows = []
    for r in range(3):
        row = []
        for x in eps[r]:
            if r == 0 or (i == 2 and r > 0) or (i == 1 and r == 2):
                if r == 0:
                    y = x
                else:
                    if x and x[0] != 0:
                        return None
                    y = x[1:]
            else:
                y = x
            row.append(y[0] if y else 0)
        rows.append(tuple(row))
    return tuple(rows)


def base_point(i):
    return (0, 0, 1) if i == 1 else (1, 0, 0)


def orbit(F, i, group):
    x = base_point(i)
    act = act_star if i == 1 else act_dot
    return {act(F, x, g) for g in group}


def verify_reps(i, level, q, reps=None):
    """Check a representative set against the orbit of the base point."""
    F = field(q)
    if reps is None:
        reps = hecke_reps(i, level, q)
    group = matrices_with_pattern(F, PATTERNS[LEVEL_PATTERN[level]])
    target = orbit(F, i, group)
    act = act_star if i == 1 else act_dot
    x = base_point(i)
    hit = []
    for eps in reps.matrices:
        g = _strip_delta(F, i, eps)
        if g is None or mdet(F, g) == 0:
            return False
        if g not in set(group):
            return False
        hit.append(act(F, x, g))
    return len(hit) == len(set(hit)) and set(hit) == target


def weyl_matrices():
    return [tuple(tuple(r) for r in bld.perm_matrix(s)) for s in bld.WEYL]


def bruhat_check(q, perms=None, transpose_borel=None):
    """GL_3(F_q) is the disjoint union of U w B (and of U w B^T) over w."""
    F = field(q)
    if perms is None:
        perms = weyl_matrices()
    G = set(matrices_with_pattern(F, PATTERNS["gl3"]))
    U = matrices_with_pattern(F, PATTERNS["U"])
    variants = ("B", "BT") if transpose_borel is None else (("BT",) if transpose_borel else ("B",))
    for name in variants:
        Bor = matrices_with_pattern(F, PATTERNS[name])
        seen = set()
        total = 0
        for w in perms:
            cell = set()
            for u in U:
                uw = mmul(F, u, w)
                for b in Bor:
                    cell.add(mmul(F, uw, b))
            if cell & seen:
                return False
            seen |= cell
            total += len(cell)
        if seen != G or total != len(G):
            return False
    return True


def gl3_order(q):
    return (q ** 3 - 1) * (q ** 3 - q) * (q ** 3 - q ** 2)
