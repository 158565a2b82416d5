"""The standard apartment of the building of PGL_3 over F_q((1/t)).

A vertex [j, k] is the class of the lattice spanned by e1, pi^j e2, pi^k e3
with pi = 1/t, stored as the tuple (j, k).  Internally we often use the
exponent triple (0, j, k), taken modulo (1, 1, 1).  Chambers are sorted
tuples of three vertices.

Matrices act on column vectors.  A 3x3 matrix g stands for the lattice
spanned by its columns, and the chamber [g]_2 is the triple of classes of
g, g diag(1,1,pi) and g diag(1,pi,pi).  For instance the identity gives the
chamber {[0,0],[0,1],[1,1]}.
"""

import itertools
from collections import deque
from functools import lru_cache

from .algebra import (RatFunc, inf_valuation, padd, pmul, pneg, polys_upto,
                      pshift, psub)


class NotAChamber(ValueError):
    pass


class NotAnEdge(ValueError):
    pass


class NotASimplex(ValueError):
    pass


class Singular(ValueError):
    pass


# ---------------------------------------------------------------- vertices

def exponents(v):
    return (0, v[0], v[1])


def from_exponents(n):
    return (n[1] - n[0], n[2] - n[0])


def adjacent(u, v):
    d = (0, v[0] - u[0], v[1] - u[1])
    return max(d) - min(d) == 1


_STEPS = [(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 0), (1, 0, 1), (0, 1, 1)]


def vertex_neighbors(v):
    n = exponents(v)
    return [from_exponents(tuple(a + b for a, b in zip(n, s))) for s in _STEPS]


def make_chamber(vertices):
    c = tuple(sorted(tuple(v) for v in vertices))
    if not is_chamber(c):
        raise NotAChamber(f"{list(vertices)} is not a chamber of the apartment")
    return c


def is_chamber(c):
    c = list(c)
    return (len(c) == 3 and len(set(c)) == 3
            and all(adjacent(a, b) for a, b in itertools.combinations(c, 2)))


def is_simplex(vertices):
    vs = list(set(map(tuple, vertices)))
    return 1 <= len(vs) <= 3 and all(adjacent(a, b) for a, b in itertools.combinations(vs, 2))


def make_edge(vertices):
    e = tuple(sorted(tuple(v) for v in vertices))
    if len(e) != 2 or not adjacent(*e):
        raise NotAnEdge(f"{list(vertices)} is not an edge of the apartment")
    return e


S0 = ((-1, -1), (0, -1), (0, 0))
STANDARD_CHAMBER = ((0, 0), (0, 1), (1, 1))


def chamber_edges(c):
    return [tuple(e) for e in itertools.combinations(c, 2)]


def chambers_on_edge(e):
    """The two apartment chambers containing the edge e."""
    e = make_edge(e)
    u, v = e
    out = [make_chamber((u, v, w)) for w in vertex_neighbors(u)
           if w != v and adjacent(w, v)]
    return sorted(out)


def adjacent_chambers(c):
    c = _check_chamber(c)
    out = []
    for e in chamber_edges(c):
        for d in chambers_on_edge(e):
            if d != c:
                out.append(d)
    return out


def _check_chamber(c):
    c = tuple(sorted(tuple(v) for v in c))
    if not is_chamber(c):
        raise NotAChamber(f"{list(c)} is not a chamber of the apartment")
    return c


def chamber_distance(c1, c2):
    """Gallery distance inside the apartment, by breadth-first search."""
    c1, c2 = _check_chamber(c1), _check_chamber(c2)
    if c1 == c2:
        return 0
    seen = {c1: 0}
    todo = deque([c1])
    while todo:
        c = todo.popleft()
        d = seen[c]
        for nb in adjacent_chambers(c):
            if nb not in seen:
                if nb == c2:
                    return d + 1
                seen[nb] = d + 1
                todo.append(nb)
    raise AssertionError("unreachable")


@lru_cache(maxsize=None)
def ball(radius):
    """Chambers within gallery distance ``radius`` of s_0, with distances."""
    seen = {S0: 0}
    layer = [S0]
    for d in range(1, radius + 1):
        nxt = []
        for c in layer:
            for nb in adjacent_chambers(c):
                if nb not in seen:
                    seen[nb] = d
                    nxt.append(nb)
        layer = nxt
    return dict(sorted(seen.items(), key=lambda kv: (kv[1], kv[0])))


def edges_within(radius):
    """Edges all of whose chambers lie within ``radius`` of s_0."""
    cs = ball(radius)
    out = set()
    for c in cs:
        for e in chamber_edges(c):
            if all(d in cs for d in chambers_on_edge(e)):
                out.add(e)
    return sorted(out)


def sgn(c):
    return -1 if chamber_distance(c, S0) % 2 else 1


# ---------------------------------------------------------------- Weyl group

def perm_matrix(sigma):
    """Permutation matrix P with P e_i = e_sigma(i); sigma is 0-based."""
    P = [[0] * 3 for _ in range(3)]
    for i, s in enumerate(sigma):
        P[s][i] = 1
    return P


def perm_from_cycle(cycle):
    """Permutation tuple from a 1-based cycle string such as "123" or "12"."""
    s = list(range(3))
    idx = [int(ch) - 1 for ch in cycle]
    for a, b in zip(idx, idx[1:] + idx[:1]):
        s[a] = b
    return tuple(s)


# identity, (23), (12), (13), (132), (123)
WEYL = [perm_from_cycle(c) for c in ("1", "23", "12", "13", "132", "123")]
SIGMA = perm_from_cycle("12")
TAU = perm_from_cycle("23")


def weyl_act(sigma, v):
    n = exponents(v)
    m = [0, 0, 0]
    for i, s in enumerate(sigma):
        m[s] = n[i]
    return from_exponents(m)


def weyl_act_chamber(sigma, c):
    return make_chamber([weyl_act(sigma, v) for v in c])


def compose(s1, s2):
    return tuple(s1[s2[i]] for i in range(3))


# ---------------------------------------------------------------- symbols

class EntrySymbol:
    """A finite set of polynomials: Zero, One, {n} (deg <= n) or t{n}.

    t{n} is t times {n}, i.e. multiples of t of degree at most n + 1.
    """

    __slots__ = ("kind", "n")

    def __init__(self, kind, n=0):
        if kind not in ("zero", "one", "deg", "tdeg"):
            raise ValueError(kind)
        if kind in ("deg", "tdeg") and n < 0:
            kind = "zero"
        if kind in ("zero", "one"):
            n = 0
        self.kind, self.n = kind, n

    def __eq__(self, other):
        return isinstance(other, EntrySymbol) and (self.kind, self.n) == (other.kind, other.n)

    def __hash__(self):
        return hash((self.kind, self.n))

    def __repr__(self):
        if self.kind == "zero":
            return "Zero"
        if self.kind == "one":
            return "One"
        if self.kind == "deg":
            return "Star" if self.n == 0 else f"{{{self.n}}}"
        return f"t{{{self.n}}}"

    def meet(self, other):
        a, b = self, other
        if a.kind == "zero" or b.kind == "zero":
            return ZERO
        if a.kind == "one" or b.kind == "one":
            if a.kind == b.kind or (a.kind == "deg" or b.kind == "deg"):
                return ONE
            raise ValueError("One meets t{n}: empty set")
        if a.kind == b.kind:
            return EntrySymbol(a.kind, min(a.n, b.n))
        d, td = (a, b) if a.kind == "deg" else (b, a)
        return EntrySymbol("tdeg", min(d.n - 1, td.n))

    def elements(self, F):
        if self.kind == "zero":
            return [()]
        if self.kind == "one":
            return [(1,)]
        polys = polys_upto(F, self.n)
        if self.kind == "deg":
            return polys
        return [pshift(a, 1) for a in polys]

    def contains(self, a):
        if self.kind == "zero":
            return not a
        if self.kind == "one":
            return a == (1,)
        if self.kind == "deg":
            return len(a) - 1 <= self.n
        return not a or (a[0] == 0 and len(a) - 2 <= self.n)

    def size(self, q):
        if self.kind in ("zero", "one"):
            return 1
        return q ** (self.n + 1)


ZERO = EntrySymbol("zero")
ONE = EntrySymbol("one")
STAR = EntrySymbol("deg", 0)


def DegLE(n):
    return EntrySymbol("deg", n)


def TDivDegLE(n):
    return EntrySymbol("tdeg", n)


def gamma1_vertex_stabilizer(v):
    """Symbol matrix of the Gamma_1(t)-stabilizer of the vertex [j, k]."""
    j, k = v
    return (
        (ONE, DegLE(j), DegLE(k)),
        (TDivDegLE(-j - 1), ONE, DegLE(k - j)),
        (TDivDegLE(-k - 1), TDivDegLE(j - k - 1), ONE),
    )


def simplex_stabilizer(vertices):
    vs = sorted(set(map(tuple, vertices)))
    if not is_simplex(vs):
        raise NotASimplex(f"{vs} is not a simplex of the apartment")
    sym = gamma1_vertex_stabilizer(vs[0])
    for v in vs[1:]:
        other = gamma1_vertex_stabilizer(v)
        sym = tuple(tuple(a.meet(b) for a, b in zip(ra, rb)) for ra, rb in zip(sym, other))
    return sym


# ---------------------------------------------------------------- group elements

def det3(F, g):
    (a, b, c), (d, e, f), (h, i, j) = g
    m = lambda x, y: pmul(F, x, y)  # noqa: E731
    t1 = m(a, psub(F, m(e, j), m(f, i)))
    t2 = m(b, psub(F, m(d, j), m(f, h)))
    t3 = m(c, psub(F, m(d, i), m(e, h)))
    return padd(F, psub(F, t1, t2), t3)


def adj3(F, g):
    """Adjugate of a 3x3 polynomial matrix."""
    m = lambda x, y: pmul(F, x, y)  # noqa: E731

    def cof(r, c):
        rs = [x for x in range(3) if x != r]
        cs = [x for x in range(3) if x != c]
        v = psub(F, m(g[rs[0]][cs[0]], g[rs[1]][cs[1]]), m(g[rs[0]][cs[1]], g[rs[1]][cs[0]]))
        return v if (r + c) % 2 == 0 else pneg(F, v)

    return tuple(tuple(cof(c, r) for c in range(3)) for r in range(3))


def mul3(F, g, h):
    return tuple(tuple(_dot3(F, g[r], [h[0][c], h[1][c], h[2][c]]) for c in range(3))
                 for r in range(3))


def _dot3(F, u, v):
    acc = ()
    for a, b in zip(u, v):
        if a and b:
            acc = padd(F, acc, pmul(F, a, b))
    return acc


def inv3_unimodular(F, g):
    d = det3(F, g)
    if len(d) != 1:
        raise Singular("determinant is not a nonzero constant")
    c = F.inv(d[0])
    return tuple(tuple(tuple(F.mul_t[c][x] for x in e) for e in row) for row in adj3(F, g))


def symbol_contains(sym, g):
    return all(s.contains(x) for rs, rg in zip(sym, g) for s, x in zip(rs, rg))


_OFF = [(0, 1), (0, 2), (1, 0), (1, 2), (2, 0), (2, 1)]


def enumerate_stabilizer(F, sym):
    """All matrices in the symbol set with determinant in F_q^x, sorted."""
    choices = []
    for r in range(3):
        for c in range(3):
            choices.append(sym[r][c].elements(F))
    out = []
    for entries in itertools.product(*choices):
        g = (entries[0:3], entries[3:6], entries[6:9])
        d = det3(F, g)
        if len(d) == 1:
            out.append(g)
    out.sort()
    return out


def chamber_stabilizer(F, c):
    return enumerate_stabilizer(F, simplex_stabilizer(_check_chamber(c)))


def in_gamma1(F, g):
    """det g = 1 and g is upper unipotent modulo t."""
    if det3(F, g) != (1,):
        return False
    for r in range(3):
        for c in range(3):
            x = g[r][c]
            x0 = x[0] if x else 0
            if r == c and x0 != 1:
                return False
            if r > c and x0 != 0:
                return False
    return True


def is_identity(g):
    return all(g[r][c] == ((1,) if r == c else ()) for r in range(3) for c in range(3))


def group_identity():
    return tuple(tuple((1,) if r == c else () for c in range(3)) for r in range(3))


# ---------------------------------------------------------------- matrix classes

def ratmat(F, g):
    """Convert a matrix with int, polynomial or RatFunc entries to RatFunc."""
    out = []
    for row in g:
        r = []
        for x in row:
            if isinstance(x, RatFunc):
                r.append(x)
            elif isinstance(x, int):
                r.append(RatFunc.const(F, F.from_int(x)))
            else:
                r.append(RatFunc.poly(F, x))
        out.append(r)
    return out


def rdet3(g):
    (a, b, c), (d, e, f), (h, i, j) = g
    return a * (e * j - f * i) - b * (d * j - f * h) + c * (d * i - e * h)


def rinv3(g):
    d = rdet3(g)
    if d.is_zero():
        raise Singular("singular matrix")
    di = d.inverse()

    def cof(r, c):
        rs = [x for x in range(3) if x != r]
        cs = [x for x in range(3) if x != c]
        v = g[rs[0]][cs[0]] * g[rs[1]][cs[1]] - g[rs[0]][cs[1]] * g[rs[1]][cs[0]]
        return v if (r + c) % 2 == 0 else -v

    return [[cof(c, r) * di for c in range(3)] for r in range(3)]


def rmul3(g, h):
    return [[g[r][0] * h[0][c] + g[r][1] * h[1][c] + g[r][2] * h[2][c] for c in range(3)]
            for r in range(3)]


def _scale_cols(g, factors):
    return [[x * f for x, f in zip(row, factors)] for row in g]


def chamber_from_matrix(F, g):
    """The three vertex matrices g, g diag(1,1,pi), g diag(1,pi,pi)."""
    g = ratmat(F, g)
    if rdet3(g).is_zero():
        raise Singular("singular matrix")
    one = RatFunc.const(F, 1)
    pi = RatFunc(F, (1,), (0, 1))
    return (g, _scale_cols(g, [one, one, pi]), _scale_cols(g, [one, pi, pi]))


def vertex_matrix(F, v):
    """diag(1, pi^j, pi^k), a representative of the vertex [j, k]."""
    j, k = v
    t = RatFunc.t(F)
    zero = RatFunc.const(F, 0)
    d = [RatFunc.const(F, 1), t ** (-j), t ** (-k)]
    return [[d[r] if r == c else zero for c in range(3)] for r in range(3)]


def vertex_class_equal(F, g1, g2):
    """Do the columns of g1 and g2 span homothetic lattices?"""
    g1, g2 = ratmat(F, g1), ratmat(F, g2)
    h = rmul3(rinv3(g1), g2)
    d = rdet3(h)
    if d.is_zero():
        raise Singular("singular matrix")
    v0 = min(inf_valuation(x) for row in h for x in row)
    return inf_valuation(d) == 3 * v0


def chamber_matrix(F, c):
    """A matrix g with [g]_2 equal to the apartment chamber c.

    c = {n, n + e_a, n + e_a + e_b} is represented by diag(t^-n) P_sigma
    with sigma(3) = a and sigma(2) = b.
    """
    c = _check_chamber(c)
    ns = [exponents(v) for v in c]
    for base in ns:
        rest = [_shift_min(tuple(x - y for x, y in zip(m, base))) for m in ns if m != base]
        singles = [r for r in rest if sorted(r) == [0, 0, 1]]
        doubles = [r for r in rest if sorted(r) == [0, 1, 1]]
        if len(singles) == 1 and len(doubles) == 1:
            a = singles[0].index(1)
            b = next(i for i in range(3) if doubles[0][i] == 1 and i != a)
            cidx = 3 - a - b
            sigma = (cidx, b, a)
            P = perm_matrix(sigma)
            t = RatFunc.t(F)
            zero = RatFunc.const(F, 0)
            D = [[t ** (-base[r]) if r == cc else zero for cc in range(3)] for r in range(3)]
            return rmul3(D, ratmat(F, P))
    raise AssertionError("no base vertex found")


def _shift_min(d):
    lo = min(d)
    return tuple(x - lo for x in d)


def chamber_class_equal(F, tri1, tri2):
    """Compare two vertex-matrix triples as unordered sets of classes."""
    used = [False] * 3
    for g in tri1:
        for i, h in enumerate(tri2):
            if not used[i] and vertex_class_equal(F, g, h):
                used[i] = True
                break
        else:
            return False
    return True


def act_on_chamber(F, gamma, c):
    """Vertex-matrix triple of gamma applied to the apartment chamber c."""
    return chamber_from_matrix(F, rmul3(ratmat(F, gamma), chamber_matrix(F, c)))


def stabilizer_coset_reps(F, e):
    """(near chamber r, far chamber s, coset representatives of Stab(s)/Stab(r))."""
    e = make_edge(e)
    c1, c2 = chambers_on_edge(e)
    d1, d2 = chamber_distance(c1, S0), chamber_distance(c2, S0)
    r, s = (c1, c2) if d1 < d2 else (c2, c1)
    sym_r = simplex_stabilizer(r)
    reps = []
    for g in chamber_stabilizer(F, s):
        if all(not symbol_contains(sym_r, mul3(F, inv3_unimodular(F, h), g)) for h in reps):
            reps.append(g)
    return r, s, reps


def verify_reduction(F, eps, gamma, target):
    """Is gamma in Gamma_1(t) with gamma [g_target]_2 = eps [g_{s_0}]_2?"""
    gamma = tuple(tuple(_as_poly(F, x) for x in row) for row in gamma)
    if not in_gamma1(F, gamma):
        return False
    lhs = chamber_from_matrix(F, rmul3(ratmat(F, eps), chamber_matrix(F, S0)))
    rhs = act_on_chamber(F, gamma, make_chamber(target))
    return chamber_class_equal(F, lhs, rhs)


def _as_poly(F, x):
    if isinstance(x, int):
        c = F.from_int(x)
        return (c,) if c else ()
    if isinstance(x, RatFunc):
        if not x.is_poly():
            raise ValueError("entry is not a polynomial")
        return x.num
    return tuple(x)


def wall_distance(c1, c2):
    """Number of walls separating two apartment chambers (closed form)."""
    def strips(c):
        ns = [exponents(v) for v in c]
        return [min(n[a] - n[b] for n in ns) for a, b in ((0, 1), (0, 2), (1, 2))]
    return sum(abs(x - y) for x, y in zip(strips(_check_chamber(c1)), strips(_check_chamber(c2))))
