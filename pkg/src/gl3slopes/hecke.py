"""Hecke operators U_1, U_2, T_1, T_2 on the level subspaces of V_k.

Each operator on cocycles is evaluated at s_0, where it becomes

    v  ->  (A_i [+ B_i [+ C_i]]) (delta_i^{-1} v)

with A_i, B_i, C_i signed sums of constant matrices.  The diagonal part is
renormalized by t^(k+i), which shifts every slope by the same amount and
makes all entries polynomial in t.
"""

from functools import lru_cache

from . import representation as rep
from .algebra import RatField, RatFunc, field
from .linalg import NotInvariant, mat_add, mat_mul, mat_sub, restrict_operator, span, zeros

# ---------------------------------------------------------------- encoding 1
# Each term is (sign, summation, builder).  summation is "ab" (a, b over
# F_q^x), "a" (a over F_q^x) or "" (a single matrix).  Builders receive the
# field and the loop variables and return a 3x3 matrix of F_q codes.


def _A1(F):
    n, i, m = F.neg, F.inv, F.mul
    return [
        (+1, "ab", lambda a, b: ((1, 0, 0), (0, 1, 0), (a, b, 1))),
        (-1, "ab", lambda a, b: ((0, 0, n(a)), (0, 1, 0), (i(a), m(i(a), b), 1))),
        (-1, "ab", lambda a, b: ((1, 0, 0), (n(m(a, b)), 0, n(a)), (b, i(a), 1))),
        (+1, "ab", lambda a, b: ((0, 0, n(a)), (n(m(i(a), b)), 0, n(b)), (i(a), i(b), 1))),
        (+1, "a", lambda a: ((1, 0, 0), (0, 1, 0), (a, 0, 1))),
        (+1, "a", lambda a: ((1, 0, 0), (0, 1, 0), (0, a, 1))),
        (-1, "a", lambda a: ((0, 0, n(a)), (0, 1, 0), (i(a), 0, 1))),
        (-1, "a", lambda a: ((1, 0, 0), (0, 0, n(a)), (0, i(a), 1))),
        (+1, "", lambda: ((1, 0, 0), (0, 1, 0), (0, 0, 1))),
    ]


def _B1(F):
    n, i = F.neg, F.inv
    return [
        (+1, "a", lambda a: ((0, 0, n(a)), (i(a), 0, 1), (0, 1, 0))),
        (-1, "a", lambda a: ((1, 0, 0), (a, 0, 1), (0, 1, 0))),
        (-1, "", lambda: ((1, 0, 0), (0, 0, 1), (0, 1, 0))),
    ]


def _C1(F):
    return [(-1, "", lambda: ((0, 0, 1), (1, 0, 0), (0, 1, 0)))]


def _A2(F):
    n, i, m = F.neg, F.inv, F.mul
    return [
        (+1, "ab", lambda a, b: ((1, 0, 0), (a, 1, 0), (b, 0, 1))),
        (-1, "ab", lambda a, b: ((0, n(a), 0), (i(a), 1, 0), (b, 0, 1))),
        (-1, "ab", lambda a, b: ((0, 0, n(a)), (0, 1, b), (i(a), 0, 1))),
        (+1, "ab", lambda a, b: ((0, n(a), 0), (0, 1, n(m(i(a), b))), (i(b), 0, 1))),
        (+1, "a", lambda a: ((1, 0, 0), (a, 1, 0), (0, 0, 1))),
        (+1, "a", lambda a: ((1, 0, 0), (0, 1, 0), (a, 0, 1))),
        (-1, "a", lambda a: ((0, n(a), 0), (i(a), 1, 0), (0, 0, 1))),
        (-1, "a", lambda a: ((0, 0, n(a)), (0, 1, 0), (i(a), 0, 1))),
        (+1, "", lambda: ((1, 0, 0), (0, 1, 0), (0, 0, 1))),
    ]


def _B2(F):
    n, i = F.neg, F.inv
    return [
        (+1, "a", lambda a: ((0, 1, 0), (0, 0, n(a)), (i(a), 0, 1))),
        (-1, "a", lambda a: ((0, 1, 0), (1, 0, 0), (a, 0, 1))),
        (-1, "", lambda: ((0, 1, 0), (1, 0, 0), (0, 0, 1))),
    ]


def _C2(F):
    return [(-1, "", lambda: ((0, 1, 0), (0, 0, 1), (1, 0, 0)))]


ENCODING = {("A", 1): _A1, ("B", 1): _B1, ("C", 1): _C1,
            ("A", 2): _A2, ("B", 2): _B2, ("C", 2): _C2}

# ---------------------------------------------------------------- encoding 2
# The same operators typed a second time as text.  Rows are separated by
# ";", entries are 0, 1, a, b, -a, -b, a^-1, b^-1, a^-1b, -a^-1b or -ab.

TEMPLATES = {
    ("A", 1): """
        + ab | 1 0 0 ; 0 1 0 ; a b 1
        - ab | 0 0 -a ; 0 1 0 ; a^-1 a^-1b 1
        - ab | 1 0 0 ; -ab 0 -a ; b a^-1 1
        + ab | 0 0 -a ; -a^-1b 0 -b ; a^-1 b^-1 1
        + a  | 1 0 0 ; 0 1 0 ; a 0 1
        + a  | 1 0 0 ; 0 1 0 ; 0 a 1
        - a  | 0 0 -a ; 0 1 0 ; a^-1 0 1
        - a  | 1 0 0 ; 0 0 -a ; 0 a^-1 1
        +    | 1 0 0 ; 0 1 0 ; 0 0 1
    """,
    ("B", 1): """
        + a  | 0 0 -a ; a^-1 0 1 ; 0 1 0
        - a  | 1 0 0 ; a 0 1 ; 0 1 0
        -    | 1 0 0 ; 0 0 1 ; 0 1 0
    """,
    ("C", 1): """
        -    | 0 0 1 ; 1 0 0 ; 0 1 0
    """,
    ("A", 2): """
        + ab | 1 0 0 ; a 1 0 ; b 0 1
        - ab | 0 -a 0 ; a^-1 1 0 ; b 0 1
        - ab | 0 0 -a ; 0 1 b ; a^-1 0 1
        + ab | 0 -a 0 ; 0 1 -a^-1b ; b^-1 0 1
        + a  | 1 0 0 ; a 1 0 ; 0 0 1
        + a  | 1 0 0 ; 0 1 0 ; a 0 1
        - a  | 0 -a 0 ; a^-1 1 0 ; 0 0 1
        - a  | 0 0 -a ; 0 1 0 ; a^-1 0 1
        +    | 1 0 0 ; 0 1 0 ; 0 0 1
    """,
    ("B", 2): """
        + a  | 0 1 0 ; 0 0 -a ; a^-1 0 1
        - a  | 0 1 0 ; 1 0 0 ; a 0 1
        -    | 0 1 0 ; 1 0 0 ; 0 0 1
    """,
    ("C", 2): """
        -    | 0 1 0 ; 0 0 1 ; 1 0 0
    """,
}


def _entry(F, tok, a, b):
    neg = tok.startswith("-")
    body = tok[1:] if neg else tok
    vals = {"0": 0, "1": 1, "a": a, "b": b}
    if body in vals:
        v = vals[body]
    elif body == "a^-1":
        v = F.inv(a)
    elif body == "b^-1":
        v = F.inv(b)
    elif body == "a^-1b":
        v = F.mul(F.inv(a), b)
    elif body == "ab":
        v = F.mul(a, b)
    else:
        raise ValueError(f"unknown template entry {tok!r}")
    return F.neg(v) if neg else v


def parse_template(text):
    """[(sign, summation, [rows of tokens])] from a template string."""
    out = []
    for line in text.strip().splitlines():
        head, body = line.split("|")
        parts = head.split()
        sign = +1 if parts[0] == "+" else -1
        summ = parts[1] if len(parts) > 1 else ""
        rows = [r.split() for r in body.split(";")]
        if len(rows) != 3 or any(len(r) != 3 for r in rows):
            raise ValueError(f"malformed template row {line!r}")
        out.append((sign, summ, rows))
    return out


# ---------------------------------------------------------------- expansion

def _loop(F, summ):
    units = list(F.units())
    if summ == "ab":
        return [(a, b) for a in units for b in units]
    if summ == "a":
        return [(a,) for a in units]
    return [()]


def expand_terms(name, i, q):
    """[(sign, matrix)] from the first encoding, one entry per loop value."""
    F = field(q)
    out = []
    for sign, summ, build in ENCODING[(name, i)](F):
        for args in _loop(F, summ):
            out.append((sign, build(*args)))
    return out


def expand_template(name, i, q):
    F = field(q)
    out = []
    for sign, summ, rows in parse_template(TEMPLATES[(name, i)]):
        for args in _loop(F, summ):
            a, b = (tuple(args) + (0, 0))[:2]
            out.append((sign, tuple(tuple(_entry(F, tok, a, b) for tok in r) for r in rows)))
    return out


def check_transcription(q):
    """Both encodings give the same signed multiset of matrices."""
    for key in ENCODING:
        if sorted(expand_terms(*key, q)) != sorted(expand_template(*key, q)):
            return False
    return True


# ---------------------------------------------------------------- matrices

OPERATORS = ("A", "B", "C")

COMBO = {
    (1, "gamma1"): "A", (1, "gamma0"): "A", (1, "p0"): "A",
    (2, "gamma1"): "A", (2, "gamma0"): "A", (2, "p2"): "A",
    (1, "p2"): "AB", (2, "p0"): "AB",
    (1, "gl3"): "ABC", (2, "gl3"): "ABC",
}


@lru_cache(maxsize=None)
def _operator(name, i, k, q):
    F = field(q)
    N = rep.dimension(k)
    M = zeros(F, N, N)
    for sign, g in expand_terms(name, i, q):
        A = rep.const_action(q, g, k)
        M = mat_add(F, M, A) if sign > 0 else mat_sub(F, M, A)
    return tuple(tuple(r) for r in M)


def operator_matrix(name, i, k, q):
    if name not in OPERATORS:
        raise ValueError(f"unknown operator {name!r}")
    if i not in (1, 2):
        raise ValueError(f"operator index must be 1 or 2, got {i}")
    return [list(r) for r in _operator(name, i, k, q)]


def operator_A(i, k, q):
    return operator_matrix("A", i, k, q)


def operator_B(i, k, q):
    return operator_matrix("B", i, k, q)


def operator_C(i, k, q):
    return operator_matrix("C", i, k, q)


def combination(i, level, k, q):
    if (i, level) not in COMBO:
        raise rep.InvalidLevel(f"unknown level {level!r}")
    F = field(q)
    M = None
    for name in COMBO[(i, level)]:
        X = operator_matrix(name, i, k, q)
        M = X if M is None else mat_add(F, M, X)
    return M


def check_fp_entries(M, p):
    """Every entry is a constant of the prime field (codes below p)."""
    for row in M:
        for x in row:
            if isinstance(x, RatFunc):
                if not x.is_poly() or len(x.num) > 1:
                    return False
                x = x.num[0] if x.num else 0
            elif isinstance(x, tuple):
                if len(x) > 1:
                    return False
                x = x[0] if x else 0
            if not 0 <= x < p:
                return False
    return True


# ---------------------------------------------------------------- restriction

def graded_parts(i, level, k, q):
    """{e: Comb restricted to the basis vectors carrying t^e}."""
    F = field(q)
    comb = combination(i, level, k, q)
    ex = rep.delta_exponents(i, k)
    parts = {}
    for e in sorted(set(ex)):
        parts[e] = [[x if ex[c] == e else 0 for c, x in enumerate(row)] for row in comb]
    return F, parts


def hecke_matrix(i, level, k, q):
    """Matrix over F_q[t] (coefficient tuples) of the operator on the level subspace.

    Columns are images of the stored basis vectors of the level subspace.
    Raises NotInvariant if some graded piece leaves the subspace.
    """
    S = rep.level_subspace(level, k, q).subspace
    F, parts = graded_parts(i, level, k, q)
    d = S.dim
    out = [[() for _ in range(d)] for _ in range(d)]
    if not d:
        return out
    for e, P in parts.items():
        try:
            R = restrict_operator(F, P, S)
        except NotInvariant as exc:
            raise NotInvariant(f"i={i} level={level} k={k} q={q} degree {e}: {exc}") from None
        for r in range(d):
            for c in range(d):
                x = R[r][c]
                if x:
                    cur = list(out[r][c]) + [0] * (e + 1 - len(out[r][c]))
                    cur[e] = F.add(cur[e], x)
                    while cur and cur[-1] == 0:
                        cur.pop()
                    out[r][c] = tuple(cur)
    return out


def full_matrix(i, level, k, q):
    """Comb . diag(t^e) on all of V_k, entries in F_q(t)."""
    F = field(q)
    comb = combination(i, level, k, q)
    D = rep.delta_matrix(F, i, k)
    K = RatField(F)
    C = [[RatFunc.const(F, x) for x in row] for row in comb]
    return mat_mul(K, C, D)


def hecke_matrix_ratfunc(i, level, k, q):
    """The same operator restricted over F_q(t) directly (an independent route)."""
    F = field(q)
    K = RatField(F)
    S = rep.level_subspace(level, k, q).subspace
    SK = span(K, [[RatFunc.const(F, x) for x in b] for b in S.basis], S.ambient)
    return restrict_operator(K, full_matrix(i, level, k, q), SK)


# ---------------------------------------------------------------- B_1 oracle

def b1_oracle(k, q):
    """B_1 rebuilt from the worked R_1 evaluation, through action_matrix over F_q(t).

    sum_{a != 0} M(X_a Y_a) - sum_{a} M(Z W_a), then composed with M(delta_1),
    where X_a, Z undo the representatives and Y_a, W_a are the Gamma_1(t)
    elements carrying s_0 to the chambers met along the way.
    """
    F = field(q)
    K = RatField(F)
    t = RatFunc.t(F)
    pi = t.inverse()
    c = lambda x: RatFunc.const(F, x)
    zero, one = c(0), c(1)
    N = rep.dimension(k)
    total = zeros(K, N, N)
    for a in F.units():
        X = ((one, zero, c(F.neg(a)) * pi), (zero, zero, pi), (zero, one, zero))
        Y = ((one, zero, zero), (zero, one, zero), (c(F.inv(a)) * t, zero, one))
        total = mat_add(K, total, mat_mul(K, rep.action_matrix(K, X, k), rep.action_matrix(K, Y, k)))
    Z = ((one, zero, zero), (zero, zero, pi), (zero, one, zero))
    MZ = rep.action_matrix(K, Z, k)
    for a in F.elements():
        W = ((one, zero, zero), (zero, one, zero), (c(a) * t, zero, one))
        total = mat_sub(K, total, mat_mul(K, MZ, rep.action_matrix(K, W, k)))
    delta1 = ((one, zero, zero), (zero, one, zero), (zero, zero, t))
    return mat_mul(K, total, rep.action_matrix(K, delta1, k))

