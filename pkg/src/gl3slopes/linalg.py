"""Dense exact linear algebra over a domain (see ``algebra`` for domains).

Matrices are lists of rows.  Vectors are lists.  Subspaces keep their basis
in reduced row echelon form, so two subspaces are equal exactly when their
stored bases are equal.
"""

from .algebra import PolyRing, RatField, RatFunc, pdivmod, pgcd, pmul


class NonSquare(ValueError):
    pass


class AmbientMismatch(ValueError):
    pass


class NotInvariant(ArithmeticError):
    pass


# ---------------------------------------------------------------- basics

def zeros(K, rows, cols):
    return [[K.zero] * cols for _ in range(rows)]


def identity(K, n):
    M = zeros(K, n, n)
    for i in range(n):
        M[i][i] = K.one
    return M


def diagonal(K, entries):
    M = zeros(K, len(entries), len(entries))
    for i, x in enumerate(entries):
        M[i][i] = x
    return M


def mat_mul(K, A, B):
    if not A:
        return []
    n, m = len(B), len(B[0]) if B else 0
    add, mul, isz = K.add, K.mul, K.is_zero
    out = []
    for row in A:
        acc = [K.zero] * m
        for k in range(n):
            a = row[k]
            if isz(a):
                continue
            Bk = B[k]
            for j in range(m):
                b = Bk[j]
                if not isz(b):
                    acc[j] = add(acc[j], mul(a, b))
        out.append(acc)
    return out


def mat_vec(K, A, v):
    add, mul = K.add, K.mul
    out = []
    for row in A:
        acc = K.zero
        for a, x in zip(row, v):
            if not K.is_zero(a) and not K.is_zero(x):
                acc = add(acc, mul(a, x))
        out.append(acc)
    return out


def mat_add(K, A, B):
    return [[K.add(a, b) for a, b in zip(ra, rb)] for ra, rb in zip(A, B)]


def mat_sub(K, A, B):
    return [[K.sub(a, b) for a, b in zip(ra, rb)] for ra, rb in zip(A, B)]


def mat_scale(K, c, A):
    return [[K.mul(c, a) for a in row] for row in A]


def transpose(A):
    return [list(col) for col in zip(*A)]


def _square(M):
    n = len(M)
    if any(len(row) != n for row in M):
        raise NonSquare(f"expected a square matrix, got {n} rows of lengths "
                        f"{sorted({len(r) for r in M})}")
    return n


# ---------------------------------------------------------------- elimination

def rref(K, M):
    """Reduced row echelon form: (nonzero rows, pivot columns)."""
    rows = [list(r) for r in M]
    if not rows:
        return [], []
    ncols = len(rows[0])
    add, mul, isz, neg = K.add, K.mul, K.is_zero, K.neg
    pivots = []
    r = 0
    for c in range(ncols):
        pr = None
        for i in range(r, len(rows)):
            if not isz(rows[i][c]):
                pr = i
                break
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        piv = rows[r]
        inv = K.div(K.one, piv[c])
        piv = [mul(inv, x) if not isz(x) else x for x in piv]
        rows[r] = piv
        for i in range(len(rows)):
            if i != r:
                f = rows[i][c]
                if not isz(f):
                    nf = neg(f)
                    row = rows[i]
                    for j in range(c, ncols):
                        x = piv[j]
                        if not isz(x):
                            row[j] = add(row[j], mul(nf, x))
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows[:r], pivots


def rank(K, M):
    return len(rref(K, M)[1])


class Subspace:
    """A subspace of K^ambient with an RREF basis."""

    __slots__ = ("K", "ambient", "basis", "pivots")

    def __init__(self, K, ambient, basis, pivots):
        self.K, self.ambient, self.basis, self.pivots = K, ambient, basis, pivots

    @property
    def dim(self):
        return len(self.basis)

    def __eq__(self, other):
        return (isinstance(other, Subspace) and self.ambient == other.ambient
                and self.basis == other.basis)

    def __repr__(self):
        return f"Subspace(dim={self.dim}, ambient={self.ambient})"

    def coords(self, v):
        """Coordinates of v in the stored basis, or None if v is not in it."""
        K = self.K
        c = [v[p] for p in self.pivots]
        r = list(v)
        for ci, b in zip(c, self.basis):
            if not K.is_zero(ci):
                nc = K.neg(ci)
                for j, x in enumerate(b):
                    if not K.is_zero(x):
                        r[j] = K.add(r[j], K.mul(nc, x))
        if all(K.is_zero(x) for x in r):
            return c
        return None

    def contains(self, v):
        return self.coords(v) is not None

    def contains_space(self, other):
        return all(self.contains(b) for b in other.basis)


def span(K, vectors, ambient):
    vectors = [list(v) for v in vectors]
    if any(len(v) != ambient for v in vectors):
        raise AmbientMismatch("vector length differs from ambient dimension")
    rows, piv = rref(K, vectors)
    return Subspace(K, ambient, rows, piv)


def full_space(K, n):
    return Subspace(K, n, identity(K, n), list(range(n)))


def zero_space(K, n):
    return Subspace(K, n, [], [])


def kernel(K, M, ncols=None):
    """Right kernel {v : M v = 0}."""
    if ncols is None:
        ncols = len(M[0]) if M else 0
    rows, piv = rref(K, M)
    free = [c for c in range(ncols) if c not in set(piv)]
    vecs = []
    for f in free:
        v = [K.zero] * ncols
        v[f] = K.one
        for row, p in zip(rows, piv):
            if not K.is_zero(row[f]):
                v[p] = K.neg(row[f])
        vecs.append(v)
    return span(K, vecs, ncols)


def eigenspace(K, M, lam):
    n = _square(M)
    A = [[K.sub(x, lam) if i == j else x for j, x in enumerate(row)]
         for i, row in enumerate(M)]
    return kernel(K, A, n)


def intersect(S1, S2):
    """Zassenhaus intersection."""
    if S1.ambient != S2.ambient:
        raise AmbientMismatch(f"ambient dimensions {S1.ambient} and {S2.ambient}")
    K, n = S1.K, S1.ambient
    if not S1.basis or not S2.basis:
        return zero_space(K, n)
    stacked = [list(u) + list(u) for u in S1.basis]
    stacked += [list(v) + [K.zero] * n for v in S2.basis]
    rows, piv = rref(K, stacked)
    inter = [row[n:] for row, p in zip(rows, piv) if p >= n]
    return span(K, inter, n)


def sum_space(S1, S2):
    if S1.ambient != S2.ambient:
        raise AmbientMismatch(f"ambient dimensions {S1.ambient} and {S2.ambient}")
    return span(S1.K, S1.basis + S2.basis, S1.ambient)


def extend_basis(S):
    """Base change matrix (as columns) extending S's basis to K^n.

    The extra vectors are the standard vectors at the non-pivot positions.
    """
    K, n = S.K, S.ambient
    cols = [list(b) for b in S.basis]
    taken = set(S.pivots)
    for j in range(n):
        if j not in taken:
            e = [K.zero] * n
            e[j] = K.one
            cols.append(e)
    return transpose(cols) if cols else []


def restrict_operator(K, U, S):
    """Matrix of U on S in S's basis; raises NotInvariant if U S is not in S.

    Vectors are columns: column i of the result holds the coordinates of
    U applied to the i-th basis vector of S.
    """
    n = _square(U)
    if n != S.ambient:
        raise AmbientMismatch(f"operator of size {n} on subspace of ambient {S.ambient}")
    d = S.dim
    out = zeros(K, d, d)
    for i, b in enumerate(S.basis):
        w = mat_vec(K, U, b)
        c = S.coords(w)
        if c is None:
            raise NotInvariant(f"image of basis vector {i} leaves the subspace")
        for r in range(d):
            out[r][i] = c[r]
    return out


# ---------------------------------------------------------------- charpoly

def berkowitz(K, M):
    """Division-free characteristic polynomial det(X I - M), as c_0..c_n."""
    n = _square(M)
    if n == 0:
        return [K.one]
    add, mul, neg, isz = K.add, K.mul, K.neg, K.is_zero
    C = [K.one, neg(M[0][0])]  # highest degree first
    for r in range(1, n):
        R = M[r][:r]
        S = [M[i][r] for i in range(r)]
        T = [K.one, neg(M[r][r])]
        vec = S
        for _ in range(r):
            acc = K.zero
            for a, b in zip(R, vec):
                if not isz(a) and not isz(b):
                    acc = add(acc, mul(a, b))
            T.append(neg(acc))
            vec = [_dot(K, M[i][:r], vec) for i in range(r)]
        new = []
        for i in range(r + 2):
            acc = K.zero
            for j in range(max(0, i - len(T) + 1), min(i, r) + 1):
                t, c = T[i - j], C[j]
                if not isz(t) and not isz(c):
                    acc = add(acc, mul(t, c))
            new.append(acc)
        C = new
    return C[::-1]


def _dot(K, u, v):
    acc = K.zero
    for a, b in zip(u, v):
        if not K.is_zero(a) and not K.is_zero(b):
            acc = K.add(acc, K.mul(a, b))
    return acc


def charpoly(K, M):
    """Exact charpoly c_0..c_n (c_n = 1) of a square matrix over K.

    Over F_q(t) the denominators are cleared first and the polynomial matrix
    is handled by ``charpoly_polymatrix``.
    """
    n = _square(M)
    if isinstance(K, RatField):
        F = K.F
        den = (1,)
        for row in M:
            for x in row:
                if x.den != (1,):
                    den = _plcm(F, den, x.den)
        P = [[pmul(F, x.num, pdivmod(F, den, x.den)[0]) for x in row] for row in M]
        cp = charpoly_polymatrix(F, P)
        out = []
        for i, c in enumerate(cp):
            out.append(RatFunc(F, c, _ppow(F, den, n - i)))
        return out
    if isinstance(K, PolyRing):
        return charpoly_polymatrix(K.F, M)
    return berkowitz(K, M)


def _plcm(F, a, b):
    g = pgcd(F, a, b)
    return pmul(F, pdivmod(F, a, g)[0], b)


def _ppow(F, a, e):
    r = (1,)
    for _ in range(e):
        r = pmul(F, r, a)
    return r


def charpoly_polymatrix(F, M, method=None):
    """Charpoly of a square matrix with entries in F_q[t] (tuples).

    ``method`` is ``"berkowitz"`` or ``"modular"``; by default small
    matrices use Berkowitz and larger ones the multi-modular route.
    """
    n = _square(M)
    if method is None:
        method = "berkowitz" if n <= 4 else "modular"
    if method == "berkowitz":
        return berkowitz(PolyRing(F), M)
    from .modular import charpoly_modular
    return charpoly_modular(F, M)


def det_fraction_free(K, M):
    """Bareiss determinant; an independent check on c_0 of the charpoly."""
    n = _square(M)
    if n == 0:
        return K.one
    A = [list(r) for r in M]
    sign = False
    prev = K.one
    for k in range(n - 1):
        if K.is_zero(A[k][k]):
            sw = next((i for i in range(k + 1, n) if not K.is_zero(A[i][k])), None)
            if sw is None:
                return K.zero
            A[k], A[sw] = A[sw], A[k]
            sign = not sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = K.sub(K.mul(A[i][j], A[k][k]), K.mul(A[i][k], A[k][j]))
                A[i][j] = _exact_div(K, num, prev)
        prev = A[k][k]
    d = A[n - 1][n - 1]
    return K.neg(d) if sign else d


def _exact_div(K, a, b):
    if isinstance(K, PolyRing):
        qt, r = pdivmod(K.F, a, b)
        if r:
            raise ArithmeticError("inexact division in Bareiss elimination")
        return qt
    return K.div(a, b)


def poly_matrix_to_ratfunc(F, M):
    return [[RatFunc.poly(F, x) for x in row] for row in M]
