"""Multi-modular characteristic polynomials over F_q[t].

The matrix is reduced modulo several primitive polynomials f_j in F_q[t].
Each F_q[t]/(f_j) is a field of a few thousand elements with log tables,
where a Hessenberg reduction gives the charpoly cheaply.  The coefficients
are then recovered by CRT, using a degree bound from the column and row
degrees of the input.
"""

import threading
from functools import lru_cache

from .algebra import field, padd, pdivmod, pmul

# target sizes q^m of the residue fields
_MIN_DEGREE = {2: 12, 3: 7, 4: 6, 5: 5, 7: 4, 8: 4, 9: 4}


def _factor(n):
    out, d = [], 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


class ResidueField:
    """F_q[t]/(f) for a primitive f, elements stored as base-q codes."""

    __slots__ = ("F", "f", "m", "Q", "exp", "log", "xor", "zech", "order", "ops")

    def __init__(self, F, f):
        self.F, self.f = F, f
        m = self.m = len(f) - 1
        q = F.q
        Q = self.Q = q ** m
        order = self.order = Q - 1
        self.xor = F.p == 2
        exp = [0] * order
        log = [0] * Q
        x = [1] + [0] * (m - 1)
        add, mul, neg = F.add_t, F.mul_t, F.neg_t
        low = f[:m]
        for i in range(order):
            code = 0
            for c in reversed(x):
                code = code * q + c
            exp[i] = code
            log[code] = i
            top = x[-1]
            x = [0] + x[:-1]
            if top:
                nt = neg[top]
                for j in range(m):
                    x[j] = add[x[j]][mul[nt][low[j]]]
        self.exp = exp
        self.log = log
        self.zech = None if self.xor else self._zech_table()
        self.ops = _ops(self)

    def _zech_table(self):
        # z[n] = log(1 + g^n), or -1 when 1 + g^n = 0
        F, q = self.F, self.F.q
        out = []
        for n in range(self.order):
            code = self.exp[n]
            c0 = F.add_t[code % q][1]
            new = code - code % q + c0
            out.append(self.log[new] if new else -1)
        return out

    def to_poly(self, code):
        q = self.F.q
        out = []
        while code:
            out.append(code % q)
            code //= q
        return tuple(out)

    def from_poly(self, a):
        """Image of a polynomial of any degree."""
        F = self.F
        if len(a) > self.m:
            a = pdivmod(F, a, self.f)[1]
        code = 0
        for c in reversed(a):
            code = code * F.q + c
        return code


def _is_primitive(F, f):
    m = len(f) - 1
    order = F.q ** m - 1

    def powmod(e):
        r, b = (1,), (0, 1)
        while e:
            if e & 1:
                r = pdivmod(F, pmul(F, r, b), f)[1]
            b = pdivmod(F, pmul(F, b, b), f)[1]
            e >>= 1
        return r

    if powmod(order) != (1,):
        return False
    return all(powmod(order // r) != (1,) for r in _factor(order))


_lock = threading.Lock()
_moduli = {}


def residue_fields(q, total_degree):
    """Distinct primitive moduli whose degrees sum to at least total_degree."""
    F = field(q)
    with _lock:
        found = _moduli.setdefault(q, [])
        have = sum(R.m for R in found)
        m, code = _scan_state.get(q, (_MIN_DEGREE.get(q, 4), 0))
        while have < total_degree:
            if code >= q ** m:
                m, code = m + 1, 0
            f = _poly_from_code(q, m, code)
            code += 1
            if f[0] != 0 and _is_primitive(F, f):
                R = ResidueField(F, f)
                found.append(R)
                have += m
            _scan_state[q] = (m, code)
        out, acc = [], 0
        for R in found:
            if acc >= total_degree:
                break
            out.append(R)
            acc += R.m
        return out


_scan_state = {}


def _poly_from_code(q, m, code):
    return tuple((code // q ** i) % q for i in range(m)) + (1,)


# ---------------------------------------------------------------- field ops

def _ops(R):
    """Return (add, sub, mul, inv, neg) closures on codes for R."""
    exp, log, order = R.exp, R.log, R.order
    if R.xor:
        exp2 = exp + exp + [0] * (2 * order + 4)
        lg = list(log)
        lg[0] = 2 * order + 1  # pushes any product with 0 into the zero tail

        def mul(a, b):
            return exp2[lg[a] + lg[b]]

        def add(a, b):
            return a ^ b

        def inv(a):
            return exp[(order - log[a]) % order]

        def neg(a):
            return a

        return add, add, mul, inv, neg

    zech, F, q = R.zech, R.F, R.F.q
    half = order // 2 if F.p != 2 else 0
    # -1 = g^(order/2) for odd characteristic

    def mul(a, b):
        if a == 0 or b == 0:
            return 0
        return exp[(log[a] + log[b]) % order]

    def add(a, b):
        if a == 0:
            return b
        if b == 0:
            return a
        la = log[a]
        z = zech[(log[b] - la) % order]
        if z < 0:
            return 0
        return exp[(la + z) % order]

    def neg(a):
        if a == 0:
            return 0
        return exp[(log[a] + half) % order]

    def sub(a, b):
        return add(a, neg(b))

    def inv(a):
        return exp[(order - log[a]) % order]

    return add, sub, mul, inv, neg


def hessenberg_charpoly(R, A):
    """Charpoly c_0..c_n of A over the residue field R (codes)."""
    add, sub, mul, inv, neg = R.ops
    n = len(A)
    H = [list(r) for r in A]
    for m in range(1, n - 1):
        col = m - 1
        piv = None
        for i in range(m, n):
            if H[i][col]:
                piv = i
                break
        if piv is None:
            continue
        if piv != m:
            H[piv], H[m] = H[m], H[piv]
            for row in H:
                row[piv], row[m] = row[m], row[piv]
        hinv = inv(H[m][col])
        rowm = H[m]
        for j in range(m + 1, n):
            hj = H[j][col]
            if not hj:
                continue
            u = mul(hj, hinv)
            nu = neg(u)
            rowj = H[j]
            for c in range(col, n):
                x = rowm[c]
                if x:
                    rowj[c] = add(rowj[c], mul(nu, x))
            for row in H:
                x = row[j]
                if x:
                    row[m] = add(row[m], mul(u, x))
    # p_k for the leading k x k block, coefficients lowest first
    polys = [[1]]
    for k in range(1, n + 1):
        a = H[k - 1][k - 1]
        prev = polys[-1]
        cur = [0] * (k + 1)
        na = neg(a)
        for i, c in enumerate(prev):
            if c:
                cur[i + 1] = add(cur[i + 1], c)
                cur[i] = add(cur[i], mul(na, c))
        prod = 1
        for i in range(k - 1, 0, -1):
            prod = mul(prod, H[i][i - 1])
            if not prod:
                break
            f = mul(H[i - 1][k - 1], prod)
            if f:
                nf = neg(f)
                for j, c in enumerate(polys[i - 1]):
                    if c:
                        cur[j] = add(cur[j], mul(nf, c))
        polys.append(cur)
    return polys[n]


def degree_bound(M):
    """Upper bound on the t-degree of every charpoly coefficient."""
    n = len(M)
    cols = [max((len(M[i][j]) - 1 for i in range(n)), default=-1) for j in range(n)]
    rows = [max((len(x) - 1 for x in M[i]), default=-1) for i in range(n)]
    bc = sum(d for d in cols if d > 0)
    br = sum(d for d in rows if d > 0)
    return min(bc, br)


@lru_cache(maxsize=None)
def _crt_data(q, fs):
    F = field(q)
    big = (1,)
    for f in fs:
        big = pmul(F, big, f)
    data = []
    for f in fs:
        N = pdivmod(F, big, f)[0]
        u = _pinv_mod(F, pdivmod(F, N, f)[1], f)
        data.append((N, u))
    return big, data


def _pinv_mod(F, a, f):
    # extended Euclid in F_q[t]
    r0, r1 = f, a
    s0, s1 = (), (1,)
    while r1:
        qt, r = pdivmod(F, r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, padd(F, s0, tuple(F.neg_t[c] for c in pmul(F, qt, s1)))
    if len(r0) != 1:
        raise ArithmeticError("not invertible")
    c = F.inv(r0[0])
    return tuple(F.mul_t[c][x] for x in s0)


def charpoly_modular(F, M):
    n = len(M)
    if n == 0:
        return [(1,)]
    bound = degree_bound(M)
    fields = residue_fields(F.q, bound + 1)
    fs = tuple(R.f for R in fields)
    residues = []
    for R in fields:
        A = [[R.from_poly(x) if x else 0 for x in row] for row in M]
        residues.append(hessenberg_charpoly(R, A))
    if F.q == 2:
        return _crt_gf2(fields, residues, n)
    big, data = _crt_data(F.q, fs)
    ucodes = [R.from_poly(u) for R, (N, u) in zip(fields, data)]
    out = []
    for i in range(n + 1):
        acc = ()
        for R, res, (N, u), uc in zip(fields, residues, data, ucodes):
            r = res[i]
            if not r:
                continue
            s = R.ops[2](r, uc)
            acc = padd(F, acc, pmul(F, R.to_poly(s), N))
        out.append(pdivmod(F, acc, big)[1] if len(acc) >= len(big) else acc)
    return out


# ---------------------------------------------------------------- q = 2 CRT

def _int_of(a):
    v = 0
    for i, c in enumerate(a):
        if c:
            v |= 1 << i
    return v


def _tuple_of(v):
    out = []
    while v:
        out.append(v & 1)
        v >>= 1
    return tuple(out)


def _clmul(a, b):
    if a.bit_length() > b.bit_length():
        a, b = b, a
    r, i = 0, 0
    while a:
        if a & 1:
            r ^= b << i
        a >>= 1
        i += 1
    return r


def _crt_gf2(fields, residues, n):
    F = field(2)
    fs = tuple(R.f for R in fields)
    big, data = _crt_data(2, fs)
    ints = [(_int_of(N), R.from_poly(u)) for R, (N, u) in zip(fields, data)]
    bigi = _int_of(big)
    out = []
    for i in range(n + 1):
        acc = 0
        for R, res, (Ni, ucode) in zip(fields, residues, ints):
            r = res[i]
            if not r:
                continue
            acc ^= _clmul(R.ops[2](r, ucode), Ni)
        out.append(_tuple_of(acc if acc.bit_length() < bigi.bit_length()
                             else _int_of(pdivmod(F, _tuple_of(acc), big)[1])))
    return out


__all__ = ["charpoly_modular", "hessenberg_charpoly", "residue_fields",
           "degree_bound", "ResidueField"]
