"""Arithmetic in F_q, F_q[t] and F_q(t).

Elements of F_q are plain ints.  The int ``c`` stands for the residue class
of ``sum(c_i x^i)`` modulo the field modulus, where ``c_i`` are the base-p
digits of ``c``.  So 0 and 1 are the usual zero and one, and ``n % p`` is the
image of the integer ``n``.

Polynomials in F_q[t] are tuples of field codes, lowest degree first, with
no trailing zeros; the zero polynomial is ``()``.

>>> F = field(4)
>>> F.modulus
(1, 1, 1)
>>> F.mul(2, 2)
3
>>> str(RatFunc(F, (0, 1, 1), (0, 1)))
'1+t/1'
"""

import math
from functools import lru_cache

INF = math.inf


class ZeroDenominator(ZeroDivisionError):
    pass


# ---------------------------------------------------------------- prime field polys

def _zp_trim(a):
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return a


def _zp_mod(a, m, p):
    a = list(a)
    inv = pow(m[-1], p - 2, p)
    dm = len(m) - 1
    for i in range(len(a) - 1, dm - 1, -1):
        c = a[i] * inv % p
        if c:
            for j in range(dm + 1):
                a[i - dm + j] = (a[i - dm + j] - c * m[j]) % p
    return _zp_trim(a[:dm])


def _zp_irreducible(f, p):
    d = len(f) - 1
    for dg in range(1, d // 2 + 1):
        for code in range(p ** dg):
            g = [(code // p ** i) % p for i in range(dg)] + [1]
            if not _zp_mod(f, g, p):
                return False
    return True


def _is_prime(n):
    if n < 2:
        return False
    return all(n % d for d in range(2, math.isqrt(n) + 1))


def prime_power(q):
    """Return (p, e) with q = p^e, or None."""
    if not isinstance(q, int) or q < 2:
        return None
    for p in range(2, q + 1):
        if q % p == 0:
            e, r = 0, q
            while r % p == 0:
                r //= p
                e += 1
            return (p, e) if r == 1 and _is_prime(p) else None
    return None


def smallest_irreducible(p, e):
    """Lexicographically smallest monic irreducible of degree e over Z/p.

    Candidates are compared by their coefficient tuples read from the
    constant term upwards.
    """
    if e == 1:
        return (0, 1)
    for code in range(p ** e):
        # most significant digit is the constant term
        low = [(code // p ** (e - 1 - i)) % p for i in range(e)]
        f = low + [1]
        if _zp_irreducible(f, p):
            return tuple(f)
    raise ValueError("no irreducible polynomial found")


# ---------------------------------------------------------------- F_q

class GF:
    """The finite field F_q as a table-driven domain on int codes."""

    __slots__ = ("p", "e", "q", "modulus", "add_t", "mul_t", "neg_t", "inv_t",
                 "zero", "one", "prime")

    def __init__(self, p, e=1):
        if not _is_prime(p) or e < 1:
            raise ValueError(f"bad field parameters p={p}, e={e}")
        self.p, self.e, self.q = p, e, p ** e
        self.modulus = smallest_irreducible(p, e)
        self.zero, self.one = 0, 1
        self.prime = e == 1
        q = self.q
        vecs = [self.vector(c) for c in range(q)]
        self.add_t = [[self.from_vector([(x + y) % p for x, y in zip(u, v)])
                       for v in vecs] for u in vecs]
        self.neg_t = [self.from_vector([(-x) % p for x in u]) for u in vecs]
        mul = [[0] * q for _ in range(q)]
        for a in range(q):
            for b in range(a, q):
                prod = [0] * (2 * e - 1)
                for i, x in enumerate(vecs[a]):
                    if x:
                        for j, y in enumerate(vecs[b]):
                            prod[i + j] = (prod[i + j] + x * y) % p
                c = self.from_vector(_zp_mod(prod, self.modulus, p))
                mul[a][b] = mul[b][a] = c
        self.mul_t = mul
        inv = [None] * q
        for a in range(1, q):
            for b in range(1, q):
                if mul[a][b] == 1:
                    inv[a] = b
                    break
        self.inv_t = inv

    def __repr__(self):
        return f"GF({self.q})"

    def __reduce__(self):
        return (field, (self.q,))

    def vector(self, a):
        """Coefficient vector (length e) of the code a."""
        return [(a // self.p ** i) % self.p for i in range(self.e)]

    def from_vector(self, v):
        c = 0
        for i, x in enumerate(v):
            c += (x % self.p) * self.p ** i
        return c

    def elements(self):
        return range(self.q)

    def units(self):
        return range(1, self.q)

    def from_int(self, n):
        return n % self.p

    def from_fq(self, c):
        return c

    def add(self, a, b):
        return self.add_t[a][b]

    def sub(self, a, b):
        return self.add_t[a][self.neg_t[b]]

    def neg(self, a):
        return self.neg_t[a]

    def mul(self, a, b):
        return self.mul_t[a][b]

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero in " + repr(self))
        return self.inv_t[a]

    def div(self, a, b):
        return self.mul_t[a][self.inv(b)]

    def pow(self, a, n):
        if n < 0:
            a, n = self.inv(a), -n
        r = 1
        while n:
            if n & 1:
                r = self.mul_t[r][a]
            a = self.mul_t[a][a]
            n >>= 1
        return r

    def is_zero(self, a):
        return a == 0

    def in_prime_field(self, a):
        return a < self.p

    def fmt(self, a):
        if a < self.p:
            return str(a)
        terms = []
        for i, c in enumerate(self.vector(a)):
            if c:
                mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
                terms.append(mono if c == 1 and i else (f"{c}{mono}" if mono else str(c)))
        return "(" + "+".join(terms) + ")" if terms else "0"


@lru_cache(maxsize=None)
def field(q):
    pe = prime_power(q)
    if pe is None:
        raise ValueError(f"q={q} is not a prime power")
    return GF(*pe)


# ---------------------------------------------------------------- F_q[t]

def ptrim(a):
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return tuple(a)


def pdeg(a):
    return len(a) - 1


def padd(F, a, b):
    if len(a) < len(b):
        a, b = b, a
    add = F.add_t
    r = list(a)
    for i, c in enumerate(b):
        r[i] = add[r[i]][c]
    while r and r[-1] == 0:
        r.pop()
    return tuple(r)


def pneg(F, a):
    return tuple(F.neg_t[c] for c in a)


def psub(F, a, b):
    return padd(F, a, pneg(F, b))


def pscale(F, c, a):
    if c == 0:
        return ()
    m = F.mul_t[c]
    return tuple(m[x] for x in a)


def pmul(F, a, b):
    if not a or not b:
        return ()
    add, mul = F.add_t, F.mul_t
    r = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            mx = mul[x]
            for j, y in enumerate(b):
                if y:
                    r[i + j] = add[r[i + j]][mx[y]]
    return tuple(r)


def pshift(a, n):
    """Multiply by t^n (n >= 0)."""
    return (0,) * n + tuple(a) if a else ()


def pdivmod(F, a, b):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    a = list(a)
    db = len(b) - 1
    if len(a) <= db:
        return (), tuple(a)
    inv = F.inv(b[-1])
    qt = [0] * (len(a) - db)
    add, mul, neg = F.add_t, F.mul_t, F.neg_t
    for i in range(len(a) - 1, db - 1, -1):
        c = mul[a[i]][inv]
        if c:
            qt[i - db] = c
            nc = neg[c]
            for j in range(db + 1):
                a[i - db + j] = add[a[i - db + j]][mul[nc][b[j]]]
    return ptrim(qt), ptrim(a[:db])


def pmod(F, a, b):
    return pdivmod(F, a, b)[1]


def pmonic(F, a):
    if not a or a[-1] == 1:
        return tuple(a)
    return pscale(F, F.inv(a[-1]), a)


def pgcd(F, a, b):
    """Monic gcd."""
    while b:
        a, b = b, pmod(F, a, b)
    return pmonic(F, a)


def pval(a):
    """t-adic valuation of a nonzero polynomial."""
    for i, c in enumerate(a):
        if c:
            return i
    return INF


def peval(F, a, x):
    r = 0
    for c in reversed(a):
        r = F.add_t[F.mul_t[r][x]][c]
    return r


def pstr(F, a):
    if not a:
        return "0"
    terms = []
    for i, c in enumerate(a):
        if not c:
            continue
        mono = "" if i == 0 else ("t" if i == 1 else f"t^{i}")
        cs = F.fmt(c)
        if not mono:
            terms.append(cs)
        elif c == 1:
            terms.append(mono)
        else:
            terms.append(cs + "*" + mono)
    return "+".join(terms)


def polys_upto(F, n):
    """All polynomials of degree <= n, in a fixed order (length q^(n+1))."""
    if n < 0:
        return [()]
    out = [()]
    q = F.q
    for code in range(1, q ** (n + 1)):
        out.append(ptrim([(code // q ** i) % q for i in range(n + 1)]))
    return out


# ---------------------------------------------------------------- F_q(t)

class RatFunc:
    """An element num/den of F_q(t), always reduced with monic denominator."""

    __slots__ = ("F", "num", "den")

    def __init__(self, F, num=(), den=(1,), reduced=False):
        if not reduced:
            num, den = _normalize(F, ptrim(num), ptrim(den))
        self.F, self.num, self.den = F, num, den

    @classmethod
    def const(cls, F, c):
        return cls(F, (c,) if c else (), (1,), True)

    @classmethod
    def poly(cls, F, a):
        return cls(F, ptrim(a), (1,), True)

    @classmethod
    def t(cls, F):
        return cls(F, (0, 1), (1,), True)

    def _coerce(self, other):
        if isinstance(other, RatFunc):
            return other
        if isinstance(other, int):
            return RatFunc.const(self.F, self.F.from_int(other))
        return NotImplemented

    def is_zero(self):
        return not self.num

    def __bool__(self):
        return bool(self.num)

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        F = self.F
        if self.den == other.den:
            return RatFunc(F, padd(F, self.num, other.num), self.den)
        num = padd(F, pmul(F, self.num, other.den), pmul(F, other.num, self.den))
        return RatFunc(F, num, pmul(F, self.den, other.den))

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(self.F, pneg(self.F, self.num), self.den, True)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        F = self.F
        if not self.num or not other.num:
            return RatFunc(F, (), (1,), True)
        g1 = pgcd(F, self.num, other.den)
        g2 = pgcd(F, other.num, self.den)
        n1, d2 = pdivmod(F, self.num, g1)[0], pdivmod(F, other.den, g1)[0]
        n2, d1 = pdivmod(F, other.num, g2)[0], pdivmod(F, self.den, g2)[0]
        num, den = pmul(F, n1, n2), pmul(F, d1, d2)
        lc = den[-1]
        if lc != 1:
            inv = F.inv(lc)
            num, den = pscale(F, inv, num), pscale(F, inv, den)
        return RatFunc(F, num, den, True)

    __rmul__ = __mul__

    def inverse(self):
        if not self.num:
            raise ZeroDivisionError("inverse of zero rational function")
        F = self.F
        inv = F.inv(self.num[-1])
        return RatFunc(F, pscale(F, inv, self.den), pscale(F, inv, self.num), True)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, n):
        base = self if n >= 0 else self.inverse()
        r = RatFunc.const(self.F, 1)
        for _ in range(abs(n)):
            r = r * base
        return r

    def is_poly(self):
        return self.den == (1,)

    def t_valuation(self):
        return t_valuation(self)

    def inf_valuation(self):
        return inf_valuation(self)

    def __str__(self):
        return pstr(self.F, self.num) + "/" + pstr(self.F, self.den)

    def __repr__(self):
        return f"RatFunc({self})"


def _normalize(F, num, den):
    if not den:
        raise ZeroDenominator("zero denominator")
    if not num:
        return (), (1,)
    g = pgcd(F, num, den)
    if g != (1,):
        num, den = pdivmod(F, num, g)[0], pdivmod(F, den, g)[0]
    lc = den[-1]
    if lc != 1:
        inv = F.inv(lc)
        num, den = pscale(F, inv, num), pscale(F, inv, den)
    return num, den


def ratfunc_normalize(F, num, den):
    return RatFunc(F, num, den)


def t_valuation(r):
    if not r.num:
        return INF
    return pval(r.num) - pval(r.den)


def inf_valuation(r):
    if not r.num:
        return INF
    return pdeg(r.den) - pdeg(r.num)


# ---------------------------------------------------------------- domains
#
# Linear algebra is written against a small domain interface: zero, one,
# add, sub, neg, mul, div (fields only), is_zero, from_int, from_fq.
# GF itself is the domain of constants.

class RatField:
    """F_q(t) as a domain over RatFunc objects."""

    __slots__ = ("F", "zero", "one")

    def __init__(self, F):
        self.F = F
        self.zero = RatFunc.const(F, 0)
        self.one = RatFunc.const(F, 1)

    def __repr__(self):
        return f"RatField({self.F.q})"

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def div(self, a, b):
        return a / b

    def inv(self, a):
        return a.inverse()

    def is_zero(self, a):
        return not a.num

    def from_int(self, n):
        return RatFunc.const(self.F, self.F.from_int(n))

    def from_fq(self, c):
        return RatFunc.const(self.F, c)

    def pow(self, a, n):
        return a ** n


class PolyRing:
    """F_q[t] as a domain over coefficient tuples (no division)."""

    __slots__ = ("F", "zero", "one")

    def __init__(self, F):
        self.F = F
        self.zero = ()
        self.one = (1,)

    def __repr__(self):
        return f"PolyRing({self.F.q})"

    def add(self, a, b):
        return padd(self.F, a, b)

    def sub(self, a, b):
        return psub(self.F, a, b)

    def neg(self, a):
        return pneg(self.F, a)

    def mul(self, a, b):
        return pmul(self.F, a, b)

    def is_zero(self, a):
        return not a

    def from_int(self, n):
        c = self.F.from_int(n)
        return (c,) if c else ()

    def from_fq(self, c):
        return (c,) if c else ()

    def pow(self, a, n):
        if n < 0:
            if len(a) == 1:
                return (self.F.pow(a[0], n),)
            raise ValueError("negative power of a non-unit polynomial")
        r = (1,)
        for _ in range(n):
            r = pmul(self.F, r, a)
        return r
