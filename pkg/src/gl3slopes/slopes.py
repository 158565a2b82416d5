"""Newton polygons of characteristic polynomials and slope tables."""

import csv
import io
import json
from fractions import Fraction

from . import hecke
from .algebra import RatFunc, field, pval
from .linalg import charpoly_polymatrix


class ZeroPolynomial(ValueError):
    pass


class UnknownFormat(ValueError):
    pass


class Slope:
    """A rational slope, or infinity when ``value`` is None."""

    __slots__ = ("value",)

    def __init__(self, value=None):
        self.value = None if value is None else Fraction(value)

    @classmethod
    def inf(cls):
        return cls(None)

    @property
    def is_inf(self):
        return self.value is None

    def _key(self):
        return (1, 0) if self.value is None else (0, self.value)

    def __eq__(self, other):
        if not isinstance(other, Slope):
            other = Slope(other) if other != "inf" else Slope.inf()
        return self.value == other.value

    def __lt__(self, other):
        return self._key() < other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        return f"Slope({self})"

    def __str__(self):
        if self.value is None:
            return "∞"
        v = self.value
        return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"


def _valuation(c):
    if isinstance(c, RatFunc):
        return c.t_valuation()
    if isinstance(c, tuple):
        return pval(c) if c else None
    raise TypeError(f"unsupported coefficient {c!r}")


def _is_zero(c):
    return c.is_zero() if isinstance(c, RatFunc) else not c


def newton_slopes(coeffs):
    """[(Slope, multiplicity)] of the roots of sum c_j X^j, ascending.

    Coefficients are RatFunc or F_q[t] tuples, lowest degree first.
    """
    n = len(coeffs) - 1
    if n < 0 or all(_is_zero(c) for c in coeffs):
        raise ZeroPolynomial("the zero polynomial has no Newton polygon")
    while n > 0 and _is_zero(coeffs[n]):
        n -= 1
    m = 0
    while _is_zero(coeffs[m]):
        m += 1
    pts = [(j, _valuation(coeffs[j])) for j in range(m, n + 1) if not _is_zero(coeffs[j])]
    # lower convex hull, left to right
    hull = []
    for p in pts:
        while len(hull) >= 2:
            (x1, y1), (x2, y2) = hull[-2], hull[-1]
            # drop the middle point unless it lies strictly below the chord
            if (y2 - y1) * (p[0] - x1) >= (p[1] - y1) * (x2 - x1):
                hull.pop()
            else:
                break
        hull.append(p)
    out = {}
    for (x1, y1), (x2, y2) in zip(hull, hull[1:]):
        s = Slope(-Fraction(y2 - y1, x2 - x1))
        out[s] = out.get(s, 0) + (x2 - x1)
    res = sorted(out.items(), key=lambda kv: kv[0]._key())
    if m:
        res.append((Slope.inf(), m))
    return res


LEVEL_NAMES = {"gamma1": "Γ1(t)", "gamma0": "Γ0(t)", "p0": "Γ^P_0", "p2": "Γ^P_2", "gl3": "GL3(A)"}


class SlopeTable:
    __slots__ = ("q", "k", "i", "level", "dim", "slopes")

    def __init__(self, q, k, i, level, dim, slopes):
        if any(m <= 0 for _, m in slopes):
            raise ValueError("multiplicities must be positive")
        if sum(m for _, m in slopes) != dim:
            raise ValueError(f"multiplicities sum to {sum(m for _, m in slopes)}, expected {dim}")
        self.q, self.k, self.i, self.level, self.dim = q, k, i, level, dim
        self.slopes = sorted(slopes, key=lambda sm: sm[0]._key())

    def __repr__(self):
        return f"SlopeTable(q={self.q}, k={self.k}, i={self.i}, level={self.level}, {self.cell()!r})"

    def cell(self):
        return ", ".join(f"{s}^{m}" for s, m in self.slopes)

    def as_dict(self):
        sl = []
        for s, m in self.slopes:
            if s.is_inf:
                sl.append({"inf": True, "mult": m})
            else:
                sl.append({"num": s.value.numerator, "den": s.value.denominator, "mult": m})
        return {"q": self.q, "k": self.k, "i": self.i, "level": self.level,
                "dim": self.dim, "slopes": sl}

    def multiset(self):
        return {(None if s.is_inf else s.value): m for s, m in self.slopes}


def parse_cell(text):
    """Inverse of SlopeTable.cell: "0^1, 3/2^4, ∞^4" -> [(Slope, mult)]."""
    out = []
    for part in filter(None, (p.strip() for p in text.split(","))):
        s, m = part.rsplit("^", 1)
        out.append((Slope.inf() if s in ("∞", "inf") else Slope(Fraction(s)), int(m)))
    return out


def format_table(tables, fmt="md"):
    if fmt == "json":
        return json.dumps([t.as_dict() for t in tables], indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["q", "k", "i", "level", "slope", "mult"])
        for t in tables:
            for s, m in t.slopes:
                w.writerow([t.q, t.k, t.i, t.level,
                            "inf" if s.is_inf else f"{s.value.numerator}/{s.value.denominator}", m])
        return buf.getvalue()
    if fmt == "md":
        lines = ["| q | k | i | level | dim | slopes |", "|---|---|---|---|---|---|"]
        for t in tables:
            lines.append(f"| {t.q} | {t.k} | {t.i} | {LEVEL_NAMES.get(t.level, t.level)} "
                         f"| {t.dim} | {t.cell()} |")
        return "\n".join(lines) + "\n"
    raise UnknownFormat(f"unknown format {fmt!r}; expected md, csv or json")


def compute_table(i, level, k, q, return_charpoly=False):
    """Slope table of the Hecke operator, via the exact charpoly."""
    F = field(q)
    H = hecke.hecke_matrix(i, level, k, q)
    d = len(H)
    if d:
        cp = charpoly_polymatrix(F, H)
        sl = newton_slopes(cp)
    else:
        cp, sl = [(1,)], []
    table = SlopeTable(q, k, i, level, d, sl)
    return (table, cp) if return_charpoly else table
