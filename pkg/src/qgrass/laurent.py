"""Exact arithmetic in the ring Z[q, q^-1] of integer Laurent polynomials.

Scalars are kept in a canonical sparse form (exponent -> nonzero integer
coefficient), so equality is dict equality and zero has an empty support.
The module also provides exact rank computation for matrices over the
fraction field, via fraction-free elimination.
"""

from __future__ import annotations

import math
from fractions import Fraction


class Laurent:
    """An integer Laurent polynomial in q, e.g. ``-1*q^-1 + 1*q^1``."""

    __slots__ = ("c",)

    def __init__(self, coeffs=None):
        # canonical form: no zero coefficients
        c = {}
        if coeffs:
            for e, v in coeffs.items():
                assert isinstance(e, int) and isinstance(v, int)
                if v:
                    c[e] = v
        self.c = c

    # -- constructors --------------------------------------------------------

    @staticmethod
    def of(n):
        """The constant Laurent polynomial n (n may be int or Laurent)."""
        if isinstance(n, Laurent):
            return n
        assert isinstance(n, int)
        return Laurent({0: n})

    @staticmethod
    def q(k=1):
        """The monomial q^k."""
        return Laurent({k: 1})

    # -- ring structure ------------------------------------------------------

    def __bool__(self):
        return bool(self.c)

    def __eq__(self, other):
        if isinstance(other, int):
            other = Laurent.of(other)
        return isinstance(other, Laurent) and self.c == other.c

    def __hash__(self):
        return hash(frozenset(self.c.items()))

    def __neg__(self):
        return Laurent({e: -v for e, v in self.c.items()})

    def __add__(self, other):
        other = Laurent.of(other)
        c = dict(self.c)
        for e, v in other.c.items():
            w = c.get(e, 0) + v
            if w:
                c[e] = w
            elif e in c:
                del c[e]
        r = Laurent()
        r.c = c
        return r

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-Laurent.of(other))

    def __rsub__(self, other):
        return Laurent.of(other) + (-self)

    def __mul__(self, other):
        if not isinstance(other, (int, Laurent)):
            return NotImplemented  # let the other operand's __rmul__ run
        other = Laurent.of(other)
        c = {}
        for e1, v1 in self.c.items():
            for e2, v2 in other.c.items():
                e = e1 + e2
                w = c.get(e, 0) + v1 * v2
                if w:
                    c[e] = w
                elif e in c:
                    del c[e]
        r = Laurent()
        r.c = c
        return r

    __rmul__ = __mul__

    # -- units ---------------------------------------------------------------

    def is_unit(self):
        """True iff the scalar is +-q^k (a unit of Z[q, q^-1])."""
        if len(self.c) != 1:
            return False
        (v,) = self.c.values()
        return v in (1, -1)

    def unit_inverse(self):
        assert self.is_unit(), "not a unit: %s" % self
        ((e, v),) = self.c.items()
        return Laurent({-e: v})

    # -- structure queries -----------------------------------------------------

    def min_exp(self):
        return min(self.c) if self.c else 0

    def max_exp(self):
        return max(self.c) if self.c else 0

    def shifted(self, k):
        """Multiply by q^k (exponent shift)."""
        return Laurent({e + k: v for e, v in self.c.items()})

    # -- evaluation ------------------------------------------------------------

    def eval(self, q0):
        """Evaluate at a nonzero rational q0; exact Fraction result."""
        q0 = Fraction(q0)
        assert q0 != 0, "q must be evaluated at a nonzero rational"
        return sum((Fraction(v) * q0 ** e for e, v in self.c.items()), Fraction(0))

    # -- text --------------------------------------------------------------------

    def __str__(self):
        if not self.c:
            return "0"
        parts = ["%d*q^%d" % (self.c[e], e) for e in sorted(self.c)]
        out = parts[0]
        for p in parts[1:]:
            out += " - " + p[1:] if p.startswith("-") else " + " + p
        return out

    def pretty(self):
        """Compact form for CLI display: 1 -> '1', q^k -> 'q^k', -q^k -> '-q^k'."""
        if not self.c:
            return "0"
        if len(self.c) == 1:
            ((e, v),) = self.c.items()
            if e == 0:
                return "%d" % v
            base = "q^%d" % e
            if v == 1:
                return base
            if v == -1:
                return "-" + base
            return "%d*%s" % (v, base)
        return "(" + str(self) + ")"

    def __repr__(self):
        return "Laurent(%s)" % str(self)


ZERO = Laurent()
ONE = Laurent.of(1)


# -- polynomial gcd (used to keep elimination entries small) -------------------


def _to_dense(a):
    """Return (content, dense) with a = content * q^min_exp * poly(dense),
    dense[0] != 0 and gcd of dense = 1."""
    k = a.min_exp()
    dense = [0] * (a.max_exp() - k + 1)
    for e, v in a.c.items():
        dense[e - k] = v
    g = 0
    for v in dense:
        g = math.gcd(g, v)
    return g, [v // g for v in dense]


def _dense_trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _dense_prim(a):
    g = 0
    for v in a:
        g = math.gcd(g, v)
    if g > 1:
        a = [v // g for v in a]
    return a


def _dense_prem(a, b):
    """Pseudo-remainder of dense polynomials a, b (b nonzero, trimmed)."""
    a = list(a)
    db, lb = len(b) - 1, b[-1]
    _dense_trim(a)
    while len(a) - 1 >= db and a:
        da, la = len(a) - 1, a[-1]
        a = [lb * v for v in a]
        for i, y in enumerate(b):
            a[da - db + i] -= la * y
        _dense_trim(a)
    return a


def laurent_gcd(a, b):
    """A gcd of a and b in Z[q, q^-1], normalized to have constant term
    nonzero (no q factors), positive leading coefficient.  gcd(0, b) ~ b."""
    if not a:
        a, b = b, a
    if not a:
        return Laurent()
    ga, da = _to_dense(a)
    if not b:
        if da[-1] < 0:
            ga, da = -ga, [-v for v in da]
        return Laurent({i: abs(ga) * v for i, v in enumerate(da) if v})
    gb, db = _to_dense(b)
    g = math.gcd(ga, gb)
    while db:
        da, db = db, _dense_prim(_dense_prem(da, db))
    if da[-1] < 0:
        da = [-v for v in da]
    return Laurent({i: g * v for i, v in enumerate(da) if v})


def laurent_divexact(a, b):
    """Exact division a / b in Z[q, q^-1]; asserts divisibility."""
    assert b, "division by zero"
    if not a:
        return Laurent()
    ka, kb = a.min_exp(), b.min_exp()
    da = [0] * (a.max_exp() - ka + 1)
    for e, v in a.c.items():
        da[e - ka] = v
    db = [0] * (b.max_exp() - kb + 1)
    for e, v in b.c.items():
        db[e - kb] = v
    out = [0] * (len(da) - len(db) + 1)
    rem = list(da)
    lb = db[-1]
    for i in range(len(out) - 1, -1, -1):
        c = rem[i + len(db) - 1]
        assert c % lb == 0, "inexact division: %s / %s" % (a, b)
        t = c // lb
        out[i] = t
        if t:
            for j, y in enumerate(db):
                rem[i + j] -= t * y
    assert not any(rem), "inexact division: %s / %s" % (a, b)
    return Laurent({i + ka - kb: v for i, v in enumerate(out) if v})


# -- exact linear algebra over the fraction field ------------------------------


def _strip_int(vec):
    """Divide a sparse vector by its integer content and normalize the
    q-shift; cheap blowup control between elimination steps."""
    g = 0
    shift = None
    for v in vec.values():
        m = v.min_exp()
        shift = m if shift is None else min(shift, m)
        for x in v.c.values():
            g = math.gcd(g, x)
    if g > 1 or shift:
        vec = {
            k: Laurent({e - shift: x // g for e, x in v.c.items()})
            for k, v in vec.items()
        }
    return vec


def _strip_full(vec):
    """Divide a sparse vector by the polynomial gcd of its entries."""
    if not vec:
        return vec
    g = Laurent()
    for v in vec.values():
        g = laurent_gcd(g, v)
        if len(g.c) == 1 and abs(next(iter(g.c.values()))) == 1:
            g = None
            break
    if g is not None and g != ONE:
        vec = {k: laurent_divexact(v, g) for k, v in vec.items()}
    return _strip_int(vec)


class RowSpan:
    """Incremental echelon of sparse vectors over the fraction field of
    Z[q, q^-1], via fraction-free cross-multiplication with gcd stripping.

    Vectors are dicts mapping an arbitrary hashable column key to Laurent.
    """

    def __init__(self):
        self.rows = []  # list of (pivot_key, vector)

    def reduce(self, vec):
        """Reduce vec against the echelon; returns the residual vector."""
        vec = {k: Laurent.of(v) for k, v in vec.items() if v}
        for pivot, row in self.rows:
            c = vec.get(pivot)
            if not c:
                continue
            p = row[pivot]
            # vec := p*vec - c*row   (kills the pivot column)
            new = {k: p * v for k, v in vec.items()}
            for k, v in row.items():
                w = new.get(k, ZERO) - c * v
                if w:
                    new[k] = w
                elif k in new:
                    del new[k]
            vec = _strip_int(new)
            if not vec:
                return vec
        return _strip_full(vec)

    def add(self, vec):
        """Insert vec; True if it added a new direction, False if dependent."""
        res = self.reduce(vec)
        if not res:
            return False
        pivot = next(iter(res))
        self.rows.append((pivot, res))
        return True

    def contains(self, vec):
        return not self.reduce(vec)

    @property
    def rank(self):
        return len(self.rows)


class QMatrix:
    """A dense matrix with Laurent entries."""

    def __init__(self, entries):
        self.entries = [[Laurent.of(v) for v in row] for row in entries]
        self.nrows = len(self.entries)
        self.ncols = len(self.entries[0]) if self.entries else 0
        assert all(len(r) == self.ncols for r in self.entries)

    def rank(self):
        """Exact rank over the fraction field of Z[q, q^-1]."""
        # clear negative exponents columnwise (multiplying a column by q^N
        # does not change the rank)
        shifts = []
        for j in range(self.ncols):
            m = 0
            for i in range(self.nrows):
                v = self.entries[i][j]
                if v:
                    m = min(m, v.min_exp())
            shifts.append(-m)
        span = RowSpan()
        for i in range(self.nrows):
            vec = {}
            for j in range(self.ncols):
                v = self.entries[i][j]
                if v:
                    vec[j] = v.shifted(shifts[j])
            if vec:
                span.add(vec)
        return span.rank
