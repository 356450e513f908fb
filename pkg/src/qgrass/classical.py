"""Classical (q = 1) oracles: supercommutative algebra, Grassmann numbers,
the classical Grassmannian of 2|0 planes in 4|1 superspace and the lower
parabolic action on its big cell.

Everything here is independent of the quantum presentations; the quantum
suites compare their q = 1 specializations against this module.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .laurent import Laurent
from .freealg import Generator, FreeSuperalgebra
from .rewrite import Presentation, Rule
from .report import VerificationReport


def classical_dimension(n_even, n_odd, degree):
    """Number of degree-d monomials in n_even commuting and n_odd
    anticommuting variables."""
    total = 0
    for j in range(0, min(n_odd, degree) + 1):
        d = degree - j
        if d == 0:
            total += math.comb(n_odd, j)
        elif n_even > 0:
            total += math.comb(n_odd, j) * math.comb(n_even + d - 1, d)
    return total


def supercommutative_presentation(names_parities):
    """The free supercommutative algebra on the given (name, parity) list,
    as a rewrite system: descending swaps with Koszul signs, odd squares to 0."""
    gens = [Generator(i, nm, p, i) for i, (nm, p) in enumerate(names_parities)]
    alg = FreeSuperalgebra(gens)
    rules = []
    for a in range(len(gens)):
        for b in range(a + 1, len(gens)):
            sign = -1 if gens[a].parity and gens[b].parity else 1
            rules.append(Rule((b, a), alg.word((a, b), sign)))
        if gens[a].parity:
            rules.append(Rule((a, a), alg.zero()))
    return Presentation(alg, rules)


# -- the classical Grassmannian -------------------------------------------------

#: generator labels in lexicographic order; (i,j) with j < 5 is an even
#: Pluecker coordinate, (i,5) an odd one, (5,5) the even square term
GR_LABELS = [
    (1, 2), (1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5),
    (3, 4), (3, 5), (4, 5), (5, 5),
]


def gr_label_parity(label):
    i, j = label
    return 1 if (i > 4) != (j > 4) else 0


def gr_label_name(label, kind="classical"):
    i, j = label
    if kind == "quantum":
        return "D[%d,%d]" % (i, j)
    if label == (5, 5):
        return "a55"
    if j == 5:
        return "lam[%d]" % i
    return "q[%d,%d]" % (i, j)


def classical_plucker_relations(alg, gid):
    """The classical Pluecker ideal generators for the 2|0-plane
    Grassmannian, as elements of a free algebra on GR_LABELS.

    gid maps a label to its generator id.  Families: the even Pluecker
    quadric, the mixed even-odd relations, the odd-odd relations expressing
    lam_i lam_j through the (5,5) coordinate, and the annihilation of the
    (5,5) coordinate by the odd ones, plus the square of (5,5) itself."""
    w = lambda *labels: alg.word(tuple(gid[l] for l in labels))
    rels = []
    rels.append(w((1, 2), (3, 4)) - w((1, 3), (2, 4)) + w((1, 4), (2, 3)))
    for i in range(1, 5):
        for j in range(i + 1, 5):
            for k in range(j + 1, 5):
                rels.append(
                    w((i, j), (k, 5)) - w((i, k), (j, 5)) + w((j, k), (i, 5))
                )
    for i in range(1, 5):
        for j in range(i + 1, 5):
            rels.append(w((i, 5), (j, 5)) - w((i, j), (5, 5)))
    for i in range(1, 5):
        rels.append(w((i, 5), (5, 5)))
        rels.append(w((5, 5), (i, 5)))
    rels.append(w((5, 5), (5, 5)))
    return rels


def classical_grassmannian_presentation():
    """O(Gr): supercommutative algebra on the 11 Pluecker coordinates
    modulo the classical Pluecker relations, oriented for rewriting.

    The Pluecker relations are first normalized through the
    supercommutative swap rules so that their leading words are ascending
    (no collision with the swap rules); the two orders of lam_i * a55
    become scalar multiples of each other and are deduplicated."""
    names = [(gr_label_name(l), gr_label_parity(l)) for l in GR_LABELS]
    base = supercommutative_presentation(names)
    gid = {l: i for i, l in enumerate(GR_LABELS)}
    rels = []
    seen = {}
    for r in classical_plucker_relations(base.algebra, gid):
        rn = base.normal_form(r)
        if not rn:
            continue
        lead = max(rn.terms, key=base.word_key)
        if lead in seen:
            other = seen[lead]
            assert rn * other.terms[lead] == other * rn.terms[lead]
            continue
        seen[lead] = rn
        rels.append(rn)
    return Presentation.from_relations(base.algebra, rels, extra_rules=base.rules)


def classical_minor_realization():
    """The classical Pluecker coordinates realized inside the
    supercommutative coordinate ring of 5 x 2 supermatrices (rows 1..4
    even, row 5 odd): q_ij = c_i1 c_j2 - c_i2 c_j1, lam_i = c_i1 d2 -
    c_i2 d1, a55 = d1 d2.  Returns (presentation, dict label -> element)."""
    names = []
    for i in range(1, 5):
        names += [("c[%d,1]" % i, 0), ("c[%d,2]" % i, 0)]
    names += [("d[1]", 1), ("d[2]", 1)]
    pres = supercommutative_presentation(names)
    alg = pres.algebra

    def c(i, j):
        return alg.gen(2 * (i - 1) + (j - 1))

    def dd(j):
        return alg.gen(8 + (j - 1))

    minors = {}
    for i in range(1, 5):
        for j in range(i + 1, 5):
            minors[(i, j)] = pres.normal_form(c(i, 1) * c(j, 2) - c(i, 2) * c(j, 1))
        minors[(i, 5)] = pres.normal_form(c(i, 1) * dd(2) - c(i, 2) * dd(1))
    minors[(5, 5)] = pres.normal_form(dd(1) * dd(2))
    return pres, minors


# -- Grassmann numbers ------------------------------------------------------------


class GNum:
    """An element of a finite Grassmann algebra over the rationals:
    a Fraction-linear combination of products of anticommuting units."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        t = {}
        if terms:
            for k, v in terms.items():
                v = Fraction(v)
                if v:
                    t[tuple(k)] = v
        self.terms = t

    @staticmethod
    def of(x):
        if isinstance(x, GNum):
            return x
        return GNum({(): Fraction(x)})

    @staticmethod
    def theta(i):
        return GNum({(i,): Fraction(1)})

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        other = GNum.of(other)
        return self.terms == other.terms

    def __neg__(self):
        return GNum({k: -v for k, v in self.terms.items()})

    def __add__(self, other):
        other = GNum.of(other)
        t = dict(self.terms)
        for k, v in other.terms.items():
            s = t.get(k, Fraction(0)) + v
            if s:
                t[k] = s
            elif k in t:
                del t[k]
        out = GNum()
        out.terms = t
        return out

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-GNum.of(other))

    def __rsub__(self, other):
        return GNum.of(other) + (-self)

    def __mul__(self, other):
        other = GNum.of(other)
        t = {}
        for k1, v1 in self.terms.items():
            s1 = set(k1)
            for k2, v2 in other.terms.items():
                if s1 & set(k2):
                    continue
                inv = sum(1 for x in k1 for y in k2 if x > y)
                k = tuple(sorted(k1 + k2))
                sign = -1 if inv % 2 else 1
                s = t.get(k, Fraction(0)) + sign * v1 * v2
                if s:
                    t[k] = s
                elif k in t:
                    del t[k]
        out = GNum()
        out.terms = t
        return out

    __rmul__ = __mul__

    def body(self):
        return self.terms.get((), Fraction(0))

    def parity(self):
        ps = {len(k) % 2 for k in self.terms}
        if not ps:
            return 0
        return ps.pop() if len(ps) == 1 else None

    def inverse(self):
        """Inverse of an even element with nonzero body (nilpotent series)."""
        b = self.body()
        assert b != 0, "not invertible: zero body"
        x = GNum.of(Fraction(1, 1) / b)
        n = (self - b) * x  # nilpotent
        acc = GNum.of(1)
        term = GNum.of(1)
        while True:
            term = -(term * n)
            if not term:
                break
            acc = acc + term
        return acc * x

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for k in sorted(self.terms, key=lambda k: (len(k), k)):
            v = self.terms[k]
            mon = "*".join("th%d" % i for i in k) if k else "1"
            parts.append("%s*%s" % (v, mon))
        return " + ".join(parts)

    __repr__ = __str__


# -- matrices over Grassmann numbers ------------------------------------------------


def mat(rows):
    return [[GNum.of(v) for v in row] for row in rows]


def mmul(a, b):
    n, k, m = len(a), len(b), len(b[0])
    assert len(a[0]) == k
    return [
        [sum((a[i][t] * b[t][j] for t in range(k)), GNum.of(0)) for j in range(m)]
        for i in range(n)
    ]


def madd(a, b):
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def minv2(a):
    """Inverse of a 2x2 matrix with even entries and invertible determinant."""
    det = a[0][0] * a[1][1] - a[0][1] * a[1][0]
    di = det.inverse()
    return [[a[1][1] * di, -a[0][1] * di], [-a[1][0] * di, a[0][0] * di]]


class ParabolicPoint:
    """A point of the lower parabolic supergroup: blocks x, y (2x2 even
    invertible), t (2x2 even), eta (2x1 odd), d (even invertible),
    tau, xi (1x2 odd)."""

    def __init__(self, x, t, y, eta, d, tau, xi):
        self.x = x
        self.t = t
        self.y = y
        self.eta = eta
        self.d = d
        self.tau = tau
        self.xi = xi

    def matrix(self):
        """The 5x5 supermatrix [[x,0,0],[tx,y,y eta],[d tau, d xi, d]]."""
        z = GNum.of(0)
        tx = mmul(self.t, self.x)
        ye = mmul(self.y, [[self.eta[0]], [self.eta[1]]])
        rows = []
        for i in range(2):
            rows.append([self.x[i][0], self.x[i][1], z, z, z])
        for i in range(2):
            rows.append([tx[i][0], tx[i][1], self.y[i][0], self.y[i][1], ye[i][0]])
        rows.append(
            [
                self.d * self.tau[0],
                self.d * self.tau[1],
                self.d * self.xi[0],
                self.d * self.xi[1],
                self.d,
            ]
        )
        return rows

    @staticmethod
    def from_matrix(p):
        """Split a 5x5 lower-parabolic supermatrix back into blocks."""
        x = [[p[0][0], p[0][1]], [p[1][0], p[1][1]]]
        xi_ = minv2(x)
        t = mmul([[p[2][0], p[2][1]], [p[3][0], p[3][1]]], xi_)
        y = [[p[2][2], p[2][3]], [p[3][2], p[3][3]]]
        yi = minv2(y)
        eta_col = mmul(yi, [[p[2][4]], [p[3][4]]])
        d = p[4][4]
        di = d.inverse()
        tau = [di * p[4][0], di * p[4][1]]
        xi = [di * p[4][2], di * p[4][3]]
        return ParabolicPoint(x, t, y, [eta_col[0][0], eta_col[1][0]], d, tau, xi)

    @staticmethod
    def identity():
        one, z = GNum.of(1), GNum.of(0)
        return ParabolicPoint(
            [[one, z], [z, one]], [[z, z], [z, z]], [[one, z], [z, one]],
            [z, z], one, [z, z], [z, z],
        )


def bigcell_action(g, A, alpha):
    """The lower parabolic action on big-cell coordinates:
    A' = y (A + eta alpha) x^-1 + t,  alpha' = d (alpha + tau + xi A) x^-1."""
    xi_ = minv2(g.x)
    ea = [[g.eta[0] * alpha[0], g.eta[0] * alpha[1]],
          [g.eta[1] * alpha[0], g.eta[1] * alpha[1]]]
    A2 = madd(mmul(mmul(g.y, madd(A, ea)), xi_), g.t)
    v = [
        alpha[0] + g.tau[0] + g.xi[0] * A[0][0] + g.xi[1] * A[1][0],
        alpha[1] + g.tau[1] + g.xi[0] * A[0][1] + g.xi[1] * A[1][1],
    ]
    alpha2 = [g.d * (v[0] * xi_[0][0] + v[1] * xi_[1][0]),
              g.d * (v[0] * xi_[0][1] + v[1] * xi_[1][1])]
    return A2, alpha2


# -- sampling --------------------------------------------------------------------------


def _rand_even(rng, n_theta, spread=3):
    t = {(): Fraction(rng.randint(-spread, spread))}
    for _ in range(rng.randint(0, 2)):
        i = rng.randint(1, n_theta - 1)
        j = rng.randint(i + 1, n_theta)
        t[(i, j)] = t.get((i, j), Fraction(0)) + rng.randint(-2, 2)
    return GNum(t)


def _rand_odd(rng, n_theta, spread=2):
    t = {}
    for i in range(1, n_theta + 1):
        c = rng.randint(-spread, spread)
        if c:
            t[(i,)] = Fraction(c)
    return GNum(t)


def _rand_invertible2(rng, n_theta):
    while True:
        m = [[_rand_even(rng, n_theta) for _ in range(2)] for _ in range(2)]
        if (m[0][0] * m[1][1] - m[0][1] * m[1][0]).body() != 0:
            return m


def sample_parabolic_point(rng, n_theta=4):
    while True:
        d = _rand_even(rng, n_theta)
        if d.body() != 0:
            break
    return ParabolicPoint(
        _rand_invertible2(rng, n_theta),
        [[_rand_even(rng, n_theta) for _ in range(2)] for _ in range(2)],
        _rand_invertible2(rng, n_theta),
        [_rand_odd(rng, n_theta), _rand_odd(rng, n_theta)],
        d,
        [_rand_odd(rng, n_theta), _rand_odd(rng, n_theta)],
        [_rand_odd(rng, n_theta), _rand_odd(rng, n_theta)],
    )


def sample_cell_point(rng, n_theta=4):
    A = [[_rand_even(rng, n_theta) for _ in range(2)] for _ in range(2)]
    alpha = [_rand_odd(rng, n_theta), _rand_odd(rng, n_theta)]
    return A, alpha


# -- verification suite -------------------------------------------------------------------


def verify_decomposability(report=None):
    """Substituting the decomposable parametrization q = r ^ s,
    lam = theta r - xi s, a55 = xi theta makes every classical Pluecker
    relation vanish identically."""
    rep = report or VerificationReport("classical")
    names = []
    for i in range(1, 5):
        names.append(("r%d" % i, 0))
    for i in range(1, 5):
        names.append(("s%d" % i, 0))
    names += [("xi", 1), ("theta", 1)]
    pres = supercommutative_presentation(names)
    alg = pres.algebra
    r = [alg.gen(i) for i in range(4)]
    s = [alg.gen(4 + i) for i in range(4)]
    xi, theta = alg.gen(8), alg.gen(9)

    def q(i, j):
        return r[i - 1] * s[j - 1] - r[j - 1] * s[i - 1]

    def lam(i):
        return theta * r[i - 1] - xi * s[i - 1]

    a55 = xi * theta
    nf = pres.normal_form

    rep.start()
    res = nf(q(1, 2) * q(3, 4) - q(1, 3) * q(2, 4) + q(1, 4) * q(2, 3))
    rep.check("decomposable:even-plucker", not res,
              lhs="q12 q34 - q13 q24 + q14 q23", rhs="0", residual=res)
    rep.start()
    bad = []
    for i in range(1, 5):
        for j in range(i + 1, 5):
            for k in range(j + 1, 5):
                res = nf(q(i, j) * lam(k) - q(i, k) * lam(j) + q(j, k) * lam(i))
                if res:
                    bad.append("(%d,%d,%d): %s" % (i, j, k, res))
    rep.check("decomposable:mixed-plucker", not bad,
              lhs="q_ij lam_k - q_ik lam_j + q_jk lam_i", rhs="0",
              residual="; ".join(bad))
    rep.start()
    bad = []
    for i in range(1, 5):
        for j in range(i + 1, 5):
            res = nf(lam(i) * lam(j) - a55 * q(i, j))
            if res:
                bad.append("(%d,%d): %s" % (i, j, res))
    rep.check("decomposable:odd-product", not bad,
              lhs="lam_i lam_j", rhs="a55 q_ij", residual="; ".join(bad))
    rep.start()
    bad = []
    for i in range(1, 5):
        res = nf(lam(i) * a55)
        if res:
            bad.append("%d: %s" % (i, res))
    res2 = nf(a55 * a55)
    if res2:
        bad.append("a55^2: %s" % res2)
    rep.check("decomposable:annihilation", not bad,
              lhs="lam_i a55, a55^2", rhs="0", residual="; ".join(bad))
    return rep


def verify_klein_reconciliation(report=None):
    """The Klein quadric y12 y34 + y23 y14 + y31 y24 (antisymmetric y)
    equals the even Pluecker relation after sorting indices."""
    rep = report or VerificationReport("classical")
    labels = [(i, j) for i in range(1, 5) for j in range(i + 1, 5)]
    pres = supercommutative_presentation([("y[%d,%d]" % l, 0) for l in labels])
    alg = pres.algebra
    gid = {l: i for i, l in enumerate(labels)}

    def y(i, j):
        if i < j:
            return alg.gen(gid[(i, j)])
        return alg.gen(gid[(j, i)]) * (-1)

    rep.start()
    klein = pres.normal_form(y(1, 2) * y(3, 4) + y(2, 3) * y(1, 4) + y(3, 1) * y(2, 4))
    plucker = pres.normal_form(y(1, 2) * y(3, 4) - y(1, 3) * y(2, 4) + y(1, 4) * y(2, 3))
    rep.check("klein:equals-plucker", klein == plucker,
              lhs="y12 y34 + y23 y14 + y31 y24",
              rhs="q12 q34 - q13 q24 + q14 q23",
              residual=klein - plucker)
    return rep


def verify_action_axioms(rng, samples=20, report=None):
    """Identity and composition axioms of the big-cell action, on sampled
    group and cell points over a 4-odd-unit Grassmann algebra."""
    rep = report or VerificationReport("classical")
    ident = ParabolicPoint.identity()
    rep.start()
    bad = 0
    for _ in range(samples):
        A, alpha = sample_cell_point(rng)
        A2, alpha2 = bigcell_action(ident, A, alpha)
        if A2 != A or alpha2 != alpha:
            bad += 1
    rep.check("action:identity", bad == 0,
              lhs="e . p", rhs="p on %d samples" % samples,
              residual="" if bad == 0 else "%d mismatches" % bad)
    rep.start()
    bad = 0
    for _ in range(samples):
        g1 = sample_parabolic_point(rng)
        g2 = sample_parabolic_point(rng)
        A, alpha = sample_cell_point(rng)
        inner = bigcell_action(g2, A, alpha)
        lhs = bigcell_action(g1, *inner)
        g12 = ParabolicPoint.from_matrix(mmul(g1.matrix(), g2.matrix()))
        rhs = bigcell_action(g12, A, alpha)
        if lhs[0] != rhs[0] or lhs[1] != rhs[1]:
            bad += 1
    rep.check("action:composition", bad == 0,
              lhs="g1 . (g2 . p)", rhs="(g1 g2) . p on %d samples" % samples,
              residual="" if bad == 0 else "%d mismatches" % bad)
    rep.start()
    bad = 0
    for _ in range(samples):
        g = sample_parabolic_point(rng)
        p = g.matrix()
        back = ParabolicPoint.from_matrix(p).matrix()
        if any(p[i][j] != back[i][j] for i in range(5) for j in range(5)):
            bad += 1
    rep.check("action:block-split-roundtrip", bad == 0,
              lhs="matrix -> blocks -> matrix", rhs="identity on %d samples" % samples,
              residual="" if bad == 0 else "%d mismatches" % bad)
    return rep


def verify_classical(rng, samples=20):
    rep = VerificationReport("classical")
    verify_decomposability(rep)
    verify_klein_reconciliation(rep)
    verify_action_axioms(rng, samples, rep)
    return rep
