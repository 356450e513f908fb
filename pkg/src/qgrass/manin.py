"""The quantum matrix superalgebra of an (m|n) x (m|n) supermatrix.

Generators a[i,j] (1 <= i,j <= m+n) have parity p(i)+p(j) where the first
m indices are even and the last n odd.  The defining quadratic relations
are oriented into a terminating rewrite system whose normal words are the
weakly increasing products with no repeated odd generator; this is checked,
not assumed, by the confluence and flatness suites.  The bialgebra
structure is Delta(a[i,j]) = sum_k a[i,k] (x) a[k,j], eps(a[i,j]) = delta_ij.
"""

from __future__ import annotations

from itertools import permutations

from .laurent import Laurent, ONE
from .freealg import Generator, FreeSuperalgebra, Element, TensorElement, Tensor3
from .rewrite import Presentation, Rule, tensor_normal_form, tensor3_normal_form
from .report import VerificationReport


def q_int(k):
    return Laurent.q(k)


class ManinAlgebra:
    """M_q(m|n) with its oriented presentation and bialgebra maps."""

    def __init__(self, m, n, names=None):
        self.m = m
        self.n = n
        d = m + n
        self.size = d
        if names is None:
            names = lambda i, j: "a[%d,%d]" % (i, j)
        gens = []
        for i in range(1, d + 1):
            for j in range(1, d + 1):
                gid = (i - 1) * d + (j - 1)
                parity = (self.row_parity(i) + self.row_parity(j)) % 2
                gens.append(Generator(gid, names(i, j), parity, gid))
        self.algebra = FreeSuperalgebra(gens)
        self.presentation = Presentation.from_relations(
            self.algebra, self._relations()
        )
        self._delta_cache = {}

    def row_parity(self, i):
        return 0 if i <= self.m else 1

    def gid(self, i, j):
        assert 1 <= i <= self.size and 1 <= j <= self.size
        return (i - 1) * self.size + (j - 1)

    def label(self, gid):
        return gid // self.size + 1, gid % self.size + 1

    def a(self, i, j):
        return self.algebra.gen(self.gid(i, j))

    def parity(self, i, j):
        return (self.row_parity(i) + self.row_parity(j)) % 2

    def nf(self, x):
        return self.presentation.normal_form(x)

    # -- defining relations -------------------------------------------------------

    def _relations(self):
        """The quadratic relations of the quantum supermatrix algebra, one
        per unordered pair of distinct generators, plus odd squares."""
        rels = []
        d = self.size
        pairs = [(i, j) for i in range(1, d + 1) for j in range(1, d + 1)]
        sgn = lambda x, y: -1 if self.parity(*x) and self.parity(*y) else 1

        def word(*labels):
            return self.algebra.word(tuple(self.gid(i, j) for (i, j) in labels))

        for idx1 in range(len(pairs)):
            for idx2 in range(idx1 + 1, len(pairs)):
                (i, j), (k, l) = pairs[idx1], pairs[idx2]
                s = sgn((i, j), (k, l))
                if i == k:
                    # same row, j < l; exponent -1 on even rows, +1 on odd
                    e = -1 if self.row_parity(i) == 0 else 1
                    rels.append(
                        word((i, j), (i, l)) - word((i, l), (i, j)) * (s * q_int(e))
                    )
                elif j == l:
                    e = -1 if self.row_parity(j) == 0 else 1
                    rels.append(
                        word((i, j), (k, j)) - word((k, j), (i, j)) * (s * q_int(e))
                    )
                elif j > l:
                    # i < k here since labels are enumerated in row-major order
                    rels.append(word((i, j), (k, l)) - word((k, l), (i, j)) * s)
                else:
                    s2 = sgn((i, j), (k, j))
                    rels.append(
                        word((i, j), (k, l))
                        - word((k, l), (i, j)) * s
                        - word((k, j), (i, l)) * (s2 * (q_int(-1) - q_int(1)))
                    )
        for i in range(1, d + 1):
            for j in range(1, d + 1):
                if self.parity(i, j):
                    rels.append(word((i, j), (i, j)))
        return rels

    # -- bialgebra structure ----------------------------------------------------------

    def comultiply_gen(self, gid):
        i, j = self.label(gid)
        terms = {}
        for k in range(1, self.size + 1):
            terms[((self.gid(i, k),), (self.gid(k, j),))] = ONE
        return TensorElement(self.algebra, self.algebra, terms)

    def comultiply_word(self, word):
        if word in self._delta_cache:
            return self._delta_cache[word]
        out = TensorElement(self.algebra, self.algebra, {((), ()): ONE})
        for g in word:
            out = tensor_normal_form(
                out * self.comultiply_gen(g), self.presentation, self.presentation
            )
        self._delta_cache[word] = out
        return out

    def comultiply(self, x):
        """Delta(x), with both tensor slots in normal form."""
        out = TensorElement(self.algebra, self.algebra, {})
        for w, c in x.terms.items():
            out = out + self.comultiply_word(w) * c
        return out

    def counit_gen(self, gid):
        i, j = self.label(gid)
        return ONE if i == j else Laurent()

    def counit(self, x):
        total = Laurent()
        for w, c in x.terms.items():
            f = c
            for g in w:
                f = f * self.counit_gen(g)
                if not f:
                    break
            total = total + f
        return total

    def counit_slot1(self, t):
        """(eps (x) id) applied to a tensor element."""
        acc = self.algebra.zero()
        for (a, b), c in t.terms.items():
            f = c
            for g in a:
                f = f * self.counit_gen(g)
                if not f:
                    break
            if f:
                acc = acc + Element(self.algebra, {b: f})
        return acc

    def counit_slot2(self, t):
        acc = self.algebra.zero()
        for (a, b), c in t.terms.items():
            f = c
            for g in b:
                f = f * self.counit_gen(g)
                if not f:
                    break
            if f:
                acc = acc + Element(self.algebra, {a: f})
        return acc

    # -- quantum minors ------------------------------------------------------------------

    def quantum_minor(self, rows, cols=(1, 2)):
        """The 2x2 quantum minor on the given rows and columns,
        a[i,k]a[j,l] - q^-1 a[j,k]a[i,l] for rows i < j; a repeated odd row
        (i, i) gives the product a[i,k]a[i,l].

        The second term is ordered by columns.  When at most one of the two
        index pairs contains an odd index this equals the row-ordered form
        a[i,k]a[j,l] - q^-1 a[i,l]a[j,k]; when both pairs do, the two forms
        differ by the sign of the q^-1 term and only the column-ordered one
        makes the comultiplication of a minor expand into minors."""
        i, j = rows
        k, l = cols
        if i == j:
            assert self.row_parity(i) == 1, "repeated row must be odd"
            return self.nf(self.a(i, k) * self.a(i, l))
        assert i < j and k < l
        return self.nf(
            self.a(i, k) * self.a(j, l) - self.a(j, k) * self.a(i, l) * q_int(-1)
        )

    def block_determinant(self, part):
        """The quantum determinant of the even-even block ('upper', weights
        (-q)^{-length}) or of the odd-odd block ('lower', weights (-q)^{length})."""
        acc = self.algebra.zero()
        if part == "upper":
            rng, off, e = self.m, 0, -1
        else:
            assert part == "lower"
            rng, off, e = self.n, self.m, 1
        for sigma in permutations(range(1, rng + 1)):
            inv = sum(
                1
                for x in range(rng)
                for y in range(x + 1, rng)
                if sigma[x] > sigma[y]
            )
            w = self.algebra.one()
            for r in range(1, rng + 1):
                w = w * self.a(off + r, off + sigma[r - 1])
            sign = -1 if (e * inv) % 2 else 1
            acc = acc + w * (sign * q_int(e * inv))
        return self.nf(acc)

    # -- verification suites ------------------------------------------------------------------

    def verify_confluence(self, max_degree=3, report=None):
        rep = report or VerificationReport("manin")
        rep.start()
        div = self.presentation.local_confluence(max_degree)
        rep.check(
            "confluence:M(%d|%d):deg<=%d" % (self.m, self.n, max_degree),
            not div,
            lhs="all overlap ambiguities",
            rhs="0 divergences",
            residual="; ".join(
                "%s: %s vs %s" % (self.algebra.word_str(w), a, b) for w, a, b in div[:4]
            ),
        )
        return rep

    def verify_flatness(self, degrees, report=None):
        from .classical import classical_dimension

        rep = report or VerificationReport("manin")
        n_even = self.m * self.m + self.n * self.n
        n_odd = 2 * self.m * self.n
        for d in degrees:
            rep.start()
            got = self.presentation.count_irreducible(d)
            want = classical_dimension(n_even, n_odd, d)
            rep.check(
                "flatness:M(%d|%d):deg%d" % (self.m, self.n, d),
                got == want,
                lhs="irreducible words: %d" % got,
                rhs="classical dimension: %d" % want,
                residual="" if got == want else "count mismatch %d != %d" % (got, want),
            )
        return rep

    def verify_bialgebra(self, report=None):
        rep = report or VerificationReport("manin")
        tag = "M(%d|%d)" % (self.m, self.n)
        # comultiplication respects every defining relation
        rep.start()
        bad = []
        for r in self.presentation.rules:
            lhs = self.comultiply(self.algebra.word(r.lhs))
            rhs = self.comultiply(r.rhs)
            if lhs != rhs:
                bad.append("%s: %s" % (str(Rule(r.lhs, r.rhs)), lhs - rhs))
        rep.check(
            "bialgebra:%s:relations" % tag,
            not bad,
            lhs="Delta(lhs - rhs) for all %d rules" % len(self.presentation.rules),
            rhs="0",
            residual="; ".join(bad[:2]),
        )
        # coassociativity on generators
        rep.start()
        bad = []
        algs = (self.algebra,) * 3
        for g in range(len(self.algebra)):
            t = self.comultiply_gen(g)
            left = Tensor3(algs, {})
            right = Tensor3(algs, {})
            for (a, b), c in t.terms.items():
                for (a1, a2), c1 in self.comultiply_word(a).terms.items():
                    left = left + Tensor3(algs, {(a1, a2, b): c * c1})
                for (b1, b2), c1 in self.comultiply_word(b).terms.items():
                    right = right + Tensor3(algs, {(a, b1, b2): c * c1})
            p = self.presentation
            if tensor3_normal_form(left, p, p, p) != tensor3_normal_form(right, p, p, p):
                bad.append(self.algebra.gens[g].name)
        rep.check(
            "bialgebra:%s:coassociativity" % tag,
            not bad,
            lhs="(Delta x id)Delta",
            rhs="(id x Delta)Delta on every generator",
            residual=", ".join(bad),
        )
        # counit laws on generators
        rep.start()
        bad = []
        for g in range(len(self.algebra)):
            t = self.comultiply_gen(g)
            e = self.algebra.gen(g)
            if self.counit_slot1(t) != e or self.counit_slot2(t) != e:
                bad.append(self.algebra.gens[g].name)
        rep.check(
            "bialgebra:%s:counit" % tag,
            not bad,
            lhs="(eps x id)Delta = (id x eps)Delta",
            rhs="id on every generator",
            residual=", ".join(bad),
        )
        # comultiplication preserves parity
        rep.start()
        bad = []
        for g in range(len(self.algebra)):
            p = self.algebra.parities[g]
            for (a, b), _ in self.comultiply_gen(g).terms.items():
                if (self.algebra.word_parity(a) + self.algebra.word_parity(b)) % 2 != p:
                    bad.append(self.algebra.gens[g].name)
        rep.check(
            "bialgebra:%s:parity" % tag,
            not bad,
            lhs="parity of Delta terms",
            rhs="parity of generator",
            residual=", ".join(bad),
        )
        return rep


def quantum_block_inverse(x, det_inv, one, erange=3):
    """Two-sided inverse of a 2x2 block x = [[x11,x12],[x21,x22]] whose
    quantum determinant has the given two-sided inverse element.

    The inverse is found by an adjugate ansatz
        y = [[ q^a d x22, -q^b d x12], [-q^c d x21, q^d' d x11]]  (d = det_inv)
    with the four exponents solved for, not assumed; returns (y, exps) or
    None when no exponent assignment satisfies all eight unit equations.
    """
    (x11, x12), (x21, x22) = x
    ad = {
        (0, 0): det_inv * x22,
        (0, 1): -(det_inv * x12),
        (1, 0): -(det_inv * x21),
        (1, 1): det_inv * x11,
    }
    es = range(-erange, erange + 1)
    m1 = x11 * ad[(0, 0)]
    m2 = x12 * ad[(1, 0)]
    first = [
        (a, c)
        for a in es
        for c in es
        if m1 * Laurent.q(a) + m2 * Laurent.q(c) == one
    ]
    m3 = x21 * ad[(0, 1)]
    m4 = x22 * ad[(1, 1)]
    second = [
        (b, dd)
        for b in es
        for dd in es
        if m3 * Laurent.q(b) + m4 * Laurent.q(dd) == one
    ]
    zero = one - one
    for a, c in first:
        for b, dd in second:
            y = [
                [ad[(0, 0)] * Laurent.q(a), ad[(0, 1)] * Laurent.q(b)],
                [ad[(1, 0)] * Laurent.q(c), ad[(1, 1)] * Laurent.q(dd)],
            ]
            ok = True
            for i in range(2):
                for j in range(2):
                    want = one if i == j else zero
                    xy = x[i][0] * y[0][j] + x[i][1] * y[1][j]
                    yx = y[i][0] * x[0][j] + y[i][1] * x[1][j]
                    if xy != want or yx != want:
                        ok = False
                        break
                if not ok:
                    break
            if ok:
                return y, (a, b, c, dd)
    return None
