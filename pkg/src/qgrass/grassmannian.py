"""The quantum Grassmannian of 2|0 planes in 4|1 superspace.

Gr_q is the subalgebra of the quantum supermatrix algebra generated by the
eleven quantum minors on the first two columns: D[i,j] (1<=i<j<=4, even),
D[i,5] (odd) and D[5,5] = a[5,1]a[5,2] (even, square-zero).  The module
verifies their commutation relations and quantum super Pluecker relations,
the comodule structure over the full matrix superalgebra, and the standard
monomial (semistandard tableau) basis theorem.  An abstract presentation
on eleven symbols is built from the same relations, oriented so that the
irreducible words are exactly the semistandard tableaux.
"""

from __future__ import annotations

from itertools import product as iproduct

from .laurent import Laurent, ONE, RowSpan
from .freealg import Generator, FreeSuperalgebra, Element, TensorElement
from .rewrite import Presentation, Rule
from .report import VerificationReport
from .manin import ManinAlgebra
from .classical import (
    GR_LABELS,
    gr_label_parity,
    classical_grassmannian_presentation,
    classical_minor_realization,
    classical_dimension,
)


def lbl(label):
    return "D[%d,%d]" % label


def commutation_identities():
    """All minor commutation identities, as (check id, formal terms) pairs
    where terms is a list of (Laurent coefficient, [label, label]) and the
    identity asserts that the sum vanishes.

    Shared-index pairs q-commute with q^-1; pairs with all indices distinct
    commute with q^-2, with q^-2 plus a correction, or on the nose,
    according to the interlacing pattern; pairs involving D[5,5] or two odd
    minors follow their own rules, including D[i,5] D[5,5] = 0 = D[5,5] D[i,5].
    """
    qi = Laurent.q(-1)
    out = []
    n = len(GR_LABELS)
    for x in range(n):
        for y in range(x + 1, n):
            A, B = GR_LABELS[x], GR_LABELS[y]
            name = "comm:%s,%s" % (lbl(A), lbl(B))
            if B == (5, 5):
                if gr_label_parity(A):
                    out.append((name + ":left", [(ONE, [A, B])]))
                    out.append((name + ":right", [(ONE, [B, A])]))
                else:
                    out.append((name, [(ONE, [A, B]), (-Laurent.q(-2), [B, A])]))
                continue
            if gr_label_parity(A) and gr_label_parity(B):
                i, j = A[0], B[0]
                out.append(
                    (
                        name + ":form1",
                        [
                            (ONE, [A, B]),
                            (qi, [B, A]),
                            (qi - Laurent.q(1), [(i, j), (5, 5)]),
                        ],
                    )
                )
                out.append((name + ":form2", [(ONE, [A, B]), (Laurent.q(1), [B, A])]))
                out.append(
                    (
                        name + ":forms-agree",
                        [
                            (qi - Laurent.q(1), [B, A]),
                            (qi - Laurent.q(1), [(i, j), (5, 5)]),
                        ],
                    )
                )
                continue
            shared = set(A) & set(B)
            if shared:
                out.append((name, [(ONE, [A, B]), (-qi, [B, A])]))
                continue
            (a1, a2), (b1, b2) = A, B
            assert a1 < b1
            if a2 < b1:
                out.append((name, [(ONE, [A, B]), (-Laurent.q(-2), [B, A])]))
            elif a2 < b2:
                out.append(
                    (
                        name,
                        [
                            (ONE, [A, B]),
                            (-Laurent.q(-2), [B, A]),
                            (qi - Laurent.q(1), [(a1, b1), (a2, b2)]),
                        ],
                    )
                )
            else:
                out.append((name, [(ONE, [A, B]), (-ONE, [B, A])]))
    return out


def plucker_identities():
    """The quantum super Pluecker identities: the even quadric, the four
    odd three-term relations, and the six identities expressing a product
    of two odd minors through D[5,5]."""
    qi = Laurent.q(-1)
    out = []
    out.append(
        (
            "plucker:even",
            [
                (ONE, [(1, 2), (3, 4)]),
                (-qi, [(1, 3), (2, 4)]),
                (Laurent.q(-2), [(1, 4), (2, 3)]),
            ],
        )
    )
    for i in range(1, 5):
        for j in range(i + 1, 5):
            for k in range(j + 1, 5):
                out.append(
                    (
                        "plucker:odd:%d%d%d" % (i, j, k),
                        [
                            (ONE, [(i, j), (k, 5)]),
                            (-qi, [(i, k), (j, 5)]),
                            (Laurent.q(-2), [(i, 5), (j, k)]),
                        ],
                    )
                )
    for i in range(1, 5):
        for j in range(i + 1, 5):
            out.append(
                (
                    "plucker:odd-pair:%d%d" % (i, j),
                    [(ONE, [(i, 5), (j, 5)]), (-Laurent.q(1), [(i, j), (5, 5)])],
                )
            )
    return out


def is_semistandard(rows):
    """Whether a sequence of labels is a semistandard tableau: columns
    non-decreasing with no repeated odd index in a column."""
    for (i1, j1), (i2, j2) in zip(rows, rows[1:]):
        if i1 > i2 or j1 > j2:
            return False
        if i1 == i2 == 5 or j1 == j2 == 5:
            return False
    return True


class QuantumGrassmannian:
    """Gr_q inside M_q(4|1), together with its abstract presentation."""

    def __init__(self, mq=None):
        self.mq = mq or ManinAlgebra(4, 1)
        assert self.mq.m == 4 and self.mq.n == 1
        self.labels = list(GR_LABELS)
        self.minors = {l: self.mq.quantum_minor(l) for l in self.labels}
        gens = [
            Generator(i, lbl(l), gr_label_parity(l), i) for i, l in enumerate(self.labels)
        ]
        alg = FreeSuperalgebra(gens)
        self.gid = {l: i for i, l in enumerate(self.labels)}
        relations = []
        for name, terms in self._rule_relations():
            acc = alg.zero()
            for c, labels in terms:
                acc = acc + alg.word(tuple(self.gid[l] for l in labels), c)
            relations.append(acc)
        extra = [Rule((g.gid, g.gid), alg.zero()) for g in gens if g.parity]
        # D[5,5] squares to zero in the minor realization; the abstract
        # presentation needs the rule explicitly since the symbol is even
        extra.append(Rule((self.gid[(5, 5)], self.gid[(5, 5)]), alg.zero()))
        self.abstract = Presentation.from_relations(alg, relations, extra)

    def _rule_relations(self):
        """One relation per unordered pair of symbols (the second printed
        form for odd-odd pairs), plus the Pluecker identities: together
        these orient into a rewrite system with semistandard normal words."""
        for name, terms in commutation_identities():
            if name.endswith(":form1") or name.endswith(":forms-agree"):
                continue
            yield name, terms
        yield from plucker_identities()

    # -- evaluation --------------------------------------------------------------

    def eval_in_minors(self, terms):
        """Evaluate formal (coeff, [labels]) terms to a normal form in M_q."""
        acc = self.mq.algebra.zero()
        for c, labels in terms:
            prod = self.mq.algebra.scalar(c)
            for l in labels:
                prod = prod * self.minors[l]
            acc = acc + prod
        return self.mq.nf(acc)

    def minor_word(self, word):
        """Map an abstract word (tuple of gen ids) into M_q normal form."""
        prod = self.mq.algebra.one()
        for g in word:
            prod = prod * self.minors[self.labels[g]]
        return self.mq.nf(prod)

    def minor_element(self, x):
        acc = self.mq.algebra.zero()
        for w, c in x.terms.items():
            acc = acc + self.minor_word(w) * c
        return self.mq.nf(acc)

    # -- suites ---------------------------------------------------------------------

    def verify_generators(self, report=None):
        rep = report or VerificationReport("minors")
        rep.start()
        bad = []
        for l in self.labels:
            p = self.minors[l].parity()
            if p != gr_label_parity(l):
                bad.append(lbl(l))
        rep.check("generators:parity", not bad,
                  lhs="parity of D[i,j]", rhs="|i| + |j| mod 2",
                  residual=", ".join(bad))
        rep.start()
        a = self.mq.a
        rep.check("generators:D55-form",
                  self.minors[(5, 5)] == self.mq.nf(a(5, 1) * a(5, 2)),
                  lhs="D[5,5]", rhs="a[5,1]a[5,2]")
        rep.start()
        sq = self.mq.nf(self.minors[(5, 5)] * self.minors[(5, 5)])
        rep.check("generators:D55-square", not sq,
                  lhs="D[5,5]^2", rhs="0", residual=sq)
        return rep

    def verify_minor_commutations(self, report=None):
        rep = report or VerificationReport("minors")
        self.verify_generators(rep)
        for name, terms in commutation_identities():
            rep.start()
            res = self.eval_in_minors(terms)
            rep.check(name, not res,
                      lhs=" + ".join(
                          "%s %s%s" % (c.pretty(), lbl(a), lbl(b))
                          for c, (a, b) in terms),
                      rhs="0", residual=res)
        return rep

    def verify_quantum_plucker(self, report=None):
        rep = report or VerificationReport("plucker")
        idents = plucker_identities()
        three_term = [n for n, _ in idents if n.startswith("plucker:even")
                      or n.startswith("plucker:odd:")]
        rep.start()
        rep.check("plucker:count", len(three_term) == 5,
                  lhs="three-term relations: %d" % len(three_term),
                  rhs="1 even + 4 odd = 5",
                  residual="" if len(three_term) == 5 else "unexpected count")
        for name, terms in idents:
            rep.start()
            res = self.eval_in_minors(terms)
            rep.check(name, not res,
                      lhs=" + ".join(
                          "%s %s%s" % (c.pretty(), lbl(a), lbl(b))
                          for c, (a, b) in terms),
                      rhs="0", residual=res)
        rep.start()
        sq = self.mq.nf(self.minors[(5, 5)] * self.minors[(5, 5)])
        rep.check("plucker:D55-square", not sq, lhs="D[5,5]^2", rhs="0", residual=sq)
        return rep

    # -- coaction ----------------------------------------------------------------------

    def verify_coaction(self, report=None):
        """Delta restricted to the minors lands in M_q (x) Gr_q.

        For each generator with distinct rows the identity
            Delta(D[i,j]) = sum_{k<l<=5} D^{kl}_{ij} (x) D[k,l]  +  E_ij (x) D[5,5]
        is established exactly, with the correction coefficient E_ij solved
        for rather than assumed; E_ij is recorded in the report.  For
        D[5,5] membership of every second slot in the span of the minors
        is established by exact linear algebra.
        """
        rep = report or VerificationReport("coaction")
        mq = self.mq
        w55 = next(iter(self.minors[(5, 5)].terms))
        span = RowSpan()
        minor_vecs = []
        for l in self.labels:
            vec = dict(self.minors[l].terms)
            minor_vecs.append(vec)
            span.add(vec)
        rep.start()
        rep.check("coaction:minors-independent", span.rank == len(self.labels),
                  lhs="rank of minor coordinate vectors", rhs="11",
                  residual="" if span.rank == len(self.labels) else "rank %d" % span.rank)

        for l in self.labels:
            if l == (5, 5):
                continue
            rep.start()
            t = mq.comultiply(self.minors[l])
            s = TensorElement(mq.algebra, mq.algebra, {})
            for kl in self.labels:
                if kl == (5, 5):
                    continue
                s = s + TensorElement.of(
                    mq.quantum_minor(l, cols=kl), self.minors[kl]
                )
            r = t - s
            ecoef = {}
            clean = True
            for (u, v), c in r.terms.items():
                if v != w55:
                    clean = False
                    break
                ecoef[u] = c
            e = Element(mq.algebra, ecoef)
            ok = clean and (r == TensorElement.of(e, self.minors[(5, 5)]))
            rep.check(
                "coaction:%s" % lbl(l),
                ok,
                lhs="Delta(%s) - sum_{k<l} D^kl (x) D[k,l]" % lbl(l),
                rhs="(%s) (x) D[5,5]" % e,
                residual="" if ok else r,
            )
            # the second slots all lie in the span of the minors
            rep.start()
            ok2 = True
            for u in {uu for (uu, vv) in t.terms}:
                vec = {vv: c for (uu, vv), c in t.terms.items() if uu == u}
                if not span.contains(vec):
                    ok2 = False
                    break
            rep.check("coaction:%s:membership" % lbl(l), ok2,
                      lhs="second slots of Delta(%s)" % lbl(l),
                      rhs="span of the 11 minors",
                      residual="" if ok2 else "slot outside span")
        rep.start()
        t = mq.comultiply(self.minors[(5, 5)])
        ok = True
        for u in {uu for (uu, vv) in t.terms}:
            vec = {vv: c for (uu, vv), c in t.terms.items() if uu == u}
            if not span.contains(vec):
                ok = False
                break
        rep.check("coaction:D[5,5]:membership", ok,
                  lhs="second slots of Delta(D[5,5])",
                  rhs="span of the 11 minors",
                  residual="" if ok else "slot outside span")
        return rep

    # -- standard monomials ----------------------------------------------------------------

    def enumerate_standard(self, degree):
        """All semistandard tableaux with `degree` rows, in lexicographic
        order of their label sequences."""
        if degree == 0:
            return [()]
        out = []

        def rec(rows):
            if len(rows) == degree:
                out.append(tuple(rows))
                return
            start = rows[-1] if rows else None
            for l in self.labels:
                if rows and not is_semistandard((rows[-1], l)):
                    continue
                rows.append(l)
                rec(rows)
                rows.pop()

        rec([])
        return out

    def verify_standard_basis(self, degree, report=None, oracle=True):
        """Independence and spanning of the standard monomials in the given
        degree, by exact rank over the fraction field."""
        rep = report or VerificationReport("basis")
        std = self.enumerate_standard(degree)
        rep.start()
        # the abstract rewrite system has exactly the semistandard words
        # irreducible
        irr = sorted(
            tuple(self.labels[g] for g in w)
            for w in self.abstract.irreducible_words(degree)
        )
        rep.check(
            "basis:deg%d:irreducible-words" % degree,
            irr == sorted(std),
            lhs="irreducible abstract words: %d" % len(irr),
            rhs="semistandard tableaux: %d" % len(std),
            residual="" if irr == sorted(std) else "sets differ",
        )
        span = RowSpan()
        rep.start()
        independent = True
        for rows in std:
            vec = dict(self.minor_word(tuple(self.gid[l] for l in rows)).terms)
            if not span.add(vec):
                independent = False
                break
        rep.check(
            "basis:deg%d:independent" % degree,
            independent and span.rank == len(std),
            lhs="rank of standard monomials",
            rhs="%d" % len(std),
            residual="" if independent else "dependent standard monomial",
        )
        rep.start()
        spanning = True
        witness = None
        for word in iproduct(range(len(self.labels)), repeat=degree):
            vec = dict(self.minor_word(word).terms)
            if vec and not span.contains(vec):
                spanning = False
                witness = word
                break
        rep.check(
            "basis:deg%d:spanning" % degree,
            spanning,
            lhs="all degree-%d monomials in the minors" % degree,
            rhs="span of standard monomials",
            residual=""
            if spanning
            else "outside span: %s" % "".join(lbl(self.labels[g]) for g in witness),
        )
        if oracle:
            rep.start()
            crank = self.classical_rank(degree)
            rep.check(
                "basis:deg%d:oracle-rank" % degree,
                crank == len(std),
                lhs="q=1 oracle rank: %d" % crank,
                rhs="standard monomials: %d" % len(std),
                residual="" if crank == len(std) else "count mismatch",
            )
        return rep

    def classical_rank(self, degree):
        """Rank at q = 1 of all degree-d monomials in the classical minors,
        computed in an independent supercommutative realization."""
        pres, minors = classical_minor_realization()
        span = RowSpan()
        for word in iproduct(range(len(self.labels)), repeat=degree):
            prod = pres.algebra.one()
            for g in word:
                prod = prod * minors[self.labels[g]]
            vec = dict(pres.normal_form(prod).terms)
            if vec:
                span.add(vec)
        return span.rank

    # -- classical limit ----------------------------------------------------------------------

    def verify_classical_limit(self, report=None):
        """At q = 1 the quantum relations become the classical Pluecker and
        supercommutativity relations, and the quantum minors specialize to
        the classical ones."""
        rep = report or VerificationReport("classical-limit")
        cpres = classical_grassmannian_presentation()
        rep.start()
        bad = []
        for name, terms in list(commutation_identities()) + list(plucker_identities()):
            acc = cpres.algebra.zero()
            for c, labels in terms:
                c1 = c.eval(1)
                assert c1.denominator == 1
                acc = acc + cpres.algebra.word(
                    tuple(self.gid[l] for l in labels), int(c1)
                )
            res = cpres.normal_form(acc)
            if res:
                bad.append("%s: %s" % (name, res))
        rep.check(
            "classical-limit:relations",
            not bad,
            lhs="all quantum relations at q=1",
            rhs="0 in the classical Grassmannian",
            residual="; ".join(bad[:3]),
        )
        rep.start()
        rpres, rminors = classical_minor_realization()

        def gen_map(gid):
            i, j = self.mq.label(gid)
            assert j <= 2
            return 2 * (i - 1) + (j - 1) if i <= 4 else 8 + (j - 1)

        bad = []
        for l in self.labels:
            acc = rpres.algebra.zero()
            for w, c in self.minors[l].terms.items():
                c1 = c.eval(1)
                assert c1.denominator == 1
                acc = acc + rpres.algebra.word(tuple(gen_map(g) for g in w), int(c1))
            if rpres.normal_form(acc) != rminors[l]:
                bad.append(lbl(l))
        rep.check(
            "classical-limit:minors",
            not bad,
            lhs="quantum minors at q=1",
            rhs="classical minors",
            residual=", ".join(bad),
        )
        rep.start()
        div = self.abstract.local_confluence(3)
        rep.check(
            "classical-limit:abstract-confluent",
            not div,
            lhs="abstract presentation overlap ambiguities (degree 3)",
            rhs="0 divergences",
            residual="; ".join(
                "%s" % self.abstract.algebra.word_str(w) for w, _, _ in div[:5]
            ),
        )
        rep.start()
        bad = []
        for word in iproduct(range(len(self.labels)), repeat=2):
            viaabs = self.minor_element(self.abstract.nf_word(word))
            direct = self.minor_word(word)
            if viaabs != direct:
                bad.append("".join(lbl(self.labels[g]) for g in word))
        rep.check(
            "classical-limit:abstract-vs-minors",
            not bad,
            lhs="abstract normal forms mapped to minors (all degree-2 words)",
            rhs="direct M_q normal forms",
            residual=", ".join(bad[:5]),
        )
        return rep
