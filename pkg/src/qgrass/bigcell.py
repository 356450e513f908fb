"""The quantum big cell: chiral quantum Minkowski superspace.

The big cell of the quantum super Grassmannian is the chart where the
top 2x2 quantum minor is inverted.  Its coordinate ring O_q(U) is
presented abstractly on four even generators t[i,j] (i in {3,4}, j in
{1,2}) and two odd generators tau[1], tau[2], with quadratic relations
making it a flat deformation of the supercommutative algebra on 4 even
and 2 odd variables.

The presentation is validated against its defining realization: t[i,j]
and tau[j] map to the block coordinates of the localized parabolic
quotient (lower-left block times the inverted x block, and the odd
bottom row times the same inverse), and every defining relation reduces
to zero there.  The quotient's comultiplication restricts to a coaction
on the image of O_q(U); its counit law, multiplicativity on the
relations, slot-2 decomposition over big-cell monomials, and q=1
agreement with the classical action on cell points are each checked
exactly.
"""

from fractions import Fraction
import random

from .laurent import Laurent, ONE, RowSpan
from .freealg import Element, FreeSuperalgebra, Generator, TensorElement, Tensor3
from .rewrite import Presentation
from .report import VerificationReport
from .classical import (
    GNum,
    bigcell_action,
    classical_dimension,
    minv2,
    mmul,
    sample_cell_point,
    sample_parabolic_point,
)
from .parabolic import LocalElement, LocalTensor, LocalTensor3, ParabolicCoordinates


def _lam():
    # the ubiquitous q-commutator correction q^-1 - q
    return Laurent.q(-1) - Laurent.q(1)


class BigCell:
    """The abstract presentation of O_q(U) on t[3..4, 1..2] and tau[1..2].

    Generator order: t[3,1], t[3,2], t[4,1], t[4,2], tau[1], tau[2];
    the rewrite rules orient every descending pair downward, so the
    irreducible words are exactly the nondecreasing (square-free in the
    odd letters) monomials.
    """

    def __init__(self):
        names = ["t[3,1]", "t[3,2]", "t[4,1]", "t[4,2]", "tau[1]", "tau[2]"]
        parities = [0, 0, 0, 0, 1, 1]
        self.algebra = FreeSuperalgebra(
            [Generator(i, names[i], parities[i], i) for i in range(6)]
        )
        self.relations = bigcell_relations(self.algebra)
        self.presentation = Presentation.from_relations(
            self.algebra, [rel for _, rel in self.relations]
        )
        assert len(self.presentation.rules) == 17

    def gid(self, i, j=None):
        """t[i,j] for i in {3,4}, or tau[j] when called as gid(5, j)."""
        if i == 5:
            return 3 + j
        return 2 * (i - 3) + (j - 1)

    def t(self, i, j):
        return self.algebra.gen(self.gid(i, j))

    def tau(self, j):
        return self.algebra.gen(self.gid(5, j))

    def nf(self, x):
        return self.presentation.normal_form(x)


def bigcell_relations(alg):
    """The defining relations of O_q(U), as (label, element) pairs with
    label the concatenation of the distinguished leading pair."""
    w = alg.word
    lam = _lam()
    qq = Laurent.q(1)
    qi = Laurent.q(-1)

    def tg(i, j):
        return 2 * (i - 3) + (j - 1)

    u1, u2 = 4, 5
    rels = []

    def add(lead, rel):
        rels.append((alg.word_str(lead), rel))

    for i in (3, 4):  # row pairs q-commute downward
        add((tg(i, 2), tg(i, 1)), w((tg(i, 1), tg(i, 2))) - w((tg(i, 2), tg(i, 1)), qq))
    for j in (1, 2):  # column pairs q-commute the other way
        add((tg(4, j), tg(3, j)), w((tg(3, j), tg(4, j))) - w((tg(4, j), tg(3, j)), qi))
    # diagonal pair commutes; antidiagonal picks up the q-commutator term
    add((tg(4, 2), tg(3, 1)), w((tg(3, 1), tg(4, 2))) - w((tg(4, 2), tg(3, 1))))
    add(
        (tg(4, 1), tg(3, 2)),
        w((tg(3, 2), tg(4, 1)))
        - w((tg(4, 1), tg(3, 2)))
        - w((tg(4, 2), tg(3, 1)), lam),
    )
    # odd letters: q-anticommute, squares vanish
    add((u2, u1), w((u1, u2)) + w((u2, u1), qi))
    add((u1, u1), w((u1, u1)))
    add((u2, u2), w((u2, u2)))
    for i in (3, 4):
        for j in (1, 2):  # same column: q-commute
            add(
                (u1 + (j - 1), tg(i, j)),
                w((tg(i, j), u1 + (j - 1))) - w((u1 + (j - 1), tg(i, j)), qi),
            )
        # mixed columns: t[i,1] commutes past tau[2]; t[i,2] past tau[1]
        # with the correction
        add((u2, tg(i, 1)), w((tg(i, 1), u2)) - w((u2, tg(i, 1))))
        add(
            (u1, tg(i, 2)),
            w((tg(i, 2), u1)) - w((u1, tg(i, 2))) - w((tg(i, 1), u2), lam),
        )
    assert len(rels) == 17
    return rels


def bigcell_presentation():
    return BigCell()


# -- realization inside the localized parabolic quotient -----------------------------


class BigCellEmbedding:
    """O_q(U) realized on the block coordinates of the localized
    parabolic quotient: t[i,j] -> row i of the lower-left block times
    column j of the inverted x block, tau[j] -> the odd bottom row times
    the same inverse column."""

    def __init__(self, bc=None, pc=None):
        self.bc = bc or BigCell()
        self.pc = pc or ParabolicCoordinates()
        self.lp = self.pc.lp
        self.loc = self.lp.loc
        pcT = self.pc
        self.images = {
            0: pcT.t[0][0],
            1: pcT.t[0][1],
            2: pcT.t[1][0],
            3: pcT.t[1][1],
            4: pcT.tau[0],
            5: pcT.tau[1],
        }
        self._word_cache = {(): self.loc.one()}
        self._delta_cache = {}

    def image_word(self, word):
        if word not in self._word_cache:
            out = self.images[word[0]]
            for g in word[1:]:
                out = out * self.images[g]
            self._word_cache[word] = out
        return self._word_cache[word]

    def image(self, x):
        out = self.loc.zero()
        for word, c in x.terms.items():
            out = out + self.image_word(word).scale(c)
        return out

    def delta(self, gid):
        """The coaction on a generator: the quotient comultiplication of
        its image (slot 2 decomposes over big-cell images; see
        reconstruct)."""
        if gid not in self._delta_cache:
            self._delta_cache[gid] = self.lp.comultiply(self.images[gid])
        return self._delta_cache[gid]

    def delta_word(self, word):
        if not word:
            return self.lp.one2()
        out = self.delta(word[0])
        for g in word[1:]:
            out = out * self.delta(g)
        return out

    def delta_element(self, x):
        out = None
        for word, c in x.terms.items():
            piece = self.delta_word(word).scale(c)
            out = piece if out is None else out + piece
        if out is None:
            alg = self.lp.pq.mq.algebra
            return LocalTensor.of_tensor(self.loc, TensorElement.of(alg.zero(), alg.zero()))
        return out

    def reconstruct(self, gid):
        """Split delta(gid) as sum_k h_k (x) image(m_k) over the degree
        <= 1 big-cell monomials m_k, exactly.

        The candidate images (the unit and the six generators, lifted to
        the common denominator power) have pairwise disjoint numerator
        supports, so each slot-2 word belongs to at most one candidate
        and the slot-1 cofactors are forced; the split is then
        re-assembled and compared against delta(gid) verbatim.  Returns
        (pairs, leftover) where pairs is a list of (monomial word, h_k
        numerator Element) and leftover collects any slot-2 words no
        candidate covers (empty exactly when the split is valid)."""
        lt = self.delta(gid)
        alg = self.lp.pq.mq.algebra
        assert lt.pl == (1,) and lt.pr == (1,)
        monomials = [()] + [(g,) for g in range(6)]
        cands = [self.image_word(m).lifted((1,)) for m in monomials]
        owner = {}
        for k, cand in enumerate(cands):
            for wrd in cand.num.terms:
                assert wrd not in owner, "candidate supports overlap"
                owner[wrd] = k
        # group the coaction by slot-2 word
        rows = {}
        for (w1, w2), c in lt.t.terms.items():
            rows.setdefault(w2, {})[w1] = c
        buckets = {}
        leftover = []
        for w2, vec in rows.items():
            k = owner.get(w2)
            if k is None:
                leftover.append(w2)
            else:
                buckets.setdefault(k, {})[w2] = Element(alg, vec)
        if leftover:
            return [], leftover
        pairs = []
        rebuilt = None
        for k, bucket in sorted(buckets.items()):
            num = cands[k].num
            w0 = next(iter(bucket))
            c0 = num.terms[w0]
            assert c0.is_unit()
            h = bucket[w0].scale(c0.unit_inverse())
            # the same cofactor must reproduce every word of the candidate
            for wrd, c in num.terms.items():
                if bucket.get(wrd, alg.zero()) != h.scale(c):
                    return [], ["inconsistent cofactor at %s" % alg.word_str(wrd)]
            pairs.append((monomials[k], h))
            piece = TensorElement.of(h, num)
            rebuilt = piece if rebuilt is None else rebuilt + piece
        if rebuilt != lt.t:
            return [], ["reassembly mismatch"]
        return pairs, []

    def formula(self, gid):
        """A printable form of the reconstructed coaction of a generator."""
        pairs, leftover = self.reconstruct(gid)
        if leftover:
            return ""
        balg = self.bc.algebra
        bits = []
        for word, h in pairs:
            mon = balg.word_str(word) if word else "1"
            bits.append("(%s) (x) %s" % (LocalElement(self.loc, h, (1,)), mon))
        return "Delta(%s) = %s" % (balg.gens[gid].name, "  +  ".join(bits))


# -- classical evaluation helpers -----------------------------------------------------


def _entry_table(mq):
    return {mq.gid(i, j): (i - 1, j - 1) for i in range(1, 6) for j in range(1, 6)}


def _eval_quotient(mq, table, x, M):
    """Evaluate a quotient element at a 5x5 Grassmann-number matrix, q=1."""
    total = GNum.of(0)
    for word, c in x.terms.items():
        v = GNum.of(c.eval(Fraction(1)))
        for g in word:
            i, j = table[g]
            v = v * M[i][j]
        total = total + v
    return total


def _eval_local(mq, table, le, M, dinv):
    v = _eval_quotient(mq, table, le.num, M)
    for _ in range(le.powers[0]):
        v = v * dinv
    return v


def _cell_values(A, alpha):
    return {
        0: A[0][0],
        1: A[0][1],
        2: A[1][0],
        3: A[1][1],
        4: alpha[0],
        5: alpha[1],
    }


def _eval_cell_word(word, values):
    v = GNum.of(1)
    for g in word:
        v = v * values[g]
    return v


def _top_minor_inverse(M):
    return (M[0][0] * M[1][1] - M[0][1] * M[1][0]).inverse()


# -- verification suites ---------------------------------------------------------------


def verify_bigcell_flatness(bc=None, degree=3, report=None):
    """Irreducible-word counts against the supercommutative oracle,
    local confluence, the pinned normal forms, and the q=1 limit of the
    rules."""
    rep = report or VerificationReport("bigcell-flatness")
    bc = bc or BigCell()
    pres = bc.presentation
    alg = bc.algebra

    for d in range(1, degree + 1):
        rep.start()
        got = pres.count_irreducible(d)
        want = classical_dimension(4, 2, d)
        rep.check(
            "bigcell:flatness:degree-%d" % d,
            got == want,
            lhs="irreducible words of degree %d" % d,
            rhs="supercommutative dimension %d" % want,
            residual="" if got == want else "got %d" % got,
        )

    rep.start()
    bad = pres.local_confluence(3)
    rep.check(
        "bigcell:confluent",
        not bad,
        lhs="all overlap ambiguities to degree 3",
        rhs="resolve to equal normal forms",
        residual="; ".join(alg.word_str(w) for w, _, _ in bad[:4]),
    )

    rep.start()
    got = pres.normal_form(alg.word((1, 0)))
    want = alg.word((0, 1), Laurent.q(-1))
    rep.check(
        "bigcell:nf:t[3,2]t[3,1]",
        got == want,
        lhs="nf(t[3,2] t[3,1])",
        rhs="q^-1 t[3,1] t[3,2]",
        residual=str(got - want),
    )
    rep.start()
    got = pres.normal_form(alg.word((5, 4)))
    want = alg.word((4, 5), -Laurent.q(1))
    rep.check(
        "bigcell:nf:tau[2]tau[1]",
        got == want,
        lhs="nf(tau[2] tau[1])",
        rhs="-q tau[1] tau[2]",
        residual=str(got - want),
    )

    # q=1 the rules collapse to supercommutativity with Koszul signs
    rep.start()
    bad = []
    for rule in pres.rules:
        a, b = rule.lhs
        if a == b:
            want = {}
        else:
            sign = -1 if alg.parities[a] and alg.parities[b] else 1
            want = {(b, a): Fraction(sign)}
        got = {w: c.eval(Fraction(1)) for w, c in rule.rhs.terms.items()}
        got = {w: v for w, v in got.items() if v}
        if got != want:
            bad.append(alg.word_str(rule.lhs))
    rep.check(
        "bigcell:q1:supercommutative",
        not bad,
        lhs="every rule at q=1",
        rhs="plain supercommutation with Koszul signs",
        residual="; ".join(bad),
    )
    return rep


def embed_bigcell(emb=None, report=None, samples=5, rng=None):
    """Every defining relation vanishes on the block-coordinate images;
    the images of the degree <= 2 standard monomials stay linearly
    independent; at q=1 the images match the classical coordinates on
    sampled group points."""
    rep = report or VerificationReport("bigcell-embed")
    emb = emb or BigCellEmbedding()
    bc, loc = emb.bc, emb.loc

    for label, rel in bc.relations:
        rep.start()
        got = emb.image(rel)
        rep.check(
            "embed:relation:%s" % label,
            not got,
            lhs="image of the relation led by %s" % label,
            rhs="0 in the localized quotient",
            residual=str(got),
        )

    rep.start()
    words = []
    for d in range(3):
        words.extend(sorted(bc.presentation.irreducible_words(d)))
    span = RowSpan()
    dependent = []
    for word in words:
        vec = emb.image_word(word).lifted((2,)).num.terms
        if not span.add(dict(vec)):
            dependent.append(bc.algebra.word_str(word) if word else "1")
    rep.check(
        "embed:injective:degree<=2",
        span.rank == len(words) == 26,
        lhs="images of the %d standard monomials of degree <= 2" % len(words),
        rhs="linearly independent over the fraction field",
        residual="dependent: %s" % ", ".join(dependent),
    )

    # q=1: the images evaluate to the classical cell coordinates of the
    # group point, A = t-block and alpha = (bottom row) x^-1
    rep.start()
    rng = rng or random.Random(29)
    mq = emb.lp.pq.mq
    table = _entry_table(mq)
    bad = []
    for s in range(samples):
        g = sample_parabolic_point(rng)
        M = g.matrix()
        dinv = _top_minor_inverse(M)
        alpha = mmul([[M[4][0], M[4][1]]], minv2(g.x))[0]
        for r in range(2):
            for j in range(2):
                got = _eval_local(mq, table, emb.pc.t[r][j], M, dinv)
                if got != g.t[r][j]:
                    bad.append("t[%d,%d]@%d" % (r + 3, j + 1, s))
        for j in range(2):
            got = _eval_local(mq, table, emb.pc.tau[j], M, dinv)
            if got != alpha[j]:
                bad.append("tau[%d]@%d" % (j + 1, s))
    rep.check(
        "embed:classical:q=1",
        not bad,
        lhs="images evaluated at q=1 on %d sampled group points" % samples,
        rhs="classical big-cell coordinates t, (bottom row) x^-1",
        residual="; ".join(bad),
    )
    return rep


def bigcell_coaction_check(emb=None, report=None, samples=20, rng=None, extended=False):
    """Counit law on all six generators, multiplicativity of the
    coaction across every defining relation, the exact slot-2
    decomposition over big-cell monomials, the two-sided x-block
    inverse, and the q=1 duality against the classical action on
    sampled points.  With extended=True, coassociativity on the
    generators via triple tensors."""
    rep = report or VerificationReport("bigcell-coaction")
    emb = emb or BigCellEmbedding()
    bc, lp, loc = emb.bc, emb.lp, emb.loc
    balg = bc.algebra

    for gid in range(6):
        rep.start()
        got = lp.counit_slot1(emb.delta(gid))
        want = emb.images[gid]
        rep.check(
            "coaction:counit:%s" % balg.gens[gid].name,
            got == want,
            lhs="(eps (x) id) Delta(%s)" % balg.gens[gid].name,
            rhs=balg.gens[gid].name,
            residual=str(got - want),
        )

    for label, rel in bc.relations:
        rep.start()
        got = emb.delta_element(rel)
        rep.check(
            "coaction:relation:%s" % label,
            not got,
            lhs="Delta of the relation led by %s" % label,
            rhs="0 slotwise in the localized tensor square",
            residual=str(got),
        )

    for gid in range(6):
        rep.start()
        pairs, leftover = emb.reconstruct(gid)
        ok = not leftover
        rep.check(
            "coaction:slot2:%s" % balg.gens[gid].name,
            ok,
            lhs="slot-2 split of Delta(%s) over degree <= 1 monomials" % balg.gens[gid].name,
            rhs=emb.formula(gid) if ok else "exact cofactor decomposition",
            residual="; ".join(str(x) for x in leftover),
        )

    # the x block inverse used by the coordinates, re-verified two-sided
    rep.start()
    x, sx = emb.pc.x, emb.pc.sx
    one, zero = loc.one(), loc.zero()
    eye = [[one, zero], [zero, one]]
    ok = True
    for a, b in ((x, sx), (sx, x)):
        for i in range(2):
            for j in range(2):
                got = a[i][0] * b[0][j] + a[i][1] * b[1][j]
                ok = ok and got == eye[i][j]
    rep.check(
        "coaction:x-inverse:two-sided",
        ok,
        lhs="x sx and sx x entrywise",
        rhs="identity over the localization",
        residual="" if ok else "some entry differs",
    )

    # q=1 duality: Delta dualizes the classical action on cell points
    rep.start()
    rng = rng or random.Random(173)
    mq = lp.pq.mq
    table = _entry_table(mq)
    split = {}
    ok = True
    for gid in range(6):
        pairs, leftover = emb.reconstruct(gid)
        if leftover:
            ok = False
        split[gid] = pairs
    bad = []
    if ok:
        for s in range(samples):
            g = sample_parabolic_point(rng)
            A, alpha = sample_cell_point(rng)
            M = g.matrix()
            dinv = _top_minor_inverse(M)
            A2, alpha2 = bigcell_action(g, A, alpha)
            values = _cell_values(A, alpha)
            values2 = _cell_values(A2, alpha2)
            for gid in range(6):
                want = values2[gid]
                got = GNum.of(0)
                for word, h in split[gid]:
                    hv = _eval_quotient(mq, table, h, M) * dinv
                    got = got + hv * _eval_cell_word(word, values)
                if got != want:
                    bad.append("%s@%d" % (balg.gens[gid].name, s))
    rep.check(
        "coaction:classical-duality",
        ok and not bad,
        lhs="slot-1 at a group point, slot-2 at a cell point, %d samples" % samples,
        rhs="the generator at the transformed point",
        residual="; ".join(bad) if bad else ("" if ok else "no slot-2 split"),
    )

    for gid in range(6):
        if not extended:
            rep.skip(
                "coaction:coassociative:%s" % balg.gens[gid].name,
                lhs="(Delta (x) id) Delta vs (id (x) Delta) Delta",
                rhs="equal triple tensors (extended check)",
            )
            continue
        rep.start()
        left = _coassoc_left(lp, emb.delta(gid))
        right = _coassoc_right(lp, emb.delta(gid))
        ok = left == right
        rep.check(
            "coaction:coassociative:%s" % balg.gens[gid].name,
            ok,
            lhs="(Delta (x) id) Delta(%s)" % balg.gens[gid].name,
            rhs="(id (x) Delta) Delta(%s)" % balg.gens[gid].name,
            residual="" if ok else "triple tensors differ",
        )
    return rep


def _coassoc_left(lp, lt):
    """(Delta (x) id) of a localized tensor; Delta of the inverted minor
    is grouplike, so the denominator power duplicates into slots 1, 2."""
    alg = lp.pq.mq.algebra
    terms = {}
    for (w1, w2), c in lt.t.terms.items():
        tt = lp.pq.comultiply(Element(alg, {w1: c}))
        for (v1, v2), c2 in tt.terms.items():
            key = (v1, v2, w2)
            acc = terms.get(key)
            terms[key] = c2 if acc is None else acc + c2
    t3 = Tensor3((alg, alg, alg), {k: v for k, v in terms.items() if v})
    return LocalTensor3(lp.loc, t3, lt.pl, lt.pl, lt.pr)


def _coassoc_right(lp, lt):
    """(id (x) Delta) of a localized tensor."""
    alg = lp.pq.mq.algebra
    terms = {}
    for (w1, w2), c in lt.t.terms.items():
        tt = lp.pq.comultiply(Element(alg, {w2: c}))
        for (v1, v2), c2 in tt.terms.items():
            key = (w1, v1, v2)
            acc = terms.get(key)
            terms[key] = c2 if acc is None else acc + c2
    t3 = Tensor3((alg, alg, alg), {k: v for k, v in terms.items() if v})
    return LocalTensor3(lp.loc, t3, lt.pl, lt.pr, lt.pr)
