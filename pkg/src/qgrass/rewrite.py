"""Terminating rewriting for finitely presented graded algebras.

A presentation carries oriented rules lhs -> rhs where lhs is a word and
rhs an element all of whose words are strictly smaller in the deg-lex
monomial order (degree first, then lexicographic comparison of the
generator order keys).  Deg-lex is multiplicative -- u < v implies
aub < avb -- so every rewrite step strictly decreases and reduction
terminates.  Reduction is leftmost: scan for the first position carrying
a redex and fire the shortest, lexicographically least matching rule.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .laurent import Laurent, ZERO
from .freealg import Generator, FreeSuperalgebra, Element, TensorElement, Tensor3


@dataclass
class Rule:
    lhs: tuple
    rhs: Element

    def __str__(self):
        return "%s -> %s" % (self.rhs.algebra.word_str(self.lhs), self.rhs)


class Presentation:
    """A free superalgebra together with a terminating rewrite system."""

    def __init__(self, algebra, rules):
        self.algebra = algebra
        self.rules = list(rules)
        self._index = {}
        for r in self.rules:
            assert r.lhs, "empty lhs"
            self._index.setdefault(r.lhs[0], []).append(r)
        for lst in self._index.values():
            lst.sort(key=lambda r: (len(r.lhs), r.lhs))
        lhss = [r.lhs for r in self.rules]
        assert len(set(lhss)) == len(lhss), "duplicate rule lhs"
        self._nf = {}
        for r in self.rules:
            self._check_rule(r)

    # -- monomial order -----------------------------------------------------------

    def word_key(self, word):
        keys = self.algebra.keys
        return (len(word), tuple(keys[g] for g in word))

    def _check_rule(self, rule):
        lk = self.word_key(rule.lhs)
        lp = self.algebra.word_parity(rule.lhs)
        for w in rule.rhs.terms:
            assert self.word_key(w) < lk, "rule does not decrease: %s" % rule
            assert self.algebra.word_parity(w) == lp, "rule not parity-homogeneous"

    # -- construction helpers -------------------------------------------------------

    def orient(self, relation):
        """Turn a relation (an element equal to zero) into a rule by solving
        for its largest word; the leading coefficient must be a unit."""
        assert relation, "cannot orient the zero relation"
        lead = max(relation.terms, key=self.word_key)
        c = relation.terms[lead]
        assert c.is_unit(), "leading coefficient %s is not a unit" % c
        rest = Element(
            self.algebra, {w: v for w, v in relation.terms.items() if w != lead}
        )
        return Rule(lead, rest.scale(-c.unit_inverse()))

    @staticmethod
    def from_relations(algebra, relations, extra_rules=()):
        """Build a presentation by orienting relations and inter-reducing
        the right-hand sides so no rule chains through another.

        Relations are absorbed in rounds: each round first normalizes the
        pending relations by the rules collected so far, orients those
        whose leading words are still unclaimed, and defers the rest.  A
        relation whose leading word is already a rule (so it only becomes
        orientable after reduction by that rule) is picked up in a later
        round; a relation that reduces to zero is a consequence and is
        dropped.  Every round must make progress."""
        rules = list(extra_rules)
        seen = {r.lhs for r in rules}
        pending = list(relations)
        while pending:
            pres = Presentation(algebra, rules)
            deferred = []
            progressed = False
            for rel in pending:
                rel = pres.normal_form(rel)
                if not rel:
                    progressed = True
                    continue
                lead = max(rel.terms, key=pres.word_key)
                if lead in seen or not rel.terms[lead].is_unit():
                    # unorientable for now; a later rule may rewrite the lead
                    deferred.append(rel)
                    continue
                rules.append(pres.orient(rel))
                seen.add(lead)
                progressed = True
            assert progressed, "relations cannot be oriented into rules"
            pending = deferred
        return Presentation(algebra, rules).inter_reduce()

    def inter_reduce(self):
        """Reduce every rhs by the full rule set until stable."""
        pres = self
        for _ in range(10):
            changed = False
            new_rules = []
            for r in pres.rules:
                rhs = pres.normal_form(r.rhs)
                if rhs != r.rhs:
                    changed = True
                new_rules.append(Rule(r.lhs, rhs))
            pres = Presentation(pres.algebra, new_rules)
            if not changed:
                return pres
        raise AssertionError("inter-reduction did not stabilize")

    # -- reduction ---------------------------------------------------------------------

    def find_redex(self, word):
        """Leftmost redex: (position, rule) or None."""
        n = len(word)
        for i in range(n):
            for rule in self._index.get(word[i], ()):
                L = len(rule.lhs)
                if i + L <= n and word[i : i + L] == rule.lhs:
                    return i, rule
        return None

    def nf_word(self, word):
        """Normal form of a single word, as an Element (memoized)."""
        cache = self._nf
        if word in cache:
            return cache[word]
        stack = [word]
        while stack:
            top = stack[-1]
            if top in cache:
                stack.pop()
                continue
            red = self.find_redex(top)
            if red is None:
                cache[top] = self.algebra.word(top)
                stack.pop()
                continue
            pos, rule = red
            pre, suf = top[:pos], top[pos + len(rule.lhs) :]
            pending = []
            for rw in rule.rhs.terms:
                w2 = pre + rw + suf
                if w2 not in cache:
                    pending.append(w2)
            if pending:
                if __debug__:
                    k = self.word_key(top)
                    for w2 in pending:
                        assert self.word_key(w2) < k, "reduction step must decrease"
                stack.extend(pending)
                continue
            acc = {}
            for rw, rc in rule.rhs.terms.items():
                for w2, c2 in cache[pre + rw + suf].terms.items():
                    s = acc.get(w2, ZERO) + rc * c2
                    if s:
                        acc[w2] = s
                    elif w2 in acc:
                        del acc[w2]
            cache[top] = Element(self.algebra, acc)
            stack.pop()
        return cache[word]

    def normal_form(self, x):
        """Normal form of an element (or a word given as a tuple/list)."""
        if isinstance(x, (tuple, list)):
            return self.nf_word(tuple(x))
        assert x.algebra is self.algebra
        acc = {}
        for w, c in x.terms.items():
            for w2, c2 in self.nf_word(w).terms.items():
                s = acc.get(w2, ZERO) + c * c2
                if s:
                    acc[w2] = s
                elif w2 in acc:
                    del acc[w2]
        return Element(self.algebra, acc)

    def is_irreducible(self, word):
        return self.find_redex(tuple(word)) is None

    # -- confluence ----------------------------------------------------------------------

    def local_confluence(self, max_degree):
        """Check all overlap and inclusion ambiguities of degree <= max_degree.

        Returns a list of divergences (word, nf_via_rule1, nf_via_rule2);
        empty means locally confluent up to that degree.
        """
        divergences = []
        seen = set()
        for r1 in self.rules:
            l1 = r1.lhs
            for r2 in self.rules:
                l2 = r2.lhs
                # proper overlap: suffix of l1 = prefix of l2
                for o in range(1, len(l1)):
                    k = len(l1) - o
                    if k > len(l2) or l1[o:] != l2[:k]:
                        continue
                    word = l1 + l2[k:]
                    if len(word) <= max_degree:
                        self._check_ambiguity(word, 0, r1, o, r2, divergences, seen)
                # inclusion: l2 a subword of l1
                if len(l2) < len(l1):
                    for o in range(0, len(l1) - len(l2) + 1):
                        if l1[o : o + len(l2)] == l2 and len(l1) <= max_degree:
                            self._check_ambiguity(l1, 0, r1, o, r2, divergences, seen)
        return divergences

    def _apply_at(self, word, pos, rule):
        pre, suf = word[:pos], word[pos + len(rule.lhs) :]
        terms = {}
        for rw, rc in rule.rhs.terms.items():
            w2 = pre + rw + suf
            s = terms.get(w2, ZERO) + rc
            if s:
                terms[w2] = s
            elif w2 in terms:
                del terms[w2]
        return Element(self.algebra, terms)

    def _check_ambiguity(self, word, p1, r1, p2, r2, divergences, seen):
        if p1 == p2 and r1 is r2:
            return
        key = (word, p1, id(r1), p2, id(r2))
        if key in seen:
            return
        seen.add(key)
        a = self.normal_form(self._apply_at(word, p1, r1))
        b = self.normal_form(self._apply_at(word, p2, r2))
        if a != b:
            divergences.append((word, a, b))

    # -- enumeration ------------------------------------------------------------------------

    def irreducible_words(self, degree):
        """All irreducible words of the given degree, lexicographically."""
        n = len(self.algebra)
        lhs_set = {r.lhs for r in self.rules}
        max_l = max((len(l) for l in lhs_set), default=0)

        def ok(word):
            # only suffixes ending at the last letter need checking
            for L in range(1, min(max_l, len(word)) + 1):
                if word[-L:] in lhs_set:
                    return False
            return True

        def rec(word):
            if len(word) == degree:
                yield word
                return
            for g in range(n):
                w2 = word + (g,)
                if ok(w2):
                    yield from rec(w2)

        if degree == 0:
            yield ()
            return
        yield from rec(())

    def count_irreducible(self, degree):
        return sum(1 for _ in self.irreducible_words(degree))

    # -- serialization -------------------------------------------------------------------------

    def to_json(self):
        data = {
            "generators": [
                {"name": g.name, "parity": g.parity, "key": g.key}
                for g in self.algebra.gens
            ],
            "rules": [
                {
                    "lhs": list(r.lhs),
                    "rhs": [
                        {"word": list(w), "coeff": sorted(c.c.items())}
                        for w, c in r.rhs.sorted_terms()
                    ],
                }
                for r in self.rules
            ],
        }
        return json.dumps(data, indent=1)

    @staticmethod
    def from_json(text):
        data = json.loads(text)
        gens = [
            Generator(i, g["name"], g["parity"], g["key"])
            for i, g in enumerate(data["generators"])
        ]
        alg = FreeSuperalgebra(gens)
        rules = []
        for r in data["rules"]:
            rhs = alg.element(
                {
                    tuple(t["word"]): Laurent({int(e): int(v) for e, v in t["coeff"]})
                    for t in r["rhs"]
                }
            )
            rules.append(Rule(tuple(r["lhs"]), rhs))
        return Presentation(alg, rules)


# -- tensor reduction ------------------------------------------------------------


def tensor_normal_form(t, pleft, pright):
    """Reduce each slot of a tensor element.  Rules are parity-homogeneous,
    so slotwise reduction commutes with the Koszul sign bookkeeping."""
    assert t.left is pleft.algebra and t.right is pright.algebra
    acc = {}
    for (a, b), c in t.terms.items():
        na = pleft.nf_word(a)
        nb = pright.nf_word(b)
        for w1, c1 in na.terms.items():
            for w2, c2 in nb.terms.items():
                k = (w1, w2)
                s = acc.get(k, ZERO) + c * c1 * c2
                if s:
                    acc[k] = s
                elif k in acc:
                    del acc[k]
    return TensorElement(t.left, t.right, acc)


def tensor3_normal_form(t, p1, p2, p3):
    acc = {}
    for (a, b, c), v in t.terms.items():
        for w1, c1 in p1.nf_word(a).terms.items():
            for w2, c2 in p2.nf_word(b).terms.items():
                for w3, c3 in p3.nf_word(c).terms.items():
                    k = (w1, w2, w3)
                    s = acc.get(k, ZERO) + v * c1 * c2 * c3
                    if s:
                        acc[k] = s
                    elif k in acc:
                        del acc[k]
    return Tensor3(t.algebras, acc)
