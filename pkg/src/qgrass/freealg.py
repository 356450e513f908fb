"""Free associative Z2-graded algebras over Z[q, q^-1].

Elements are Laurent-linear combinations of words in a fixed generator
list; words are tuples of generator ids.  The tensor square multiplies
with the Koszul sign rule (a (x) b)(c (x) d) = (-1)^{|b||c|} ac (x) bd.
"""

from __future__ import annotations

from dataclasses import dataclass

from .laurent import Laurent, ZERO, ONE


@dataclass(frozen=True)
class Generator:
    """An algebra generator: id (position), display name, parity, order key.

    The order key drives the monomial order used by rewriting; generators
    are typically listed already sorted by key.
    """

    gid: int
    name: str
    parity: int
    key: int

    def __post_init__(self):
        assert self.parity in (0, 1)


class FreeSuperalgebra:
    """A free associative algebra on graded generators."""

    def __init__(self, generators):
        self.gens = list(generators)
        for i, g in enumerate(self.gens):
            assert g.gid == i, "generator ids must be 0..n-1 in order"
        self.parities = [g.parity for g in self.gens]
        self.keys = [g.key for g in self.gens]

    def __len__(self):
        return len(self.gens)

    def word_parity(self, word):
        p = 0
        for g in word:
            p ^= self.parities[g]
        return p

    def word_str(self, word):
        if not word:
            return "1"
        return "".join(self.gens[g].name for g in word)

    # -- element constructors --------------------------------------------------

    def zero(self):
        return Element(self, {})

    def one(self):
        return Element(self, {(): ONE})

    def scalar(self, c):
        c = Laurent.of(c)
        return Element(self, {(): c} if c else {})

    def gen(self, gid):
        return Element(self, {(gid,): ONE})

    def word(self, word, coeff=1):
        c = Laurent.of(coeff)
        return Element(self, {tuple(word): c} if c else {})

    def element(self, terms):
        out = {}
        for w, c in terms.items():
            c = Laurent.of(c)
            if c:
                out[tuple(w)] = c
        return Element(self, out)


class Element:
    """A Laurent-linear combination of words of a FreeSuperalgebra."""

    __slots__ = ("algebra", "terms")

    def __init__(self, algebra, terms):
        self.algebra = algebra
        self.terms = terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, int):
            other = self.algebra.scalar(other)
        return (
            isinstance(other, Element)
            and self.algebra is other.algebra
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __neg__(self):
        return Element(self.algebra, {w: -c for w, c in self.terms.items()})

    def __add__(self, other):
        if isinstance(other, int):
            other = self.algebra.scalar(other)
        assert self.algebra is other.algebra
        terms = dict(self.terms)
        for w, c in other.terms.items():
            s = terms.get(w, ZERO) + c
            if s:
                terms[w] = s
            elif w in terms:
                del terms[w]
        return Element(self.algebra, terms)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, int):
            other = self.algebra.scalar(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Laurent)):
            return self.scale(other)
        assert self.algebra is other.algebra
        terms = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                w = w1 + w2
                s = terms.get(w, ZERO) + c1 * c2
                if s:
                    terms[w] = s
                elif w in terms:
                    del terms[w]
        return Element(self.algebra, terms)

    def __rmul__(self, other):
        if isinstance(other, (int, Laurent)):
            return self.scale(other)
        return NotImplemented

    def scale(self, c):
        c = Laurent.of(c)
        if not c:
            return self.algebra.zero()
        return Element(self.algebra, {w: c * v for w, v in self.terms.items()})

    # -- queries ------------------------------------------------------------------

    def parity(self):
        """Parity if homogeneous, else None; zero reports 0."""
        ps = {self.algebra.word_parity(w) for w in self.terms}
        if not ps:
            return 0
        return ps.pop() if len(ps) == 1 else None

    def degrees(self):
        return {len(w) for w in self.terms}

    def coefficient(self, word):
        return self.terms.get(tuple(word), ZERO)

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda t: (len(t[0]), t[0]))

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for w, c in self.sorted_terms():
            cs = c.pretty()
            ws = self.algebra.word_str(w)
            if not w:
                parts.append(cs)
            elif cs == "1":
                parts.append(ws)
            elif cs == "-1":
                parts.append("-%s" % ws)
            else:
                parts.append("%s * %s" % (cs, ws))
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self):
        return "<%s>" % self


class TensorElement:
    """An element of the tensor square A (x) B of two free superalgebras,
    multiplied with the Koszul sign rule."""

    __slots__ = ("left", "right", "terms")

    def __init__(self, left, right, terms):
        self.left = left
        self.right = right
        self.terms = terms

    @staticmethod
    def of(a, b):
        """The pure tensor a (x) b of two elements (bilinear, no sign)."""
        terms = {}
        for w1, c1 in a.terms.items():
            for w2, c2 in b.terms.items():
                terms[(w1, w2)] = c1 * c2
        return TensorElement(a.algebra, b.algebra, terms)

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return (
            isinstance(other, TensorElement)
            and self.left is other.left
            and self.right is other.right
            and self.terms == other.terms
        )

    def __neg__(self):
        return TensorElement(self.left, self.right, {k: -c for k, c in self.terms.items()})

    def __add__(self, other):
        assert self.left is other.left and self.right is other.right
        terms = dict(self.terms)
        for k, c in other.terms.items():
            s = terms.get(k, ZERO) + c
            if s:
                terms[k] = s
            elif k in terms:
                del terms[k]
        return TensorElement(self.left, self.right, terms)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Laurent)):
            return self.scale(other)
        assert self.left is other.left and self.right is other.right
        terms = {}
        for (a, b), c1 in self.terms.items():
            pb = self.right.word_parity(b)
            for (cw, d), c2 in other.terms.items():
                sign = -1 if pb and self.left.word_parity(cw) else 1
                k = (a + cw, b + d)
                s = terms.get(k, ZERO) + sign * c1 * c2
                if s:
                    terms[k] = s
                elif k in terms:
                    del terms[k]
        return TensorElement(self.left, self.right, terms)

    def __rmul__(self, other):
        if isinstance(other, (int, Laurent)):
            return self.scale(other)
        return NotImplemented

    def scale(self, c):
        c = Laurent.of(c)
        if not c:
            return TensorElement(self.left, self.right, {})
        return TensorElement(self.left, self.right, {k: c * v for k, v in self.terms.items()})

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for (a, b), c in sorted(
            self.terms.items(), key=lambda t: (len(t[0][0]), len(t[0][1]), t[0])
        ):
            s = "%s (x) %s" % (self.left.word_str(a), self.right.word_str(b))
            cs = c.pretty()
            parts.append(s if cs == "1" else ("-%s" % s if cs == "-1" else "%s * %s" % (cs, s)))
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self):
        return "<%s>" % self


class Tensor3:
    """An element of a triple tensor product; addition/equality only
    (enough to state coassociativity)."""

    __slots__ = ("algebras", "terms")

    def __init__(self, algebras, terms):
        self.algebras = algebras
        self.terms = terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return isinstance(other, Tensor3) and self.terms == other.terms

    def __add__(self, other):
        terms = dict(self.terms)
        for k, c in other.terms.items():
            s = terms.get(k, ZERO) + c
            if s:
                terms[k] = s
            elif k in terms:
                del terms[k]
        return Tensor3(self.algebras, terms)

    def __sub__(self, other):
        return self + Tensor3(other.algebras, {k: -c for k, c in other.terms.items()})

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for (a, b, c), v in sorted(self.terms.items()):
            parts.append(
                "%s * %s (x) %s (x) %s"
                % (
                    v.pretty(),
                    self.algebras[0].word_str(a),
                    self.algebras[1].word_str(b),
                    self.algebras[2].word_str(c),
                )
            )
        return " + ".join(parts)
