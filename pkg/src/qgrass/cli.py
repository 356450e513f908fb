"""Command-line driver: builds the algebras, runs verification suites,
prints normal forms and bases, and emits text or JSON reports.

Suites run in dependency order (matrix superalgebra, Grassmannian,
parabolic quotient, big cell, classical oracle); the exit status is 0
exactly when no emitted item failed.
"""

import argparse
import json
import random
import re
import sys
import threading
import traceback
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction

from .laurent import Laurent, ONE, laurent_divexact
from .manin import ManinAlgebra
from .report import VerificationReport, render_item
from .grassmannian import QuantumGrassmannian
from .parabolic import (
    LocalizedParabolic,
    ParabolicCoordinates,
    ParabolicQuotient,
    verify_coordinates,
    verify_localization,
)
from .bigcell import (
    BigCell,
    BigCellEmbedding,
    bigcell_coaction_check,
    embed_bigcell,
    verify_bigcell_flatness,
)
from .classical import (
    verify_action_axioms,
    verify_decomposability,
    verify_klein_reconciliation,
)


class Context:
    """Lazily built shared algebras, safe to reuse across suites."""

    def __init__(self):
        self._cache = {}
        # reentrant: building one algebra may recursively request another
        self._lock = threading.RLock()

    def _get(self, key, build):
        with self._lock:
            if key not in self._cache:
                self._cache[key] = build()
            return self._cache[key]

    def manin(self, m, n):
        return self._get(("mq", m, n), lambda: ManinAlgebra(m, n))

    @property
    def gr(self):
        return self._get("gr", lambda: QuantumGrassmannian(self.manin(4, 1)))

    @property
    def pq(self):
        return self._get("pq", ParabolicQuotient)

    @property
    def lp(self):
        return self._get("lp", lambda: LocalizedParabolic(self.pq))

    @property
    def pc(self):
        return self._get("pc", lambda: ParabolicCoordinates(self.lp))

    @property
    def bc(self):
        return self._get("bc", BigCell)

    @property
    def emb(self):
        return self._get("emb", lambda: BigCellEmbedding(self.bc, self.pc))


# -- verification suites ---------------------------------------------------------------


def _suite_manin(ctx, args, rep):
    if args.m is None:
        plans = [(1, 1, 4), (2, 1, 3), (4, 1, 2)]
    else:
        n = 1 if args.n is None else args.n
        dmax = args.degree or max(1, 4 - (args.m + n - 2))
        plans = [(args.m, n, dmax)]
    for m, n, dmax in plans:
        mq = ctx.manin(m, n)
        mq.verify_confluence(3, rep)
        mq.verify_flatness(range(1, dmax + 1), rep)


def _suite_minors(ctx, args, rep):
    # verify_minor_commutations already runs the generator checks
    ctx.gr.verify_minor_commutations(rep)


def _suite_plucker(ctx, args, rep):
    ctx.gr.verify_quantum_plucker(rep)


def _suite_coaction(ctx, args, rep):
    ctx.gr.verify_coaction(rep)


def _suite_basis(ctx, args, rep):
    if args.degree:
        degrees = range(1, args.degree + 1)
    else:
        degrees = range(1, 4 if args.extended else 3)
    for d in degrees:
        ctx.gr.verify_standard_basis(d, rep)


def _suite_classical_limit(ctx, args, rep):
    ctx.gr.verify_classical_limit(rep)


def _suite_parabolic_ideal(ctx, args, rep):
    ctx.pq.verify_ideal_closure(rep)


def _suite_hopf_ideal(ctx, args, rep):
    ctx.pq.verify_hopf_ideal(rep)


def _suite_coords(ctx, args, rep):
    verify_localization(ctx.lp, ctx.gr, rep)
    verify_coordinates(ctx.pc, rep)


def _suite_bigcell_flatness(ctx, args, rep):
    verify_bigcell_flatness(ctx.bc, args.degree or 3, rep)


def _suite_bigcell_embed(ctx, args, rep):
    embed_bigcell(ctx.emb, rep, rng=random.Random(args.seed))


def _suite_bigcell_coaction(ctx, args, rep):
    bigcell_coaction_check(
        ctx.emb,
        rep,
        samples=args.samples,
        rng=random.Random(args.seed),
        extended=args.extended,
    )


def _suite_classical(ctx, args, rep):
    verify_decomposability(rep)
    verify_klein_reconciliation(rep)
    verify_action_axioms(random.Random(args.seed), args.samples, rep)


SUITES = {
    "manin": _suite_manin,
    "minors": _suite_minors,
    "plucker": _suite_plucker,
    "coaction": _suite_coaction,
    "basis": _suite_basis,
    "classical-limit": _suite_classical_limit,
    "parabolic-ideal": _suite_parabolic_ideal,
    "hopf-ideal": _suite_hopf_ideal,
    "coords": _suite_coords,
    "bigcell-flatness": _suite_bigcell_flatness,
    "bigcell-embed": _suite_bigcell_embed,
    "bigcell-coaction": _suite_bigcell_coaction,
    "classical": _suite_classical,
}


def _precheck(qvalues, rep):
    """Specialize the exact coefficient arithmetic at the given rational
    q values and confirm evaluation is a ring homomorphism there, before
    any symbolic suite trusts it."""
    samples = [
        Laurent.q(-1) - Laurent.q(1),
        Laurent.q(1) + Laurent.q(-1),
        Laurent.q(2) + ONE + Laurent.q(-2),
        Laurent.q(3) - Laurent.q(-3),
        ONE + ONE,
    ]
    for q0 in qvalues:
        rep.start()
        bad = []
        for a in samples:
            for b in samples:
                if (a * b).eval(q0) != a.eval(q0) * b.eval(q0):
                    bad.append("product %s, %s" % (a, b))
                if (a + b).eval(q0) != a.eval(q0) + b.eval(q0):
                    bad.append("sum %s, %s" % (a, b))
                if (a - b).eval(q0) != a.eval(q0) - b.eval(q0):
                    bad.append("difference %s, %s" % (a, b))
                if laurent_divexact(a * b, a) != b:
                    bad.append("divexact %s, %s" % (a, b))
        for k in (-2, 0, 3):
            for s in (1, -1):
                u = Laurent({k: s})
                if u.eval(q0) * u.unit_inverse().eval(q0) != 1:
                    bad.append("unit q^%d" % k)
        rep.check(
            "precheck:laurent:q=%s" % q0,
            not bad,
            lhs="evaluation at q=%s" % q0,
            rhs="ring homomorphism on sample coefficients",
            residual="; ".join(bad[:4]),
        )


class _StreamingReport(VerificationReport):
    """Prints each item as it is recorded, for long sequential runs."""

    def check(self, *args, **kwargs):
        ok = super().check(*args, **kwargs)
        print(render_item(self.items[-1]), flush=True)
        return ok

    def skip(self, *args, **kwargs):
        super().skip(*args, **kwargs)
        print(render_item(self.items[-1]), flush=True)


def _run_one(name, ctx, args, streaming):
    rep = _StreamingReport(name) if streaming else VerificationReport(name)
    if streaming:
        print("suite %s" % name, flush=True)
    try:
        if name == "precheck":
            _precheck(args.q, rep)
        else:
            SUITES[name](ctx, args, rep)
    except Exception:
        tb = " | ".join(traceback.format_exc().strip().splitlines()[-3:])
        rep.check("crash:%s" % name, False, lhs="suite raised", residual=tb)
        if streaming:
            print(render_item(rep.items[-1]), flush=True)
    if streaming:
        s = rep.summary
        print(
            "  %d pass, %d fail, %d skipped"
            % (s["pass"], s["fail"], s["skipped"]),
            flush=True,
        )
    return rep


def _cmd_verify(args):
    names = list(SUITES) if args.suite == "all" else [args.suite]
    if args.q:
        names.insert(0, "precheck")
    ctx = Context()
    streaming = args.format == "text" and args.jobs <= 1 and not args.quiet
    if args.jobs > 1 and len(names) > 1:
        with ThreadPoolExecutor(max_workers=args.jobs) as pool:
            reports = list(
                pool.map(lambda nm: _run_one(nm, ctx, args, False), names)
            )
    else:
        reports = [_run_one(nm, ctx, args, streaming) for nm in names]
    if args.format == "json":
        docs = [r.to_dict() for r in reports]
        print(json.dumps(docs[0] if len(docs) == 1 else docs, indent=1))
    elif not streaming:
        for r in reports:
            print(r.render_text())
    total = {"pass": 0, "fail": 0, "skipped": 0}
    for r in reports:
        for k, v in r.summary.items():
            total[k] += v
    if args.format == "text":
        print(
            "total: %d pass, %d fail, %d skipped"
            % (total["pass"], total["fail"], total["skipped"])
        )
    return 0 if total["fail"] == 0 else 1


# -- expression parsing ------------------------------------------------------------------


class ParseError(Exception):
    pass


_TOKEN = re.compile(r"\s*(?:(?P<name>[A-Za-z]+)|(?P<num>\d+)|(?P<sym>[-+*()\[\],^]))")


def _tokenize(text):
    out, pos = [], 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            stripped = text[pos:].lstrip()
            if not stripped:
                break
            raise ParseError(
                "parse error at position %d: unexpected %r"
                % (pos + 1, stripped[0])
            )
        if m.lastgroup == "num":
            out.append(("num", int(m.group("num")), pos))
        elif m.lastgroup == "name":
            out.append(("name", m.group("name"), pos))
        else:
            out.append(("sym", m.group("sym"), pos))
        pos = m.end()
    return out


class _Parser:
    """Recursive descent over `+ - *`, parentheses, integer and q^k
    scalars, and bracket-indexed generators."""

    def __init__(self, text, algebra, resolve):
        self.text = text
        self.toks = _tokenize(text)
        self.i = 0
        self.algebra = algebra
        self.resolve = resolve

    def _peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else ("end", "", len(self.text))

    def _next(self):
        tok = self._peek()
        self.i += 1
        return tok

    def _expect(self, value):
        kind, val, pos = self._next()
        if val != value:
            raise ParseError(
                "parse error at position %d: expected %r, found %r"
                % (pos + 1, value, val if kind != "end" else "end of input")
            )

    def parse(self):
        out = self._expr()
        kind, val, pos = self._peek()
        if kind != "end":
            raise ParseError(
                "parse error at position %d: unexpected %r" % (pos + 1, val)
            )
        return out

    def _expr(self):
        out = self._term()
        while self._peek()[1] in ("+", "-"):
            op = self._next()[1]
            rhs = self._term()
            out = out + rhs if op == "+" else out - rhs
        return out

    def _term(self):
        out = self._factor()
        while self._peek()[1] == "*":
            self._next()
            out = out * self._factor()
        return out

    def _factor(self):
        if self._peek()[1] == "-":
            self._next()
            return -self._factor()
        return self._atom()

    def _atom(self):
        kind, val, pos = self._next()
        if val == "(":
            out = self._expr()
            self._expect(")")
            return out
        if kind == "num":
            return self.algebra.scalar(Laurent({0: val}))
        if kind == "name" and val == "q":
            k = 1
            if self._peek()[1] == "^":
                self._next()
                sign = 1
                if self._peek()[1] == "-":
                    self._next()
                    sign = -1
                kkind, kval, kpos = self._next()
                if kkind != "num":
                    raise ParseError(
                        "parse error at position %d: expected integer exponent"
                        % (kpos + 1)
                    )
                k = sign * kval
            return self.algebra.scalar(Laurent.q(k))
        if kind == "name":
            self._expect("[")
            idx = [self._index()]
            while self._peek()[1] == ",":
                self._next()
                idx.append(self._index())
            self._expect("]")
            gid = self.resolve(val, tuple(idx))
            if gid is None:
                raise ParseError(
                    "unknown generator %s[%s] at position %d"
                    % (val, ",".join(map(str, idx)), pos + 1)
                )
            return self.algebra.gen(gid)
        raise ParseError(
            "parse error at position %d: unexpected %r"
            % (pos + 1, val if kind != "end" else "end of input")
        )

    def _index(self):
        kind, val, pos = self._next()
        if kind != "num":
            raise ParseError(
                "parse error at position %d: expected index" % (pos + 1)
            )
        return val


def parse_expression(algebra, resolve, text):
    """Parse an expression in the generator grammar into an element of the
    given free superalgebra; resolve(name, indices) supplies the gid."""
    return _Parser(text, algebra, resolve).parse()


def _algebra_for(args, ctx):
    """The (algebra, resolver, normal form) triple for a named algebra."""
    name = args.algebra
    if name == "mq":
        m = 4 if args.m is None else args.m
        n = 1 if args.n is None else args.n
        mq = ctx.manin(m, n)

        def resolve(nm, idx):
            if nm != "a" or len(idx) != 2:
                return None
            i, j = idx
            if not (1 <= i <= m + n and 1 <= j <= m + n):
                return None
            return mq.gid(i, j)

        return mq.algebra, resolve, mq.nf
    if name == "gr":
        gr = ctx.gr

        def resolve(nm, idx):
            if nm != "D" or len(idx) != 2:
                return None
            return gr.gid.get(tuple(idx))

        return gr.abstract.algebra, resolve, gr.abstract.normal_form
    if name == "parabolic":
        pq = ctx.pq
        mq = pq.mq

        def resolve(nm, idx):
            if nm not in ("g", "gamma") or len(idx) != 2:
                return None
            i, j = idx
            if not (1 <= i <= 5 and 1 <= j <= 5):
                return None
            odd = (i == 5) != (j == 5)
            if odd != (nm == "gamma"):
                return None
            return mq.gid(i, j)

        return mq.algebra, resolve, pq.nf
    if name == "bigcell":
        bc = ctx.bc

        def resolve(nm, idx):
            if nm == "t" and len(idx) == 2 and idx[0] in (3, 4) and idx[1] in (1, 2):
                return bc.gid(*idx)
            if nm == "tau" and len(idx) == 2 and idx == (5, idx[1]) and idx[1] in (1, 2):
                return bc.gid(5, idx[1])
            if nm == "tau" and len(idx) == 1 and idx[0] in (1, 2):
                return bc.gid(5, idx[0])
            return None

        return bc.algebra, resolve, bc.nf
    raise ParseError("unknown algebra %r" % name)


def _specialize(elem, q0):
    """Render an element with its coefficients evaluated at a rational q."""
    bits = []
    for word in sorted(elem.terms, key=lambda w: (len(w), w)):
        c = elem.terms[word].eval(q0)
        if not c:
            continue
        mono = elem.algebra.word_str(word) if word else "1"
        bits.append("%s * %s" % (c, mono))
    return "  +  ".join(bits) if bits else "0"


def _cmd_normal_form(args):
    ctx = Context()
    algebra, resolve, nf = _algebra_for(args, ctx)
    expr = _Parser(args.expr, algebra, resolve).parse()
    out = nf(expr)
    print(out)
    for q0 in args.q or ():
        print("q=%s: %s" % (q0, _specialize(out, q0)))
    return 0


def _cmd_hilbert(args):
    ctx = Context()
    if args.algebra == "mq":
        m = 4 if args.m is None else args.m
        n = 1 if args.n is None else args.n
        pres = ctx.manin(m, n).presentation
    elif args.algebra == "gr":
        pres = ctx.gr.abstract
    elif args.algebra == "parabolic":
        pres = ctx.pq.presentation
    else:
        pres = ctx.bc.presentation
    print(pres.count_irreducible(args.degree))
    return 0


def _cmd_basis(args):
    ctx = Context()
    if args.algebra == "gr":
        for rows in ctx.gr.enumerate_standard(args.degree):
            print(" ".join("D[%d,%d]" % lab for lab in rows) or "1")
        return 0
    algebra, _, _ = _algebra_for(args, ctx)
    if args.algebra == "mq":
        m = 4 if args.m is None else args.m
        n = 1 if args.n is None else args.n
        pres = ctx.manin(m, n).presentation
    elif args.algebra == "parabolic":
        pres = ctx.pq.presentation
    else:
        pres = ctx.bc.presentation
    for word in sorted(pres.irreducible_words(args.degree)):
        print(algebra.word_str(word) or "1")
    return 0


def _cmd_report(args):
    with open(args.file) as fh:
        data = json.load(fh)
    docs = data if isinstance(data, list) else [data]
    ok = True
    for doc in docs:
        rep = VerificationReport.from_dict(doc)
        print(rep.render_text())
        ok = ok and rep.ok
    return 0 if ok else 1


# -- argument handling -------------------------------------------------------------------


def _q_value(text):
    try:
        v = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError("not a rational: %r" % text)
    if v == 0:
        raise argparse.ArgumentTypeError("q specialization must be nonzero")
    return v


def _positive(text):
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return v


def build_parser():
    ap = argparse.ArgumentParser(
        prog="qgrass",
        description="Exact verification engine for the quantum super "
        "Grassmannian, its parabolic quotient, and the big cell.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument(
        "--suite", default="all", choices=["all"] + list(SUITES), metavar="SUITE",
        help="one of: all, %s" % ", ".join(SUITES),
    )
    v.add_argument("--m", type=_positive, default=None, help="even block size")
    v.add_argument("--n", type=int, default=None, help="odd block size")
    v.add_argument("--degree", type=_positive, default=None, help="degree bound")
    v.add_argument(
        "--q", type=_q_value, action="append", default=[],
        help="nonzero rational q for arithmetic pre-checks (repeatable)",
    )
    v.add_argument("--format", choices=["text", "json"], default="text")
    v.add_argument("--jobs", type=_positive, default=1, help="concurrent suites")
    v.add_argument(
        "--extended", action="store_true",
        help="enable the expensive checks (degree-3 basis, coassociativity)",
    )
    v.add_argument("--samples", type=_positive, default=20, help="sampled points")
    v.add_argument("--seed", type=int, default=7, help="sampling seed")
    v.add_argument("--quiet", action="store_true", help="no per-item streaming")
    v.set_defaults(func=_cmd_verify)

    for name, helptext in (
        ("normal-form", "print the normal form of an expression"),
        ("hilbert", "count irreducible monomials at a degree"),
        ("basis", "list the standard monomials at a degree"),
    ):
        p = sub.add_parser(name, help=helptext)
        p.add_argument(
            "--algebra", default="mq", choices=["mq", "gr", "parabolic", "bigcell"]
        )
        p.add_argument("--m", type=_positive, default=None)
        p.add_argument("--n", type=int, default=None)
        if name == "normal-form":
            p.add_argument("expr", help="e.g. 'a[1,2]*a[1,1]' or 'D[1,5]*D[5,5]'")
            p.add_argument("--q", type=_q_value, action="append", default=[])
            p.set_defaults(func=_cmd_normal_form)
        elif name == "hilbert":
            p.add_argument("--degree", type=_positive, required=True)
            p.set_defaults(func=_cmd_hilbert)
        else:
            p.add_argument("--degree", type=_positive, required=True)
            p.set_defaults(func=_cmd_basis)

    r = sub.add_parser("report", help="re-render a JSON report")
    r.add_argument("file")
    r.set_defaults(func=_cmd_report)
    return ap


def main(argv=None):
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
