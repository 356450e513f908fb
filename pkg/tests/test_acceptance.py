"""Acceptance gate: the twelve exact checks the engine must pass, one test
per criterion, each printing a single [PASS]/[FAIL] line.

Everything is exact arithmetic over the Laurent ring; there are no
tolerances anywhere.  Criterion 9 asserts normality certificates for all
three classical localization candidates in the parabolic quotient; the
engine finds exact q-commutation residuals for two of them, so that test
fails and its message records the residual witnesses."""

import random
import time

from qgrass.laurent import Laurent
from qgrass.manin import ManinAlgebra
from qgrass.grassmannian import QuantumGrassmannian
from qgrass.parabolic import (
    LocalizedParabolic,
    ParabolicCoordinates,
    ParabolicQuotient,
    normality_certificate,
)
from qgrass.bigcell import (
    BigCellEmbedding,
    bigcell_coaction_check,
    embed_bigcell,
    verify_bigcell_flatness,
)
from qgrass.classical import classical_dimension, verify_classical

_CACHE = {}


def _get(key, build):
    if key not in _CACHE:
        _CACHE[key] = build()
    return _CACHE[key]


def _mq(m, n):
    return _get(("mq", m, n), lambda: ManinAlgebra(m, n))


def _gr():
    return _get("gr", lambda: QuantumGrassmannian(_mq(4, 1)))


def _pq():
    return _get("pq", lambda: ParabolicQuotient())


def _emb():
    return _get(
        "emb",
        lambda: BigCellEmbedding(pc=ParabolicCoordinates(LocalizedParabolic(_pq()))),
    )


def _line(num, ok, detail=""):
    tag = "PASS" if ok else "FAIL"
    print("[%s] criterion %02d%s" % (tag, num, ": " + detail if detail else ""))
    return ok


def test_criterion_01_manin_confluence():
    t0 = time.perf_counter()
    divergences = {}
    for m, n in [(1, 1), (2, 1), (4, 1)]:
        divergences[(m, n)] = _mq(m, n).presentation.local_confluence(3)
    ok = not any(divergences.values())
    _line(1, ok, "overlap degree 3 for M(1|1), M(2|1), M(4|1)")
    assert time.perf_counter() - t0 < 60
    assert ok, "divergent overlaps: %s" % divergences


def test_criterion_02_flat_deformation():
    t0 = time.perf_counter()
    plans = {(1, 1): [1, 2, 3, 4], (2, 1): [1, 2, 3], (4, 1): [1, 2]}
    bad = []
    for (m, n), degrees in plans.items():
        mq = _mq(m, n)
        for d in degrees:
            got = mq.presentation.count_irreducible(d)
            want = classical_dimension(m * m + n * n, 2 * m * n, d)
            if got != want:
                bad.append(((m, n), d, got, want))
    pinned = _mq(1, 1).presentation.count_irreducible(2)
    ok = not bad and pinned == 8
    _line(2, ok, "graded dimensions constant in q; M(1|1) degree 2 = %d" % pinned)
    assert time.perf_counter() - t0 < 120
    assert ok, "dimension mismatches: %s" % bad


def test_criterion_03_minor_commutations():
    t0 = time.perf_counter()
    gr = _gr()
    rep = gr.verify_minor_commutations()
    mq = gr.mq
    d55 = gr.minors[(5, 5)]
    extra = all(
        not mq.nf(gr.minors[(i, 5)] * d55) and not mq.nf(d55 * gr.minors[(i, 5)])
        for i in range(1, 5)
    )
    ok = rep.ok and len(rep.items) == 74 and extra
    _line(3, ok, "%d ordered pair identities" % len(rep.items))
    assert time.perf_counter() - t0 < 120
    assert ok, [i.id for i in rep.failures]


def test_criterion_04_quantum_plucker():
    t0 = time.perf_counter()
    gr = _gr()
    rep = gr.verify_quantum_plucker()
    d55 = gr.minors[(5, 5)]
    ok = rep.ok and not gr.mq.nf(d55 * d55)
    _line(4, ok, "5 + 6 identities and D[5,5]^2 = 0")
    assert time.perf_counter() - t0 < 60
    assert ok, [i.id for i in rep.failures]


def test_criterion_05_coaction():
    t0 = time.perf_counter()
    rep = _gr().verify_coaction()
    ids = {i.id for i in rep.items}
    ok = rep.ok and "coaction:D[5,5]:membership" in ids
    _line(5, ok, "minor sums for 10 minors, membership for D[5,5]")
    assert time.perf_counter() - t0 < 300
    assert ok, [i.id for i in rep.failures]


def test_criterion_06_classical_limit():
    t0 = time.perf_counter()
    rep = _gr().verify_classical_limit()
    _line(6, rep.ok, "q=1 relations match the supercommutative oracle")
    assert time.perf_counter() - t0 < 30
    assert rep.ok, [i.id for i in rep.failures]


def test_criterion_07_standard_basis():
    t0 = time.perf_counter()
    gr = _gr()
    reps = [gr.verify_standard_basis(d) for d in (1, 2)]
    counts = [len(gr.enumerate_standard(d)) for d in (1, 2)]
    ok = all(r.ok for r in reps) and counts == [11, 46]
    _line(7, ok, "degree 1 rank %d, degree 2 rank %d" % tuple(counts))
    assert time.perf_counter() - t0 < 600
    assert ok, [i.id for r in reps for i in r.failures]


def test_criterion_08_parabolic_quotient():
    t0 = time.perf_counter()
    pq = _pq()
    r1 = pq.verify_ideal_closure()
    r2 = pq.verify_hopf_ideal()
    repass = [i for i in r2.items if i.id.startswith("hopf-ideal:poincare:")]
    ok = r1.ok and r2.ok and len(repass) == 2
    _line(8, ok, "ideal closure sweep, Hopf coideal, vanishing-locus re-pass")
    assert time.perf_counter() - t0 < 120
    assert ok, [i.id for r in (r1, r2) for i in r.failures]


def test_criterion_09_localization_certificates():
    t0 = time.perf_counter()
    gr = _gr()
    pres = gr.abstract
    claims = []
    cert, res = normality_certificate(pres, pres.algebra.gen(gr.gid[(1, 2)]))
    claims.append(("D[1,2] in the minor presentation", not res, res))
    pq = _pq()
    mq = pq.mq
    for name, elem in [
        ("g[5,5] in the quotient", mq.a(5, 5)),
        ("D[1,2] in the quotient", mq.quantum_minor((1, 2))),
        ("D[3,4|3,4] in the quotient", mq.quantum_minor((3, 4), cols=(3, 4))),
    ]:
        cert, res = normality_certificate(pq.presentation, elem)
        claims.append((name, not res, res))
    m20 = ManinAlgebra(2, 0)
    cert, res = normality_certificate(m20.presentation, m20.a(1, 1))
    claims.append(("a[1,1] rejected in M(2|0)", bool(res), {}))
    ok = all(flag for _, flag, _ in claims)
    detail = "; ".join(
        "%s: %s" % (c, "ok" if f else "NO") for c, f, _ in claims
    )
    _line(9, ok, detail)
    assert time.perf_counter() - t0 < 60
    witnesses = {
        c: {mq.algebra.gens[g].name: str(r) for g, r in res.items()}
        for c, f, res in claims
        if not f
    }
    assert ok, (
        "normality fails with exact residual witnesses (each proportional "
        "to q^-1 - q, vanishing classically): %s" % witnesses
    )


def test_criterion_10_bigcell_flatness_and_embedding():
    t0 = time.perf_counter()
    emb = _emb()
    r1 = verify_bigcell_flatness(emb.bc, degree=3)
    r2 = embed_bigcell(emb, samples=3, rng=random.Random(2))
    pinned = emb.bc.presentation.count_irreducible(2)
    ok = r1.ok and r2.ok and pinned == 19
    _line(10, ok, "flat through degree 3 (degree 2 = %d), relations embed" % pinned)
    assert time.perf_counter() - t0 < 300
    assert ok, [i.id for r in (r1, r2) for i in r.failures]


def test_criterion_11_bigcell_coaction():
    t0 = time.perf_counter()
    rep = bigcell_coaction_check(_emb(), samples=20, rng=random.Random(7))
    ids = {i.id for i in rep.items}
    ok = (
        rep.ok
        and sum(1 for i in ids if i.startswith("coaction:counit:")) == 6
        and sum(1 for i in ids if i.startswith("coaction:relation:")) == 17
        and "coaction:classical-duality" in ids
        and "coaction:x-inverse:two-sided" in ids
    )
    _line(11, ok, "counit law, relations respected, 20-point q=1 duality")
    assert time.perf_counter() - t0 < 600
    assert ok, [i.id for i in rep.failures]


def test_criterion_12_classical_oracle():
    t0 = time.perf_counter()
    rep = verify_classical(random.Random(3), samples=20)
    _line(12, rep.ok, "decomposability, action axioms, sign reconciliation")
    assert time.perf_counter() - t0 < 60
    assert rep.ok, [i.id for i in rep.failures]
