"""The big cell: presentation, flatness, the embedding into the localized
parabolic quotient, and the induced coaction."""

import random

from qgrass.laurent import Laurent
from qgrass.bigcell import (
    BigCell,
    BigCellEmbedding,
    bigcell_coaction_check,
    embed_bigcell,
    verify_bigcell_flatness,
)
from qgrass.classical import classical_dimension


def test_presentation_shape():
    bc = BigCell()
    assert len(bc.presentation.rules) == 17
    names = [g.name for g in bc.algebra.gens]
    assert names == ["t[3,1]", "t[3,2]", "t[4,1]", "t[4,2]", "tau[1]", "tau[2]"]
    assert [g.parity for g in bc.algebra.gens] == [0, 0, 0, 0, 1, 1]
    assert not bc.presentation.local_confluence(3)


def test_normal_forms():
    bc = BigCell()
    t, tau = bc.t, bc.tau
    q = Laurent.q(1)
    qi = Laurent.q(-1)
    lam = qi - q
    # row, column, diagonal, antidiagonal
    assert bc.nf(t(3, 2) * t(3, 1)) == t(3, 1) * t(3, 2) * qi
    assert bc.nf(t(4, 1) * t(3, 1)) == t(3, 1) * t(4, 1) * q
    assert bc.nf(t(4, 2) * t(3, 1)) == t(3, 1) * t(4, 2)
    assert bc.nf(t(4, 1) * t(3, 2)) == bc.nf(t(3, 2) * t(4, 1) - t(3, 1) * t(4, 2) * lam)
    # odd sector
    assert bc.nf(tau(2) * tau(1)) == tau(1) * tau(2) * (-q)
    assert not bc.nf(tau(1) * tau(1))
    assert not bc.nf(tau(2) * tau(2))
    # mixed: same column twists, opposite column straightens
    assert bc.nf(tau(1) * t(3, 1)) == t(3, 1) * tau(1) * q
    assert bc.nf(tau(2) * t(3, 1)) == t(3, 1) * tau(2)


def test_flatness_counts():
    bc = BigCell()
    for d in (1, 2, 3, 4):
        got = bc.presentation.count_irreducible(d)
        assert got == classical_dimension(4, 2, d)
    assert [bc.presentation.count_irreducible(d) for d in (1, 2, 3)] == [6, 19, 44]


def test_flatness_suite():
    rep = verify_bigcell_flatness(degree=3)
    assert rep.ok
    ids = {i.id for i in rep.items}
    assert "bigcell:confluent" in ids
    assert "bigcell:q1:supercommutative" in ids


def test_embedding_suite():
    rep = embed_bigcell(samples=3, rng=random.Random(2))
    assert rep.ok
    by_id = {i.id: i for i in rep.items}
    assert "26 standard monomials" in by_id["embed:injective:degree<=2"].lhs
    assert sum(1 for i in rep.items if i.id.startswith("embed:relation:")) == 17


def test_embedding_respects_relations_directly():
    emb = BigCellEmbedding()
    bc = emb.bc
    x = bc.t(3, 2) * bc.t(3, 1) - bc.t(3, 1) * bc.t(3, 2) * Laurent.q(-1)
    assert not emb.image(x)
    y = bc.tau(1) * bc.tau(2) + bc.tau(2) * bc.tau(1) * Laurent.q(-1)
    assert not emb.image(y)


def test_coaction_suite_with_coassociativity():
    emb = BigCellEmbedding()
    rep = bigcell_coaction_check(emb, samples=5, rng=random.Random(4), extended=True)
    assert rep.ok
    assert rep.summary["skipped"] == 0
    ids = {i.id for i in rep.items}
    assert "coaction:x-inverse:two-sided" in ids
    assert "coaction:classical-duality" in ids
    assert sum(1 for i in ids if i.startswith("coaction:coassociative:")) == 6


def test_coaction_reconstruction_covers_degree_one_monomials():
    emb = BigCellEmbedding()
    for gid in range(6):
        pairs, leftover = emb.reconstruct(gid)
        assert not leftover
        assert len(pairs) == 7
        assert [w for w, _ in pairs] == [(), (0,), (1,), (2,), (3,), (4,), (5,)]
        f = emb.formula(gid)
        assert f.startswith("Delta(%s) =" % emb.bc.algebra.gens[gid].name)
