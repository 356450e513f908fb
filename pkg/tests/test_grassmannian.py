"""The quantum super Grassmannian: generators, commutation identities,
Pluecker relations, coaction, and the semistandard basis."""

import pytest

from qgrass.laurent import Laurent
from qgrass.manin import ManinAlgebra
from qgrass.grassmannian import QuantumGrassmannian, is_semistandard
from qgrass.classical import classical_dimension


def build():
    return QuantumGrassmannian(ManinAlgebra(4, 1))


def test_generator_labels_and_parities():
    gr = build()
    assert len(gr.labels) == 11
    assert gr.labels == [
        (1, 2), (1, 3), (1, 4), (1, 5), (2, 3), (2, 4),
        (2, 5), (3, 4), (3, 5), (4, 5), (5, 5),
    ]
    parities = {l: gr.abstract.algebra.parities[gr.gid[l]] for l in gr.labels}
    assert all(parities[l] == (1 if l[1] == 5 and l[0] < 5 else 0) for l in gr.labels)
    rep = gr.verify_generators()
    assert rep.ok and len(rep.items) == 3


def test_minor_commutations_hold_in_the_ambient_algebra():
    rep = build().verify_minor_commutations()
    assert rep.ok
    assert len(rep.items) == 74


def test_quantum_plucker_relations():
    gr = build()
    rep = gr.verify_quantum_plucker()
    assert rep.ok
    assert len(rep.items) == 13
    ids = {i.id for i in rep.items}
    assert "plucker:even" in ids
    assert {"plucker:odd:123", "plucker:odd:124", "plucker:odd:134",
            "plucker:odd:234"} <= ids


def test_coaction_restricts_to_minors():
    rep = build().verify_coaction()
    assert rep.ok
    assert len(rep.items) == 22
    ids = {i.id for i in rep.items}
    assert "coaction:minors-independent" in ids
    assert "coaction:D[1,2]" in ids and "coaction:D[1,2]:membership" in ids


def test_classical_limit():
    rep = build().verify_classical_limit()
    assert rep.ok and len(rep.items) == 4


def test_standard_monomials_are_a_basis_in_low_degree():
    gr = build()
    for degree, want in [(1, 11), (2, 46)]:
        rep = gr.verify_standard_basis(degree)
        assert rep.ok
        by_id = {i.id: i for i in rep.items}
        item = by_id["basis:deg%d:irreducible-words" % degree]
        assert item.lhs.endswith(str(want)) and item.rhs.endswith(str(want))
        assert by_id["basis:deg%d:independent" % degree].rhs == str(want)


def test_enumerate_standard_counts_match_classical_rank():
    gr = build()
    for d in range(4):
        tabs = gr.enumerate_standard(d)
        # the Pluecker quadrics cut the free count down to the q=1 rank
        assert len(tabs) == gr.classical_rank(d) <= classical_dimension(7, 4, d)
        assert all(is_semistandard(t) for t in tabs)
        assert len(set(tabs)) == len(tabs)
    assert [len(gr.enumerate_standard(d)) for d in range(4)] == [1, 11, 46, 130]


def test_semistandard_condition():
    assert is_semistandard([])
    assert is_semistandard([(1, 2), (1, 3)])
    assert is_semistandard([(1, 2), (1, 2)])
    assert not is_semistandard([(1, 3), (1, 2)])
    assert not is_semistandard([(2, 3), (1, 4)])
    # a column may not repeat the odd index
    assert not is_semistandard([(5, 5), (5, 5)])
    assert not is_semistandard([(1, 5), (2, 5)])
    assert is_semistandard([(1, 5), (5, 5)]) is False
    assert is_semistandard([(1, 4), (5, 5)])


def test_odd_minor_squares_vanish():
    gr = build()
    mq = gr.mq
    for i in range(1, 5):
        sq = mq.nf(gr.minors[(i, 5)] * gr.minors[(i, 5)])
        assert not sq
    d55 = gr.minors[(5, 5)]
    assert not mq.nf(d55 * d55)


def test_top_row_products_against_odd_pair_identity():
    # D[i,5] D[j,5] = q D[i,j] D[5,5] for i < j, inside M_q(4|1)
    gr = build()
    mq = gr.mq
    for i in range(1, 5):
        for j in range(i + 1, 5):
            lhs = mq.nf(gr.minors[(i, 5)] * gr.minors[(j, 5)])
            rhs = mq.nf(gr.minors[(i, j)] * gr.minors[(5, 5)] * Laurent.q(1))
            assert lhs == rhs
