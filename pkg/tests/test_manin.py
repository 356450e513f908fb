"""Quantum matrix superalgebras: relations, flatness, bialgebra structure,
and quantum minors."""

import random

import pytest

from qgrass.laurent import Laurent
from qgrass.manin import ManinAlgebra
from qgrass.rewrite import tensor_normal_form
from qgrass.classical import classical_dimension


def test_relation_normal_forms():
    mq = ManinAlgebra(2, 1)
    a = mq.a
    q = Laurent.q(1)
    lam = Laurent.q(1) - Laurent.q(-1)
    assert mq.nf(a(1, 2) * a(1, 1)) == a(1, 1) * a(1, 2) * q
    assert mq.nf(a(2, 1) * a(1, 1)) == a(1, 1) * a(2, 1) * q
    # antidiagonal pair commutes, diagonal pair picks up lambda
    assert mq.nf(a(2, 1) * a(1, 2)) == a(1, 2) * a(2, 1)
    assert mq.nf(a(2, 2) * a(1, 1)) == mq.nf(
        a(1, 1) * a(2, 2) + a(1, 2) * a(2, 1) * lam
    )


def test_odd_generators_square_to_zero():
    mq = ManinAlgebra(1, 1)
    a = mq.a
    assert mq.parity(1, 2) == 1 and mq.parity(2, 1) == 1
    assert not mq.nf(a(1, 2) * a(1, 2))
    assert mq.nf(a(2, 1) * a(1, 2)) == -(a(1, 2) * a(2, 1))


def test_flatness_counts_match_super_polynomial_dimensions():
    frozen = {
        (1, 1): [4, 8, 12, 16],
        (2, 1): [9, 41, 129],
        (4, 1): [25, 317],
    }
    for (m, n), counts in frozen.items():
        mq = ManinAlgebra(m, n)
        n_even = m * m + n * n
        n_odd = 2 * m * n
        for d, want in enumerate(counts, start=1):
            got = mq.presentation.count_irreducible(d)
            assert got == want == classical_dimension(n_even, n_odd, d)


def test_verification_suites_pass():
    for m, n in [(1, 1), (2, 1)]:
        mq = ManinAlgebra(m, n)
        assert mq.verify_confluence(max_degree=3).ok
        assert mq.verify_flatness([1, 2]).ok
        assert mq.verify_bialgebra().ok


def test_counit_inverts_comultiplication():
    mq = ManinAlgebra(2, 1)
    rng = random.Random(11)
    gens = [mq.a(i, j) for i in (1, 2, 3) for j in (1, 2, 3)]
    for _ in range(10):
        x = mq.nf(rng.choice(gens) * rng.choice(gens))
        t = mq.comultiply(x)
        assert mq.counit_slot1(t) == x
        assert mq.counit_slot2(t) == x


def test_comultiplication_is_an_algebra_map_on_samples():
    mq = ManinAlgebra(1, 1)
    rng = random.Random(23)
    gens = [mq.a(i, j) for i in (1, 2) for j in (1, 2)]
    for _ in range(10):
        x, y = rng.choice(gens), rng.choice(gens)
        lhs = mq.comultiply(mq.nf(x * y))
        p = mq.presentation
        rhs = tensor_normal_form(mq.comultiply(x) * mq.comultiply(y), p, p)
        assert lhs == rhs


def test_quantum_minor_is_column_ordered():
    mq = ManinAlgebra(2, 1)
    a = mq.a
    want = a(1, 1) * a(2, 2) - a(1, 2) * a(2, 1) * Laurent.q(-1)
    assert mq.quantum_minor((1, 2)) == mq.nf(want)
    assert mq.quantum_minor((1, 2)) == mq.block_determinant("upper")
    # repeated odd row degenerates to a product; even rows cannot repeat
    assert mq.quantum_minor((3, 3)) == a(3, 1) * a(3, 2)
    with pytest.raises(AssertionError):
        mq.quantum_minor((1, 1))


def test_block_determinant_of_odd_block():
    mq = ManinAlgebra(2, 1)
    assert mq.block_determinant("lower") == mq.a(3, 3)
    m11 = ManinAlgebra(1, 1)
    assert m11.block_determinant("lower") == m11.a(2, 2)
