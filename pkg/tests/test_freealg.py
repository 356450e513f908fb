"""Free graded algebra words, elements, and tensor squares/cubes."""

import pytest

from qgrass.laurent import Laurent, ONE
from qgrass.freealg import (
    Element,
    FreeSuperalgebra,
    Generator,
    Tensor3,
    TensorElement,
)


def sample_algebra():
    # two even, two odd generators
    return FreeSuperalgebra(
        [
            Generator(0, "x", 0, 0),
            Generator(1, "y", 0, 1),
            Generator(2, "xi", 1, 2),
            Generator(3, "eta", 1, 3),
        ]
    )


def test_generator_validation():
    with pytest.raises(AssertionError):
        Generator(0, "x", 2, 0)
    with pytest.raises(AssertionError):
        FreeSuperalgebra([Generator(1, "x", 0, 0)])


def test_word_parity_and_str():
    alg = sample_algebra()
    assert alg.word_parity((0, 1)) == 0
    assert alg.word_parity((2,)) == 1
    assert alg.word_parity((2, 3)) == 0
    assert alg.word_str((0, 2, 1)) == "x xi y".replace(" ", "")
    assert len(alg) == 4


def test_element_arithmetic_is_free():
    alg = sample_algebra()
    x, y = alg.gen(0), alg.gen(1)
    # products concatenate words; nothing is reordered
    assert (x * y).terms == {(0, 1): ONE}
    assert (y * x).terms == {(1, 0): ONE}
    assert x * y != y * x
    two_xy = x * y + x * y
    assert two_xy.terms == {(0, 1): Laurent({0: 2})}
    assert (two_xy - x * y * 2) == alg.zero()
    assert x * 3 == x.scale(Laurent({0: 3}))
    assert Laurent.q(2) * x == x.scale(Laurent.q(2))
    assert (x + y) * (x - y) == x * x - x * y + y * x - y * y


def test_element_parity():
    alg = sample_algebra()
    assert alg.gen(0).parity() == 0
    assert alg.gen(2).parity() == 1
    assert (alg.gen(2) * alg.gen(3)).parity() == 0
    mixed = alg.gen(0) + alg.gen(2)
    assert mixed.parity() is None


def test_tensor_koszul_sign():
    alg = sample_algebra()
    one = alg.one()
    xi, eta, x = alg.gen(2), alg.gen(3), alg.gen(0)
    # (1 (x) xi)(eta (x) 1) = -(eta (x) xi): odd passes odd
    lhs = TensorElement.of(one, xi) * TensorElement.of(eta, one)
    assert lhs == TensorElement.of(eta, xi).scale(Laurent({0: -1}))
    # even slot-2 entry crosses freely
    lhs = TensorElement.of(one, x) * TensorElement.of(eta, one)
    assert lhs == TensorElement.of(eta, x)
    # sign composes multiplicatively
    sq = TensorElement.of(one, xi) * TensorElement.of(xi, xi)
    assert sq == TensorElement.of(xi, xi * xi).scale(Laurent({0: -1}))


def test_tensor_addition_groups_terms():
    alg = sample_algebra()
    x, y = alg.gen(0), alg.gen(1)
    t = TensorElement.of(x, y) + TensorElement.of(x, y)
    assert t.terms == {((0,), (1,)): Laurent({0: 2})}
    assert TensorElement.of(x, y) - TensorElement.of(x, y) == TensorElement.of(
        alg.zero(), alg.zero()
    )


def test_tensor3_equality_and_sum():
    alg = sample_algebra()
    algs = (alg, alg, alg)
    a = Tensor3(algs, {((0,), (1,), ()): ONE})
    b = Tensor3(algs, {((0,), (1,), ()): ONE})
    assert a == b and bool(a)
    s = a + b
    assert s.terms == {((0,), (1,), ()): Laurent({0: 2})}
    assert not (s - a - b)
