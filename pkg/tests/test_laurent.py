"""Exact Laurent-polynomial arithmetic and linear algebra over it."""

import random
from fractions import Fraction

import pytest

from qgrass.laurent import (
    ONE,
    ZERO,
    Laurent,
    QMatrix,
    RowSpan,
    laurent_divexact,
    laurent_gcd,
)


def rand_laurent(rng, spread=3, terms=4):
    return Laurent(
        {rng.randint(-spread, spread): rng.randint(-5, 5) for _ in range(terms)}
    )


def test_canonical_form_drops_zeros():
    assert Laurent({2: 0, 0: 1}) == ONE
    assert Laurent({}) == ZERO
    assert not Laurent({3: 0})
    assert Laurent.q(0) == ONE


def test_ring_axioms_on_random_samples():
    rng = random.Random(1)
    for _ in range(50):
        a, b, c = (rand_laurent(rng) for _ in range(3))
        assert a + b == b + a
        assert a * b == b * a
        assert (a + b) * c == a * c + b * c
        assert (a * b) * c == a * (b * c)
        assert a - a == ZERO
        assert a + ZERO == a
        assert a * ONE == a
        assert -(-a) == a


def test_units_and_inverse():
    for k in (-3, 0, 2):
        for s in (1, -1):
            u = Laurent({k: s})
            assert u.is_unit()
            assert u * u.unit_inverse() == ONE
    assert not (Laurent.q(1) + ONE).is_unit()
    assert not ZERO.is_unit()


def test_exponent_range_and_eval():
    a = Laurent({-2: 1, 3: -4})
    assert a.min_exp() == -2 and a.max_exp() == 3
    assert a.eval(Fraction(2)) == Fraction(1, 4) - 4 * 8
    assert (Laurent.q(1) + Laurent.q(-1)).eval(Fraction(1)) == 2
    rng = random.Random(7)
    for _ in range(20):
        x, y = rand_laurent(rng), rand_laurent(rng)
        q0 = Fraction(rng.randint(1, 5), rng.randint(1, 5))
        assert (x * y).eval(q0) == x.eval(q0) * y.eval(q0)
        assert (x + y).eval(q0) == x.eval(q0) + y.eval(q0)


def test_str_format():
    lam = Laurent.q(-1) - Laurent.q(1)
    assert str(lam) == "1*q^-1 - 1*q^1"
    assert str(ZERO) == "0"


def test_gcd_and_exact_division():
    rng = random.Random(3)
    for _ in range(30):
        a, b = rand_laurent(rng), rand_laurent(rng)
        if not a or not b:
            continue
        g = laurent_gcd(a, b)
        assert laurent_divexact(a, g) * g == a
        assert laurent_divexact(b, g) * g == b
        assert laurent_divexact(a * b, b) == a
    with pytest.raises(AssertionError):
        laurent_divexact(Laurent.q(1) + ONE, Laurent.q(1) - ONE)


def test_rowspan_detects_dependence():
    span = RowSpan()
    assert span.add({"x": ONE, "y": Laurent.q(1)})
    assert span.add({"y": ONE, "z": Laurent.q(-2)})
    # a combination of the first two rows adds nothing new
    dep = {
        "x": Laurent.q(2),
        "y": Laurent.q(3) + Laurent.q(2),
        "z": ONE,
    }
    assert not span.add(dep)
    assert span.contains(dep)
    assert span.rank == 2
    assert span.add({"x": ONE})
    assert span.rank == 3


def test_qmatrix_rank():
    q = Laurent.q(1)
    assert QMatrix([[ONE, q], [q, q * q]]).rank() == 1
    assert QMatrix([[ONE, q], [q, ONE]]).rank() == 2
    assert QMatrix([[ZERO, ZERO], [ZERO, ZERO]]).rank() == 0
