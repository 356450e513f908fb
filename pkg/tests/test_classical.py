"""Classical (q=1) oracle: super polynomial dimensions, Grassmann-number
arithmetic, the lower-triangular group action on the big cell, and the
self-test suites."""

import itertools
import random
from fractions import Fraction

import pytest

from qgrass.classical import (
    GNum,
    ParabolicPoint,
    bigcell_action,
    classical_dimension,
    mat,
    minv2,
    mmul,
    sample_cell_point,
    sample_parabolic_point,
    supercommutative_presentation,
    verify_action_axioms,
    verify_classical,
    verify_decomposability,
    verify_klein_reconciliation,
)


def brute_dimension(n_even, n_odd, degree):
    """Count monomials x^multideg * (square-free odd part) of total degree."""
    count = 0
    for odd in range(min(n_odd, degree) + 1):
        rem = degree - odd
        # weak compositions of rem into n_even parts
        even = len(
            list(
                itertools.combinations(range(rem + n_even - 1), n_even - 1)
            )
        ) if n_even else (1 if rem == 0 else 0)
        odd_ways = len(list(itertools.combinations(range(n_odd), odd)))
        count += even * odd_ways
    return count


def test_classical_dimension_matches_enumeration():
    for n_even in range(0, 5):
        for n_odd in range(0, 4):
            if n_even == 0 and n_odd == 0:
                continue
            for d in range(0, 5):
                assert classical_dimension(n_even, n_odd, d) == brute_dimension(
                    n_even, n_odd, d
                )


def test_supercommutative_presentation_counts():
    pres = supercommutative_presentation([("x", 0), ("y", 0), ("th", 1)])
    alg = pres.algebra
    assert not pres.local_confluence(3)
    for d in range(1, 5):
        assert pres.count_irreducible(d) == classical_dimension(2, 1, d)
    x, y, th = alg.gen(0), alg.gen(1), alg.gen(2)
    assert pres.normal_form(y * x) == x * y
    assert pres.normal_form(th * x) == x * th
    assert not pres.normal_form(th * th)


def test_grassmann_number_arithmetic():
    t1, t2, t3 = GNum.theta(1), GNum.theta(2), GNum.theta(3)
    assert t1 * t2 == -(t2 * t1)
    assert not t1 * t1
    assert (t1 * t2) * t3 == t1 * (t2 * t3)
    assert t1 * (t2 * t2) == GNum.of(0)
    # even elements are central among themselves
    a = 2 + t1 * t2
    b = Fraction(1, 3) + t2 * t3
    assert a * b == b * a
    assert a.parity() == 0 and t1.parity() == 1 and (a + t1).parity() is None


def test_grassmann_inverse_by_nilpotent_series():
    rng = random.Random(5)
    for _ in range(20):
        body = Fraction(rng.randint(1, 9), rng.randint(1, 9))
        if rng.random() < 0.5:
            body = -body
        soul = sum(
            (
                GNum.theta(i) * GNum.theta(j) * rng.randint(-3, 3)
                for i, j in itertools.combinations(range(4), 2)
            ),
            GNum.of(0),
        )
        x = body + soul
        assert x.inverse() * x == GNum.of(1)
        assert x * x.inverse() == GNum.of(1)
    with pytest.raises(AssertionError):
        (GNum.theta(1) * GNum.theta(2)).inverse()


def test_two_by_two_matrix_inverse():
    rng = random.Random(9)
    for _ in range(10):
        m = sample_parabolic_point(rng).x
        mi = minv2(m)
        assert mmul(m, mi) == mat([[1, 0], [0, 1]])
        assert mmul(mi, m) == mat([[1, 0], [0, 1]])


def test_parabolic_point_matrix_round_trip():
    rng = random.Random(13)
    for _ in range(5):
        g = sample_parabolic_point(rng)
        m = g.matrix()
        # lower parabolic shape: zeros above the diagonal blocks
        assert m[0][2] == GNum.of(0) and m[1][3] == GNum.of(0)
        assert m[0][4] == GNum.of(0) and m[1][4] == GNum.of(0)
        h = ParabolicPoint.from_matrix(m)
        assert h.matrix() == m
    assert ParabolicPoint.identity().matrix() == mat(
        [[1 if i == j else 0 for j in range(5)] for i in range(5)]
    )


def test_identity_fixes_cell_points():
    rng = random.Random(17)
    e = ParabolicPoint.identity()
    for _ in range(5):
        A, alpha = sample_cell_point(rng)
        A2, alpha2 = bigcell_action(e, A, alpha)
        assert A2 == A and alpha2 == alpha


def test_action_is_by_group_multiplication():
    rng = random.Random(21)
    g = sample_parabolic_point(rng)
    h = sample_parabolic_point(rng)
    A, alpha = sample_cell_point(rng)
    gh = ParabolicPoint.from_matrix(mmul(g.matrix(), h.matrix()))
    one_step = bigcell_action(gh, A, alpha)
    two_step = bigcell_action(g, *bigcell_action(h, A, alpha))
    assert one_step == two_step


def test_self_test_suites_pass():
    assert verify_decomposability().ok
    assert verify_klein_reconciliation().ok
    assert verify_action_axioms(random.Random(3), samples=5).ok
    rep = verify_classical(random.Random(3), samples=5)
    assert rep.ok and rep.summary["fail"] == 0
