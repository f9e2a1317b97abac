import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from orbitlef import linalg
from orbitlef.morse_caveat import (
    NoConeWitness,
    caveat_ring,
    certify,
    critical_family_witness,
    gradient_at,
    hessian_at_zero,
    norm_sq,
    norm_sq_gradient,
)

from strategies import nonzero_rationals


def test_n1_gradient():
    R = caveat_ring(1)
    assert [str(g) for g in norm_sq_gradient(1)] == [str(R.parse("4*x1^3 + 4*x1*y1^2")), str(R.parse("4*x1^2*y1 + 4*y1^3"))]


@pytest.mark.parametrize("n", range(1, 5))
def test_gradient_matches_formal_derivative(n):
    f = norm_sq(n)
    assert norm_sq_gradient(n) == [f.diff(v) for v in caveat_ring(n).names]


def five_point(f, point, var, h=Fraction(1, 7)):
    def at(shift):
        p = dict(point)
        p[var] += shift
        return f.evaluate(p)

    return (-at(2 * h) + 8 * at(h) - 8 * at(-h) + at(-2 * h)) / (12 * h)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_gradient_matches_finite_differences(n):
    # the 5-point stencil has error O(f^(5)) and |g|^2 is quartic, so agreement is exact
    rng = random.Random(n)
    f = norm_sq(n)
    names = caveat_ring(n).names
    for _ in range(50):
        point = {v: Fraction(rng.randint(-20, 20), rng.randint(1, 9)) for v in names}
        assert gradient_at(n, point) == [five_point(f, point, v) for v in names]


@pytest.mark.parametrize("n", range(1, 9))
def test_hessian_at_zero_vanishes(n):
    H = hessian_at_zero(n)
    assert len(H) == 2 * n and all(v == 0 for row in H for v in row)
    assert linalg.rank(H) == 0 and linalg.det(H) == 0


def test_gradient_zero_at_origin():
    for n in range(1, 5):
        assert all(v == 0 for v in gradient_at(n, [0] * (2 * n)))


@given(st.integers(2, 5), nonzero_rationals)
def test_cone_witnesses(n, r):
    w = critical_family_witness(n, r)
    assert all(v == 0 for v in gradient_at(n, w))
    assert sum(v * v for v in w.values()) == 2 * r * r


def test_witness_examples():
    assert all(v == 0 for v in gradient_at(2, critical_family_witness(2, 1)))
    c = certify(2, Fraction(1, 1000))
    assert c.degenerate and c.witness_gradient_zero and c.witness_norm_sq == Fraction(2, 10**6)
    with pytest.raises(ValueError):
        critical_family_witness(2, 0)


def test_n1_has_no_cone_witness():
    with pytest.raises(NoConeWitness) as info:
        critical_family_witness(1, 1)
    assert info.value.gradient == [8, 8]
    c = certify(1)
    assert c.witness is None and c.hessian_zero and c.degenerate
