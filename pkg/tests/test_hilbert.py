from itertools import combinations_with_replacement

import pytest
from hypothesis import given

from orbitlef.errors import NotHomogeneous
from orbitlef.polyalg import Ideal, PolyRing
from orbitlef.polyalg.hilbert import hilbert_function, hilbert_numerator, proj_dim_degree, reduce_numerator

from strategies import monomial_ideals


def count_standard(lms, nvars, degree):
    count = 0
    for combo in combinations_with_replacement(range(nvars), degree):
        m = [0] * nvars
        for i in combo:
            m[i] += 1
        if not any(all(a <= b for a, b in zip(g, m)) for g in lms):
            count += 1
    return count


@given(monomial_ideals(3))
def test_hilbert_function_brute_force_3(lms):
    num = hilbert_numerator(lms)
    for d in range(8):
        assert hilbert_function(num, 3, d) == count_standard(lms, 3, d)


@given(monomial_ideals(4, max_gens=5, max_exp=2))
def test_hilbert_function_brute_force_4(lms):
    num = hilbert_numerator(lms)
    for d in range(7):
        assert hilbert_function(num, 4, d) == count_standard(lms, 4, d)


def test_numerator_examples():
    assert hilbert_numerator([]) == [1]
    assert hilbert_numerator([(2, 0)]) == [1, 0, -1]
    assert reduce_numerator([1, 0, -1], 2) == ([1, 1], 1)


def ring(names):
    return PolyRing(tuple(names))


def test_proj_dim_degree_examples():
    R = ring("xyzt")
    x, y, z, t = R.gens()
    conic = proj_dim_degree(Ideal([x * y - z * t]))
    assert (conic.dimension, conic.degree) == (2, 2)
    line = proj_dim_degree(Ideal([x, y]))
    assert (line.dimension, line.degree) == (1, 1)
    twisted = proj_dim_degree(Ideal([x * z - y * y, y * t - z * z, x * t - y * z]))
    assert (twisted.dimension, twisted.degree) == (1, 3)
    empty = proj_dim_degree(Ideal([x, y, z, t]))
    assert empty.dimension == -1
    unit = proj_dim_degree(Ideal([R.one()]))
    assert unit.dimension == -1


def test_segre_p2xp2():
    # 2x2 minors of a generic 3x3 matrix: Segre P2 x P2 in P8, dim 4, degree 6
    names = [f"a{i}{j}" for i in range(3) for j in range(3)]
    R = ring(names)
    a = {(i, j): R.var(f"a{i}{j}") for i in range(3) for j in range(3)}
    minors = [
        a[i, k] * a[j, l] - a[i, l] * a[j, k]
        for i in range(3) for j in range(i + 1, 3) for k in range(3) for l in range(k + 1, 3)
    ]
    inv = proj_dim_degree(Ideal(minors))
    assert (inv.dimension, inv.degree) == (4, 6)


def test_requires_homogeneous():
    R = ring("xy")
    x, y = R.gens()
    with pytest.raises(NotHomogeneous):
        proj_dim_degree(Ideal([x - 1]))
