from fractions import Fraction
from itertools import permutations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from genlab.core import (
    Permutation, Poly, SetPartition, T, TruncatedSeries, cycles, drops,
    falling_factorial, rising_factorial, series_inverse_linear,
)
from genlab.errors import IntegralityFailure

from oracles import set_partitions


def test_identity_cycles():
    assert cycles(Permutation.identity(range(1, 5))) == [(1,), (2,), (3,), (4,)]


def test_four_cycle():
    p = Permutation.from_mapping({1: 3, 3: 4, 4: 2, 2: 1})
    assert cycles(p) == [(1, 3, 4, 2)]


def test_cycles_match_union_find():
    p = Permutation.from_cycles([(1, 4, 2), (3, 5, 6)])
    parent = {x: x for x in p.ground}

    def find(x):
        while parent[x] != x:
            x = parent[x]
        return x

    for i in p.ground:
        parent[find(i)] = find(p(i))
    groups = {}
    for i in p.ground:
        groups.setdefault(find(i), set()).add(i)
    assert sorted(map(sorted, groups.values())) == sorted(sorted(c) for c in cycles(p))
    assert cycles(p) == [(1, 4, 2), (3, 5, 6)]


def test_drops():
    assert drops(Permutation.identity(range(1, 4))) == set()
    assert drops(Permutation.from_cycles([(1, 3, 2)])) == {(2, 1), (3, 2)}
    assert drops(Permutation.from_cycles([(1, 2)])) == {(2, 1)}


def test_factorials():
    assert falling_factorial(T - 1, 0) == Poly([1])
    assert falling_factorial(T - 1, 2) == Poly([2, -3, 1])
    assert rising_factorial(T + 1, 2) == Poly([2, 3, 1])


def test_series_inverse_linear_examples():
    s = series_inverse_linear(1, T - 1, 2)
    assert s.terms == (Poly([1]), T - 1, (T - 1) ** 2)
    assert series_inverse_linear(0, T, 3).terms == (Poly([1]),) + (Poly(),) * 3
    assert series_inverse_linear(2, T - 2, 1).terms == (Poly([1]), Poly([-4, 2]))


def test_permutation_rejects_non_bijection():
    with pytest.raises(ValueError):
        Permutation((1, 2, 3), (1, 1, 3))


def test_json_round_trips():
    p = Permutation.from_cycles([(1, 3), (2,)])
    assert Permutation.from_json(p.to_json()) == p
    f = Poly([Fraction(1, 2), -3, 0, 1])
    assert f.to_json() == {"coeffs": ["1/2", -3, 0, 1]}
    assert Poly.from_json(f.to_json()) == f


def test_poly_basics():
    assert Poly([1, 0, 0]).coeffs == (1,)
    assert Poly([0, 0]).coeffs == () and Poly().is_zero()
    assert (T ** 3 - 1).exact_div(T - 1) == T ** 2 + T + 1
    assert str(T ** 3 - 3 * T ** 2 + 3 * T - 1) == "t^3 - 3*t^2 + 3*t - 1"
    with pytest.raises(IntegralityFailure):
        (T / 2).require_integral()


def test_refinement_is_partial_order_on_partitions_of_5():
    parts = [SetPartition.from_blocks(range(1, 6), p) for p in set_partitions(range(1, 6))]
    assert len(parts) == 52
    for a in parts:
        assert a <= a
        assert a.rank == 5 - len(a.blocks)
        for b in parts:
            if a <= b and b <= a:
                assert a == b
    for a in parts:
        ups = [b for b in parts if a <= b]
        for b in ups:
            for c in parts:
                if b <= c:
                    assert a <= c


small_ground = st.integers(1, 8).map(lambda n: list(range(1, n + 1)))


@given(small_ground.flatmap(lambda g: st.permutations(g).map(lambda img: (g, img))))
def test_cycles_recompose_to_permutation(gi):
    ground, img = gi
    p = Permutation(tuple(ground), tuple(img))
    cs = cycles(p)
    assert sorted(x for c in cs for x in c) == ground
    assert Permutation.from_cycles(cs, ground) == p
    for c in cs:
        assert c[0] == min(c)
        for a, b in zip(c, c[1:] + c[:1]):
            assert p(a) == b


ints = st.integers(-5, 5)
polys = st.lists(st.fractions(min_value=-4, max_value=4, max_denominator=3), max_size=5).map(Poly)


@given(polys, polys, polys)
def test_distributive(f, g, h):
    assert (f + g) * h == f * h + g * h
    assert f * g == g * f


@given(polys, polys, ints)
def test_evaluation_is_a_ring_map(f, g, x):
    assert (f * g)(x) == f(x) * g(x)
    assert (f + g)(x) == f(x) + g(x)


@settings(max_examples=50)
@given(st.fractions(min_value=-3, max_value=3, max_denominator=4), polys, st.integers(0, 6))
def test_geometric_inverse(q, r, order):
    inv = series_inverse_linear(q, r, order)
    lin = TruncatedSeries(order, [Poly([1]), -(r * q)])
    assert inv * lin == TruncatedSeries.one(order)


def test_every_permutation_of_4_roundtrips():
    for img in permutations(range(1, 5)):
        p = Permutation((1, 2, 3, 4), img)
        assert Permutation.from_cycles(cycles(p), p.ground) == p
