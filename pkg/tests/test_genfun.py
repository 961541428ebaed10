from itertools import permutations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from genlab.core import Poly, T
from genlab.dperms import chi_from_s_d, s_d_table
from genlab.errors import SizeLimit
from genlab.genfun import (
    BD_KEYS, G_TABLE, H_TABLE, bd_series, charpoly_series, cycle_enumerator_at_point,
    descent_model_count, genocchi_g, genocchi_h, new_h_formula_check, new_h_formula_series,
    shifted_charpoly_series, staircase_series_lhs, staircase_series_pointcheck,
    staircase_series_rhs, tangent_genocchi,
)
from genlab.lattice import build_reduced

from oracles import genocchi_from_bernoulli, is_dumont_derangement

G = (1, 1, 3, 17, 155, 2073)
H = (1, 2, 8, 56, 608, 9440)


def test_tables_against_bernoulli():
    for n in range(1, 9):
        assert genocchi_g(n, method="series") == genocchi_from_bernoulli(n)
    assert list(G_TABLE) == [genocchi_from_bernoulli(n) for n in range(1, 8)]


def test_h_against_itertools():
    for n in range(0, 4):
        m = 2 * n + 2
        g = tuple(range(1, m + 1))
        brute = sum(is_dumont_derangement(g, img) for img in permutations(g))
        assert genocchi_h(n) == brute == H[n]


def test_enumeration_and_series_agree():
    for n in range(1, 8):
        assert genocchi_g(n, method="enumerate") == genocchi_g(n, method="series")
    for n in range(0, 6):
        assert genocchi_h(n, method="enumerate") == genocchi_h(n, method="series")
    assert genocchi_h(6, method="series") == H_TABLE[6] == 198272


def test_named_values():
    assert genocchi_g(4) == 17
    assert genocchi_h(0) == 1
    assert descent_model_count(3) == 3


def test_descent_model_against_itertools():
    # descents of a permutation of [2n-1] sit exactly after even values
    for n in range(1, 5):
        m = 2 * n - 1
        brute = sum(all((w[i] > w[i + 1]) == (w[i] % 2 == 0) for i in range(m - 1))
                    for w in permutations(range(1, m + 1)))
        assert descent_model_count(n) == brute == G[n - 1]


def test_tangent():
    assert tangent_genocchi(6) == list(G)


@pytest.mark.parametrize("key", BD_KEYS)
def test_classical_expansions(key):
    s = bd_series(key, 6)
    for k in range(7):
        c = s[k]
        assert c.is_integral() and c.degree <= 0
        v = int(c(0))
        if key == "g":
            assert v == (G_TABLE[k - 1] if k >= 1 else 0)
        elif key == "h":
            assert v == H_TABLE[k]
        elif key == "g-next":
            assert v == G_TABLE[k]
        else:
            assert v == (H_TABLE[k - 1] if k >= 1 else 0)


def test_expansion_examples():
    assert bd_series("h", 3)[3] == Poly([56])
    assert bd_series("g", 1)[1] == Poly([1])
    assert bd_series("g-next", 2)[2] == Poly([3])


def test_series_cap():
    with pytest.raises(SizeLimit):
        bd_series("g", 9)


def test_charpoly_series():
    s = charpoly_series(5)
    assert s[1] == T - 1
    assert s[2] == (T - 1) ** 3
    for n in range(1, 6):
        chi = chi_from_s_d(s_d_table(n))
        assert s[n] == chi
        assert s[n].is_integral()
        assert s[n](-1) == -H[n]
        assert s[n](0) == -G[n - 1]
        assert s[n](1) == 0


def test_shifted_series():
    full, reduced = shifted_charpoly_series(5)
    for n in range(0, 6):
        assert full[n] == chi_from_s_d(s_d_table(n + 1))
    assert reduced[1] == Poly([1])
    assert reduced[2] == T ** 2 - 3 * T + 3
    for n in range(1, 6):
        assert reduced[n] == build_reduced(n + 1)[1]
        assert reduced[n](0) == G_TABLE[n]
        if n >= 2:
            assert reduced[n](1) == H_TABLE[n - 2]


def test_new_h_formula():
    s = new_h_formula_series(6)
    assert [int(s[k](0)) for k in range(7)] == list(H_TABLE)
    assert s[1] == Poly([2])
    assert new_h_formula_check(5)["ok"]


def test_staircase_series_fixed_points():
    ones = staircase_series_lhs(3, 1, 1, 1, 1, 1, 1)
    assert [ones[k] for k in (1, 2, 3)] == [Poly([1]), Poly([3]), Poly([17])]
    assert staircase_series_rhs(3, 1, 1, 1, 1, 1, 1) == ones
    zero_l = staircase_series_lhs(3, 0, 0, 0, 0, 0, 0)
    assert zero_l == staircase_series_rhs(3, 0, 0, 0, 0, 0, 0)
    lhs, rhs = cycle_enumerator_at_point(3, 2)
    assert lhs == rhs


def test_staircase_series_twenty_points():
    r = staircase_series_pointcheck(order=4, samples=20, seed=0)
    assert r["ok"] and r["points"] >= 20 and not r["failures"]


@settings(max_examples=10, deadline=None)
@given(st.lists(st.integers(-4, 4), min_size=6, max_size=6))
def test_staircase_series_random_points(point):
    assert staircase_series_lhs(3, *point) == staircase_series_rhs(3, *point)
