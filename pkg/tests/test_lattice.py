from itertools import combinations

import pytest

from genlab.core import Poly, SetPartition, T
from genlab.dperms import count_by_cycles
from genlab.errors import ElementNotInLattice, NegativeResult, SizeLimit
from genlab.idforests import enumerate_id_forests
from genlab.lattice import (
    build_bond_lattice, build_reduced, characteristic_polynomial, min_max_criterion, mobius,
    reduced_vertex_set, zaslavsky_bounded, zaslavsky_regions,
)

from oracles import bond_chi_bruteforce, connected, gamma_edges, set_partitions

SUBSETS_8 = [c for k in range(1, 9) for c in combinations(range(1, 9), k)]

CHI = {
    1: [-1, 1],
    2: [-1, 3, -3, 1],
    3: [-3, 12, -19, 15, -6, 1],
    4: [-17, 81, -162, 177, -115, 45, -10, 1],
}


def _signed_poly(counts, size):
    # sum_k (-1)^(size-k) c_k t^(k-1), the shape shared by forests and D-permutations
    out = Poly()
    for k, c in counts.items():
        out = out + (-1) ** (size - k) * c * T ** (k - 1)
    return out


def test_small_lattices():
    lat = build_bond_lattice([1, 2])
    assert [str(p) for p in lat.elements] == ["1|2", "12"]
    lat4 = build_bond_lattice(range(1, 5))
    assert lat4.rank_sizes() == [1, 3, 3, 1]
    chi6 = characteristic_polynomial(build_bond_lattice(range(1, 7)))
    assert chi6.degree == 5 and chi6.leading() == 1


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_table_rows(n):
    lat = build_bond_lattice(range(1, 2 * n + 1))
    chi = characteristic_polynomial(lat)
    assert chi.int_coeffs() == CHI[n]
    assert chi.degree == lat.length
    assert zaslavsky_regions(chi, lat.length) == -chi(-1) == [2, 8, 56, 608][n - 1]


def test_mobius_examples():
    lat4 = build_bond_lattice(range(1, 5))
    assert mobius(lat4, lat4.bottom) == 1
    assert mobius(lat4, lat4.top()) == -1
    lat6 = build_bond_lattice(range(1, 7))
    assert mobius(lat6, lat6.top()) == -3
    with pytest.raises(ElementNotInLattice):
        mobius(lat4, SetPartition.from_blocks(range(1, 5), [[1, 3], [2], [4]]))


def test_mobius_defining_sum():
    lat = build_bond_lattice(range(1, 7))
    for p in lat.elements:
        if p == lat.bottom:
            continue
        assert sum(mobius(lat, q) for q in lat.elements if q <= p) == 0


@pytest.mark.parametrize("V", [c for c in SUBSETS_8 if len(c) <= 6] + [tuple(range(1, 8)), tuple(range(1, 9)), (1, 2, 4, 5, 6, 7, 8)])
def test_chi_against_bruteforce_partition_lattice(V):
    lat = build_bond_lattice(V)
    assert characteristic_polynomial(lat) == _shift(bond_chi_bruteforce(V), lat.length, len(V))


def _shift(chi_by_blocks, length, size):
    # the brute-force oracle indexes by block count; rank indexing differs by the component count
    comps = size - length
    return chi_by_blocks.exact_div(T ** (comps - 1)) if comps > 1 else chi_by_blocks


def test_membership_matches_min_max_criterion():
    for n in (2, 3, 4):
        V = list(range(1, 2 * n + 1))
        lat = set(build_bond_lattice(V).elements)
        edges = gamma_edges(V)
        for p in set_partitions(V):
            sp = SetPartition.from_blocks(V, p)
            conn = all(connected(b, edges) for b in p)
            crit = all(len(b) == 1 or min_max_criterion(b) for b in p)
            assert conn == crit == (sp in lat)


def test_all_routes_agree_on_every_subset_of_8():
    for V in SUBSETS_8:
        lat = build_bond_lattice(V)
        chi = characteristic_polynomial(lat)
        comps = len(V) - lat.length
        forests = {}
        for f in enumerate_id_forests(V):
            forests[len(f)] = forests.get(len(f), 0) + 1
        via_forests = _signed_poly(forests, len(V))
        via_dperms = _signed_poly(count_by_cycles(V, "d"), len(V))
        assert via_forests == via_dperms, V
        assert chi * T ** (comps - 1) == via_forests, V


def test_rank_sums_count_forests():
    for V in [range(1, 5), range(1, 7), range(1, 9), (1, 2, 3, 6, 7, 8)]:
        lat = build_bond_lattice(V)
        for k in range(lat.length + 1):
            s = sum(mobius(lat, p) for p in lat.elements if p.rank == k)
            forests = sum(1 for f in enumerate_id_forests(V) if len(V) - len(f) == k)
            assert s == (-1) ** k * forests


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_cube_of_t_minus_one_divides(n):
    chi = characteristic_polynomial(build_bond_lattice(range(1, 2 * n + 1)))
    q, r = chi.divmod((T - 1) ** 3)
    assert r.is_zero()


def test_reduced_semilattice():
    assert reduced_vertex_set(3) == [1, 3, 4, 6]
    lat, chi = build_reduced(3)
    assert chi == T ** 2 - 3 * T + 3
    assert chi(0) == 3 and chi(1) == 1
    for n in (2, 3, 4, 5):
        lat, chi = build_reduced(n)
        full = characteristic_polynomial(build_bond_lattice(range(1, 2 * n + 1)))
        assert chi * (T - 1) ** 3 == full
        top = 2 * n
        assert lat.bottom in lat.elements
        for p in lat.elements:
            assert p.block_map().get(1) != p.block_map().get(top)
        maximal = [p for p in lat.elements if not any(p < q for q in lat.elements)]
        # at n=2 the semilattice is the single point 1|4
        assert len(maximal) == 1 if n == 2 else len(maximal) > 1


def test_zaslavsky():
    assert zaslavsky_regions(T - 1, 1) == 2
    assert zaslavsky_bounded(T ** 2 - 3 * T + 3) == 1
    with pytest.raises(NegativeResult):
        zaslavsky_regions(T + 2, 1)


def test_size_cap():
    with pytest.raises(SizeLimit):
        build_bond_lattice(range(1, 12))
