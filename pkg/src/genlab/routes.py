"""Independent ways of computing the characteristic polynomial for ``[2n]``,
behind one dispatcher so the CLI and the tests can compare them."""

from __future__ import annotations

from typing import Callable

from .core import Poly, T
from .dperms import char_poly_even_fp, char_poly_reduced_form, chi_from_s_d, s_d_table
from .drops import drop_expansion_charpoly
from .errors import SizeLimit
from .ferrers import build_gamma, chromatic_polynomial
from .genfun import charpoly_series
from .idforests import enumerate_id_forests
from .lattice import build_bond_lattice, characteristic_polynomial

__all__ = ["ROUTES", "ROUTE_LIMITS", "ROUTE_MINIMA", "charpoly", "route_names"]


def _lattice(n: int) -> Poly:
    return characteristic_polynomial(build_bond_lattice(range(1, 2 * n + 1)))


def _dperm(n: int) -> Poly:
    return chi_from_s_d(s_d_table(n))


def _idforest(n: int) -> Poly:
    m = 2 * n
    counts: dict[int, int] = {}
    for forest in enumerate_id_forests(range(1, m + 1)):
        counts[len(forest)] = counts.get(len(forest), 0) + 1
    out = Poly()
    for k, c in counts.items():
        out = out + (-1) ** (m - k) * c * T ** (k - 1)
    return out


def _chromatic(n: int) -> Poly:
    ch = chromatic_polynomial(build_gamma(range(1, 2 * n + 1)))
    return ch.exact_div(T)


def _geometry(n: int) -> Poly:
    from .geometry import build_H, intersection_poset

    return intersection_poset(build_H(n)).characteristic_polynomial()


def _series(n: int) -> Poly:
    return charpoly_series(max(n, 1))[n]


ROUTES: dict[str, Callable[[int], Poly]] = {
    "lattice": _lattice,
    "dperm": _dperm,
    "idforest": _idforest,
    "chromatic": _chromatic,
    "evenfp": char_poly_even_fp,
    "reduced": char_poly_reduced_form,
    "drops": drop_expansion_charpoly,
    "series": _series,
    "geometry": _geometry,
}

# largest n each route accepts by default
ROUTE_LIMITS = {
    "lattice": 5,
    "dperm": 6,
    "idforest": 5,
    "chromatic": 7,
    "evenfp": 7,
    "reduced": 7,
    "drops": 6,
    "series": 8,
    "geometry": 4,
}


# smallest n each route is defined for
ROUTE_MINIMA = {"reduced": 2}


def route_names() -> list[str]:
    return list(ROUTES)


def charpoly(n: int, method: str = "dperm") -> Poly:
    if method not in ROUTES:
        raise ValueError(f"unknown method {method!r}; expected one of {route_names()}")
    if n < ROUTE_MINIMA.get(method, 1):
        raise ValueError(f"{method} route needs n >= {ROUTE_MINIMA.get(method, 1)}")
    if n > ROUTE_LIMITS[method]:
        raise SizeLimit(f"{method} route", n, ROUTE_LIMITS[method])
    return ROUTES[method](n)
