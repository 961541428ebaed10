"""Genocchi and median Genocchi numbers computed two ways, and coefficientwise
checks of the rational generating functions for them and for the
characteristic polynomials.

All series are :class:`~genlab.core.TruncatedSeries` in ``u`` with exact
polynomial-in-``t`` coefficients.
"""

from __future__ import annotations

import random
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Callable

from .core import Poly, T, TruncatedSeries, falling_factorial, rising_factorial, series_inverse_linear
from .dperms import count_by_cycles, count_d_perms
from .errors import IntegralityFailure, check_cap
from .staircases import lambda_specialized

__all__ = [
    "genocchi_g", "genocchi_h", "bd_series", "BD_KEYS", "charpoly_series", "shifted_charpoly_series",
    "staircase_series_pointcheck", "staircase_series_rhs", "new_h_formula_series", "new_h_formula_check",
    "tangent_genocchi", "descent_model_count", "rational_sum", "SERIES_CAP",
    "G_TABLE", "H_TABLE", "staircase_series_lhs", "cycle_enumerator_at_point",
]

SERIES_CAP = 8

# reference tables, used only by tests and the CLI as targets
G_TABLE = (1, 1, 3, 17, 155, 2073, 38227)          # g_1 .. g_7
H_TABLE = (1, 2, 8, 56, 608, 9440, 198272)         # h_0 .. h_6


def rational_sum(order: int, start: int, numer: Callable[[int], Poly],
                 roots: Callable[[int], list]) -> TruncatedSeries:
    """``sum_{n>=start} numer(n) u^n / prod_{r in roots(n)} (1 - r u)``,
    truncated at ``u^order``."""
    total = TruncatedSeries(order)
    for n in range(start, order + 1):
        term = TruncatedSeries.monomial(order, n, numer(n))
        for r in roots(n):
            term = term * series_inverse_linear(1, r, order)
        total = total + term
    return total


def _require_integral(s: TruncatedSeries, what: str) -> TruncatedSeries:
    for k, p in enumerate(s.terms):
        if not p.is_integral():
            raise IntegralityFailure(f"{what}: coefficient of u^{k} is {p}")
    return s


# ---------------------------------------------------------------------------
# the four classical expansions in z


BD_KEYS = ("g", "h", "g-next", "h-prev")


def bd_series(which: str, order: int = 5) -> TruncatedSeries:
    """Right-hand sides of the four classical continued-product expansions:

    * ``"g"``:      ``sum_{n>=1} (n-1)! n! z^n / prod (1 + k^2 z)``     -> ``g_k``
    * ``"h"``:      ``sum_{n>=0} n! (n+1)! z^n / prod (1 + k(k+1) z)``  -> ``h_k``
    * ``"g-next"``: ``sum_{n>=0} (n!)^2 z^n / prod (1 + k^2 z)``        -> ``g_{k+1}``
    * ``"h-prev"``: ``sum_{n>=1} (n!)^2 z^n / prod (1 + k(k+1) z)``     -> ``h_{k-1}``

    Products run over ``k = 1..n``.
    """
    check_cap("series order", order, SERIES_CAP)
    return _bd_uncapped(which, order)


def _bd_uncapped(which: str, order: int) -> TruncatedSeries:
    sq = lambda n: [-k * k for k in range(1, n + 1)]
    ob = lambda n: [-k * (k + 1) for k in range(1, n + 1)]
    if which == "g":
        s = rational_sum(order, 1, lambda n: Poly([factorial(n - 1) * factorial(n)]), sq)
    elif which == "h":
        s = rational_sum(order, 0, lambda n: Poly([factorial(n) * factorial(n + 1)]), ob)
    elif which == "g-next":
        s = rational_sum(order, 0, lambda n: Poly([factorial(n) ** 2]), sq)
    elif which == "h-prev":
        s = rational_sum(order, 1, lambda n: Poly([factorial(n) ** 2]), ob)
    else:
        raise ValueError(f"which must be one of {BD_KEYS}")
    return _require_integral(s, f"expansion {which}")


def _const(p: Poly) -> int:
    return int(p(0))


# ---------------------------------------------------------------------------
# Genocchi numbers


def _series_order_for(n: int) -> int:
    if n > 20:
        raise ValueError("series route is limited to n <= 20")
    return n


@lru_cache(maxsize=None)
def genocchi_g(n: int, method: str = "auto") -> int:
    """``g_n``: Dumont permutations of ``[2n-2]`` (enumeration, n <= 7) or the
    ``(n-1)! n!`` expansion (series)."""
    if n < 1:
        raise ValueError("g_n is defined for n >= 1")
    if method == "auto":
        method = "enumerate" if n <= 7 else "series"
    if method == "enumerate":
        return count_d_perms(range(1, 2 * n - 1), "dumont")
    if method == "series":
        return _const(_bd_uncapped("g", _series_order_for(n))[n])
    raise ValueError(f"unknown method {method!r}")


@lru_cache(maxsize=None)
def genocchi_h(n: int, method: str = "auto") -> int:
    """``h_n``: Dumont derangements of ``[2n+2]`` (enumeration, n <= 5) or the
    ``n! (n+1)!`` expansion (series)."""
    if n < 0:
        raise ValueError("h_n is defined for n >= 0")
    if method == "auto":
        method = "enumerate" if n <= 5 else "series"
    if method == "enumerate":
        return count_d_perms(range(1, 2 * n + 3), "dumont-derangement")
    if method == "series":
        return _const(_bd_uncapped("h", _series_order_for(n))[n])
    raise ValueError(f"unknown method {method!r}")


def tangent_genocchi(n_max: int) -> list[int]:
    """``g_1..g_{n_max}`` from the Taylor coefficients of ``x tan(x/2)``.

    The coefficients ``a_k`` of ``tan x`` come from ``tan' = 1 + tan^2``:
    ``(k+1) a_{k+1} = [k == 0] + sum_{i+j=k} a_i a_j``.
    """
    top = 2 * n_max
    a = [Fraction(0)] * (top + 1)
    for k in range(top):
        conv = sum((a[i] * a[k - i] for i in range(k + 1)), Fraction(0))
        a[k + 1] = (conv + (1 if k == 0 else 0)) / (k + 1)
    # x tan(x/2) = sum_k a_k x^(k+1) / 2^k ; pick x^(2n)
    out = []
    for n in range(1, n_max + 1):
        v = a[2 * n - 1] / 2 ** (2 * n - 1) * factorial(2 * n)
        if v.denominator != 1:
            raise IntegralityFailure(f"tangent route gives non-integer {v}")
        out.append(int(v))
    return out


def descent_model_count(n: int) -> int:
    """Permutations of ``[2n-1]`` whose descents sit exactly after even values."""
    m = 2 * n - 1
    check_cap("descent model size", m, 13)
    used = [False] * (m + 1)

    def go(prev: int, k: int) -> int:
        if k == m:
            return 1
        total = 0
        for v in range(1, m + 1):
            if used[v]:
                continue
            if (prev > v) != (prev % 2 == 0):
                continue
            used[v] = True
            total += go(v, k + 1)
            used[v] = False
        return total

    total = 0
    for v in range(1, m + 1):
        used[v] = True
        total += go(v, 1)
        used[v] = False
    return total


# ---------------------------------------------------------------------------
# characteristic-polynomial generating functions


def _quad_roots(n: int) -> list[Poly]:
    # 1 - k(t-k) u  for k = 1..n
    return [k * (T - k) for k in range(1, n + 1)]


def charpoly_series(order: int = 5) -> TruncatedSeries:
    """Coefficient of ``u^n`` is the characteristic polynomial for ``[2n]``."""
    check_cap("series order", order, SERIES_CAP)
    s = rational_sum(order, 1,
                     lambda n: falling_factorial(T - 1, n) * falling_factorial(T - 1, n - 1),
                     _quad_roots)
    return _require_integral(s, "characteristic-polynomial series")


def shifted_charpoly_series(order: int = 5) -> tuple[TruncatedSeries, TruncatedSeries]:
    """``(full, reduced)``: coefficient of ``u^n`` in ``full`` is the
    characteristic polynomial for ``[2n+2]`` (n >= 0); in ``reduced`` it is the
    reduced semilattice polynomial for ``[2n+2]`` (n >= 1)."""
    check_cap("series order", order, SERIES_CAP)
    full = rational_sum(order, 0, lambda n: falling_factorial(T - 1, n) ** 2, _quad_roots) * (T - 1)
    reduced = rational_sum(order, 1, lambda n: falling_factorial(T - 2, n - 1) ** 2, _quad_roots)
    return _require_integral(full, "shifted series"), _require_integral(reduced, "reduced series")


def new_h_formula_series(order: int = 5) -> TruncatedSeries:
    """``1 + 2 sum_{n>=1} (n!)^2 u^n / prod_{k=1}^{n-1} (1 + k(k+1) u)``."""
    check_cap("series order", order, SERIES_CAP)
    s = rational_sum(order, 1, lambda n: Poly([2 * factorial(n) ** 2]),
                     lambda n: [-k * (k + 1) for k in range(1, n)])
    return _require_integral(TruncatedSeries.one(order) + s, "h formula")


def new_h_formula_check(order: int = 5) -> dict:
    s = new_h_formula_series(order)
    got = [_const(s[k]) for k in range(order + 1)]
    want = [genocchi_h(k) for k in range(order + 1)]
    return {"order": order, "ok": got == want, "series": got, "enumerated": want}


# ---------------------------------------------------------------------------
# the six-variable staircase identity, by point evaluation


def staircase_series_rhs(order: int, x, y, z, xb, yb, zb) -> TruncatedSeries:
    x, y, z, xb, yb, zb = (Poly.coerce(a) for a in (x, y, z, xb, yb, zb))

    def c(k):
        return (x + k) * (yb - y) - (xb + k) * (zb - z) - (x + k) * (xb + k)

    return rational_sum(order, 1,
                        lambda n: rising_factorial(x + zb, n - 1) * rising_factorial(y + xb, n - 1),
                        lambda n: [c(k) for k in range(n)])


def staircase_series_lhs(order: int, x, y, z, xb, yb, zb) -> TruncatedSeries:
    terms = [Poly()] + [lambda_specialized(2 * n, x, y, z, xb, yb, zb) for n in range(1, order + 1)]
    return TruncatedSeries(order, terms)


def staircase_series_pointcheck(order: int = 4, samples: int = 20, seed: int = 0,
                     points: list | None = None) -> dict:
    """Compare both sides at integer six-tuples.  The first two points are the
    all-ones and all-zeros tuples; the rest are drawn from ``[-3, 3]``."""
    check_cap("staircase series order", order, 5)
    if points is None:
        rng = random.Random(seed)
        points = [(1,) * 6, (0,) * 6]
        while len(points) < samples:
            points.append(tuple(rng.randint(-3, 3) for _ in range(6)))
    failures = []
    for p in points:
        lhs = staircase_series_lhs(order, *p)
        rhs = staircase_series_rhs(order, *p)
        if lhs != rhs:
            failures.append({"point": list(p), "lhs": [str(a) for a in lhs.terms],
                             "rhs": [str(a) for a in rhs.terms]})
    return {"order": order, "points": len(points), "ok": not failures, "failures": failures[:3]}


def cycle_enumerator_at_point(order: int, t) -> tuple[list, list]:
    """Cycle enumerator of D-permutations at ``t`` versus the staircase
    side, both as lists indexed by ``n``."""
    lhs = [sum(c * Fraction(t) ** k for k, c in count_by_cycles(range(1, 2 * n + 1)).items())
           for n in range(1, order + 1)]
    rhs = staircase_series_rhs(order + 1, t, t, 1, 0, t, 1)
    return lhs, [rhs[n + 1](0) for n in range(1, order + 1)]
