"""D-permutations, D-cycles, Dumont permutations and derangements, and the
characteristic-polynomial formulas built from them."""

from __future__ import annotations

from collections import Counter
from typing import Iterable, Iterator, Sequence

from .core import Permutation, Poly, T
from .errors import check_cap

__all__ = [
    "CLASSES", "is_d", "is_dumont", "is_dumont_derangement", "is_d_cycle",
    "enumerate_d_perms", "count_d_perms", "count_by_cycles", "s_d_table",
    "chi_from_s_d", "char_poly_even_fp", "char_poly_reduced_form",
    "power_of_two_decompositions", "cycle_count", "D_PERM_CAP",
]

D_PERM_CAP = 12

CLASSES = ("d", "dumont", "dumont-derangement", "d-cycle")


def is_d(p: Permutation) -> bool:
    return all((i <= j) if i % 2 else (i >= j) for i, j in zip(p.ground, p.image))


def is_dumont(p: Permutation) -> bool:
    return all((i <= j) if i % 2 else (i > j) for i, j in zip(p.ground, p.image))


def is_dumont_derangement(p: Permutation) -> bool:
    return all((i < j) if i % 2 else (i > j) for i, j in zip(p.ground, p.image))


def is_d_cycle(p: Permutation) -> bool:
    return is_d(p) and p.num_cycles() == 1


def cycle_count(ground: Sequence[int], image: Sequence[int]) -> int:
    succ = dict(zip(ground, image))
    seen = set()
    c = 0
    for s in ground:
        if s in seen:
            continue
        c += 1
        x = s
        while x not in seen:
            seen.add(x)
            x = succ[x]
    return c


def _images(ground: tuple[int, ...], strict_odd: bool, strict_even: bool) -> Iterator[tuple[int, ...]]:
    """Backtracking over positions; each position only tries images on its
    allowed side of itself."""
    m = len(ground)
    allowed = []
    for i in ground:
        if i % 2:
            allowed.append([j for j in ground if (j > i if strict_odd else j >= i)])
        else:
            allowed.append([j for j in ground if (j < i if strict_even else j <= i)])
    used: set[int] = set()
    img = [0] * m

    def go(k: int) -> Iterator[tuple[int, ...]]:
        if k == m:
            yield tuple(img)
            return
        for j in allowed[k]:
            if j not in used:
                used.add(j)
                img[k] = j
                yield from go(k + 1)
                used.discard(j)

    yield from go(0)


def _d_cycles(ground: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
    """D-cycles as image tuples, grown as a single path from the minimum."""
    if not ground:
        return
    if len(ground) == 1:
        yield ground
        return
    start = ground[0]
    succ: dict[int, int] = {}
    unused = set(ground[1:])

    def go(x: int) -> Iterator[tuple[int, ...]]:
        if not unused:
            # close the cycle x -> start; start is the minimum so x must be even
            if x % 2 == 0:
                succ[x] = start
                yield tuple(succ[v] for v in ground)
                del succ[x]
            return
        if x % 2:
            cands = [y for y in unused if y > x]
        else:
            cands = [y for y in unused if y < x]
        for y in cands:
            unused.discard(y)
            succ[x] = y
            yield from go(y)
            del succ[x]
            unused.add(y)

    yield from go(start)


def _raw(ground: tuple[int, ...], cls: str) -> Iterator[tuple[int, ...]]:
    if cls == "d":
        return _images(ground, False, False)
    if cls == "dumont":
        return _images(ground, False, True)
    if cls == "dumont-derangement":
        return _images(ground, True, True)
    if cls == "d-cycle":
        return _d_cycles(ground)
    raise ValueError(f"unknown class {cls!r}; expected one of {CLASSES}")


def enumerate_d_perms(ground: Iterable[int], cls: str = "d",
                      cap: int = D_PERM_CAP) -> Iterator[Permutation]:
    g = tuple(sorted(set(ground)))
    check_cap("D-permutation ground size", len(g), cap)
    for img in _raw(g, cls):
        yield Permutation(g, img)


def count_d_perms(ground: Iterable[int], cls: str = "d", cap: int = D_PERM_CAP) -> int:
    g = tuple(sorted(set(ground)))
    check_cap("D-permutation ground size", len(g), cap)
    return sum(1 for _ in _raw(g, cls))


def count_by_cycles(ground: Iterable[int], cls: str = "d", cap: int = D_PERM_CAP) -> dict[int, int]:
    g = tuple(sorted(set(ground)))
    check_cap("D-permutation ground size", len(g), cap)
    c = Counter(cycle_count(g, img) for img in _raw(g, cls))
    return dict(sorted(c.items()))


def s_d_table(n: int, cap: int = D_PERM_CAP) -> dict[int, int]:
    """``k -> (-1)^k * #{D-permutations of [2n] with k cycles}``."""
    counts = count_by_cycles(range(1, 2 * n + 1), "d", cap)
    return {k: (-1) ** k * c for k, c in counts.items()}


def chi_from_s_d(table: dict[int, int]) -> Poly:
    out = Poly()
    for k, s in table.items():
        out = out + s * T ** (k - 1)
    return out


def _cycle_profile(ground, img):
    """(even fixed points, odd fixed points, non-fixed cycles)."""
    ev = sum(1 for i, j in zip(ground, img) if i == j and i % 2 == 0)
    od = sum(1 for i, j in zip(ground, img) if i == j and i % 2 == 1)
    return ev, od, cycle_count(ground, img) - ev - od


def _profiles(m: int) -> Counter:
    g = tuple(range(1, m + 1))
    return Counter(_cycle_profile(g, img) for img in _images(g, False, False))


def char_poly_even_fp(n: int) -> Poly:
    """``(t-1) * sum over D-perms of [2n-2] of (-t)^(even fixed points)
    (1-t)^(other cycles)``."""
    if n < 1:
        raise ValueError("n >= 1")
    total = Poly()
    for (ev, od, other), c in _profiles(2 * n - 2).items():
        total = total + c * (-T) ** ev * (1 - T) ** (od + other)
    return (T - 1) * total


def char_poly_reduced_form(n: int) -> Poly:
    """``(t-1)^3 * sum over D-perms of [2n-4] of (1-t)^(fixed points)
    (2-t)^(other cycles)``."""
    if n < 2:
        raise ValueError("n >= 2")
    total = Poly()
    for (ev, od, other), c in _profiles(2 * n - 4).items():
        total = total + c * (1 - T) ** (ev + od) * (2 - T) ** other
    return (T - 1) ** 3 * total


def power_of_two_decompositions(n: int) -> dict:
    """Classify D-permutations of ``[2n-2]`` by cycles that are not even fixed
    points (``h_{n-1,j}``) and by non-fixed-point cycles (``g_{n-1,j}``)."""
    if not 2 <= n <= 6:
        raise ValueError("decompositions are provided for 2 <= n <= 6")
    h_j: Counter = Counter()
    g_j: Counter = Counter()
    for (ev, od, other), c in _profiles(2 * n - 2).items():
        h_j[od + other] += c
        g_j[other] += c
    h_j = dict(sorted(h_j.items()))
    g_j = dict(sorted(g_j.items()))
    return {
        "n": n,
        "h_terms": h_j,
        "g_terms": g_j,
        "h_total": sum(c * 2 ** (j + 1) for j, c in h_j.items()),
        "g_total": sum(c * 2 ** j for j, c in g_j.items()),
    }
