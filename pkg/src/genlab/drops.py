"""Drops that are not even-odd, the parity poset whose incomparability graph is
the Ferrers graph, the drop expansion of chromatic polynomials of
incomparability graphs, and counts of permutations with only even-odd drops.

Permutations here are counted, not stored: the drop table uses a dynamic
program over sets of used values, and the even-odd searches are pruned
backtracking.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import combinations, permutations
from math import factorial
from typing import Callable, Iterable, Sequence

from .core import Poly, SetPartition, T, falling_factorial, rising_factorial
from .dperms import count_by_cycles, count_d_perms
from .errors import check_cap
from .ferrers import build_gamma, graph_chromatic_polynomial
from .lattice import build_bond_lattice, mobius

__all__ = [
    "is_eo_drop", "non_eo_drops", "d_table", "d_table_bruteforce", "drop_expansion_charpoly",
    "FinitePoset", "parity_poset", "p_drop_table", "chung_graham_expansion",
    "chung_graham_check", "eo_drop_count", "eo_drop_by_cycles", "eo_drop_by_support",
    "eo_descent_table", "conjecture_checks", "parity_incomparability_is_ferrers", "DROP_CAP",
]

DROP_CAP = 12


def is_eo_drop(i: int, j: int) -> bool:
    return i > j and i % 2 == 0 and j % 2 == 1


def non_eo_drops(ground: Sequence[int], image: Sequence[int]) -> int:
    return sum(1 for i, j in zip(ground, image) if i > j and not is_eo_drop(i, j))


def _drop_dp(m: int, is_counted: Callable[[int, int], bool]) -> dict[int, int]:
    """``k -> #{permutations of [m] with k positions i where is_counted(i, p(i))}``."""
    # dist[mask] is a Counter over k for assignments of positions 1..popcount(mask)
    dist: dict[int, Counter] = {0: Counter({0: 1})}
    for i in range(1, m + 1):
        nxt: dict[int, Counter] = {}
        for mask, c in dist.items():
            for v in range(1, m + 1):
                bit = 1 << (v - 1)
                if mask & bit:
                    continue
                add = 1 if is_counted(i, v) else 0
                tgt = nxt.setdefault(mask | bit, Counter())
                for k, x in c.items():
                    tgt[k + add] += x
        dist = nxt
    out = dist[(1 << m) - 1]
    return {k: out.get(k, 0) for k in range(m)}


def d_table(m: int, cap: int = DROP_CAP) -> dict[int, int]:
    """``k -> d(m, k)``: permutations of ``[m]`` with exactly ``k`` drops that
    are not even-odd.  Keys run over ``0..m-1``."""
    check_cap("drop table size", m, cap)
    return _drop_dp(m, lambda i, v: i > v and not is_eo_drop(i, v))


def d_table_bruteforce(m: int) -> dict[int, int]:
    check_cap("brute-force drop table size", m, 8)
    ground = tuple(range(1, m + 1))
    c = Counter(non_eo_drops(ground, p) for p in permutations(ground))
    return {k: c.get(k, 0) for k in range(m)}


def drop_expansion_charpoly(n: int, table: dict[int, int] | None = None) -> Poly:
    """``(1/(2n)!) sum_k d(2n,k) (t+1)^(k rising) (t-1)_(2n-1-k falling)``."""
    if n < 1:
        raise ValueError("n >= 1")
    m = 2 * n
    table = d_table(m) if table is None else table
    total = Poly()
    for k, c in table.items():
        if c:
            total = total + c * rising_factorial(T + 1, k) * falling_factorial(T - 1, m - 1 - k)
    return (total / factorial(m)).require_integral("drop expansion")


# ---------------------------------------------------------------------------
# posets


@dataclass(frozen=True)
class FinitePoset:
    """``relation`` holds every pair ``(x, y)`` with ``x <= y``, reflexive pairs
    included."""

    elements: tuple
    relation: frozenset

    @classmethod
    def from_leq(cls, elements: Iterable, leq: Callable) -> FinitePoset:
        es = tuple(elements)
        return cls(es, frozenset((x, y) for x in es for y in es if leq(x, y)))

    @classmethod
    def chain(cls, m: int) -> FinitePoset:
        return cls.from_leq(range(1, m + 1), lambda x, y: x <= y)

    @classmethod
    def antichain(cls, m: int) -> FinitePoset:
        return cls.from_leq(range(1, m + 1), lambda x, y: x == y)

    @classmethod
    def from_cover_pairs(cls, elements: Iterable, pairs: Iterable[tuple]) -> FinitePoset:
        """Reflexive-transitive closure of the given pairs (must be acyclic)."""
        es = tuple(elements)
        rel = {(x, x) for x in es} | set(pairs)
        changed = True
        while changed:
            changed = False
            for (a, b) in list(rel):
                for (c, d) in list(rel):
                    if b == c and (a, d) not in rel:
                        rel.add((a, d))
                        changed = True
        return cls(es, frozenset(rel))

    def leq(self, x, y) -> bool:
        return (x, y) in self.relation

    def is_partial_order(self) -> bool:
        es = self.elements
        r = self.relation
        if any((x, x) not in r for x in es):
            return False
        for x, y in r:
            if x != y and (y, x) in r:
                return False
        for x, y in r:
            for z in es:
                if (y, z) in r and (x, z) not in r:
                    return False
        return True

    def incomparability_edges(self) -> set[tuple]:
        return {(x, y) for x, y in combinations(self.elements, 2)
                if not self.leq(x, y) and not self.leq(y, x)}


def parity_poset(m: int) -> FinitePoset:
    """Same-parity elements ordered as integers; an even element lies below
    every larger odd element."""

    def leq(x, y):
        return (x <= y and x % 2 == y % 2) or (x < y and x % 2 == 0 and y % 2 == 1)

    return FinitePoset.from_leq(range(1, m + 1), leq)


def p_drop_table(poset: FinitePoset) -> dict[int, int]:
    """``k -> d(P, k)``: permutations of the elements with ``k`` positions
    ``x`` where ``sigma(x) <_P x``."""
    es = poset.elements
    m = len(es)
    check_cap("poset size", m, 10)
    strict_below = [[poset.leq(es[v], es[i]) and v != i for v in range(m)] for i in range(m)]
    return _drop_dp(m, lambda i, v: strict_below[i - 1][v - 1])


def _binom_poly(shift: int, m: int) -> Poly:
    """``C(t + shift, m)`` as a polynomial in ``t``."""
    return falling_factorial(T + shift, m) / factorial(m)


def chung_graham_expansion(poset: FinitePoset) -> Poly:
    m = len(poset.elements)
    total = Poly()
    for k, c in p_drop_table(poset).items():
        total = total + c * _binom_poly(k, m)
    return total


def chung_graham_check(poset: FinitePoset) -> dict:
    ch = graph_chromatic_polynomial(poset.elements, poset.incomparability_edges())
    exp = chung_graham_expansion(poset)
    return {"size": len(poset.elements), "ok": ch == exp, "chromatic": ch, "expansion": exp}


# ---------------------------------------------------------------------------
# permutations with only even-odd drops


def _allowed(i: int, v: int) -> bool:
    return v >= i or is_eo_drop(i, v)


def _eo_images(ground: tuple[int, ...]):
    m = len(ground)
    used: set[int] = set()
    img = [0] * m
    options = [[v for v in ground if _allowed(i, v)] for i in ground]

    def go(k: int):
        if k == m:
            yield tuple(img)
            return
        for v in options[k]:
            if v not in used:
                used.add(v)
                img[k] = v
                yield from go(k + 1)
                used.discard(v)

    yield from go(0)


def _eo_cycles(ground: tuple[int, ...]) -> int:
    """Single cycles on ``ground`` with only even-odd drops, grown as a path
    from the minimum.  A one-element ground set has one such cycle."""
    if len(ground) == 1:
        return 1
    start = ground[0]
    unused = set(ground[1:])

    def go(x: int) -> int:
        if not unused:
            return 1 if _allowed(x, start) else 0
        total = 0
        for y in sorted(unused):
            if _allowed(x, y):
                unused.discard(y)
                total += go(y)
                unused.add(y)
        return total

    return go(start)


def _cycle_count(ground, img) -> int:
    succ = dict(zip(ground, img))
    seen: set[int] = set()
    c = 0
    for s in ground:
        if s not in seen:
            c += 1
            x = s
            while x not in seen:
                seen.add(x)
                x = succ[x]
    return c


def eo_drop_count(m: int, cycles_only: bool = False, ground: Iterable[int] | None = None,
                  cap: int = DROP_CAP) -> int:
    g = tuple(sorted(set(ground))) if ground is not None else tuple(range(1, m + 1))
    check_cap("even-odd drop ground size", len(g), cap)
    if cycles_only:
        return _eo_cycles(g)
    return sum(1 for _ in _eo_images(g))


def eo_drop_by_cycles(m: int, cap: int = DROP_CAP) -> dict[int, int]:
    g = tuple(range(1, m + 1))
    check_cap("even-odd drop ground size", m, cap)
    c = Counter(_cycle_count(g, img) for img in _eo_images(g))
    return dict(sorted(c.items()))


def _support(ground, img) -> SetPartition:
    succ = dict(zip(ground, img))
    seen: set[int] = set()
    blocks = []
    for s in ground:
        if s in seen:
            continue
        b = []
        x = s
        while x not in seen:
            seen.add(x)
            b.append(x)
            x = succ[x]
        blocks.append(b)
    return SetPartition.from_blocks(ground, blocks)


def eo_drop_by_support(m: int) -> Counter:
    """Cycle supports of permutations of ``[m]`` with only even-odd drops."""
    check_cap("even-odd drop ground size", m, 10)
    g = tuple(range(1, m + 1))
    return Counter(_support(g, img) for img in _eo_images(g))


def eo_descent_table(m: int, cap: int = 10) -> dict[int, int]:
    """``k -> #{permutations of [m] with k descents that are not even-odd}``,
    where an even-odd descent has an even top and an odd bottom."""
    check_cap("descent table size", m, cap)
    # state: (last value, used mask) -> Counter over k
    dist: dict[tuple[int, int], Counter] = {(v, 1 << (v - 1)): Counter({0: 1}) for v in range(1, m + 1)}
    for _ in range(m - 1):
        nxt: dict[tuple[int, int], Counter] = {}
        for (last, mask), c in dist.items():
            for v in range(1, m + 1):
                bit = 1 << (v - 1)
                if mask & bit:
                    continue
                add = 1 if last > v and not is_eo_drop(last, v) else 0
                tgt = nxt.setdefault((v, mask | bit), Counter())
                for k, x in c.items():
                    tgt[k + add] += x
        dist = nxt
    total: Counter = Counter()
    for c in dist.values():
        total.update(c)
    return {k: total.get(k, 0) for k in range(m)}


# ---------------------------------------------------------------------------
# the two open statements, checked instance by instance


def _verdict(lhs, rhs) -> str:
    return "verified" if lhs == rhs else "CONJECTURE-FALSIFIED"


def conjecture_checks(max_n: int = 5, subsets_upto: int = 8, supports_upto: int = 4) -> dict:
    """Per-instance comparisons, never asserting:

    * cycles on ``[2n]`` with only even-odd drops against ``g_n`` (computed as
      the number of D-cycles on ``[2n]``);
    * cycles on every nonempty ``A`` of ``[subsets_upto]`` and on each
      ``[2n]``, against D-cycles on the same set;
    * the cycle-number distribution of permutations of ``[2n]`` with only
      even-odd drops against that of D-permutations;
    * for ``n <= supports_upto``, counts by cycle support against the absolute
      Moebius value of that partition in the bond lattice.

    A one-element set carries exactly one cycle on both sides.
    """
    check_cap("conjecture n", max_n, 6)
    report: dict = {"convention": "a fixed point is a 1-cycle on both sides",
                    "cycles": [], "subsets": [], "cycle_distribution": [], "supports": []}

    for n in range(1, max_n + 1):
        g = tuple(range(1, 2 * n + 1))
        lhs = _eo_cycles(g)
        rhs = count_d_perms(g, "d-cycle")
        report["cycles"].append({"n": n, "lhs": lhs, "rhs": rhs, "verdict": _verdict(lhs, rhs)})

    witnesses = []
    checked = 0
    for size in range(1, subsets_upto + 1):
        for a in combinations(range(1, subsets_upto + 1), size):
            lhs = _eo_cycles(a)
            rhs = count_d_perms(a, "d-cycle")
            checked += 1
            if lhs != rhs:
                witnesses.append({"A": list(a), "lhs": lhs, "rhs": rhs})
    report["subsets"].append({"range": subsets_upto, "checked": checked,
                              "verdict": "verified" if not witnesses else "CONJECTURE-FALSIFIED",
                              "witnesses": witnesses[:5]})

    for n in range(1, max_n + 1):
        lhs = eo_drop_by_cycles(2 * n)
        rhs = count_by_cycles(range(1, 2 * n + 1))
        report["cycle_distribution"].append({"n": n, "lhs": lhs, "rhs": rhs,
                                             "verdict": _verdict(lhs, rhs)})

    for n in range(1, min(max_n, supports_upto) + 1):
        lhs = eo_drop_by_support(2 * n)
        lat = build_bond_lattice(range(1, 2 * n + 1))
        rhs = {p: abs(mobius(lat, p)) for p in lat.elements}
        bad = [str(p) for p in set(lhs) | set(rhs) if lhs.get(p, 0) != rhs.get(p, 0)]
        report["supports"].append({"n": n, "supports": len(rhs),
                                   "verdict": "verified" if not bad else "CONJECTURE-FALSIFIED",
                                   "witnesses": bad[:5]})

    report["falsified"] = any(
        r["verdict"] != "verified"
        for key in ("cycles", "subsets", "cycle_distribution", "supports") for r in report[key])
    return report


def parity_incomparability_is_ferrers(m: int) -> bool:
    p = parity_poset(m)
    return p.incomparability_edges() == set(build_gamma(range(1, m + 1)).edges)
