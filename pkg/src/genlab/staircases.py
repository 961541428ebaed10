"""Excedent functions, surjective staircases, their six statistics and the
generalized Dumont-Foata polynomial, plus the sliding bijection between the
auxiliary set ``G_{2n}`` and staircases on ``[2n+2]`` without even maxima."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, NamedTuple

from .core import Poly, T
from .dperms import count_by_cycles, _images
from .errors import NotInGSet, check_cap

__all__ = [
    "ExcedentFunction", "Stats", "is_surjective_staircase", "enumerate_staircases",
    "maxima", "six_statistics", "lambda_specialized", "statistic_distribution",
    "is_in_g_set", "enumerate_g_set", "gamma_slide", "gamma_unslide",
    "cycle_enumerator_check", "joint_distribution_check", "render_tableau", "STAIRCASE_CAP",
]

STAIRCASE_CAP = 12


@dataclass(frozen=True)
class ExcedentFunction:
    """``f[j-1]`` is the value at ``j``; every value satisfies ``j <= f(j) <= m``."""

    m: int
    f: tuple[int, ...]

    def __post_init__(self):
        if len(self.f) != self.m:
            raise ValueError("f must list m values")
        for j, v in enumerate(self.f, start=1):
            if not j <= v <= self.m:
                raise ValueError(f"f({j}) = {v} violates excedence on [{self.m}]")

    def __call__(self, j: int) -> int:
        return self.f[j - 1]

    def image(self) -> set[int]:
        return set(self.f)

    def preimage(self, i: int) -> set[int]:
        return {j for j, v in enumerate(self.f, start=1) if v == i}

    def fixed_points(self) -> list[int]:
        return [j for j, v in enumerate(self.f, start=1) if v == j]

    def isolated_fixed_points(self) -> list[int]:
        return [j for j in self.fixed_points() if self.preimage(j) == {j}]

    def to_json(self) -> dict:
        return {"m": self.m, "f": list(self.f)}

    @classmethod
    def from_json(cls, obj: dict) -> ExcedentFunction:
        return cls(obj["m"], tuple(obj["f"]))


def is_surjective_staircase(f: ExcedentFunction) -> bool:
    return f.m % 2 == 0 and f.image() == set(range(2, f.m + 1, 2))


def _staircases(m: int) -> Iterator[tuple[int, ...]]:
    vals = [0] * m
    hit: Counter = Counter()

    def go(j: int) -> Iterator[tuple[int, ...]]:
        if j > m:
            yield tuple(vals)
            return
        start = j + (j % 2)
        for v in range(start, m + 1, 2):
            vals[j - 1] = v
            hit[v] += 1
            # later positions only reach values > j, so an even j must be hit now
            if j % 2 == 1 or hit[j] > 0:
                yield from go(j + 1)
            hit[v] -= 1

    yield from go(1)


def maxima(f: ExcedentFunction) -> list[int]:
    return [j for j in range(1, f.m - 1) if f(j) == f.m]


def enumerate_staircases(m: int, no_even_maxima: bool = False,
                         cap: int = STAIRCASE_CAP) -> Iterator[ExcedentFunction]:
    if m % 2:
        raise ValueError("surjective staircases live on an even-size domain")
    check_cap("staircase size", m, cap)
    for vals in _staircases(m):
        f = ExcedentFunction(m, vals)
        if no_even_maxima and any(j % 2 == 0 for j in maxima(f)):
            continue
        yield f


class Stats(NamedTuple):
    mo: int
    fd: int
    si: int
    me: int
    fi: int
    sd: int


def six_statistics(f: ExcedentFunction) -> Stats:
    """Statistics are read on ``j in [m-2]`` only."""
    m = f.m
    pre: dict[int, set[int]] = {}
    for j, v in enumerate(f.f, start=1):
        pre.setdefault(v, set()).add(j)
    fd = fi = sd = si = mo = me = 0
    for j in range(1, m - 1):
        v = f(j)
        if v == j:
            if pre[j] - {j}:
                fd += 1
            else:
                fi += 1
        if v == j + 1:
            if pre[j + 1] - {j}:
                sd += 1
            else:
                si += 1
        if v == m:
            if j % 2:
                mo += 1
            else:
                me += 1
    return Stats(mo, fd, si, me, fi, sd)


@lru_cache(maxsize=None)
def statistic_distribution(m: int) -> tuple[tuple[Stats, int], ...]:
    c = Counter(six_statistics(f) for f in enumerate_staircases(m))
    return tuple(sorted(c.items()))


def lambda_specialized(m: int, x, y, z, xb, yb, zb) -> Poly:
    """Sum over staircases on ``[m]`` of
    ``x^mo y^fd z^si xb^me yb^fi zb^sd``; arguments may be numbers or Polys."""
    x, y, z, xb, yb, zb = (Poly.coerce(a) for a in (x, y, z, xb, yb, zb))
    total = Poly()
    for s, c in statistic_distribution(m):
        total = total + c * (x ** s.mo * y ** s.fd * z ** s.si
                             * xb ** s.me * yb ** s.fi * zb ** s.sd)
    return total


# ---------------------------------------------------------------------------
# the sliding bijection


def is_in_g_set(g: ExcedentFunction) -> bool:
    m = g.m
    if m % 2 or not set(range(2, m + 1, 2)) <= g.image():
        return False
    iso = set(g.isolated_fixed_points())
    return all((v % 2 == 1) == (j % 2 == 1 and j in iso) for j, v in enumerate(g.f, start=1))


def enumerate_g_set(m: int, cap: int = STAIRCASE_CAP) -> Iterator[ExcedentFunction]:
    """Members of ``G_m``: odd values only at odd fixed points, all evens hit."""
    check_cap("G-set size", m, cap)
    vals = [0] * m
    hit: Counter = Counter()

    def go(j: int) -> Iterator[tuple[int, ...]]:
        if j > m:
            yield tuple(vals)
            return
        cands = list(range(j + (j % 2), m + 1, 2))
        if j % 2:
            cands.append(j)
        for v in cands:
            vals[j - 1] = v
            hit[v] += 1
            if j % 2 == 1 or hit[j] > 0:
                yield from go(j + 1)
            hit[v] -= 1

    for vs in go(1):
        yield ExcedentFunction(m, vs)


def gamma_slide(g: ExcedentFunction) -> ExcedentFunction:
    """Add a top row, slide each odd-row X up to it, drop the odd rows."""
    if not is_in_g_set(g):
        raise NotInGSet(str(g.f))
    top = g.m + 2
    vals = [v if v % 2 == 0 else top for v in g.f] + [top, top]
    return ExcedentFunction(top, tuple(vals))


def gamma_unslide(f: ExcedentFunction) -> ExcedentFunction:
    """Inverse of :func:`gamma_slide`: slide top-row X's in columns ``<= m-2``
    down to the diagonal and delete the top row."""
    if not is_surjective_staircase(f) or any(j % 2 == 0 for j in maxima(f)):
        raise ValueError("expected a surjective staircase without even maxima")
    m = f.m - 2
    vals = tuple(j if f(j) == f.m else f(j) for j in range(1, m + 1))
    return ExcedentFunction(m, vals)


# ---------------------------------------------------------------------------
# identities checked by enumeration


def cycle_enumerator_check(n: int) -> dict:
    """Cycle enumerator of D-permutations on ``[2n]`` against the staircase
    polynomial specialised at ``(t, t, 1, 0, t, 1)`` on ``[2n+2]``."""
    lhs = Poly()
    for k, c in count_by_cycles(range(1, 2 * n + 1)).items():
        lhs = lhs + c * T ** k
    rhs = lambda_specialized(2 * n + 2, T, T, 1, 0, T, 1)
    return {"n": n, "equal": lhs == rhs, "lhs": lhs, "rhs": rhs}


def _d_perm_triples(n: int) -> Counter:
    ground = tuple(range(1, 2 * n + 1))
    out: Counter = Counter()
    for img in _images(ground, False, False):
        succ = dict(zip(ground, img))
        seen: set[int] = set()
        even_max = 0
        for s in ground:
            if s in seen:
                continue
            cyc = []
            x = s
            while x not in seen:
                seen.add(x)
                cyc.append(x)
                x = succ[x]
            if max(cyc) % 2 == 0:
                even_max += 1
        even_fp = sum(1 for i in ground if succ[i] == i and i % 2 == 0)
        odd_fp = sum(1 for i in ground if succ[i] == i and i % 2 == 1)
        out[(even_max, even_fp, odd_fp)] += 1
    return out


def _staircase_triples(n: int) -> Counter:
    out: Counter = Counter()
    for f in enumerate_staircases(2 * n + 2, no_even_maxima=True):
        s = six_statistics(f)
        out[(s.fd + s.fi, s.fi, s.mo)] += 1
    return out


def joint_distribution_check(n: int) -> dict:
    """(even cycle maxima, even fixed points, odd fixed points) over
    D-permutations of ``[2n]`` versus (fixed points, isolated fixed points,
    odd maxima) over staircases on ``[2n+2]`` without even maxima."""
    a = _d_perm_triples(n)
    b = _staircase_triples(n)
    return {"n": n, "equal": a == b, "size": sum(a.values())}


def render_tableau(f: ExcedentFunction) -> str:
    """ASCII picture with odd rows removed: rows ``m, m-2, ..., 2`` top to bottom,
    row ``i`` having ``i`` cells."""
    width = len(str(f.m))
    lines = []
    for i in range(f.m, 1, -2):
        cells = ["X" if f(j) == i else "." for j in range(1, i + 1)]
        lines.append(f"{i:>{width}} " + " ".join(cells))
    return "\n".join(lines)

