"""Bond lattices of Ferrers graphs, their Moebius functions and characteristic
polynomials, and the reduced semilattice obtained by forbidding 1 and 2n
from sharing a block."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Iterable

from .core import Poly, SetPartition, T
from .errors import ElementNotInLattice, NegativeResult, check_cap
from .ferrers import FerrersGraph, build_gamma

__all__ = [
    "BondLattice", "build_bond_lattice", "mobius", "characteristic_polynomial",
    "build_reduced", "reduced_vertex_set", "zaslavsky_regions", "zaslavsky_bounded",
    "min_max_criterion", "LATTICE_CAP",
]

LATTICE_CAP = 10


def _connected(mask: int, adj: list[int]) -> bool:
    start = mask & -mask
    seen = start
    frontier = start
    while frontier:
        low = frontier & -frontier
        frontier ^= low
        nb = adj[low.bit_length() - 1] & mask & ~seen
        seen |= nb
        frontier |= nb
    return seen == mask


def min_max_criterion(block: Iterable[int]) -> bool:
    """A nonsingleton block must have an odd minimum and an even maximum."""
    b = list(block)
    return len(b) == 1 or (min(b) % 2 == 1 and max(b) % 2 == 0)


@dataclass
class BondLattice:
    """Partitions of ``graph.vertices`` into blocks inducing connected
    subgraphs, ordered by refinement.  ``separate`` optionally names two
    vertices that may not share a block (the result is then an order ideal
    of the bond lattice, used for the reduced semilattice)."""

    graph: FerrersGraph
    separate: tuple[int, int] | None = None
    elements: list[SetPartition] = field(default_factory=list)
    _masks: list[tuple[int, ...]] = field(default_factory=list, repr=False)
    _index: dict = field(default_factory=dict, repr=False)
    _mu: dict = field(default_factory=dict, repr=False)

    @property
    def vertices(self) -> tuple[int, ...]:
        return self.graph.vertices

    @property
    def length(self) -> int:
        return max(p.rank for p in self.elements)

    @property
    def bottom(self) -> SetPartition:
        return SetPartition.discrete(self.vertices)

    def top(self) -> SetPartition | None:
        """The maximum element when one exists."""
        cands = [p for p in self.elements if all(q <= p for q in self.elements)]
        return cands[0] if cands else None

    def __contains__(self, p: SetPartition) -> bool:
        return self._key(p) in self._index

    def __len__(self):
        return len(self.elements)

    def rank_sizes(self) -> list[int]:
        out = [0] * (self.length + 1)
        for p in self.elements:
            out[p.rank] += 1
        return out

    def _key(self, p: SetPartition) -> tuple[int, ...] | None:
        pos = {v: i for i, v in enumerate(self.vertices)}
        try:
            return tuple(sorted(sum(1 << pos[x] for x in b) for b in p.blocks))
        except KeyError:
            return None

    def _to_partition(self, masks) -> SetPartition:
        vs = self.vertices
        blocks = [[vs[i] for i in range(len(vs)) if m >> i & 1] for m in masks]
        return SetPartition.from_blocks(vs, blocks)


def build_bond_lattice(vertices: Iterable[int], separate: tuple[int, int] | None = None,
                       cap: int = LATTICE_CAP) -> BondLattice:
    g = build_gamma(vertices)
    vs = g.vertices
    check_cap("bond lattice vertex count", len(vs), cap)
    m = len(vs)
    pos = {v: i for i, v in enumerate(vs)}
    adj = [0] * m
    for u, v in g.edges:
        adj[pos[u]] |= 1 << pos[v]
        adj[pos[v]] |= 1 << pos[u]
    sep = None
    if separate is not None:
        sep = (1 << pos[separate[0]]) | (1 << pos[separate[1]])

    connected = [False] * (1 << m)
    for mask in range(1, 1 << m):
        connected[mask] = _connected(mask, adj)

    def allowed(mask: int) -> bool:
        return connected[mask] and (sep is None or mask & sep != sep)

    # partitions of each connected subset into connected blocks; reused
    # below for the lower intervals in the Moebius recursion
    sub_parts: dict[int, list[tuple[int, ...]]] = {}

    def parts_of(mask: int) -> list[tuple[int, ...]]:
        if mask in sub_parts:
            return sub_parts[mask]
        out: list[tuple[int, ...]] = []
        if mask == 0:
            out.append(())
        else:
            low = mask & -mask
            rest = mask ^ low
            # every submask of rest, joined with the lowest element
            sub = rest
            while True:
                blk = sub | low
                if allowed(blk):
                    for tail in parts_of(mask ^ blk):
                        out.append(tuple(sorted((blk,) + tail)))
                if sub == 0:
                    break
                sub = (sub - 1) & rest
        sub_parts[mask] = out
        return out

    full = (1 << m) - 1
    masks = sorted(parts_of(full), key=lambda ms: (m - len(ms), ms))
    lat = BondLattice(g, separate)
    lat._masks = masks
    lat._index = {ms: i for i, ms in enumerate(masks)}
    lat.elements = [lat._to_partition(ms) for ms in masks]

    # Moebius function on lower intervals via the defining recursion
    mu: dict[tuple[int, ...], int] = {}
    for ms in masks:  # sorted by rank, so everything below is already known
        if len(ms) == m:
            mu[ms] = 1
            continue
        below = product(*(parts_of(b) for b in ms))
        total = 0
        for choice in below:
            key = tuple(sorted(x for blocks in choice for x in blocks))
            if key != ms:
                total += mu[key]
        mu[ms] = -total
    lat._mu = mu
    return lat


def mobius(lat: BondLattice, p: SetPartition) -> int:
    """``mu(0, p)``."""
    key = lat._key(p)
    if key is None or key not in lat._mu:
        raise ElementNotInLattice(str(p))
    return lat._mu[key]


def characteristic_polynomial(lat: BondLattice) -> Poly:
    ell = lat.length
    coeffs = [0] * (ell + 1)
    for ms, p in zip(lat._masks, lat.elements):
        coeffs[ell - p.rank] += lat._mu[ms]
    return Poly(coeffs)


def reduced_vertex_set(n: int) -> list[int]:
    """``[2n]`` with the vertices 2 and ``2n-1`` removed."""
    return [v for v in range(1, 2 * n + 1) if v not in (2, 2 * n - 1)]


def build_reduced(n: int, cap: int = LATTICE_CAP + 2) -> tuple[BondLattice, Poly]:
    """The reduced semilattice for ``[2n]`` and its characteristic polynomial."""
    if n < 2:
        raise ValueError("reduced semilattice needs n >= 2")
    lat = build_bond_lattice(reduced_vertex_set(n), separate=(1, 2 * n), cap=cap)
    return lat, characteristic_polynomial(lat)


def zaslavsky_regions(chi: Poly, length: int) -> int:
    r = (-1) ** length * chi(-1)
    if r < 0:
        raise NegativeResult(f"region count {r} < 0")
    return int(r)


def zaslavsky_bounded(chi: Poly) -> int:
    return int(abs(chi(1)))


def chi_from_rank_signs(counts_by_rank: dict[int, int], length: int) -> Poly:
    """Helper for tests: assemble ``sum_k (-1)^k c_k t^(length-k)``."""
    out = Poly()
    for k, c in counts_by_rank.items():
        out = out + (-1) ** k * c * T ** (length - k)
    return out
