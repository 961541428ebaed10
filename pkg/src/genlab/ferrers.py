"""Ferrers graphs on odd/even vertex sets, chromatic polynomials, and NBC
forests under the odd-ascending / even-descending edge order."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator

from .core import Poly, SetPartition

__all__ = [
    "FerrersGraph", "build_gamma", "edge_key", "sorted_edges",
    "chromatic_polynomial", "graph_chromatic_polynomial", "count_colorings",
    "nbc_forests", "nbc_partition_counts", "nbc_equals_id", "EDGE_ORDER_NAME",
]

Edge = tuple[int, int]

EDGE_ORDER_NAME = "lex(odd endpoint ascending, even endpoint descending)"


@dataclass(frozen=True)
class FerrersGraph:
    """``edges`` holds pairs ``(u, v)`` with ``u`` odd, ``v`` even, ``u < v``."""

    vertices: tuple[int, ...]
    edges: tuple[Edge, ...]

    def adjacency(self) -> dict[int, set[int]]:
        adj: dict[int, set[int]] = {v: set() for v in self.vertices}
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return adj

    def induced(self, subset: Iterable[int]) -> FerrersGraph:
        return build_gamma(subset)

    def to_json(self) -> dict:
        return {"vertices": list(self.vertices), "edges": [list(e) for e in self.edges]}


def build_gamma(vertices: Iterable[int]) -> FerrersGraph:
    vs = tuple(sorted(set(vertices)))
    if any(v <= 0 for v in vs):
        raise ValueError("vertices must be positive integers")
    edges = tuple(
        (u, v) for u in vs if u % 2 == 1 for v in vs if v % 2 == 0 and v > u
    )
    return FerrersGraph(vs, tuple(sorted(edges, key=edge_key)))


def edge_key(edge: Edge) -> tuple[int, int]:
    """Sort key realising the edge order: odd endpoint ascending, then even
    endpoint descending.  ``{1,8} < {1,6} < {3,2}``."""
    u, v = edge
    odd, even = (u, v) if u % 2 else (v, u)
    return (odd, -even)


def sorted_edges(edges: Iterable[Edge]) -> list[Edge]:
    return sorted(edges, key=edge_key)


# ---------------------------------------------------------------------------
# chromatic polynomials by deletion-contraction


def graph_chromatic_polynomial(vertices: Iterable, edges: Iterable[tuple]) -> Poly:
    """Chromatic polynomial of an arbitrary finite graph.

    Works on multigraphs internally: contraction may create parallel edges
    (collapsed) or loops (the polynomial is then zero).
    """
    vs = list(vertices)
    index = {v: i for i, v in enumerate(vs)}
    es = set()
    for a, b in edges:
        i, j = index[a], index[b]
        if i == j:
            return Poly()
        es.add((min(i, j), max(i, j)))
    coeffs = _chromatic(len(vs), frozenset(es))
    return Poly(coeffs)


@lru_cache(maxsize=None)
def _chromatic(n: int, edges: frozenset) -> tuple:
    if not edges:
        return tuple([0] * n + [1])
    # pick the edge at a vertex of maximum degree to keep the recursion shallow
    deg: dict[int, int] = {}
    for a, b in edges:
        deg[a] = deg.get(a, 0) + 1
        deg[b] = deg.get(b, 0) + 1
    hub = max(deg, key=lambda v: (deg[v], -v))
    e = min(x for x in edges if hub in x)
    a, b = e
    deleted = edges - {e}
    # contract b into a, then shift labels above b down by one
    contracted = set()
    for x, y in deleted:
        x = a if x == b else x
        y = a if y == b else y
        if x == y:
            continue  # only the deleted edge itself could become a loop
        x = x - 1 if x > b else x
        y = y - 1 if y > b else y
        contracted.add((min(x, y), max(x, y)))
    p_del = _chromatic(n, deleted)
    p_con = _chromatic(n - 1, frozenset(contracted))
    out = list(p_del)
    for k, c in enumerate(p_con):
        out[k] -= c
    return tuple(out)


def chromatic_polynomial(g: FerrersGraph) -> Poly:
    return graph_chromatic_polynomial(g.vertices, g.edges)


def count_colorings(vertices, edges, k: int) -> int:
    """Number of proper colorings with ``k`` colors, by exhaustive search
    (backtracking over vertices in the given order)."""
    vs = list(vertices)
    adj: dict = {v: set() for v in vs}
    for a, b in edges:
        adj[a].add(b)
        adj[b].add(a)
    color: dict = {}

    def go(i: int) -> int:
        if i == len(vs):
            return 1
        v = vs[i]
        total = 0
        for c in range(k):
            if all(color.get(w) != c for w in adj[v]):
                color[v] = c
                total += go(i + 1)
                del color[v]
        return total

    return go(0)


# ---------------------------------------------------------------------------
# NBC sets


class _UnionFind:
    def __init__(self, items):
        self.parent = {x: x for x in items}

    def find(self, x):
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x


def nbc_forests(g: FerrersGraph) -> Iterator[frozenset[Edge]]:
    """All NBC edge sets of ``g`` with respect to :func:`edge_key`.

    Edges are decided from largest to smallest.  When edge ``e`` is reached,
    every larger edge is already decided; if the endpoints of ``e`` are
    already joined, including ``e`` closes a cycle and excluding it leaves a
    broken circuit (a path of larger edges), so the branch is dead.
    Otherwise both choices stay NBC-extendable, so no leaf is wasted.
    """
    order = sorted(g.edges, key=edge_key, reverse=True)
    vs = g.vertices
    # connectivity is tracked with a component-label dict copied per branch
    chosen: list[Edge] = []

    def go(i: int, comp: dict[int, int]) -> Iterator[frozenset[Edge]]:
        if i == len(order):
            yield frozenset(chosen)
            return
        u, v = order[i]
        cu, cv = comp[u], comp[v]
        if cu == cv:
            return
        # exclude
        yield from go(i + 1, comp)
        # include: merge component cv into cu
        merged = {x: (cu if c == cv else c) for x, c in comp.items()}
        chosen.append((u, v))
        yield from go(i + 1, merged)
        chosen.pop()

    yield from go(0, {x: x for x in vs})


def partition_of_edges(vertices, edge_set) -> SetPartition:
    uf = _UnionFind(vertices)
    for a, b in edge_set:
        ra, rb = uf.find(a), uf.find(b)
        if ra != rb:
            uf.parent[ra] = rb
    groups: dict = {}
    for v in vertices:
        groups.setdefault(uf.find(v), []).append(v)
    return SetPartition.from_blocks(vertices, groups.values())


def nbc_partition_counts(g: FerrersGraph) -> dict[SetPartition, int]:
    """Number of NBC sets inducing each partition."""
    out: dict[SetPartition, int] = {}
    for s in nbc_forests(g):
        p = partition_of_edges(g.vertices, s)
        out[p] = out.get(p, 0) + 1
    return out


def is_broken_circuit_free(vertices, edge_set, all_edges) -> bool:
    """Direct check of the NBC property for an edge set: acyclic, and no edge
    outside the set is smaller than every edge on the in-set path joining its
    endpoints.  Independent of the pruned generator above."""
    adj: dict = {v: [] for v in vertices}
    uf = _UnionFind(vertices)
    for a, b in edge_set:
        ra, rb = uf.find(a), uf.find(b)
        if ra == rb:
            return False
        uf.parent[ra] = rb
        adj[a].append(b)
        adj[b].append(a)
    for e in all_edges:
        if e in edge_set:
            continue
        a, b = e
        if uf.find(a) != uf.find(b):
            continue
        path = _tree_path(adj, a, b)
        if all(edge_key(e) < edge_key(tuple(sorted(p))) for p in path):
            return False
    return True


def _tree_path(adj, a, b) -> list[tuple]:
    prev = {a: None}
    stack = [a]
    while stack:
        x = stack.pop()
        for y in adj[x]:
            if y not in prev:
                prev[y] = x
                stack.append(y)
    path = []
    x = b
    while prev[x] is not None:
        path.append((prev[x], x))
        x = prev[x]
    return path


def nbc_equals_id(g: FerrersGraph) -> dict:
    """Compare NBC forests of ``g`` with ID forests on its vertex set."""
    from .idforests import enumerate_id_forests, forest_edge_set

    nbc = {s for s in nbc_forests(g)}
    ids = {forest_edge_set(f) for f in enumerate_id_forests(g.vertices, method="spanning")}
    return {
        "equal": nbc == ids,
        "nbc_count": len(nbc),
        "id_count": len(ids),
        "only_nbc": sorted(sorted(s) for s in nbc - ids)[:5],
        "only_id": sorted(sorted(s) for s in ids - nbc)[:5],
    }
