"""Increasing-decreasing (ID) trees and forests, their plane-tree forms,
postorder words, the inverse ``gamma`` on words, and the map to D-permutations.

An unrooted labeled tree is a :class:`LabeledTree` (node set + edge set).
Plane trees are nested :class:`PlaneTree` values.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, product
from typing import Iterable, Iterator, Sequence

from .core import Permutation, SetPartition
from .errors import NotIDTree, NotWWord, check_cap
from .ferrers import build_gamma, nbc_forests

__all__ = [
    "LabeledTree", "PlaneTree", "is_id_tree", "id_trees_on", "enumerate_id_forests",
    "forest_edge_set", "hat_form", "tilde_form", "postorder", "is_w_word", "gamma",
    "split_segments", "psi", "psi_tilde", "psi_forest", "ID_FOREST_CAP",
]

ID_FOREST_CAP = 12


@dataclass(frozen=True)
class LabeledTree:
    nodes: frozenset[int]
    edges: frozenset[tuple[int, int]]

    def __post_init__(self):
        if len(self.edges) != len(self.nodes) - 1:
            raise ValueError("a tree on k nodes has k-1 edges")

    @classmethod
    def from_edges(cls, nodes: Iterable[int], edges: Iterable[tuple[int, int]]) -> LabeledTree:
        return cls(frozenset(nodes), frozenset(tuple(sorted(e)) for e in edges))

    def adjacency(self) -> dict[int, list[int]]:
        adj: dict[int, list[int]] = {v: [] for v in self.nodes}
        for a, b in self.edges:
            adj[a].append(b)
            adj[b].append(a)
        return adj

    def children_when_rooted(self, root: int) -> dict[int, list[int]]:
        adj = self.adjacency()
        kids: dict[int, list[int]] = {root: []}
        stack = [root]
        seen = {root}
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if y not in seen:
                    seen.add(y)
                    kids[x].append(y)
                    kids[y] = []
                    stack.append(y)
        if len(seen) != len(self.nodes):
            raise ValueError("edge set is not connected")
        return kids

    def to_json(self) -> dict:
        return {"nodes": sorted(self.nodes), "edges": [list(e) for e in sorted(self.edges)]}


@dataclass(frozen=True)
class PlaneTree:
    label: int
    children: tuple[PlaneTree, ...] = ()

    def labels(self) -> list[int]:
        out = [self.label]
        for c in self.children:
            out.extend(c.labels())
        return out

    def edges(self) -> set[tuple[int, int]]:
        out = set()
        for c in self.children:
            out.add(tuple(sorted((self.label, c.label))))
            out |= c.edges()
        return out

    def unrooted(self) -> LabeledTree:
        return LabeledTree.from_edges(self.labels(), self.edges())

    def to_json(self) -> dict:
        return {"label": self.label, "children": [c.to_json() for c in self.children]}

    @classmethod
    def from_json(cls, obj: dict) -> PlaneTree:
        return cls(obj["label"], tuple(cls.from_json(c) for c in obj["children"]))


# ---------------------------------------------------------------------------
# the ID test


def _conditions_hold(kids: dict[int, list[int]], root: int) -> bool:
    # descendants' extremes, computed bottom-up
    lo: dict[int, int] = {}
    hi: dict[int, int] = {}
    order = []
    stack = [root]
    while stack:
        x = stack.pop()
        order.append(x)
        stack.extend(kids[x])
    for x in reversed(order):
        lo[x] = min([x] + [lo[c] for c in kids[x]])
        hi[x] = max([x] + [hi[c] for c in kids[x]])
    for v in order:
        cs = kids[v]
        if not cs:
            continue
        desc_lo = min(lo[c] for c in cs)
        desc_hi = max(hi[c] for c in cs)
        if v % 2 == 1:
            if not (v < desc_lo and all(c % 2 == 0 for c in cs)):
                return False
        else:
            if not (v > desc_hi and all(c % 2 == 1 for c in cs)):
                return False
    return True


def is_id_tree(tree: LabeledTree) -> bool:
    """ID test at the largest root, cross-checked against the smallest root
    (the two must always agree)."""
    if len(tree.nodes) == 1:
        return True
    big = max(tree.nodes)
    small = min(tree.nodes)
    at_big = _conditions_hold(tree.children_when_rooted(big), big)
    at_small = _conditions_hold(tree.children_when_rooted(small), small)
    if at_big != at_small:
        raise AssertionError(f"rooting disagreement on {tree}")
    return at_big


# ---------------------------------------------------------------------------
# enumeration


def _is_spanning_tree(nodes: Sequence[int], edges: Sequence[tuple[int, int]]) -> bool:
    parent = {v: v for v in nodes}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b in edges:
        ra, rb = find(a), find(b)
        if ra == rb:
            return False
        parent[ra] = rb
    return True


@lru_cache(maxsize=None)
def _id_trees_spanning(nodes: tuple[int, ...]) -> tuple[LabeledTree, ...]:
    if len(nodes) == 1:
        return (LabeledTree(frozenset(nodes), frozenset()),)
    g = build_gamma(nodes)
    out = []
    for es in combinations(g.edges, len(nodes) - 1):
        if _is_spanning_tree(nodes, es):
            t = LabeledTree(frozenset(nodes), frozenset(es))
            if is_id_tree(t):
                out.append(t)
    return tuple(out)


@lru_cache(maxsize=None)
def _id_trees_nbc(nodes: tuple[int, ...]) -> tuple[LabeledTree, ...]:
    if len(nodes) == 1:
        return (LabeledTree(frozenset(nodes), frozenset()),)
    g = build_gamma(nodes)
    k = len(nodes) - 1
    return tuple(LabeledTree(frozenset(nodes), s) for s in nbc_forests(g) if len(s) == k)


def id_trees_on(nodes: Iterable[int], method: str = "auto") -> tuple[LabeledTree, ...]:
    """All ID trees with the given node set.

    ``method='spanning'`` filters spanning trees of the Ferrers graph by the ID
    test; ``'nbc'`` takes the spanning NBC trees; ``'auto'`` uses the former up
    to 8 nodes and the latter above.
    """
    ns = tuple(sorted(nodes))
    if method == "auto":
        method = "spanning" if len(ns) <= 8 else "nbc"
    if len(ns) > 1 and not (ns[0] % 2 == 1 and ns[-1] % 2 == 0):
        return ()
    if method == "spanning":
        return _id_trees_spanning(ns)
    if method == "nbc":
        return _id_trees_nbc(ns)
    raise ValueError(f"unknown method {method!r}")


def _set_partitions(items: Sequence[int]) -> Iterator[list[tuple[int, ...]]]:
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for k in range(len(rest) + 1):
        for others in combinations(rest, k):
            block = (first,) + others
            remaining = [x for x in rest if x not in others]
            for tail in _set_partitions(remaining):
                yield [block] + tail


def enumerate_id_forests(vertices: Iterable[int], k: int | None = None,
                         method: str = "auto",
                         cap: int = ID_FOREST_CAP) -> Iterator[tuple[LabeledTree, ...]]:
    """ID forests on ``vertices`` (optionally with exactly ``k`` trees).
    Each forest is a tuple of trees ordered by their minimum node."""
    vs = sorted(set(vertices))
    check_cap("ID forest vertex count", len(vs), cap)
    for blocks in _set_partitions(vs):
        if k is not None and len(blocks) != k:
            continue
        choices = [id_trees_on(b, method) for b in blocks]
        if any(not c for c in choices):
            continue
        yield from product(*choices)


def forest_edge_set(forest: Iterable[LabeledTree]) -> frozenset[tuple[int, int]]:
    return frozenset(e for t in forest for e in t.edges)


def forest_partition(forest: Sequence[LabeledTree]) -> SetPartition:
    ground = sorted(v for t in forest for v in t.nodes)
    return SetPartition.from_blocks(ground, [t.nodes for t in forest])


# ---------------------------------------------------------------------------
# plane-tree forms and postorder words


def _plane(kids: dict[int, list[int]], v: int) -> PlaneTree:
    # even nodes list (odd) children increasing; odd nodes list (even) children decreasing
    cs = sorted(kids[v], reverse=(v % 2 == 1))
    return PlaneTree(v, tuple(_plane(kids, c) for c in cs))


def hat_form(tree: LabeledTree) -> PlaneTree:
    if not is_id_tree(tree):
        raise NotIDTree(str(tree))
    root = max(tree.nodes)
    return _plane(tree.children_when_rooted(root), root)


def tilde_form(tree: LabeledTree) -> PlaneTree:
    if not is_id_tree(tree):
        raise NotIDTree(str(tree))
    root = min(tree.nodes)
    return _plane(tree.children_when_rooted(root), root)


def postorder(t: PlaneTree) -> tuple[int, ...]:
    out: list[int] = []
    for c in t.children:
        out.extend(postorder(c))
    out.append(t.label)
    return tuple(out)


def is_w_word(w: Sequence[int]) -> bool:
    if not w or len(set(w)) != len(w) or any(x <= 0 for x in w):
        return False
    for a, b in zip(w, w[1:]):
        if a % 2 == 1 and not a < b:
            return False
        if a % 2 == 0 and not a > b:
            return False
    last = w[-1]
    if last % 2 == 1 and last != min(w):
        return False
    if last % 2 == 0 and last != max(w):
        return False
    return True


def split_segments(w: Sequence[int]) -> list[tuple[int, ...]]:
    """Split ``w`` minus its last letter after each right-to-left minimum (last
    letter even) or right-to-left maximum (last letter odd)."""
    body = list(w[:-1])
    if not body:
        return []
    use_min = w[-1] % 2 == 0
    marks = set()
    best = None
    for j in range(len(body) - 1, -1, -1):
        x = body[j]
        if best is None or (x < best if use_min else x > best):
            marks.add(j)
            best = x
    segs = []
    start = 0
    for j in range(len(body)):
        if j in marks:
            segs.append(tuple(body[start:j + 1]))
            start = j + 1
    return segs


def gamma(w: Sequence[int]) -> PlaneTree:
    """Inverse of :func:`postorder` on the word class."""
    w = tuple(w)
    if not is_w_word(w):
        raise NotWWord(str(w))
    return _gamma(w)


def _gamma(w: tuple[int, ...]) -> PlaneTree:
    if len(w) == 1:
        return PlaneTree(w[0])
    return PlaneTree(w[-1], tuple(_gamma(seg) for seg in split_segments(w)))


# ---------------------------------------------------------------------------
# to D-permutations


def psi(tree: LabeledTree) -> Permutation:
    """The cycle read off the postorder word of the hat form."""
    return Permutation.from_cycles([postorder(hat_form(tree))])


def psi_tilde(tree: LabeledTree) -> Permutation:
    return Permutation.from_cycles([postorder(tilde_form(tree))])


def psi_forest(forest: Sequence[LabeledTree]) -> Permutation:
    return Permutation.from_cycles([postorder(hat_form(t)) for t in forest])
